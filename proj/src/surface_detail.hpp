#ifndef SLW_SURFACE_DETAIL_HPP_
#define SLW_SURFACE_DETAIL_HPP_

#include "slw/surfaces.hpp"

namespace slw::detail {

  struct ClosedClass {
    std::vector<Word> orbit;  // shortest cyclic representatives
    Word              canonical;
    int               si = 0;
  };

  ClosedClass closed_class(const Word& w, const SurfacePresentation& s);

}  // namespace slw::detail

#endif  // SLW_SURFACE_DETAIL_HPP_
