// Finitely presented groups with named marker words.

#ifndef SLW_PRESENTATION_HPP_
#define SLW_PRESENTATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slw/words.hpp"

namespace slw {

  struct GroupPresentation {
    std::string                               kind;  // free, figure-eight, double, quotient, ...
    Alphabet                                  alphabet;
    std::vector<Word>                         relators;
    std::vector<std::pair<std::string, Word>> markers;

    std::optional<Word> marker(std::string_view name) const {
      for (auto const& [n, w] : markers) {
        if (n == name) {
          return w;
        }
      }
      return std::nullopt;
    }
    void add_relator(const Word& w) { relators.push_back(cyclic_reduction(w)); }
    void mark(std::string name, Word w) { markers.emplace_back(std::move(name), std::move(w)); }
  };

  // Names of a vertex-group copy: x -> x', y -> y'.
  Alphabet primed(const Alphabet& a);

}  // namespace slw

#endif  // SLW_PRESENTATION_HPP_
