// Text formats: surfaces, presentations, marked maps and representation
// JSON.
//
// Surface:       surface <g> <b>
//                generators <name>...          (optional)
//                boundary <word>               (optional, one per component)
// Presentation:  group <kind>
//                generators <name>...
//                rel <word>
//                mark <name> <word>
// Map:           map <name>
//                param <key> <value>
//                source                        then a surface block
//                target                        then a presentation block
//                images                        then  map <gen> -> <word>
//                witness <word>
//                certificate                   then  factor <rel> <sign> <word>
//                witness-certificate           then  factor lines
//                retraction <name>...          then  map <gen> -> <word>
// Blank lines and lines starting with # are ignored. "1" is the empty word.

#ifndef SLW_IO_HPP_
#define SLW_IO_HPP_

#include <stdexcept>
#include <string>
#include <variant>

#include "slw/constructions.hpp"
#include "slw/sl2.hpp"
#include "slw/surfaces.hpp"

namespace slw {

  // Missing or unreadable file.
  class file_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  std::string read_file(const std::string& path);
  void        write_file(const std::string& path, const std::string& text);

  std::string         write_surface(const SurfacePresentation& s);
  SurfacePresentation read_surface(const std::string& text);

  std::string       write_presentation(const GroupPresentation& p);
  GroupPresentation read_presentation(const std::string& text);

  std::string write_map(const MarkedMap& m);
  MarkedMap   read_map(const std::string& text);

  // "g,b" as on the command line.
  SurfacePresentation parse_surface_type(const std::string& text);

  // {"alphabet": [...], "scalar": "exact" | "double" | "binary128",
  //  "images": {"x": {"a": [re, im], "b": ..., "c": ..., "d": ...}, ...}}
  // Exact entries are ["p/q", "p/q√d"]; binary128 entries are decimal
  // strings.
  using AnyRep = std::variant<ExactRep, NumRep, WideRep>;
  std::string write_rep(const ExactRep& r);
  std::string write_rep(const NumRep& r);
  std::string write_rep(const WideRep& r);
  AnyRep      read_rep(const std::string& text);

}  // namespace slw

#endif  // SLW_IO_HPP_
