// Surface groups: standard presentations, Dehn's algorithm, self-intersection
// numbers of free homotopy classes and enumeration of k-simple classes.

#ifndef SLW_SURFACES_HPP_
#define SLW_SURFACES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "slw/words.hpp"

namespace slw {

  struct SurfacePresentation {
    int               genus          = 0;
    int               boundary_count = 0;
    Alphabet          alphabet;
    std::vector<Word> relators;
    std::vector<Word> boundary_words;
    // Cyclic order of the 2n signed letters around the vertex of the spine.
    // For closed surfaces this is the order of the once-holed surface whose
    // boundary word is the relator.
    std::vector<Letter> ribbon_order;

    bool closed() const noexcept { return boundary_count == 0; }
    int  euler_characteristic() const noexcept { return 2 - 2 * genus - boundary_count; }
  };

  // Closed: a1, b1, ..., ag, bg with relator [a1,b1]...[ag,bg].
  // Bounded: free on 2g+b-1 generators; the first b-1 boundary words are the
  // generators x1..x(b-1), the handle generators follow, and the last boundary
  // word closes up the product. (0,4) gives x, y, z, (xyz)^-1.
  SurfacePresentation build_surface(int genus, int boundary_count);

  // Bounded surface from explicit boundary words. The words must use every
  // signed letter exactly once and form a one-vertex ribbon graph of the
  // stated genus.
  SurfacePresentation surface_from_boundary(int genus, Alphabet alphabet,
                                            std::vector<Word> boundary_words);

  // Linear Dehn reduction; closed surfaces of genus >= 2 only.
  Word dehn_reduce(const Word& w, const SurfacePresentation& s);
  bool is_trivial_in_surface(const Word& w, const SurfacePresentation& s);

  // Cyclic Dehn reduction: a cyclically reduced word of minimal length in the
  // conjugacy class, up to half-relator flips.
  Word cyclic_dehn_reduce(const Word& w, const SurfacePresentation& s);
  // All cyclic words reachable from a Dehn-reduced cyclic word by half-relator
  // flips, as canonical oriented forms, sorted.
  std::vector<Word> flip_orbit(const Word& w, const SurfacePresentation& s);

  // Canonical unoriented form of the class (closed: minimized over the flip
  // orbit). Throws domain_error on trivial classes.
  Word canonical_class(const Word& w, const SurfacePresentation& s);

  int self_intersection(const Word& c, const SurfacePresentation& s);

  // si of a cyclically reduced primitive word read on the ribbon graph,
  // ignoring any relator.
  int ribbon_self_intersection(const Word& c, const std::vector<Letter>& ribbon_order,
                               std::size_t rank);

  enum class OracleStatus { ok, inconclusive, unsupported };

  struct OracleResult {
    OracleStatus status = OracleStatus::unsupported;
    int          count  = 0;
  };

  // Counts self-crossings of the closed geodesic in a fixed hyperbolic
  // structure on (0,3) or (1,1). A crossing closer than `precision` to a side
  // of the fundamental domain (but not on it) gives an inconclusive result.
  OracleResult geodesic_intersection_oracle(const Word& c, const SurfacePresentation& s,
                                            double precision = 1e-9);

  struct CurveClass {
    Word word;  // canonical unoriented form
    int  si = 0;
  };

  // Nontrivial unoriented classes of cyclic length <= max_len with si <= k,
  // sorted by (length, word). jobs = 0 uses the hardware concurrency.
  std::vector<CurveClass> enumerate_k_simple(const SurfacePresentation& s, int k, int max_len,
                                             unsigned jobs = 0);

}  // namespace slw

#endif  // SLW_SURFACES_HPP_
