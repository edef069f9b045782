// Explicit maps and presentations: alpha maps, figure-eight maps, twists,
// quotients S/f, the genus-3 retraction, doubles and extensions of
// centralizers.

#ifndef SLW_CONSTRUCTIONS_HPP_
#define SLW_CONSTRUCTIONS_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slw/presentation.hpp"
#include "slw/surfaces.hpp"
#include "slw/words.hpp"

namespace slw {

  // A relator of the target, conjugated: conjugator * r^sign * conjugator^-1.
  struct RelatorFactor {
    Word        conjugator;
    std::size_t relator = 0;
    int         sign    = 1;
  };

  struct MarkedMap {
    std::string                                      name;
    std::vector<std::pair<std::string, long>>        params;
    SurfacePresentation                              source;
    GroupPresentation                                target;
    std::vector<Word>                                images;  // one per source generator
    std::optional<Word>                              kernel_witness;
    // Per source relator: a product of conjugated target relators that is
    // conjugate in the free group to the image of that relator.
    std::vector<std::vector<RelatorFactor>>          certificates;
    // Maps from the target onto a free group that are the identity on its
    // free factor; a nontrivial image under any of them certifies a
    // nontrivial element of the target.
    std::vector<FreeHom>                             retractions;
    // Conjugated target relators whose product is the image of the kernel
    // witness, for targets without an exact word problem.
    std::vector<RelatorFactor>                       witness_certificate;

    FreeHom hom() const { return FreeHom(source.alphabet, target.alphabet, images); }
    Word    operator()(const Word& w) const { return hom()(w); }
    long    param(const std::string& key) const;
  };

  // Image of the product of factors, freely reduced.
  Word expand(const std::vector<RelatorFactor>& factors, const GroupPresentation& target);

  // Source relators map to the identity: by free reduction for free targets,
  // by the stored certificates otherwise.
  bool well_defined(const MarkedMap& m);

  GroupPresentation free_presentation(const Alphabet& a);

  // (0,4) -> F(a,b): x -> a, y -> b, z -> a b a^2 b ... a^n b.
  MarkedMap alpha_map(int n);

  // (0,3) with boundary a, b, (ab)^-1 -> figure-eight group:
  // a -> x (y x^-1)^n, b -> y x^-1.
  MarkedMap figure_eight_map(int n);
  // Edge words f_n(a), f_n(b), f_n(ab) over x, y.
  std::array<Word, 3> figure_eight_edge_words(int n);
  // Nontrivial word in a, b killed by f_n: the figure-eight relator pulled
  // back through the inverse basis change x -> a b^-n, y -> b a b^-n.
  Word figure_eight_kernel_word(int n);

  // base o phi^m with phi: x -> x y, y -> y.
  FreeHom twist_sequence(const FreeHom& base, int m);

  enum class Subsurface { pair_of_pants, four_holed_sphere };

  // Generators of the standard subsurface as words in a closed surface:
  // pants p = a1, q = b1 a1^-1 b1^-1 (genus >= 1); four-holed sphere
  // x = b1^-1, y = a3, z = a3^-1 a2 a3 (genus >= 3).
  std::vector<Word> subsurface_generators(const SurfacePresentation& s, Subsurface sub);
  // Boundary words of the standard subsurface over its own generators.
  std::vector<Word> subsurface_boundary(Subsurface sub);

  // pi_1(S/f): generators of S and of f's target, the surface relator and
  // p = f(p) for each boundary word p of the subsurface.
  GroupPresentation quotient_presentation(const SurfacePresentation& s, Subsurface sub,
                                          const FreeHom& f);

  // Inclusion pi_1(S_g) -> pi_1(S/f) for f = alpha_map(n) on the standard
  // four-holed sphere, with retractions onto F(a,b): the fold h = f on S'
  // and f o r on its mirror, and the twisted folds h_m sending the stable
  // letters to f(boundary)^m, m = 1..twists.
  MarkedMap closed_from_boundary(int n, int genus, int twists = 3);

  // G_n: two figure-eight copies glued along f_n(a) (tree edge) and by
  // stable letters s, t along f_n(b), f_n(ab); map g_n from genus 2.
  MarkedMap double_presentation(int n);

  // Adds t and [t, a], marked stable_t and centralized_t.
  GroupPresentation extend_centralizers_presentation(const GroupPresentation& g, const Word& a,
                                                     const std::string& letter = "t");

}  // namespace slw

#endif  // SLW_CONSTRUCTIONS_HPP_
