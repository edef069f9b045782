// 2x2 matrices over exact or interval scalars, isometry classification,
// translation length, centralizers and representation builders.

#ifndef SLW_SL2_HPP_
#define SLW_SL2_HPP_

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/complex128.hpp>

#include "slw/presentation.hpp"
#include "slw/scalar.hpp"
#include "slw/words.hpp"

namespace slw {

  template <typename T>
  struct Mat2 {
    T a{}, b{}, c{}, d{};

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

    Mat2 operator*(const Mat2& o) const {
      return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    // Adjugate; the inverse when det = 1.
    Mat2 inverse() const { return {d, -b, -c, a}; }
    T    trace() const { return a + d; }
    T    det() const { return a * d - b * c; }
  };

  template <typename T>
  bool operator==(const Mat2<T>& x, const Mat2<T>& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  template <typename T>
  class Representation {
   public:
    Representation() = default;
    Representation(Alphabet alphabet, std::vector<Mat2<T>> images)
        : alphabet_(std::move(alphabet)), images_(std::move(images)) {
      if (images_.size() != alphabet_.size()) {
        throw input_error("representation needs one matrix per generator");
      }
      for (auto const& m : images_) {
        inverses_.push_back(m.inverse());
      }
    }

    const Alphabet&             alphabet() const noexcept { return alphabet_; }
    const std::vector<Mat2<T>>& images() const noexcept { return images_; }
    const Mat2<T>&              image(std::size_t i) const { return images_.at(i); }
    const Mat2<T>& letter(Letter l) const {
      return l.inverse() ? inverses_.at(l.gen()) : images_.at(l.gen());
    }

    Mat2<T> evaluate(const Word& w) const {
      if (w.max_generator_bound() > alphabet_.size()) {
        throw input_error("word is not over the representation's alphabet");
      }
      Mat2<T> m = Mat2<T>::identity();
      for (Letter l : w) {
        m = m * letter(l);
      }
      return m;
    }

   private:
    Alphabet             alphabet_;
    std::vector<Mat2<T>> images_;
    std::vector<Mat2<T>> inverses_;
  };

  using cplx      = std::complex<double>;
  using ExactMat  = Mat2<QuadNumber>;
  using ExactRep  = Representation<QuadNumber>;
  using NumMat    = Mat2<cplx>;
  using NumRep    = Representation<cplx>;
  // Binary128 complex, for polished solutions.
  using wcplx     = boost::multiprecision::complex128;
  using wreal     = boost::multiprecision::float128;
  using WideMat   = Mat2<wcplx>;
  using WideRep   = Representation<wcplx>;

  inline wcplx widen(cplx z) { return wcplx(wreal(z.real()), wreal(z.imag())); }
  inline cplx  narrow(const wcplx& z) {
    return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  NumMat narrow(const WideMat& m);
  NumRep narrow(const WideRep& r);
  template <typename F>
  using BoxMat = Mat2<CInterval<F>>;
  template <typename F>
  using BoxRep = Representation<CInterval<F>>;

  enum class Isometry { loxodromic, parabolic, elliptic, identity, unknown };
  const char* to_string(Isometry k);

  struct IsometryClass {
    Isometry kind      = Isometry::unknown;
    bool     certified = false;
  };

  // Exact: always certified. Throws domain_error when det != 1.
  IsometryClass classify(const ExactMat& m);
  // Relative width allowed for an interval determinant around 1.
  inline constexpr double det_width_bound = 1e-3;

  // Interval: loxodromic is certified when the trace box misses [-2,2];
  // everything else is unknown. Throws domain_error when det is not
  // enclosed near 1.
  template <typename F>
  IsometryClass classify(const BoxMat<F>& m);
  // Image of a word: det is certified on the generators, which carries
  // over to products, so the product only has to enclose 1.
  template <typename F>
  IsometryClass classify(const Representation<CInterval<F>>& rep, const Word& w);

  struct TranslationLength {
    bool   known  = false;
    double value  = 0;
    double radius = 0;  // enclosure half-width
  };
  TranslationLength translation_length(const ExactMat& m);
  template <typename F>
  TranslationLength translation_length(const BoxMat<F>& m);
  // Uncertified, for numerical matrices.
  double translation_length(const NumMat& m);

  // Same axis as m, eigenvalue mu at the attracting end... of m's larger
  // eigenvalue. Throws domain_error when m is not loxodromic or mu = 0.
  NumMat  centralizer_element(const NumMat& m, cplx mu);
  WideMat centralizer_element(const WideMat& m, wcplx mu);

  NumMat         to_numeric(const ExactMat& m);
  NumRep         to_numeric(const ExactRep& r);
  // Each entry enclosed in a disc of radius `inflate` about its value.
  template <typename F>
  BoxRep<F> to_boxes(const NumRep& r, double inflate);
  template <typename F>
  BoxRep<F> to_boxes(const WideRep& r, long double inflate);
  template <typename F>
  BoxRep<F> to_boxes(const ExactRep& r);

  // Figure-eight knot group: x, y meridians, relator W x W^-1 y^-1 with
  // W = x y^-1 x^-1 y.
  GroupPresentation figure_eight_presentation();
  // x -> [[1,1],[0,1]], y -> [[1,0],[-w,1]] with w = (-1 + sqrt(-3))/2.
  ExactRep figure_eight_exact_rep();
  // Trivial in the figure-eight group iff the exact image is +-I.
  bool trivial_in_figure_eight(const Word& w);

  class solve_error : public std::runtime_error {
   public:
    enum class Kind { no_convergence, infeasible };
    solve_error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
  };

  struct TraceTarget {
    Word word;
    cplx value;
  };

  struct SolveOptions {
    std::vector<TraceTarget> traces;      // tr(word) = value
    std::vector<Word>        loxodromic;  // tr(word) outside [-2,2] at the solution
    double                   tolerance      = 1e-10;
    int                      max_iterations = 200;
  };

  struct SolveResult {
    NumRep rep;
    double residual   = 0;
    int    iterations = 0;
  };

  // Damped Gauss-Newton on the relator equations in the matrix entries, with
  // det = 1, a gauge fixing x upper triangular with pinned corner, the first
  // off-diagonal entry of y pinned, and the trace targets. Relators may land
  // on -I; the sign is taken from the seed.
  SolveResult solve_relator_rep(const GroupPresentation& pres, const NumRep& seed,
                                const SolveOptions& opt);

  // Newton steps in binary128 on the same system, with the Jacobian frozen
  // at rep: polishes a double solution to extended precision.
  WideRep refine_relator_rep(const GroupPresentation& pres, const NumRep& rep,
                             const SolveOptions& opt, int steps = 6);

  // The relator residual max |rho(r) - sign I|.
  double relator_residual(const NumRep& rep, const GroupPresentation& pres);
  double relator_residual(const WideRep& rep, const GroupPresentation& pres);

  // Adds t -> rho(a)^n. Throws domain_error when rho(a) is not loxodromic.
  template <typename T>
  Representation<T> extend_centralizer_rep(const Representation<T>& rep, const Word& a, int n,
                                           const std::string& letter = "t");

  // Both vertex copies map by rep; s and t go to centralizer elements of the
  // images of edge words 1 and 2 with the given eigenvalues. The alphabet is
  // rep's, then its primed copy, then s, t. A vertex bend v != 1 conjugates
  // the primed copy by the centralizer element of edge word 0 with
  // eigenvalue v, and s, t pick up the same factor on the left.
  NumRep  double_rep(const NumRep& rep, const std::array<Word, 3>& edge_words,
                     const std::array<cplx, 2>& bend, cplx vertex_bend = 1);
  WideRep double_rep(const WideRep& rep, const std::array<Word, 3>& edge_words,
                     const std::array<cplx, 2>& bend, cplx vertex_bend = 1);

}  // namespace slw

#endif  // SLW_SL2_HPP_
