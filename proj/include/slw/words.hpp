// Free-group words over a named alphabet: reduction, cyclic normal forms,
// conjugacy, roots, overlap ratios and homomorphisms between free groups.

#ifndef SLW_WORDS_HPP_
#define SLW_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace slw {

  // Malformed input: bad generator index, unparsable word, arity mismatch.
  class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Operation undefined on the given value (trivial word where a nontrivial
  // one is needed, non-hyperbolic surface type, ...).
  class domain_error : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  using Rational = boost::rational<std::int64_t>;

  // A signed generator. The code is 2*gen + (inverse ? 1 : 0), so the natural
  // order is a < a^-1 < b < b^-1 < ...
  struct Letter {
    std::uint32_t code = 0;

    static constexpr Letter make(std::uint32_t gen, bool inverse = false) {
      return Letter{2 * gen + (inverse ? 1u : 0u)};
    }
    constexpr std::uint32_t gen() const { return code >> 1; }
    constexpr bool inverse() const { return (code & 1u) != 0; }
    constexpr Letter inv() const { return Letter{code ^ 1u}; }

    constexpr auto operator<=>(const Letter&) const = default;
  };

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    // x, y, z, w, u, v for rank <= 6, otherwise g1, g2, ...
    static Alphabet standard(std::size_t rank);
    // a1, b1, ..., ag, bg
    static Alphabet surface(std::size_t genus);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // Every name is one character, so words print juxtaposed.
    bool single_letter() const noexcept { return single_letter_; }

    Alphabet extended(std::string const& name) const;
    Alphabet concat(Alphabet const& other) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

   private:
    std::vector<std::string> names_;
    bool                     single_letter_ = true;
  };

  // A freely reduced word. Construct through reduce() or the arithmetic
  // operators; the constructor from letters reduces too.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters)
        : Word(std::vector<Letter>(letters)) {}

    static Word generator(std::uint32_t gen, int exponent = 1);

    std::size_t size() const noexcept { return letters_.size(); }
    bool        empty() const noexcept { return letters_.empty(); }
    Letter      operator[](std::size_t i) const { return letters_[i]; }
    Letter      front() const { return letters_.front(); }
    Letter      back() const { return letters_.back(); }
    auto        begin() const noexcept { return letters_.begin(); }
    auto        end() const noexcept { return letters_.end(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    Word inverse() const;
    Word pow(int exponent) const;
    Word subword(std::size_t pos, std::size_t len) const;
    // Rotation by `shift` of a cyclically reduced word; reduction is not
    // needed because rotations of cyclically reduced words stay reduced.
    Word rotated(std::size_t shift) const;
    bool cyclically_reduced() const noexcept;
    std::size_t max_generator_bound() const noexcept;

    Word& operator*=(const Word& rhs);
    friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

    auto operator<=>(const Word&) const = default;

   private:
    struct Unchecked {};
    Word(std::vector<Letter> letters, Unchecked) : letters_(std::move(letters)) {}
    friend Word reduce(std::span<const Letter>);

    std::vector<Letter> letters_;
  };

  // Length first, then lexicographic in letter order.
  bool shortlex_less(const Word& a, const Word& b);

  // a b a^-1 b^-1
  Word commutator(const Word& a, const Word& b);

  Word reduce(std::span<const Letter> raw);
  // As above, also rejecting generator indices >= alphabet size.
  Word reduce(std::span<const Letter> raw, const Alphabet& alphabet);

  Word        parse_word(std::string_view text, const Alphabet& alphabet);
  std::string format_word(const Word& w, const Alphabet& alphabet);

  struct CyclicWord {
    Word representative;
    bool canonical = false;

    auto operator<=>(const CyclicWord&) const = default;
  };

  // w = c * core * c^-1 with core cyclically reduced.
  struct CyclicDecomposition {
    Word conjugator;
    Word core;
  };
  CyclicDecomposition cyclic_decomposition(const Word& w);
  Word                cyclic_reduction(const Word& w);

  // Least rotation of a cyclically reduced word.
  Word least_rotation(const Word& cyclically_reduced);

  CyclicWord cyclic_normal_form(const Word& w, bool include_inverse = false);
  bool       is_conjugate(const Word& u, const Word& v);

  struct Root {
    Word root;
    int  exponent = 1;
  };
  // w = root^exponent with exponent maximal. Throws domain_error on the
  // trivial word.
  Root primitive_root(const Word& w);

  // True iff u and v (both nontrivial) have conjugate centralizers, i.e. their
  // primitive roots are conjugate up to inversion.
  bool conjugate_centralizers(const Word& u, const Word& v);

  // Longest subword occurring at two distinct starting positions of the
  // cyclic reduction, as a fraction of its length. Subwords are proper (length
  // < |w|). Throws domain_error on the trivial word.
  Rational overlap_ratio(const Word& w);

  // g1 a^n1 g2 a^n2 ... gk a^nk
  Word baumslag_word(std::span<const Word> g, const Word& a, std::span<const int> n);

  class FreeHom {
   public:
    FreeHom() = default;
    FreeHom(Alphabet source, Alphabet target, std::vector<Word> images);

    static FreeHom identity(const Alphabet& alphabet);

    std::size_t              source_rank() const noexcept { return source_.size(); }
    const Alphabet&          source() const noexcept { return source_; }
    const Alphabet&          target() const noexcept { return target_; }
    const std::vector<Word>& images() const noexcept { return images_; }
    const Word&              image(std::size_t i) const { return images_.at(i); }

    Word operator()(const Word& w) const;

    bool operator==(const FreeHom&) const = default;

   private:
    Alphabet          source_;
    Alphabet          target_;
    std::vector<Word> images_;
  };

  Word    apply_hom(const FreeHom& f, const Word& w);
  // g after f.
  FreeHom compose(const FreeHom& g, const FreeHom& f);

  struct StallingsResult {
    bool                                surjective = false;
    bool                                injective  = false;
    std::optional<std::pair<Word, Word>> fold_witness;
    std::size_t                         vertices = 0;
    std::size_t                         edges    = 0;
  };

  // Folds the subgroup graph of the image, tracking source labels on edges so
  // that the first rank-reducing fold yields two distinct source words with
  // the same image.
  StallingsResult     stallings_analysis(const FreeHom& f);
  std::optional<Word> kernel_witness(const FreeHom& f);

}  // namespace slw

#endif  // SLW_WORDS_HPP_
