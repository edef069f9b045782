#include "slw/words.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

namespace slw {

  namespace {
    char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }
    bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

    std::string inverse_name(std::string const& name) {
      std::string s = name;
      s[0]          = upper(s[0]);
      return s;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) {
      throw input_error("alphabet must have at least one generator");
    }
    std::unordered_set<std::string> seen;
    for (auto const& n : names_) {
      if (n.empty() || !std::islower(static_cast<unsigned char>(n[0]))) {
        throw input_error("generator name must start with a lower-case letter: '" + n + "'");
      }
      for (char c : n) {
        if (c == '^' || is_space(c) || c == '(' || c == ')' || c == ',') {
          throw input_error("invalid character in generator name '" + n + "'");
        }
      }
      if (n == "1" || !seen.insert(n).second) {
        throw input_error("duplicate generator name '" + n + "'");
      }
      if (n.size() != 1) {
        single_letter_ = false;
      }
    }
  }

  Alphabet Alphabet::standard(std::size_t rank) {
    static constexpr char const* kNames[] = {"x", "y", "z", "w", "u", "v"};
    std::vector<std::string>     names;
    for (std::size_t i = 0; i < rank; ++i) {
      names.push_back(rank <= 6 ? std::string(kNames[i]) : "g" + std::to_string(i + 1));
    }
    return Alphabet(std::move(names));
  }

  Alphabet Alphabet::surface(std::size_t genus) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= genus; ++i) {
      names.push_back("a" + std::to_string(i));
      names.push_back("b" + std::to_string(i));
    }
    return Alphabet(std::move(names));
  }

  std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  Alphabet Alphabet::extended(std::string const& name) const {
    auto names = names_;
    names.push_back(name);
    return Alphabet(std::move(names));
  }

  Alphabet Alphabet::concat(Alphabet const& other) const {
    auto names = names_;
    names.insert(names.end(), other.names_.begin(), other.names_.end());
    return Alphabet(std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word reduce(std::span<const Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
      if (!out.empty() && out.back() == l.inv()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out), Word::Unchecked{});
  }

  Word reduce(std::span<const Letter> raw, const Alphabet& alphabet) {
    for (Letter l : raw) {
      if (l.gen() >= alphabet.size()) {
        throw input_error("generator index " + std::to_string(l.gen()) + " out of range");
      }
    }
    return reduce(raw);
  }

  Word::Word(std::vector<Letter> letters) : Word(reduce(letters)) {}

  Word Word::generator(std::uint32_t gen, int exponent) {
    Letter              l = Letter::make(gen, exponent < 0);
    std::vector<Letter> v(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent), l);
    return Word(std::move(v), Unchecked{});
  }

  Word Word::inverse() const {
    std::vector<Letter> v(letters_.rbegin(), letters_.rend());
    for (auto& l : v) {
      l = l.inv();
    }
    return Word(std::move(v), Unchecked{});
  }

  Word Word::pow(int exponent) const {
    Word base = exponent < 0 ? inverse() : *this;
    int  e    = exponent < 0 ? -exponent : exponent;
    if (e == 0 || base.empty()) {
      return Word();
    }
    auto [c, core] = cyclic_decomposition(base);
    std::vector<Letter> v;
    v.reserve(c.size() * 2 + core.size() * static_cast<std::size_t>(e));
    v.insert(v.end(), c.begin(), c.end());
    for (int i = 0; i < e; ++i) {
      v.insert(v.end(), core.begin(), core.end());
    }
    auto ci = c.inverse();
    v.insert(v.end(), ci.begin(), ci.end());
    return Word(std::move(v), Unchecked{});
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) {
      throw input_error("subword out of range");
    }
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)),
                Unchecked{});
  }

  Word Word::rotated(std::size_t shift) const {
    if (letters_.empty()) {
      return *this;
    }
    shift %= letters_.size();
    std::vector<Letter> v(letters_);
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift), v.end());
    return Word(std::move(v), Unchecked{});
  }

  bool Word::cyclically_reduced() const noexcept {
    return letters_.size() < 2 || letters_.front() != letters_.back().inv();
  }

  std::size_t Word::max_generator_bound() const noexcept {
    std::size_t m = 0;
    for (Letter l : letters_) {
      m = std::max<std::size_t>(m, l.gen() + 1);
    }
    return m;
  }

  Word& Word::operator*=(const Word& rhs) {
    std::size_t k = 0;
    while (k < rhs.size() && !letters_.empty() && letters_.back() == rhs[k].inv()) {
      letters_.pop_back();
      ++k;
    }
    letters_.insert(letters_.end(), rhs.begin() + static_cast<std::ptrdiff_t>(k), rhs.end());
    return *this;
  }

  bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::vector<Letter> raw;
    std::size_t         i = 0;
    auto                fail = [&](std::string const& why) {
      throw input_error("cannot parse word '" + std::string(text) + "': " + why);
    };
    while (i < text.size()) {
      if (is_space(text[i])) {
        ++i;
        continue;
      }
      if (text[i] == '1' && (i + 1 == text.size() || is_space(text[i + 1]))) {
        ++i;
        continue;
      }
      std::size_t best = 0, best_gen = 0;
      bool        best_inv = false;
      for (std::size_t g = 0; g < alphabet.size(); ++g) {
        auto const& n = alphabet.name(g);
        if (n.size() <= best || i + n.size() > text.size()) {
          continue;
        }
        auto piece = text.substr(i, n.size());
        if (piece == n) {
          best = n.size(), best_gen = g, best_inv = false;
        } else if (piece == inverse_name(n)) {
          best = n.size(), best_gen = g, best_inv = true;
        }
      }
      if (best == 0) {
        fail("unknown generator at offset " + std::to_string(i));
      }
      i += best;
      long exponent = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t j = i + 1;
        bool        neg = false;
        if (j < text.size() && (text[j] == '-' || text[j] == '+')) {
          neg = text[j] == '-';
          ++j;
        }
        std::size_t start = j;
        long        value = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          value = value * 10 + (text[j] - '0');
          if (value > 1000000) {
            fail("exponent too large");
          }
          ++j;
        }
        if (j == start) {
          fail("missing exponent");
        }
        exponent = neg ? -value : value;
        i        = j;
      }
      Letter l = Letter::make(static_cast<std::uint32_t>(best_gen), best_inv);
      if (exponent < 0) {
        l        = l.inv();
        exponent = -exponent;
      }
      raw.insert(raw.end(), static_cast<std::size_t>(exponent), l);
    }
    return reduce(raw);
  }

  std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Letter l = w[i];
      if (l.gen() >= alphabet.size()) {
        throw input_error("word uses a generator outside the alphabet");
      }
      if (i > 0 && !alphabet.single_letter()) {
        out += ' ';
      }
      auto const& n = alphabet.name(l.gen());
      out += l.inverse() ? inverse_name(n) : n;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclic words
  ////////////////////////////////////////////////////////////////////////

  CyclicDecomposition cyclic_decomposition(const Word& w) {
    std::size_t n = w.size(), k = 0;
    while (2 * k + 1 < n && w[k] == w[n - 1 - k].inv()) {
      ++k;
    }
    return {w.subword(0, k), w.subword(k, n - 2 * k)};
  }

  Word cyclic_reduction(const Word& w) { return cyclic_decomposition(w).core; }

  Word least_rotation(const Word& cr) {
    std::size_t n = cr.size();
    if (n < 2) {
      return cr;
    }
    // two-candidate scan for the minimal rotation
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
      Letter a = cr[(i + k) % n], b = cr[(j + k) % n];
      if (a == b) {
        ++k;
        continue;
      }
      if (a > b) {
        i += k + 1;
      } else {
        j += k + 1;
      }
      if (i == j) {
        ++j;
      }
      k = 0;
    }
    return cr.rotated(std::min(i, j));
  }

  CyclicWord cyclic_normal_form(const Word& w, bool include_inverse) {
    Word core = cyclic_reduction(w);
    Word best = least_rotation(core);
    if (include_inverse) {
      Word other = least_rotation(core.inverse());
      if (other < best) {
        best = std::move(other);
      }
    }
    return {std::move(best), true};
  }

  bool is_conjugate(const Word& u, const Word& v) {
    return cyclic_normal_form(u).representative == cyclic_normal_form(v).representative;
  }

  Root primitive_root(const Word& w) {
    if (w.empty()) {
      throw domain_error("primitive root of the trivial word");
    }
    auto [c, core] = cyclic_decomposition(w);
    std::size_t n  = core.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = 0; i + d < n && periodic; ++i) {
        periodic = core[i] == core[i + d];
      }
      if (periodic) {
        return {c * core.subword(0, d) * c.inverse(), static_cast<int>(n / d)};
      }
    }
    return {w, 1};
  }

  bool conjugate_centralizers(const Word& u, const Word& v) {
    auto ru = primitive_root(u).root;
    auto rv = primitive_root(v).root;
    return cyclic_normal_form(ru, true) == cyclic_normal_form(rv, true);
  }

  Rational overlap_ratio(const Word& w) {
    if (w.empty()) {
      throw domain_error("overlap ratio of the trivial word");
    }
    Word           core = cyclic_reduction(w);
    std::size_t    n    = core.size();
    std::u32string doubled;
    doubled.reserve(2 * n);
    for (int r = 0; r < 2; ++r) {
      for (Letter l : core) {
        doubled.push_back(static_cast<char32_t>(l.code));
      }
    }
    std::u32string_view view(doubled);
    auto                repeats = [&](std::size_t len) {
      std::unordered_set<std::u32string_view> seen;
      for (std::size_t s = 0; s < n; ++s) {
        if (!seen.insert(view.substr(s, len)).second) {
          return true;
        }
      }
      return false;
    };
    // a repeat of length l at two starts gives one of length l-1 there too
    std::size_t lo = 0, hi = n - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (repeats(mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return Rational(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(n));
  }

  Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

  Word baumslag_word(std::span<const Word> g, const Word& a, std::span<const int> n) {
    if (g.empty() || g.size() != n.size()) {
      throw input_error("baumslag_word: g and n must have the same positive length");
    }
    Word out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      out *= g[i];
      out *= a.pow(n[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  FreeHom::FreeHom(Alphabet source, Alphabet target, std::vector<Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size() || source_.size() == 0) {
      throw input_error("homomorphism needs one image per source generator");
    }
    for (auto const& im : images_) {
      if (im.max_generator_bound() > target_.size()) {
        throw input_error("image uses a generator outside the target alphabet");
      }
    }
  }

  FreeHom FreeHom::identity(const Alphabet& alphabet) {
    std::vector<Word> images;
    for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
      images.push_back(Word::generator(i));
    }
    return FreeHom(alphabet, alphabet, std::move(images));
  }

  Word FreeHom::operator()(const Word& w) const { return apply_hom(*this, w); }

  Word apply_hom(const FreeHom& f, const Word& w) {
    if (w.max_generator_bound() > f.source_rank()) {
      throw input_error("word is not over the source alphabet");
    }
    std::vector<Word> inverses;
    inverses.reserve(f.source_rank());
    for (auto const& im : f.images()) {
      inverses.push_back(im.inverse());
    }
    std::vector<Letter> raw;
    for (Letter l : w) {
      auto const& im = l.inverse() ? inverses[l.gen()] : f.image(l.gen());
      raw.insert(raw.end(), im.begin(), im.end());
    }
    return reduce(raw);
  }

  FreeHom compose(const FreeHom& g, const FreeHom& f) {
    if (!(f.target() == g.source())) {
      throw input_error("compose: target of f differs from source of g");
    }
    std::vector<Word> images;
    for (auto const& im : f.images()) {
      images.push_back(apply_hom(g, im));
    }
    return FreeHom(f.source(), g.target(), std::move(images));
  }

}  // namespace slw
