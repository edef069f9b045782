#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "slw/words.hpp"

using namespace slw;

namespace {
  Alphabet const ab({"a", "b"});
  Alphabet const xyz({"x", "y", "z"});

  Word W(std::string const& s, Alphabet const& A = ab) { return parse_word(s, A); }

  // a b a^2 b ... a^n b
  Word alpha_z_image(int n) {
    std::string s;
    for (int i = 1; i <= n; ++i) s += std::string(static_cast<std::size_t>(i), 'a') + "b";
    return W(s);
  }

  // all reduced words of length exactly n over `rank` generators
  std::vector<Word> words_of_length(std::size_t rank, std::size_t n) {
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> next;
      for (auto const& w : out) {
        for (std::uint32_t c = 0; c < 2 * rank; ++c) {
          Letter l{c};
          if (!w.empty() && w.back() == l.inv()) {
            continue;
          }
          auto v = w.letters();
          v.push_back(l);
          next.push_back(Word(v));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  std::vector<Word> ball(std::size_t rank, std::size_t radius) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= radius; ++n) {
      auto v = words_of_length(rank, n);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  // conjugacy by string search: cyclic reductions are rotations of each other
  bool conjugate_oracle(Word const& u, Word const& v) {
    auto cu = cyclic_reduction(u), cv = cyclic_reduction(v);
    if (cu.size() != cv.size()) {
      return false;
    }
    std::string su, sv;
    for (auto l : cu) su += static_cast<char>('A' + l.code);
    for (auto l : cv) sv += static_cast<char>('A' + l.code);
    return (su + su).find(sv) != std::string::npos;
  }

  // every pair of distinct cyclic start positions, every length < n
  Rational overlap_oracle(Word const& w) {
    auto        c = cyclic_reduction(w);
    std::size_t n = c.size(), best = 0;
    for (std::size_t len = 1; len < n; ++len) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          bool same = true;
          for (std::size_t t = 0; t < len && same; ++t) {
            same = c[(i + t) % n] == c[(j + t) % n];
          }
          if (same) best = std::max(best, len);
        }
      }
    }
    return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n));
  }
}  // namespace

TEST_CASE("reduce") {
  Letter a = Letter::make(0), A = a.inv(), b = Letter::make(1), B = b.inv();
  CHECK(reduce(std::vector<Letter>{a, A, b}) == Word{b});
  CHECK(reduce(std::vector<Letter>{}).empty());
  CHECK(reduce(std::vector<Letter>{a, b, B, a}) == Word::generator(0, 2));
  CHECK_THROWS_AS(reduce(std::vector<Letter>{Letter::make(5)}, ab), input_error);
  for (auto const& w : ball(2, 4)) {
    CHECK(reduce(w.letters()) == w);
  }
}

TEST_CASE("parse and print") {
  CHECK(format_word(W("abAB"), ab) == "abAB");
  CHECK(W("a^-1 b") == W("Ab"));
  CHECK(W("a^3") == W("aaa"));
  CHECK(W("1").empty());
  CHECK(format_word(Word(), ab) == "1");
  Alphabet long_names({"a1", "b1", "a2", "b2"});
  auto     w = parse_word("a1 b1 A1 b1^-1 a2", long_names);
  CHECK(w.size() == 5);
  CHECK(format_word(w, long_names) == "a1 b1 A1 B1 a2");
  for (auto const& u : ball(2, 5)) {
    CHECK(W(format_word(u, ab)) == u);
  }
  CHECK_THROWS_AS(W("abc"), input_error);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), input_error);
  CHECK_THROWS_AS(Alphabet({"A"}), input_error);
}

TEST_CASE("cyclic normal form") {
  CHECK(cyclic_normal_form(W("baB")).representative == W("a"));
  CHECK(cyclic_normal_form(W("ab")) == cyclic_normal_form(W("ba")));
  CHECK(cyclic_normal_form(W("aB"), true) == cyclic_normal_form(W("bA"), true));
  CHECK(cyclic_normal_form(W("aB")).canonical);
  CHECK(!(cyclic_normal_form(W("aB")) == cyclic_normal_form(W("bA"))));
}

TEST_CASE("conjugacy against string search on all words of length <= 6") {
  auto all = ball(2, 6);
  std::map<Word, std::size_t> classes;
  for (auto const& w : all) {
    classes.emplace(cyclic_normal_form(w).representative, classes.size());
  }
  // sample pairs: every word against a fixed slice
  for (std::size_t i = 0; i < all.size(); i += 7) {
    for (std::size_t j = 0; j < all.size(); j += 13) {
      bool expect = conjugate_oracle(all[i], all[j]);
      REQUIRE(is_conjugate(all[i], all[j]) == expect);
      REQUIRE((cyclic_normal_form(all[i]) == cyclic_normal_form(all[j])) == expect);
    }
  }
  CHECK(is_conjugate(W("ab"), W("ba")));
  CHECK(!is_conjugate(W("a"), W("b")));
  // [a,b] and [b,a] are inverse; rotations of abAB never give baBA
  CHECK(!is_conjugate(W("abAB"), W("baBA")));
  CHECK(cyclic_normal_form(W("abAB"), true) == cyclic_normal_form(W("baBA"), true));
}

TEST_CASE("primitive root") {
  auto r = primitive_root(W("ababab"));
  CHECK(r.root == W("ab"));
  CHECK(r.exponent == 3);
  r = primitive_root(W("aab"));
  CHECK(r.root == W("aab"));
  CHECK(r.exponent == 1);
  r = primitive_root(W("AA"));
  CHECK(r.root == W("A"));
  CHECK(r.exponent == 2);
  r = primitive_root(W("babababB"));
  CHECK(r.root.pow(r.exponent) == W("babababB"));
  CHECK(r.exponent == 3);
  CHECK_THROWS_AS(primitive_root(Word()), domain_error);
  for (auto const& w : ball(2, 6)) {
    if (w.empty()) continue;
    auto [root, e] = primitive_root(w);
    REQUIRE(root.pow(e) == w);
    REQUIRE(cyclic_reduction(w).size() % static_cast<std::size_t>(e) == 0);
    REQUIRE(primitive_root(root).exponent == 1);
  }
  CHECK(conjugate_centralizers(W("abab"), W("BA")));
  CHECK(!conjugate_centralizers(W("ab"), W("aB")));
}

TEST_CASE("overlap ratio") {
  CHECK(overlap_ratio(W("ab")) == Rational(0));
  CHECK(overlap_ratio(W("aa")) == Rational(1, 2));
  Word f3z = W("abaabaaab");
  CHECK(overlap_oracle(f3z) == Rational(4, 9));
  CHECK(overlap_ratio(f3z) == overlap_oracle(f3z));
  CHECK_THROWS_AS(overlap_ratio(Word()), domain_error);
  for (auto const& w : ball(2, 7)) {
    if (w.empty()) continue;
    REQUIRE(overlap_ratio(w) == overlap_oracle(w));
    REQUIRE(overlap_ratio(w) == overlap_ratio(w.inverse()));
    auto c = cyclic_reduction(w);
    REQUIRE(overlap_ratio(c.rotated(1)) == overlap_ratio(w));
  }
  for (int k = 2; k <= 4; ++k) {
    for (auto const& w : {W("ab"), W("aab"), W("abAB")}) {
      CHECK(overlap_ratio(w.pow(k)) >= Rational(k - 1, k));
    }
  }
}

TEST_CASE("overlap decay along the alpha maps") {
  Rational prev(1);
  for (int n = 2; n <= 20; ++n) {
    Word z = alpha_z_image(n);
    auto o = overlap_ratio(z);
    CHECK(o <= prev);
    CHECK(o * n >= Rational(1));
    CHECK(o * n <= Rational(6));
    prev = o;
  }
}

TEST_CASE("homomorphisms") {
  FreeHom f(xyz, ab, {W("a"), W("b"), W("abaab")});
  CHECK(apply_hom(f, W("z", xyz)) == W("abaab"));
  CHECK(apply_hom(f, Word()).empty());
  CHECK(apply_hom(f, W("xyZ", xyz)) == W("ABA"));
  CHECK(compose(FreeHom::identity(ab), f) == f);
  CHECK(compose(f, FreeHom::identity(xyz)) == f);
  FreeHom g(ab, ab, {W("a"), W("b")});
  CHECK(compose(g, f).image(2) == W("abaab"));
  CHECK_THROWS_AS(compose(f, f), input_error);
  CHECK_THROWS_AS(FreeHom(ab, ab, {W("a")}), input_error);
  CHECK_THROWS_AS(apply_hom(g, W("z", xyz)), input_error);
}

TEST_CASE("stallings examples") {
  FreeHom alpha(xyz, ab, {W("a"), W("b"), W("abaabaaab")});
  auto    r = stallings_analysis(alpha);
  CHECK(r.surjective);
  CHECK(!r.injective);

  Alphabet xy({"x", "y"});
  FreeHom  collapse(xy, ab, {W("a"), W("a")});
  r = stallings_analysis(collapse);
  CHECK(!r.surjective);
  CHECK(!r.injective);
  REQUIRE(r.fold_witness);
  CHECK(r.fold_witness->first == W("x", xy));
  CHECK(r.fold_witness->second == W("y", xy));
  CHECK(kernel_witness(collapse) == W("xY", xy));

  FreeHom sq(xy, ab, {W("aa"), W("b")});
  r = stallings_analysis(sq);
  CHECK(!r.surjective);
  CHECK(r.injective);
  CHECK(!kernel_witness(sq));

  auto k = kernel_witness(alpha);
  REQUIRE(k);
  CHECK(!k->empty());
  CHECK(apply_hom(alpha, *k).empty());
  Word direct = W("z", xyz) * W("xyxxyxxxy", xyz).inverse();
  CHECK(apply_hom(alpha, direct).empty());
}

TEST_CASE("stallings against brute force on F2 -> F2 with images of length <= 3") {
  Alphabet xy({"x", "y"});
  auto     images = ball(2, 3);
  auto     source = ball(2, 8);
  auto     small  = ball(2, 5);
  Word     a = W("a"), b = W("b");
  int      checked = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      FreeHom f(xy, ab, {images[i], images[j]});
      auto    r = stallings_analysis(f);
      bool    has_a = false, has_b = false;
      for (auto const& w : source) {
        Word im = apply_hom(f, w);
        has_a   = has_a || im == a;
        has_b   = has_b || im == b;
        if (has_a && has_b) break;
      }
      REQUIRE(r.surjective == (has_a && has_b));
      if (r.injective) {
        for (auto const& w : small) {
          if (!w.empty()) REQUIRE(!apply_hom(f, w).empty());
        }
      } else {
        auto k = kernel_witness(f);
        REQUIRE(k);
        REQUIRE(!k->empty());
        REQUIRE(apply_hom(f, *k).empty());
        REQUIRE(apply_hom(f, r.fold_witness->first) == apply_hom(f, r.fold_witness->second));
      }
      ++checked;
    }
  }
  CHECK(checked == 53 * 53);
}

TEST_CASE("baumslag words") {
  Word a = W("a"), b = W("b");
  CHECK(baumslag_word(std::vector{b}, a, std::vector{2}) == W("baa"));
  CHECK(baumslag_word(std::vector{b, b}, a, std::vector{1, -1}) == W("babA"));
  CHECK(baumslag_word(std::vector{a}, a, std::vector{-1}).empty());
  CHECK_THROWS_AS(baumslag_word(std::vector{a, b}, a, std::vector{1}), input_error);
}
