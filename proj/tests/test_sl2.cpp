#include <cmath>
#include <random>

#include <doctest.h>

#include "slw/sl2.hpp"

using namespace slw;

namespace {
  ExactMat q(long a, long b, long c, long d) { return {a, b, c, d}; }
  QuadNumber frac(long p, long r) { return QuadNumber(BigRational(p, r), 0); }

  BoxMat<double> box(cplx a, cplx b, cplx c, cplx d) {
    auto e = [](cplx z) { return CInterval<double>::around({z.real(), z.imag()}); };
    return {e(a), e(b), e(c), e(d)};
  }

  NumMat random_sl2(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    cplx a(g(rng), g(rng)), b(g(rng), g(rng)), c(g(rng), g(rng));
    if (std::abs(a) < 0.2) {
      a += 1.0;
    }
    return {a, b, c, (1.0 + b * c) / a};
  }

  double dist(const NumMat& x, const NumMat& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                     std::abs(x.d - y.d)});
  }
}  // namespace

TEST_CASE("quadratic numbers") {
  QuadNumber w(BigRational(-1, 2), BigRational(1, 2), -3);
  CHECK(w * w * w == QuadNumber(1));
  CHECK(w * w + w + QuadNumber(1) == QuadNumber(0));
  CHECK(QuadNumber(1) / w == w * w);
  CHECK_FALSE(w.is_real());
  CHECK(w.radical_text() == "1/2√-3");
  CHECK_THROWS_AS(QuadNumber(1) / QuadNumber(0), domain_error);
}

TEST_CASE("intervals enclose") {
  std::mt19937_64                        rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    double a = u(rng), b = u(rng);
    auto   x = Interval<double>::around(a), y = Interval<double>::around(b);
    CHECK((x * y).contains(a * b));
    CHECK((x - y).contains(a - b));
    if (std::abs(b) > 0.1) {
      CHECK((x / y).contains(a / b));
    }
  }
  CHECK_THROWS_AS(Interval<double>(-1, 1).reciprocal(), domain_error);
}

TEST_CASE("evaluate") {
  ExactRep r(Alphabet::standard(2), {q(1, 1, 0, 1), q(2, 1, 1, 1)});
  auto     a = r.alphabet();
  CHECK(r.evaluate(Word()) == ExactMat::identity());
  Word w = parse_word("xyyX", a);
  CHECK(r.evaluate(w * w.inverse()) == ExactMat::identity());
  CHECK(r.evaluate(parse_word("x^3", a)) == q(1, 3, 0, 1));
  CHECK_THROWS_AS(r.evaluate(Word::generator(2)), input_error);

  std::mt19937_64 rng(3);
  auto            boxes = to_boxes<__float128>(figure_eight_exact_rep());
  std::uniform_int_distribution<std::uint32_t> pick(0, 3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Letter> v;
    for (int i = 0; i < 40; ++i) {
      v.push_back(Letter{pick(rng)});
    }
    auto det = boxes.evaluate(reduce(v)).det();
    CHECK(det.contains(1.0L));
    CHECK(det.rad() < 1e-9);
  }
}

TEST_CASE("classify canonical examples") {
  ExactMat d3{3, 0, 0, frac(1, 3)};
  auto     c = classify(d3);
  CHECK(c.kind == Isometry::loxodromic);
  CHECK(c.certified);
  CHECK(classify(q(1, 1, 0, 1)).kind == Isometry::parabolic);
  CHECK(classify(q(-1, 1, 0, -1)).kind == Isometry::parabolic);
  CHECK(classify(q(0, -1, 1, 1)).kind == Isometry::elliptic);  // trace 1
  CHECK(classify(q(-1, 0, 0, -1)).kind == Isometry::identity);
  CHECK_THROWS_AS(classify(q(1, 1, 1, 1)), domain_error);

  // trace 1 + i
  auto lox = classify(box(cplx(1, 1), 1, -1, 0));
  CHECK(lox.kind == Isometry::loxodromic);
  CHECK(lox.certified);
  auto unk = classify(box(1, 1, 0, 1));
  CHECK(unk.kind == Isometry::unknown);
  CHECK_FALSE(unk.certified);
}

TEST_CASE("classification is conjugation invariant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    NumMat m = random_sl2(rng), g = random_sl2(rng);
    auto   b1 = to_boxes<double>(NumRep(Alphabet::standard(1), {m}), 0).image(0);
    auto   b2 = to_boxes<double>(NumRep(Alphabet::standard(1), {g * m * g.inverse()}), 0).image(0);
    CHECK(classify(b1).kind == classify(b2).kind);
  }
  ExactMat g{2, 1, 1, 1};
  for (auto m : {q(1, 1, 0, 1), q(0, -1, 1, 1), q(3, 1, 2, 1)}) {
    CHECK(classify(m).kind == classify(g * m * g.inverse()).kind);
  }
}

TEST_CASE("translation length") {
  double e    = std::exp(1.0);
  auto   tl   = translation_length(box(e, 0, 0, 1 / e));
  CHECK(tl.known);
  CHECK(std::abs(tl.value - 2) < 1e-10);
  CHECK(tl.radius < 1e-10);
  CHECK(translation_length(q(1, 1, 0, 1)).value == 0);
  ExactMat d2{2, 0, 0, frac(1, 2)};
  CHECK(std::abs(translation_length(d2).value - 2 * std::log(2.0)) < 1e-12);
  CHECK(std::abs(translation_length(d2).value - 2 * std::acosh(1.25)) < 1e-12);
  CHECK_FALSE(translation_length(box(1, 1, 0, 1)).known);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    NumMat m = random_sl2(rng);
    if (std::abs(m.trace().imag()) < 0.1) {
      continue;
    }
    auto   b  = to_boxes<double>(NumRep(Alphabet::standard(1), {m}), 0);
    auto   l1 = translation_length(b.image(0));
    for (int k = 2; k <= 5; ++k) {
      auto lk = translation_length(b.evaluate(Word::generator(0, k)));
      CHECK(std::abs(lk.value - k * l1.value) <= lk.radius + k * l1.radius + 1e-9);
    }
  }
}

TEST_CASE("centralizer elements") {
  NumMat m{2, 0, 0, 0.5};
  NumMat c = centralizer_element(m, 3);
  CHECK(dist(c, NumMat{3, 0, 0, 1.0 / 3}) < 1e-14);
  CHECK(dist(centralizer_element(m, 1), NumMat::identity()) < 1e-14);
  CHECK_THROWS_AS(centralizer_element(NumMat{1, 1, 0, 1}, 2), domain_error);
  CHECK_THROWS_AS(centralizer_element(m, 0), domain_error);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    NumMat g = random_sl2(rng);
    if (std::abs(g.trace().imag()) < 0.05) {
      continue;
    }
    cplx   mu(1.3, -0.4), nu(-0.2, 0.9);
    NumMat a = centralizer_element(g, mu), b = centralizer_element(g, nu);
    double scale = std::abs(g.a) + std::abs(g.b) + std::abs(g.c) + std::abs(g.d);
    CHECK(dist(a * g, g * a) < 1e-11 * scale * scale);
    CHECK(dist(a * b, centralizer_element(g, mu * nu)) < 1e-10 * scale);
    CHECK(std::abs(a.det() - 1.0) < 1e-10 * scale);
  }
}

TEST_CASE("figure-eight exact representation") {
  auto rep  = figure_eight_exact_rep();
  auto pres = figure_eight_presentation();
  CHECK(rep.evaluate(pres.relators.at(0)) == ExactMat::identity());
  CHECK(rep.image(0).trace() == QuadNumber(2));
  CHECK(rep.image(1).trace() == QuadNumber(2));
  auto comm = parse_word("xyXY", pres.alphabet);
  CHECK_FALSE(rep.evaluate(comm) == ExactMat::identity());
  CHECK_FALSE(trivial_in_figure_eight(comm));
  CHECK(trivial_in_figure_eight(pres.relators.at(0).rotated(3)));
}

TEST_CASE("extension of centralizers") {
  NumMat  x{2, 0, 0, 0.5}, y{cplx(1, 1), 1, cplx(0.5, 0), 0};
  y.d = (1.0 + y.b * y.c) / y.a;
  NumRep  r(Alphabet::standard(2), {x, y});
  Word    a = Word::generator(0);
  NumRep  e = extend_centralizer_rep(r, a, 3);
  CHECK(e.alphabet().size() == 3);
  CHECK(e.alphabet().name(2) == "t");
  CHECK(dist(e.image(0), x) == 0);
  CHECK(dist(e.evaluate(Word::generator(2) * a.pow(-3)), NumMat::identity()) < 1e-14);
  CHECK(classify(to_boxes<double>(e, 0).image(2)).kind == Isometry::loxodromic);
  CHECK_THROWS_AS(extend_centralizer_rep(figure_eight_exact_rep(), a, 2), domain_error);
  CHECK_THROWS_AS(extend_centralizer_rep(r, a, 0), input_error);
}

TEST_CASE("Baumslag translation growth") {
  std::mt19937_64 rng(21);
  NumMat          g1 = random_sl2(rng), g2 = random_sl2(rng), am = random_sl2(rng);
  while (translation_length(am) < 1) {
    am = random_sl2(rng);
  }
  NumRep          r(Alphabet::standard(3), {g1, g2, am});
  std::vector<Word> g = {Word::generator(0), Word::generator(1)};
  double          prev = -1;
  for (int n = 3; n <= 10; ++n) {
    std::vector<int> e = {n, n};
    double           l = translation_length(r.evaluate(baumslag_word(g, Word::generator(2), e)));
    CHECK(l > prev);
    prev = l;
  }
}

TEST_CASE("relator-constrained search") {
  auto pres  = figure_eight_presentation();
  auto exact = to_numeric(figure_eight_exact_rep());
  CHECK(relator_residual(exact, pres) < 1e-14);

  SolveOptions none;
  auto         same = solve_relator_rep(pres, exact, none);
  CHECK(same.iterations == 0);
  CHECK(dist(same.rep.image(0), exact.image(0)) == 0);
  CHECK(dist(same.rep.image(1), exact.image(1)) == 0);

  Word         x = Word::generator(0);
  SolveOptions opt;
  opt.traces     = {{x, cplx(2.2, 0.1)}};
  opt.loxodromic = {x};
  auto sol       = solve_relator_rep(pres, exact, opt);
  CHECK(sol.residual < 1e-10);
  CHECK(std::abs(sol.rep.image(0).trace() - cplx(2.2, 0.1)) < 1e-10);
  CHECK(classify(to_boxes<double>(sol.rep, 1e-9).image(0)).kind == Isometry::loxodromic);
  CHECK(std::abs(sol.rep.image(1).trace() - cplx(2.2, 0.1)) < 1e-9);

  SolveOptions bad;
  bad.traces = {{x, cplx(0)}, {x, cplx(5)}};
  CHECK_THROWS_AS(solve_relator_rep(pres, exact, bad), solve_error);
}
