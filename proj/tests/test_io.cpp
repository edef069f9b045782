#include <filesystem>

#include <doctest.h>

#include "slw/io.hpp"
#include "slw/verify.hpp"

using namespace slw;

namespace {
  void same_map(const MarkedMap& a, const MarkedMap& b) {
    CHECK(a.name == b.name);
    CHECK(a.params == b.params);
    CHECK(a.source.genus == b.source.genus);
    CHECK(a.source.boundary_count == b.source.boundary_count);
    CHECK(a.source.alphabet == b.source.alphabet);
    CHECK(a.source.relators == b.source.relators);
    CHECK(a.source.boundary_words == b.source.boundary_words);
    CHECK(a.source.ribbon_order == b.source.ribbon_order);
    CHECK(a.target.kind == b.target.kind);
    CHECK(a.target.alphabet == b.target.alphabet);
    CHECK(a.target.relators == b.target.relators);
    CHECK(a.target.markers == b.target.markers);
    CHECK(a.images == b.images);
    CHECK(a.kernel_witness == b.kernel_witness);
    REQUIRE(a.certificates.size() == b.certificates.size());
    for (std::size_t i = 0; i < a.certificates.size(); ++i) {
      CHECK(expand(a.certificates[i], a.target) == expand(b.certificates[i], b.target));
    }
    CHECK(expand(a.witness_certificate, a.target) == expand(b.witness_certificate, b.target));
    CHECK(a.retractions == b.retractions);
  }
}  // namespace

TEST_CASE("maps round-trip") {
  std::vector<MarkedMap> maps = {alpha_map(2), alpha_map(7), figure_eight_map(3),
                                 closed_from_boundary(4, 3, 2), double_presentation(2)};
  for (auto const& m : maps) {
    auto text = write_map(m);
    auto back = read_map(text);
    same_map(m, back);
    CHECK(write_map(back) == text);
    CHECK(well_defined(back));
  }
}

TEST_CASE("surfaces and presentations round-trip") {
  for (auto [g, b] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 0}, {3, 0}}) {
    auto s    = build_surface(g, b);
    auto back = read_surface(write_surface(s));
    CHECK(back.alphabet == s.alphabet);
    CHECK(back.boundary_words == s.boundary_words);
    CHECK(back.ribbon_order == s.ribbon_order);
  }
  CHECK(read_surface("surface 1 1\n").alphabet == build_surface(1, 1).alphabet);

  // non-standard boundary words go through surface_from_boundary
  auto custom = read_surface("surface 0 3\ngenerators a b\nboundary a\nboundary b\nboundary BA\n");
  CHECK(custom.boundary_words.size() == 3);
  CHECK(self_intersection(parse_word("ab", custom.alphabet), custom) == 0);

  auto p = quotient_presentation(build_surface(3, 0), Subsurface::four_holed_sphere,
                                 alpha_map(3).hom());
  auto q = read_presentation(write_presentation(p));
  CHECK(q.kind == p.kind);
  CHECK(q.alphabet == p.alphabet);
  CHECK(q.relators == p.relators);
  CHECK(q.markers == p.markers);

  auto h = extend_centralizers_presentation(figure_eight_presentation(), Word::generator(0));
  CHECK(read_presentation(write_presentation(h)).markers == h.markers);
}

TEST_CASE("malformed text") {
  CHECK_THROWS_AS(read_map(""), input_error);
  CHECK_THROWS_AS(read_map("map m\nsource\nsurface 0 4\n"), input_error);
  auto text = write_map(alpha_map(3));
  auto drop = text;
  drop.erase(drop.find("map y"), drop.find('\n', drop.find("map y")) - drop.find("map y") + 1);
  CHECK_THROWS_AS(read_map(drop), input_error);
  CHECK_THROWS_AS(read_map(text + "map x -> a\n"), input_error);
  CHECK_THROWS_AS(read_map(text + "bogus\n"), input_error);
  CHECK_THROWS_AS(read_surface("surface 0 x\n"), input_error);
  CHECK_THROWS_AS(read_surface("surface 0 3\ngenerators a b\nboundary a\nboundary b\n"),
                  input_error);
  CHECK_THROWS_AS(read_presentation("group free\ngenerators a\nrel q\n"), input_error);
  CHECK_THROWS_AS(parse_surface_type("1"), input_error);
  CHECK_THROWS_AS(parse_surface_type("1,x"), input_error);
  CHECK_THROWS_AS(read_file("/nonexistent/slw"), file_error);
}

TEST_CASE("representations round-trip") {
  auto exact = figure_eight_exact_rep();
  auto e     = std::get<ExactRep>(read_rep(write_rep(exact)));
  CHECK(e.alphabet() == exact.alphabet());
  CHECK(e.images() == exact.images());

  auto num = to_numeric(exact);
  auto n   = std::get<NumRep>(read_rep(write_rep(num)));
  CHECK(n.images() == num.images());

  auto wide = composite_rep(2);
  auto w    = std::get<WideRep>(read_rep(write_rep(wide)));
  CHECK(w.alphabet() == wide.alphabet());
  for (std::size_t g = 0; g < wide.images().size(); ++g) {
    auto const& x = wide.image(g);
    auto const& y = w.image(g);
    for (auto [p, q] : {std::pair{x.a, y.a}, {x.b, y.b}, {x.c, y.c}, {x.d, y.d}}) {
      CHECK(abs(p - q) <= 1e-32 * (1 + abs(p)));
    }
  }
  CHECK(relator_residual(w, double_presentation(2).target) < 1e-28);

  CHECK_THROWS_AS(read_rep("[]"), input_error);
  CHECK_THROWS_AS(read_rep("{\"alphabet\":[\"x\"],\"scalar\":\"float\",\"images\":{}}"),
                  input_error);
  CHECK_THROWS_AS(read_rep("{\"alphabet\":[\"x\"],\"scalar\":\"double\",\"images\":{}}"),
                  input_error);
  CHECK_THROWS_AS(read_rep("{\"alphabet\":[\"x\"],\"scalar\":\"exact\",\"images\":{\"x\":"
                           "{\"a\":[\"1\",\"0\"],\"b\":[\"0\",\"0√-3\"],\"c\":[\"0\",\"0√-3\"],"
                           "\"d\":[\"1\",\"0√-3\"]}}}"),
                  input_error);
}

TEST_CASE("composite representation") {
  auto r = composite_rep(5);
  CHECK(r.alphabet() == double_presentation(5).target.alphabet);
  CHECK(relator_residual(r, double_presentation(5).target) < 1e-28);
  CompositeOptions opt;
  opt.seed = 7;
  auto s   = composite_rep(5, opt);
  CHECK(relator_residual(s, double_presentation(5).target) < 1e-28);
  CHECK(write_rep(composite_rep(5, opt)) == write_rep(s));
  CHECK_THROWS_AS(composite_rep(1), input_error);
}
