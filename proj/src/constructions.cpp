#include "slw/constructions.hpp"

#include <algorithm>
#include <cstdlib>

#include "slw/sl2.hpp"

namespace slw {

  namespace {
    Word gen(std::uint32_t i, int e = 1) { return Word::generator(i, e); }

    // Renumbers generators by adding offset.
    Word shift(const Word& w, std::uint32_t offset) {
      std::vector<Letter> v;
      for (Letter l : w) {
        v.push_back(Letter::make(l.gen() + offset, l.inverse()));
      }
      return Word(std::move(v));
    }

    Word substitute(const Word& w, const std::vector<Word>& images) {
      Word out;
      for (Letter l : w) {
        const Word& im = images.at(l.gen());
        out *= l.inverse() ? im.inverse() : im;
      }
      return out;
    }

    Alphabet f2_alphabet() { return Alphabet({"a", "b"}); }

    void require(bool ok, const char* what) {
      if (!ok) {
        throw std::logic_error(what);
      }
    }

    std::vector<RelatorFactor> inverted(std::vector<RelatorFactor> c) {
      std::reverse(c.begin(), c.end());
      for (auto& f : c) {
        f.sign = -f.sign;
      }
      return c;
    }
  }  // namespace

  long MarkedMap::param(const std::string& key) const {
    for (auto const& [k, v] : params) {
      if (k == key) {
        return v;
      }
    }
    throw input_error("map has no parameter " + key);
  }

  Word expand(const std::vector<RelatorFactor>& factors, const GroupPresentation& target) {
    Word out;
    for (auto const& f : factors) {
      Word r = target.relators.at(f.relator);
      out *= f.conjugator * (f.sign > 0 ? r : r.inverse()) * f.conjugator.inverse();
    }
    return out;
  }

  bool well_defined(const MarkedMap& m) {
    for (std::size_t i = 0; i < m.source.relators.size(); ++i) {
      Word img = m(m.source.relators[i]);
      if (img.empty()) {
        continue;
      }
      if (i < m.certificates.size() && is_conjugate(img, expand(m.certificates[i], m.target))) {
        continue;
      }
      if (m.target.kind == "figure-eight" && trivial_in_figure_eight(img)) {
        continue;
      }
      return false;
    }
    return true;
  }

  GroupPresentation free_presentation(const Alphabet& a) {
    GroupPresentation p;
    p.kind     = "free";
    p.alphabet = a;
    return p;
  }

  MarkedMap alpha_map(int n) {
    if (n < 2) {
      throw input_error("alpha map needs n >= 2");
    }
    MarkedMap m;
    m.name   = "alpha";
    m.params = {{"n", n}};
    m.source = build_surface(0, 4);
    m.target = free_presentation(f2_alphabet());
    Word z, wn;
    for (int i = 1; i <= n; ++i) {
      z *= gen(0, i) * gen(1);
      wn *= gen(0, i) * gen(1);
    }
    m.images         = {gen(0), gen(1), z};
    m.kernel_witness = gen(2) * wn.inverse();
    for (std::size_t i = 0; i < m.source.boundary_words.size(); ++i) {
      m.target.mark("boundary" + std::to_string(i + 1), m(m.source.boundary_words[i]));
    }
    return m;
  }

  std::array<Word, 3> figure_eight_edge_words(int n) {
    if (n < 1) {
      throw input_error("figure-eight map needs n >= 1");
    }
    Word yx = gen(1) * gen(0, -1);
    Word fa = gen(0) * yx.pow(n);
    return {fa, yx, fa * yx};
  }

  Word figure_eight_kernel_word(int n) {
    Word x = gen(0) * gen(1, -n);
    Word y = gen(1) * x;
    return substitute(figure_eight_presentation().relators.at(0), {x, y});
  }

  MarkedMap figure_eight_map(int n) {
    auto      e = figure_eight_edge_words(n);
    MarkedMap m;
    m.name   = "fig8";
    m.params = {{"n", n}};
    Alphabet ab({"a", "b"});
    m.source = surface_from_boundary(0, ab, {gen(0), gen(1), (gen(0) * gen(1)).inverse()});
    m.target = figure_eight_presentation();
    m.images = {e[0], e[1]};
    m.target.mark("edge_a", e[0]);
    m.target.mark("edge_b", e[1]);
    m.target.mark("edge_ab", e[2]);
    m.kernel_witness = figure_eight_kernel_word(n);
    return m;
  }

  FreeHom twist_sequence(const FreeHom& base, int m) {
    if (base.source_rank() != 2) {
      throw input_error("twist sequence needs a map from a rank-2 free group");
    }
    const Alphabet& a   = base.source();
    FreeHom         phi = m >= 0 ? FreeHom(a, a, {gen(0) * gen(1), gen(1)})
                                 : FreeHom(a, a, {gen(0) * gen(1, -1), gen(1)});
    Word comm = commutator(gen(0), gen(1));
    require(phi(comm) == comm, "twist does not fix the commutator");
    FreeHom p = FreeHom::identity(a);
    for (int i = 0; i < std::abs(m); ++i) {
      p = compose(p, phi);
    }
    return compose(base, p);
  }

  std::vector<Word> subsurface_generators(const SurfacePresentation& s, Subsurface sub) {
    if (!s.closed()) {
      throw input_error("standard subsurfaces live in closed surfaces");
    }
    if (sub == Subsurface::pair_of_pants) {
      if (s.genus < 1) {
        throw input_error("pair of pants needs genus >= 1");
      }
      return {gen(0), gen(1) * gen(0, -1) * gen(1, -1)};
    }
    if (s.genus < 3) {
      throw input_error("nonseparating four-holed sphere needs genus >= 3");
    }
    return {gen(1, -1), gen(4), gen(4, -1) * gen(2) * gen(4)};
  }

  std::vector<Word> subsurface_boundary(Subsurface sub) {
    if (sub == Subsurface::pair_of_pants) {
      return {gen(0), gen(1), (gen(0) * gen(1)).inverse()};
    }
    return {gen(0), gen(1), gen(2), (gen(0) * gen(1) * gen(2)).inverse()};
  }

  GroupPresentation quotient_presentation(const SurfacePresentation& s, Subsurface sub,
                                          const FreeHom& f) {
    auto gens = subsurface_generators(s, sub);
    if (f.source_rank() != gens.size()) {
      throw input_error("map rank does not match the subsurface");
    }
    auto              offset = static_cast<std::uint32_t>(s.alphabet.size());
    GroupPresentation p;
    p.kind     = "quotient";
    p.alphabet = s.alphabet.concat(f.target());
    p.add_relator(s.relators.at(0));
    auto bd = subsurface_boundary(sub);
    for (std::size_t i = 0; i < bd.size(); ++i) {
      Word in_s = substitute(bd[i], gens);
      p.add_relator(in_s * shift(f(bd[i]), offset).inverse());
      p.mark("boundary" + std::to_string(i + 1), in_s);
    }
    return p;
  }

  MarkedMap closed_from_boundary(int n, int genus, int twists) {
    if (genus < 3) {
      throw input_error("closed construction needs genus >= 3");
    }
    if (twists < 0) {
      throw input_error("twist count must be nonnegative");
    }
    MarkedMap alpha = alpha_map(n);
    FreeHom   f     = alpha.hom();
    MarkedMap m;
    m.name   = "closed";
    m.params = {{"n", n}, {"genus", genus}};
    m.source = build_surface(genus, 0);
    m.target = quotient_presentation(m.source, Subsurface::four_holed_sphere, f);
    for (std::uint32_t i = 0; i < m.source.alphabet.size(); ++i) {
      m.images.push_back(gen(i));
    }
    m.certificates = {{RelatorFactor{Word(), 0, 1}}};
    auto gens      = subsurface_generators(m.source, Subsurface::four_holed_sphere);
    m.kernel_witness = substitute(*alpha.kernel_witness, gens);
    // Letter by letter, g = r F with r the relator for g and F = f(g):
    // P r F = (P r P^-1) P F and P F^-1 r^-1 = (P F^-1 r^-1 F P^-1) P F^-1,
    // and the trailing product f(witness) is trivial.
    auto offset = static_cast<std::uint32_t>(m.source.alphabet.size());
    Word prefix;
    for (Letter l : *alpha.kernel_witness) {
      Word fi = shift(f(gen(l.gen())), offset);
      if (l.inverse()) {
        m.witness_certificate.push_back({prefix * fi.inverse(), l.gen() + 1, -1});
        prefix *= fi.inverse();
      } else {
        m.witness_certificate.push_back({prefix, l.gen() + 1, 1});
        prefix *= fi;
      }
    }
    require(expand(m.witness_certificate, m.target) == *m.kernel_witness,
            "witness certificate does not expand to the witness");

    // Surface generators against the double of S' along its boundary:
    // a1 = t2, b1 = x^-1, a2 = y z y^-1, b2 = y t4 y^-1, a3 = y, b3 = t3,
    // where t_i conjugates the i-th boundary loop to its mirror. Any
    // t2, t3, t4 with f(x y z) = f(x)^t2 f(y)^t3 f(z)^t4 give a retraction:
    // powers of the boundary images, each optionally preceded by a common
    // element centralizing the product of the conjugated ones.
    Word     fx = f(gen(0)), fy = f(gen(1)), fz = f(gen(2));
    Alphabet f2 = f2_alphabet();
    std::vector<std::array<Word, 3>> outer = {
        {Word(), Word(), Word()},
        {fx * fy * fz, fx * fy * fz, fx * fy * fz},
        {fx * fy, fx * fy, Word()},
        {Word(), fy * fz, fy * fz},
    };
    for (auto const& o : outer) {
      for (int t = 0; t <= twists; ++t) {
        Word t2 = o[0] * fx.pow(t), t3 = o[1] * fy.pow(t), t4 = o[2] * fz.pow(t);
        std::vector<Word> im = {t2, fx.inverse(), fy * fz * fy.inverse(), fy * t4 * fy.inverse(),
                                fy, t3};
        im.resize(m.source.alphabet.size());
        im.push_back(gen(0));
        im.push_back(gen(1));
        FreeHom h(m.target.alphabet, f2, im);
        for (auto const& r : m.target.relators) {
          require(h(r).empty(), "retraction does not kill a relator");
        }
        m.retractions.push_back(std::move(h));
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      require(m.retractions.front()(gens[i]) == f(gen(static_cast<std::uint32_t>(i))),
              "retraction does not restrict to the alpha map");
    }
    return m;
  }

  MarkedMap double_presentation(int n) {
    auto              e    = figure_eight_edge_words(n);
    GroupPresentation fig8 = figure_eight_presentation();
    MarkedMap         m;
    m.name   = "double";
    m.params = {{"n", n}};
    m.source = build_surface(2, 0);

    GroupPresentation& g = m.target;
    g.kind               = "double";
    g.alphabet = fig8.alphabet.concat(primed(fig8.alphabet)).extended("s").extended("t");
    Word r = fig8.relators.at(0);
    Word s = gen(4), t = gen(5);
    auto bar = [](const Word& w) { return shift(w, 2); };
    g.add_relator(r);
    g.add_relator(bar(r));
    g.add_relator(e[0] * bar(e[0]).inverse());
    g.add_relator(s * e[1] * s.inverse() * bar(e[1]).inverse());
    g.add_relator(t * e[2] * t.inverse() * bar(e[2]).inverse());
    g.mark("edge_a", e[0]);
    g.mark("edge_b", e[1]);
    g.mark("edge_ab", e[2]);

    // Genus 2 as the double of the pants <a, b> along a, b, ab: with
    // a' = a and b' = s b s^-1 the relator is t a b t^-1 s b^-1 s^-1 a^-1,
    // and a1 = s^-1 t, b1 = a b, a2 = a, b2 = s^-1 is a standard basis.
    m.images = {s.inverse() * t, e[0] * e[1], e[0], s.inverse()};
    std::vector<RelatorFactor> cert = {{Word(), 4, 1}, {bar(e[0]), 3, -1}, {Word(), 2, -1}};
    Word img = m(m.source.relators.at(0));
    if (!is_conjugate(img, expand(cert, g))) {
      cert = inverted(cert);
    }
    require(is_conjugate(img, expand(cert, g)), "double certificate does not match");
    m.certificates = {cert};

    Word kw = figure_eight_kernel_word(n);
    m.kernel_witness = substitute(kw, {gen(2), gen(2, -1) * gen(1)});
    require(m(*m.kernel_witness) == substitute(kw, {e[0], e[1]}), "kernel witness mismatch");
    return m;
  }

  GroupPresentation extend_centralizers_presentation(const GroupPresentation& g, const Word& a,
                                                     const std::string& letter) {
    if (a.empty()) {
      throw domain_error("cannot extend the centralizer of the identity");
    }
    if (a.max_generator_bound() > g.alphabet.size()) {
      throw input_error("word is not over the presentation's alphabet");
    }
    GroupPresentation h = g;
    h.kind              = "extension";
    h.alphabet          = g.alphabet.extended(letter);
    Word t              = gen(static_cast<std::uint32_t>(g.alphabet.size()));
    h.add_relator(commutator(t, a));
    h.mark("stable_" + letter, t);
    h.mark("centralized_" + letter, a);
    return h;
  }

}  // namespace slw
