// Closed geodesics on the thrice-punctured sphere and the once-punctured
// torus, walked through an ideal quadrilateral with vertices -1, 0, 1, oo.
// Sides: s0 = (-1,0), s1 = (0,1), s2 = (1,oo), s3 = (oo,-1).

#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "slw/surfaces.hpp"

namespace slw {

  namespace {
    using i128 = __int128;
    using real = long double;
    using cplx = std::complex<real>;

    struct IMat {
      i128 a, b, c, d;
      IMat operator*(IMat const& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
      }
      IMat inv() const { return {d, -b, -c, a}; }
      bool operator==(IMat const&) const = default;
      i128 trace() const { return a + d; }
    };

    struct Model {
      std::array<IMat, 2> gens;
      // generator (as signed letter code) whose tile lies across side i
      std::array<std::uint32_t, 4> across;
      // one side of each paired couple belongs to the half-open domain
      std::array<bool, 4> keep;
    };

    Model model_for(SurfacePresentation const& s) {
      if (s.genus == 0 && s.boundary_count == 3) {
        return {{IMat{1, 2, 0, 1}, IMat{1, 0, -2, 1}}, {2, 3, 0, 1}, {true, false, true, false}};
      }
      if (s.genus == 1 && s.boundary_count == 1) {
        return {{IMat{2, 1, 1, 1}, IMat{1, 1, 1, 2}}, {1, 2, 0, 3}, {false, true, true, false}};
      }
      throw domain_error("no geodesic model for this surface");
    }

    IMat letter_matrix(Model const& m, Letter l) {
      IMat g = m.gens[l.gen()];
      return l.inverse() ? g.inv() : g;
    }

    real angle(real u, real v) {
      real t = 2 * std::atan2(u, v);
      if (t >= M_PIl) {
        t -= 2 * M_PIl;
      }
      if (t < -M_PIl) {
        t += 2 * M_PIl;
      }
      return t;
    }

    // Side whose far arc contains the boundary point with angle t.
    int side_of(real t) {
      if (t < -M_PIl / 2) {
        return 3;
      }
      if (t < 0) {
        return 0;
      }
      if (t < M_PIl / 2) {
        return 1;
      }
      return 2;
    }

    struct Endpoint {
      real u, v;  // projective coordinates
    };

    // Repelling and attracting fixed points of a hyperbolic element.
    std::pair<Endpoint, Endpoint> fixed_points(IMat const& m) {
      real a = static_cast<real>(m.a), b = static_cast<real>(m.b);
      real c = static_cast<real>(m.c), d = static_cast<real>(m.d);
      real t = a + d;
      real s = std::sqrt(t * t - 4);
      if (m.c == 0) {
        Endpoint inf{1, 0}, fin{b, d - a};
        return std::abs(a) > std::abs(d) ? std::pair{fin, inf} : std::pair{inf, fin};
      }
      Endpoint p{a - d + s, 2 * c}, q{a - d - s, 2 * c};
      // attracting iff |c z + d| > 1
      auto mult = [&](Endpoint e) { return std::abs(c * e.u / e.v + d); };
      return mult(p) > mult(q) ? std::pair{q, p} : std::pair{p, q};
    }

    cplx act(IMat const& m, cplx z) {
      return (static_cast<real>(m.a) * z + static_cast<real>(m.b)) /
             (static_cast<real>(m.c) * z + static_cast<real>(m.d));
    }

    // A lift of the geodesic meeting the quadrilateral.
    struct Chord {
      Endpoint from, to;
    };

    real angle_of(Endpoint e) { return angle(e.u, e.v); }

    // Intersection point of two lifts, if their endpoints interleave.
    std::optional<cplx> crossing_point(Chord const& g, Chord const& h) {
      real a = angle_of(g.from), b = angle_of(g.to);
      real c = angle_of(h.from), d = angle_of(h.to);
      auto between = [&](real t) { return a < b ? (a < t && t < b) : (t > a || t < b); };
      if (between(c) == between(d)) {
        return std::nullopt;
      }
      // T sends g.from to 0 and g.to to oo
      real t11 = g.from.v, t12 = -g.from.u, t21 = g.to.v, t22 = -g.to.u;
      auto T   = [&](Endpoint e) { return (t11 * e.u + t12 * e.v) / (t21 * e.u + t22 * e.v); };
      real r   = std::sqrt(-T(h.from) * T(h.to));
      for (real sign : {1.0L, -1.0L}) {
        cplx w(0, sign * r);
        cplx z = (t22 * w - t12) / (-t21 * w + t11);
        if (z.imag() > 0) {
          return z;
        }
      }
      return std::nullopt;
    }

    // 1 if the point lies in the half-open quadrilateral, 0 if outside, -1
    // if it is too close to a side to decide.
    int classify_point(cplx z, Model const& m, real precision) {
      std::array<real, 4> dist = {std::abs(z + cplx(0.5L, 0)) - 0.5L,
                                  std::abs(z - cplx(0.5L, 0)) - 0.5L, 1 - z.real(),
                                  z.real() + 1};
      for (int i = 0; i < 4; ++i) {
        if (std::abs(dist[i]) < 1e-12L) {
          if (!m.keep[i]) {
            return 0;
          }
        } else if (std::abs(dist[i]) < precision) {
          return -1;
        } else if (dist[i] < 0) {
          return 0;
        }
      }
      return 1;
    }
  }  // namespace

  OracleResult geodesic_intersection_oracle(const Word& c, const SurfacePresentation& s,
                                            double precision) {
    Model model;
    try {
      model = model_for(s);
    } catch (domain_error const&) {
      return {OracleStatus::unsupported, 0};
    }
    Word core = cyclic_reduction(c);
    if (core.empty()) {
      throw domain_error("geodesic of a trivial class");
    }
    auto [root, p] = primitive_root(core);
    IMat g{1, 0, 0, 1};
    for (Letter l : root) {
      g = g * letter_matrix(model, l);
    }
    i128 tr = g.trace();
    if (tr == 2 || tr == -2) {
      return {OracleStatus::ok, p - 1};
    }
    if (tr > -2 && tr < 2) {
      return {OracleStatus::inconclusive, 0};
    }

    auto across = [&](int side) { return letter_matrix(model, Letter{model.across[side]}); };

    // move a point of the axis into the quadrilateral
    IMat M = g;
    {
      auto [e1, e2] = fixed_points(M);
      cplx z;
      if (e1.v == 0 || e2.v == 0) {
        Endpoint fin = e1.v == 0 ? e2 : e1;
        z            = cplx(fin.u / fin.v, 1);
      } else {
        real r1 = e1.u / e1.v, r2 = e2.u / e2.v;
        z       = cplx((r1 + r2) / 2, std::abs(r1 - r2) / 2);
      }
      int steps = 0;
      while (true) {
        int side = -1;
        if (z.real() > 1) {
          side = 2;
        } else if (z.real() < -1) {
          side = 3;
        } else if (std::abs(z + cplx(0.5L, 0)) < 0.5L) {
          side = 0;
        } else if (std::abs(z - cplx(0.5L, 0)) < 0.5L) {
          side = 1;
        }
        if (side < 0) {
          break;
        }
        if (++steps > 10000) {
          return {OracleStatus::inconclusive, 0};
        }
        IMat h = across(side);
        z      = act(h.inv(), z);
        M      = h.inv() * M * h;
      }
    }

    std::vector<Chord> chords;
    IMat const         start = M;
    std::size_t        cap   = 64 * core.size() + 64;
    do {
      auto [rep, att] = fixed_points(M);
      int in  = side_of(angle(rep.u, rep.v));
      int out = side_of(angle(att.u, att.v));
      if (in == out || chords.size() > cap) {
        return {OracleStatus::inconclusive, 0};
      }
      chords.push_back({rep, att});
      IMat h = across(out);
      M      = h.inv() * M * h;
    } while (!(M == start));

    int count = 0;
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        auto hit = crossing_point(chords[i], chords[j]);
        if (!hit) {
          continue;
        }
        int where = classify_point(*hit, model, static_cast<real>(precision));
        if (where < 0) {
          return {OracleStatus::inconclusive, 0};
        }
        count += where;
      }
    }
    return {OracleStatus::ok, p * p * count + p - 1};
  }

}  // namespace slw
