#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "slw/sl2.hpp"

namespace slw {

  namespace {
    using Vec = Eigen::VectorXcd;
    using Mat = Eigen::MatrixXcd;

    template <typename C>
    Representation<C> unpack(const Alphabet& a, const std::vector<C>& z) {
      std::vector<Mat2<C>> ims;
      for (std::size_t i = 0; i + 3 < z.size(); i += 4) {
        ims.push_back({z[i], z[i + 1], z[i + 2], z[i + 3]});
      }
      return Representation<C>(a, std::move(ims));
    }

    std::vector<cplx> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }
    Vec from_std(std::vector<cplx> v) {
      return Eigen::Map<Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
    }

    double relator_sign(const NumMat& m) {
      double plus  = std::abs(m.a - 1.0) + std::abs(m.d - 1.0);
      double minus = std::abs(m.a + 1.0) + std::abs(m.d + 1.0);
      return plus <= minus ? 1.0 : -1.0;
    }

    struct System {
      const GroupPresentation& pres;
      const SolveOptions&      opt;
      std::vector<double>      signs;
      std::vector<cplx>        pinned;  // x.b, x.c, y.b of the seed

      Vec residual(const Vec& z) const { return from_std(values(to_std(z))); }

      template <typename C>
      std::vector<C> values(const std::vector<C>& z) const {
        using R          = typename C::value_type;
        auto           r = unpack(pres.alphabet, z);
        std::vector<C> out;
        for (std::size_t i = 0; i < pres.relators.size(); ++i) {
          auto m = r.evaluate(pres.relators[i]);
          R    s = static_cast<R>(signs[i]);
          out.insert(out.end(), {m.a - s, m.b, m.c, m.d - s});
        }
        for (auto const& g : r.images()) {
          out.push_back(g.det() - R(1));
        }
        auto c = [](cplx v) { return C(R(v.real()), R(v.imag())); };
        out.push_back(z[1] - c(pinned[0]));
        out.push_back(z[2] - c(pinned[1]));
        if (z.size() >= 8) {
          out.push_back(z[5] - c(pinned[2]));
        }
        for (auto const& t : opt.traces) {
          out.push_back(r.evaluate(t.word).trace() - c(t.value));
        }
        return out;
      }

      // The system is holomorphic in z, so complex central differences give
      // the complex Jacobian.
      Mat jacobian(const Vec& z, Eigen::Index rows) const {
        Mat j(rows, z.size());
        for (Eigen::Index k = 0; k < z.size(); ++k) {
          double h  = 1e-7 * std::max(1.0, std::abs(z(k)));
          Vec    zp = z, zm = z;
          zp(k) += h;
          zm(k) -= h;
          j.col(k) = (residual(zp) - residual(zm)) / (2 * h);
        }
        return j;
      }
    };

    double sup(const Vec& v) { return v.size() == 0 ? 0 : v.cwiseAbs().maxCoeff(); }
  }  // namespace

  double relator_residual(const NumRep& rep, const GroupPresentation& pres) {
    double worst = 0;
    for (auto const& rel : pres.relators) {
      NumMat m = rep.evaluate(rel);
      double s = relator_sign(m);
      worst    = std::max({worst, std::abs(m.a - s), std::abs(m.b), std::abs(m.c),
                           std::abs(m.d - s)});
    }
    return worst;
  }

  WideRep refine_relator_rep(const GroupPresentation& pres, const NumRep& rep,
                             const SolveOptions& opt, int steps) {
    if (!(rep.alphabet() == pres.alphabet)) {
      throw input_error("representation is not over the presentation's alphabet");
    }
    System sys{pres, opt, {}, {}};
    for (auto const& rel : pres.relators) {
      sys.signs.push_back(relator_sign(rep.evaluate(rel)));
    }
    Vec z(static_cast<Eigen::Index>(4 * rep.images().size()));
    for (std::size_t g = 0; g < rep.images().size(); ++g) {
      auto const& m = rep.image(g);
      z.segment(static_cast<Eigen::Index>(4 * g), 4) << m.a, m.b, m.c, m.d;
    }
    sys.pinned = {z(1), z(2), z.size() >= 8 ? z(5) : cplx(0)};
    Vec                r0 = sys.residual(z);
    auto               qr = sys.jacobian(z, r0.size()).colPivHouseholderQr();
    std::vector<wcplx> w;
    for (Eigen::Index k = 0; k < z.size(); ++k) {
      w.push_back(widen(z(k)));
    }
    for (int i = 0; i < steps; ++i) {
      auto rw = sys.values(w);
      Vec  rd(static_cast<Eigen::Index>(rw.size()));
      for (std::size_t k = 0; k < rw.size(); ++k) {
        rd(static_cast<Eigen::Index>(k)) = narrow(rw[k]);
      }
      Vec step = qr.solve(rd);
      for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] -= widen(step(static_cast<Eigen::Index>(k)));
      }
    }
    return unpack(pres.alphabet, w);
  }

  double relator_residual(const WideRep& rep, const GroupPresentation& pres) {
    double worst = 0;
    for (auto const& rel : pres.relators) {
      auto   m = rep.evaluate(rel);
      wcplx  s = widen(relator_sign(narrow(m)));
      worst    = std::max({worst, std::abs(narrow(m.a - s)), std::abs(narrow(m.b)),
                           std::abs(narrow(m.c)), std::abs(narrow(m.d - s))});
    }
    return worst;
  }

  SolveResult solve_relator_rep(const GroupPresentation& pres, const NumRep& seed,
                                const SolveOptions& opt) {
    if (!(seed.alphabet() == pres.alphabet)) {
      throw input_error("seed representation is not over the presentation's alphabet");
    }
    if (pres.alphabet.size() > 2 || pres.relators.size() > 1) {
      throw input_error("solver supports at most 2 generators and 1 relator");
    }
    for (std::size_t i = 0; i < opt.traces.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (is_conjugate(opt.traces[i].word, opt.traces[j].word) &&
            std::abs(opt.traces[i].value - opt.traces[j].value) > opt.tolerance) {
          throw solve_error(solve_error::Kind::infeasible,
                            "conflicting trace targets for conjugate words");
        }
      }
    }

    System sys{pres, opt, {}, {}};
    for (auto const& rel : pres.relators) {
      sys.signs.push_back(relator_sign(seed.evaluate(rel)));
    }
    Vec z(static_cast<Eigen::Index>(4 * seed.images().size()));
    for (std::size_t g = 0; g < seed.images().size(); ++g) {
      auto const& m = seed.image(g);
      z.segment(static_cast<Eigen::Index>(4 * g), 4) << m.a, m.b, m.c, m.d;
    }
    sys.pinned = {z(1), z(2), z.size() >= 8 ? z(5) : cplx(0)};

    Vec    r      = sys.residual(z);
    double err    = sup(r);
    int    it     = 0;
    double lambda = 1e-6;
    while (err > opt.tolerance * 1e-3 && it < opt.max_iterations) {
      ++it;
      Mat  j   = sys.jacobian(z, r.size());
      Mat  jh  = j.adjoint();
      Mat  a   = jh * j;
      Vec  g   = jh * r;
      bool ok  = false;
      for (int tries = 0; tries < 30 && !ok; ++tries) {
        Mat damped = a;
        damped.diagonal().array() += lambda * (1.0 + a.diagonal().cwiseAbs().array());
        Vec    step = damped.ldlt().solve(-g);
        Vec    zn   = z + step;
        Vec    rn   = sys.residual(zn);
        double en   = sup(rn);
        if (std::isfinite(en) && rn.squaredNorm() < r.squaredNorm()) {
          z      = zn;
          r      = rn;
          err    = en;
          lambda = std::max(lambda / 10, 1e-15);
          ok     = true;
        } else {
          lambda *= 10;
        }
      }
      if (!ok) {
        break;
      }
    }

    NumRep out = unpack(pres.alphabet, to_std(z));
    double res = relator_residual(out, pres);
    if (err > opt.tolerance || res > opt.tolerance) {
      throw solve_error(solve_error::Kind::no_convergence,
                        "no convergence: residual " + std::to_string(err) + " after " +
                            std::to_string(it) + " iterations");
    }
    for (auto const& w : opt.loxodromic) {
      cplx t = out.evaluate(w).trace();
      if (std::abs(t.imag()) <= 1e-12 && std::abs(t.real()) <= 2 + 1e-12) {
        throw solve_error(solve_error::Kind::infeasible,
                          "constraint infeasible at local solution: " +
                              format_word(w, pres.alphabet) + " is not loxodromic");
      }
    }
    if (it == 0) {
      return {seed, res, 0};
    }
    return {out, res, it};
  }

}  // namespace slw
