#include "slw/sl2.hpp"

#include <algorithm>
#include <cmath>

namespace slw {

  namespace {
    using lcplx = std::complex<long double>;

    // Sign of a real element p + q sqrt(d).
    int real_sign(const QuadNumber& v) {
      const BigRational& p = v.rational_part();
      const BigRational& q = v.radical_part();
      int sp = p.sign(), sq = q.sign();
      if (sq == 0 || v.radicand() < 0) {
        return sp;
      }
      if (sp == 0) {
        return sq;
      }
      if (sp == sq) {
        return sp;
      }
      BigRational lhs = p * p, rhs = q * q * v.radicand();
      if (lhs == rhs) {
        return 0;
      }
      return lhs > rhs ? sp : sq;
    }

    bool is_scalar(const ExactMat& m, long s) {
      return m.b.is_zero() && m.c.is_zero() && m.a == QuadNumber(s) && m.d == QuadNumber(s);
    }

    IsometryClass exact_kind(const ExactMat& m) {
      if (!(m.det() == QuadNumber(1))) {
        throw domain_error("determinant is not 1");
      }
      QuadNumber t = m.trace();
      if (!t.is_real()) {
        return {Isometry::loxodromic, true};
      }
      int above = real_sign(t - QuadNumber(2));
      int below = real_sign(t + QuadNumber(2));
      if (above > 0 || below < 0) {
        return {Isometry::loxodromic, true};
      }
      if (above == 0 || below == 0) {
        bool id = is_scalar(m, 1) || is_scalar(m, -1);
        return {id ? Isometry::identity : Isometry::parabolic, true};
      }
      return {Isometry::elliptic, true};
    }

    long double length_of_trace(lcplx t) { return 2 * std::acosh(t / 2.0L).real(); }

    // det must enclose 1 with a width small against the size of ad and bc;
    // long products lose absolute accuracy in ad - bc.
    template <typename F>
    void check_det(const BoxMat<F>& m) {
      auto mag = [](const CInterval<F>& z) {
        return fabs_(z.re.lo) + fabs_(z.re.hi) + fabs_(z.im.lo) + fabs_(z.im.hi);
      };
      F    scale = F(1) + mag(m.a) * mag(m.d) + mag(m.b) * mag(m.c);
      auto det   = m.det();
      if (!det.contains(1.0L) || det.rad() > F(det_width_bound) * scale) {
        throw domain_error("determinant is not certified to be 1");
      }
    }

    cplx narrow_any(cplx z) { return z; }
    cplx narrow_any(const wcplx& z) { return narrow(z); }

    bool numeric_loxodromic(cplx t) {
      return std::abs(t.imag()) > 1e-12 || std::abs(t.real()) > 2 + 1e-12;
    }

    bool loxodromic(const NumMat& m) { return numeric_loxodromic(m.trace()); }
    bool loxodromic(const WideMat& m) { return numeric_loxodromic(narrow(m.trace())); }
    bool loxodromic(const ExactMat& m) { return exact_kind(m).kind == Isometry::loxodromic; }
    template <typename F>
    bool loxodromic(const BoxMat<F>& m) {
      return classify(m).kind == Isometry::loxodromic;
    }
  }  // namespace

  const char* to_string(Isometry k) {
    switch (k) {
      case Isometry::loxodromic: return "loxodromic";
      case Isometry::parabolic: return "parabolic";
      case Isometry::elliptic: return "elliptic";
      case Isometry::identity: return "identity";
      case Isometry::unknown: break;
    }
    return "unknown";
  }

  Alphabet primed(const Alphabet& a) {
    std::vector<std::string> names;
    for (auto const& n : a.names()) {
      names.push_back(n + "'");
    }
    return Alphabet(std::move(names));
  }

  IsometryClass classify(const ExactMat& m) { return exact_kind(m); }

  template <typename F>
  IsometryClass classify(const BoxMat<F>& m) {
    check_det(m);
    if (m.trace().avoids_real_segment(F(-2), F(2))) {
      return {Isometry::loxodromic, true};
    }
    return {Isometry::unknown, false};
  }

  template <typename F>
  IsometryClass classify(const BoxRep<F>& rep, const Word& w) {
    for (auto const& g : rep.images()) {
      check_det(g);
    }
    auto m = rep.evaluate(w);
    if (!m.det().contains(1.0L)) {
      throw domain_error("determinant is not certified to be 1");
    }
    if (m.trace().avoids_real_segment(F(-2), F(2))) {
      return {Isometry::loxodromic, true};
    }
    return {Isometry::unknown, false};
  }

  TranslationLength translation_length(const ExactMat& m) {
    if (exact_kind(m).kind != Isometry::loxodromic) {
      return {true, 0, 0};
    }
    long double v = length_of_trace(m.trace().to_complex());
    return {true, static_cast<double>(v), static_cast<double>(std::abs(v) * 1e-15L)};
  }

  template <typename F>
  TranslationLength translation_length(const BoxMat<F>& m) {
    if (classify(m).kind != Isometry::loxodromic) {
      return {};
    }
    // 2 Re acosh(t/2) has derivative of modulus 1/|sqrt(t^2/4 - 1)| in t.
    auto t = m.trace();
    auto u = t * t * CInterval<F>(Interval<F>(F(0.25))) - CInterval<F>(1);
    auto dist = [](const Interval<F>& i) {
      return i.lo > 0 ? i.lo : (i.hi < 0 ? -i.hi : F(0));
    };
    F dr = dist(u.re), di = dist(u.im);
    F floor2 = dr * dr + di * di;
    if (!(floor2 > 0)) {
      return {};
    }
    long double lip = 1.0L / std::sqrt(std::sqrt(static_cast<long double>(floor2)));
    long double v   = length_of_trace(t.mid());
    long double r   = lip * static_cast<long double>(t.rad()) * 1.5L + std::abs(v) * 1e-15L;
    return {true, static_cast<double>(v), static_cast<double>(r)};
  }

  double translation_length(const NumMat& m) {
    return static_cast<double>(length_of_trace(lcplx(m.trace())));
  }

  namespace {
    template <typename C>
    Mat2<C> centralizer_impl(const Mat2<C>& m, C mu) {
      using std::abs;
      using std::sqrt;
      if (!numeric_loxodromic(narrow_any(m.trace()))) {
        throw domain_error("centralizer axis needs a loxodromic matrix");
      }
      if (mu == C(0)) {
        throw domain_error("eigenvalue must be nonzero");
      }
      C one(1), two(2), four(4);
      C t = m.trace();
      C l = t / two + sqrt(t * t / four - one);
      if (abs(l) < 1) {
        l = one / l;
      }
      C beta = (mu - one / mu) / (l - one / l);
      C alf  = mu - beta * l;
      return {alf + beta * m.a, beta * m.b, beta * m.c, alf + beta * m.d};
    }

    template <typename C>
    Representation<C> double_impl(const Representation<C>& rep, const std::array<Word, 3>& edge_words,
                                  const std::array<cplx, 2>& bend, cplx vertex_bend) {
      for (auto const& e : edge_words) {
        if (!numeric_loxodromic(narrow_any(rep.evaluate(e).trace()))) {
          throw domain_error("edge word " + format_word(e, rep.alphabet()) +
                             " does not have a loxodromic image");
        }
      }
      for (cplx b : {bend[0], bend[1], vertex_bend}) {
        if (b == cplx(0)) {
          throw domain_error("bend parameter must be nonzero");
        }
      }
      Mat2<C> v   = centralizer_impl(rep.evaluate(edge_words[0]), C(vertex_bend));
      Mat2<C> vi  = v.inverse();
      auto    ims = rep.images();
      for (auto const& m : rep.images()) {
        ims.push_back(v * m * vi);
      }
      ims.push_back(v * centralizer_impl(rep.evaluate(edge_words[1]), C(bend[0])));
      ims.push_back(v * centralizer_impl(rep.evaluate(edge_words[2]), C(bend[1])));
      Alphabet a = rep.alphabet().concat(primed(rep.alphabet())).extended("s").extended("t");
      return Representation<C>(std::move(a), std::move(ims));
    }
  }  // namespace

  NumMat  centralizer_element(const NumMat& m, cplx mu) { return centralizer_impl(m, mu); }
  WideMat centralizer_element(const WideMat& m, wcplx mu) { return centralizer_impl(m, mu); }

  NumMat to_numeric(const ExactMat& m) {
    auto cv = [](const QuadNumber& q) {
      auto z = q.to_complex();
      return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    };
    return {cv(m.a), cv(m.b), cv(m.c), cv(m.d)};
  }

  NumMat narrow(const WideMat& m) { return {narrow(m.a), narrow(m.b), narrow(m.c), narrow(m.d)}; }
  NumRep narrow(const WideRep& r) {
    std::vector<NumMat> ims;
    for (auto const& m : r.images()) {
      ims.push_back(narrow(m));
    }
    return NumRep(r.alphabet(), std::move(ims));
  }

  NumRep to_numeric(const ExactRep& r) {
    std::vector<NumMat> ims;
    for (auto const& m : r.images()) {
      ims.push_back(to_numeric(m));
    }
    return NumRep(r.alphabet(), std::move(ims));
  }

  template <typename F>
  BoxRep<F> to_boxes(const NumRep& r, double inflate) {
    std::vector<BoxMat<F>> ims;
    for (auto const& m : r.images()) {
      auto b = [&](cplx z) { return CInterval<F>::ball(lcplx(z), inflate); };
      ims.push_back({b(m.a), b(m.b), b(m.c), b(m.d)});
    }
    return BoxRep<F>(r.alphabet(), std::move(ims));
  }

  template <typename F>
  BoxRep<F> to_boxes(const WideRep& r, long double inflate) {
    std::vector<BoxMat<F>> ims;
    for (auto const& m : r.images()) {
      auto b = [&](const wcplx& z) {
        auto part = [&](const wreal& x) {
          auto e = Interval<F>::around(static_cast<F>(x.backend().value()));
          F    r = static_cast<F>(inflate);
          return Interval<F>::widened(e.lo - r, e.hi + r);
        };
        return CInterval<F>{part(z.real()), part(z.imag())};
      };
      ims.push_back({b(m.a), b(m.b), b(m.c), b(m.d)});
    }
    return BoxRep<F>(r.alphabet(), std::move(ims));
  }

  template <typename F>
  BoxRep<F> to_boxes(const ExactRep& r) {
    std::vector<BoxMat<F>> ims;
    for (auto const& m : r.images()) {
      ims.push_back({enclose<F>(m.a), enclose<F>(m.b), enclose<F>(m.c), enclose<F>(m.d)});
    }
    return BoxRep<F>(r.alphabet(), std::move(ims));
  }

  GroupPresentation figure_eight_presentation() {
    GroupPresentation p;
    p.kind     = "figure-eight";
    p.alphabet = Alphabet::standard(2);
    p.add_relator(parse_word("xYXyxYxyXY", p.alphabet));
    p.mark("meridian", parse_word("x", p.alphabet));
    return p;
  }

  ExactRep figure_eight_exact_rep() {
    static const ExactRep rep = [] {
      QuadNumber w(BigRational(-1, 2), BigRational(1, 2), -3);
      ExactMat   x{1, 1, 0, 1};
      ExactMat   y{1, 0, -w, 1};
      ExactRep   r(Alphabet::standard(2), {x, y});
      auto       pres = figure_eight_presentation();
      if (!(r.evaluate(pres.relators.at(0)) == ExactMat::identity())) {
        throw std::logic_error("figure-eight matrices do not satisfy the relator");
      }
      return r;
    }();
    return rep;
  }

  bool trivial_in_figure_eight(const Word& w) {
    ExactMat m = figure_eight_exact_rep().evaluate(w);
    return is_scalar(m, 1) || is_scalar(m, -1);
  }

  template <typename T>
  Representation<T> extend_centralizer_rep(const Representation<T>& rep, const Word& a, int n,
                                           const std::string& letter) {
    if (n < 1) {
      throw input_error("centralizer exponent must be positive");
    }
    Mat2<T> ma = rep.evaluate(a);
    if (!loxodromic(ma)) {
      throw domain_error("extension word does not have a loxodromic image");
    }
    Mat2<T> p = ma;
    for (int i = 1; i < n; ++i) {
      p = p * ma;
    }
    auto ims = rep.images();
    ims.push_back(p);
    return Representation<T>(rep.alphabet().extended(letter), std::move(ims));
  }

  NumRep double_rep(const NumRep& rep, const std::array<Word, 3>& edge_words,
                    const std::array<cplx, 2>& bend, cplx vertex_bend) {
    return double_impl(rep, edge_words, bend, vertex_bend);
  }
  WideRep double_rep(const WideRep& rep, const std::array<Word, 3>& edge_words,
                     const std::array<cplx, 2>& bend, cplx vertex_bend) {
    return double_impl(rep, edge_words, bend, vertex_bend);
  }

  template IsometryClass      classify<double>(const BoxMat<double>&);
  template IsometryClass      classify<__float128>(const BoxMat<__float128>&);
  template IsometryClass      classify<double>(const BoxRep<double>&, const Word&);
  template IsometryClass      classify<__float128>(const BoxRep<__float128>&, const Word&);
  template TranslationLength  translation_length<double>(const BoxMat<double>&);
  template TranslationLength  translation_length<__float128>(const BoxMat<__float128>&);
  template BoxRep<double>     to_boxes<double>(const NumRep&, double);
  template BoxRep<__float128> to_boxes<__float128>(const NumRep&, double);
  template BoxRep<double>     to_boxes<double>(const WideRep&, long double);
  template BoxRep<__float128> to_boxes<__float128>(const WideRep&, long double);
  template BoxRep<double>     to_boxes<double>(const ExactRep&);
  template BoxRep<__float128> to_boxes<__float128>(const ExactRep&);
  template NumRep   extend_centralizer_rep(const NumRep&, const Word&, int, const std::string&);
  template WideRep  extend_centralizer_rep(const WideRep&, const Word&, int, const std::string&);
  template ExactRep extend_centralizer_rep(const ExactRep&, const Word&, int, const std::string&);
  template BoxRep<double> extend_centralizer_rep(const BoxRep<double>&, const Word&, int,
                                                 const std::string&);
  template BoxRep<__float128> extend_centralizer_rep(const BoxRep<__float128>&, const Word&, int,
                                                     const std::string&);

}  // namespace slw
