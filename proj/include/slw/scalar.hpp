// Scalars for 2x2 matrices: exact elements of Q(sqrt d) and outward-rounded
// real and complex intervals.

#ifndef SLW_SCALAR_HPP_
#define SLW_SCALAR_HPP_

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <quadmath.h>

#include "slw/words.hpp"

namespace slw {

  using BigRational = boost::multiprecision::cpp_rational;

  // a + b sqrt(d) with rational a, b and a fixed square-free d.
  class QuadNumber {
   public:
    QuadNumber() = default;
    QuadNumber(long v) : a_(v) {}  // NOLINT(runtime/explicit)
    QuadNumber(BigRational a, BigRational b = 0, int d = -3);

    const BigRational& rational_part() const noexcept { return a_; }
    const BigRational& radical_part() const noexcept { return b_; }
    int                radicand() const noexcept { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    // Real, i.e. no imaginary contribution.
    bool is_real() const { return b_ == 0 || d_ > 0; }
    bool is_rational() const { return b_ == 0; }

    QuadNumber conjugate() const { return QuadNumber(a_, -b_, d_); }
    BigRational norm() const { return a_ * a_ - b_ * b_ * d_; }

    QuadNumber& operator+=(const QuadNumber& o);
    QuadNumber& operator-=(const QuadNumber& o);
    QuadNumber& operator*=(const QuadNumber& o);
    QuadNumber& operator/=(const QuadNumber& o);
    friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
    friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
    friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
    friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }
    QuadNumber        operator-() const { return QuadNumber(-a_, -b_, d_); }

    bool operator==(const QuadNumber& o) const;

    std::complex<long double> to_complex() const;
    // Real and imaginary parts to about 40 significant digits.
    std::pair<__float128, __float128> to_float128() const;
    // "p/q" or "p/q√d" text for each part.
    std::string rational_text() const;
    std::string radical_text() const;

   private:
    void unify(const QuadNumber& o);

    BigRational a_ = 0;
    BigRational b_ = 0;
    int         d_ = -3;
  };

  inline double      next_down(double x) { return std::nextafter(x, -HUGE_VAL); }
  inline double      next_up(double x) { return std::nextafter(x, HUGE_VAL); }
  inline __float128  next_down(__float128 x) { return nextafterq(x, -HUGE_VALQ); }
  inline __float128  next_up(__float128 x) { return nextafterq(x, HUGE_VALQ); }
  inline double      fsqrt(double x) { return std::sqrt(x); }
  inline __float128  fsqrt(__float128 x) { return sqrtq(x); }
  inline double      fabs_(double x) { return std::fabs(x); }
  inline __float128  fabs_(__float128 x) { return fabsq(x); }

  // Closed real interval; every operation rounds outward by one ulp.
  template <typename F>
  struct Interval {
    F lo{}, hi{};

    Interval() = default;
    Interval(F x) : lo(x), hi(x) {}  // NOLINT(runtime/explicit)
    Interval(F l, F h) : lo(l), hi(h) {}

    // Enclosure of a value known to within half an ulp of x.
    static Interval around(F x) { return {next_down(x), next_up(x)}; }
    static Interval widened(F l, F h) { return {next_down(l), next_up(h)}; }

    F    mid() const { return (lo + hi) / 2; }
    F    rad() const { return (hi - lo) / 2; }
    bool contains(F x) const { return lo <= x && x <= hi; }

    Interval operator+(const Interval& o) const { return widened(lo + o.lo, hi + o.hi); }
    Interval operator-(const Interval& o) const { return widened(lo - o.hi, hi - o.lo); }
    Interval operator-() const { return {-hi, -lo}; }
    Interval operator*(const Interval& o) const {
      F p[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
      F mn = p[0], mx = p[0];
      for (F v : p) {
        mn = v < mn ? v : mn;
        mx = v > mx ? v : mx;
      }
      return widened(mn, mx);
    }
    Interval reciprocal() const {
      if (contains(F(0))) {
        throw domain_error("division by an interval containing zero");
      }
      return widened(F(1) / hi, F(1) / lo);
    }
    Interval operator/(const Interval& o) const { return *this * o.reciprocal(); }
    Interval sqrt() const {
      if (hi < 0) {
        throw domain_error("square root of a negative interval");
      }
      F l = lo > 0 ? fsqrt(lo) : F(0);
      return {l > 0 ? next_down(l) : F(0), next_up(fsqrt(hi))};
    }
  };

  // Rectangular complex interval.
  template <typename F>
  struct CInterval {
    Interval<F> re, im;

    CInterval() = default;
    CInterval(Interval<F> r, Interval<F> i = Interval<F>(F(0))) : re(r), im(i) {}  // NOLINT
    CInterval(long v) : re(F(v)), im(F(0)) {}                                     // NOLINT

    static CInterval around(std::complex<long double> z) {
      return {Interval<F>::around(static_cast<F>(z.real())),
              Interval<F>::around(static_cast<F>(z.imag()))};
    }
    // Enclosure of the disc of radius r about z.
    static CInterval ball(std::complex<long double> z, long double r) {
      auto e = around(z);
      F    rr = static_cast<F>(r);
      return {Interval<F>::widened(e.re.lo - rr, e.re.hi + rr),
              Interval<F>::widened(e.im.lo - rr, e.im.hi + rr)};
    }

    std::complex<long double> mid() const {
      return {static_cast<long double>(re.mid()), static_cast<long double>(im.mid())};
    }
    F rad() const { return re.rad() > im.rad() ? re.rad() : im.rad(); }

    CInterval operator+(const CInterval& o) const { return {re + o.re, im + o.im}; }
    CInterval operator-(const CInterval& o) const { return {re - o.re, im - o.im}; }
    CInterval operator-() const { return {-re, -im}; }
    CInterval operator*(const CInterval& o) const {
      return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CInterval operator/(const CInterval& o) const {
      auto den = o.re * o.re + o.im * o.im;
      auto num = *this * CInterval{o.re, -o.im};
      return {num.re / den, num.im / den};
    }
    CInterval& operator+=(const CInterval& o) { return *this = *this + o; }
    CInterval& operator-=(const CInterval& o) { return *this = *this - o; }
    CInterval& operator*=(const CInterval& o) { return *this = *this * o; }

    // The box misses the real segment [lo, hi].
    bool avoids_real_segment(F lo, F hi) const {
      return im.lo > 0 || im.hi < 0 || re.hi < lo || re.lo > hi;
    }
    bool contains(std::complex<long double> z) const {
      return re.contains(static_cast<F>(z.real())) && im.contains(static_cast<F>(z.imag()));
    }
  };

  // Outward enclosure of an exact scalar.
  template <typename F>
  CInterval<F> enclose(const QuadNumber& q) {
    if constexpr (std::is_same_v<F, __float128>) {
      auto [re, im] = q.to_float128();
      auto grow     = [](__float128 v) {
        __float128 r = fabsq(v) * 1e-32Q;
        return Interval<__float128>::widened(v - r, v + r);
      };
      return {grow(re), grow(im)};
    }
    auto z = q.to_complex();
    auto e = CInterval<F>::around(z);
    // long double carries more digits than double but not than binary128
    long double slack = 4 * (std::fabs(z.real()) + std::fabs(z.imag())) * 1e-19L;
    return CInterval<F>::ball(e.mid(), slack + static_cast<long double>(e.rad()));
  }

}  // namespace slw

#endif  // SLW_SCALAR_HPP_
