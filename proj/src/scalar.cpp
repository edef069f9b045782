#include "slw/scalar.hpp"

#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace slw {

  QuadNumber::QuadNumber(BigRational a, BigRational b, int d)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d == 0 || d == 1) {
      throw input_error("radicand must be square-free and not 0 or 1");
    }
  }

  void QuadNumber::unify(const QuadNumber& o) {
    if (o.b_ != 0 && b_ != 0 && o.d_ != d_) {
      throw domain_error("mixing different quadratic fields");
    }
    if (b_ == 0) {
      d_ = o.d_;
    }
  }

  QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
    unify(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }

  QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
    unify(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }

  QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
    unify(o);
    BigRational a = a_ * o.a_ + b_ * o.b_ * d_;
    BigRational b = a_ * o.b_ + b_ * o.a_;
    a_            = std::move(a);
    b_            = std::move(b);
    return *this;
  }

  QuadNumber& QuadNumber::operator/=(const QuadNumber& o) {
    if (o.is_zero()) {
      throw domain_error("division by zero");
    }
    unify(o);
    BigRational n  = o.norm();
    QuadNumber  oc = o.conjugate();
    *this *= oc;
    a_ /= n;
    b_ /= n;
    return *this;
  }

  bool QuadNumber::operator==(const QuadNumber& o) const {
    return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || d_ == o.d_);
  }

  std::complex<long double> QuadNumber::to_complex() const {
    auto        a = a_.convert_to<long double>();
    auto        b = b_.convert_to<long double>();
    long double r = std::sqrt(static_cast<long double>(std::abs(d_)));
    return d_ < 0 ? std::complex<long double>(a, b * r) : std::complex<long double>(a + b * r, 0);
  }

  std::pair<__float128, __float128> QuadNumber::to_float128() const {
    using Big = boost::multiprecision::cpp_bin_float_50;
    Big  a    = a_.convert_to<Big>();
    Big  b    = b_.convert_to<Big>() * boost::multiprecision::sqrt(Big(std::abs(d_)));
    auto cv   = [](const Big& v) { return strtoflt128(v.str(40, std::ios::scientific).c_str(), nullptr); };
    return d_ < 0 ? std::pair{cv(a), cv(b)} : std::pair{cv(a + b), __float128(0)};
  }

  std::string QuadNumber::rational_text() const {
    std::ostringstream os;
    os << a_;
    return os.str();
  }

  std::string QuadNumber::radical_text() const {
    std::ostringstream os;
    os << b_ << "√" << d_;
    return os.str();
  }

}  // namespace slw
