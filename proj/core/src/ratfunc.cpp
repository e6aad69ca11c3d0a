#include "ore/ratfunc.hpp"

#include <stdexcept>

namespace ore {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (den_.lc() != 1) {
    const Rational inv = 1 / den_.lc();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (is_poly() && rhs.is_poly()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    reduce();
    return *this;
  }
  const Poly g = poly_gcd(den_, rhs.den_);
  const Poly a = exact_div(rhs.den_, g);
  const Poly b = exact_div(den_, g);
  num_ = num_ * a + rhs.num_ * b;
  den_ = den_ * a;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_poly() && rhs.is_poly()) {
    num_ *= rhs.num_;
    return *this;
  }
  if (is_zero() || rhs.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  // Cross-cancel before multiplying; both operands are already reduced.
  const Poly g1 = poly_gcd(num_, rhs.den_);
  const Poly g2 = poly_gcd(rhs.num_, den_);
  num_ = exact_div(num_, g1) * exact_div(rhs.num_, g2);
  den_ = exact_div(den_, g2) * exact_div(rhs.den_, g1);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

RatFunc operator-(RatFunc a) {
  a.num_ = -a.num_;
  return a;
}

std::string to_string(const RatFunc& f, std::string_view var) {
  if (f.is_poly()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace ore
