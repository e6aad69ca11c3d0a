#ifndef ORE_RATFUNC_HPP
#define ORE_RATFUNC_HPP

#include "ore/poly.hpp"

#include <string>

namespace ore {

/// Reduced quotient of polynomials with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  /// Throws std::domain_error for a zero denominator.
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

std::string to_string(const RatFunc& f, std::string_view var = "x");

}  // namespace ore

#endif  // ORE_RATFUNC_HPP
