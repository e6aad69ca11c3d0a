#ifndef ORE_ORE_POLY_HPP
#define ORE_ORE_POLY_HPP

#include "ore/algebra.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace ore {

class AlgebraMismatch : public std::invalid_argument {
 public:
  AlgebraMismatch() : std::invalid_argument("operators belong to different Ore algebras") {}
};

/// Operator c_0 + c_1 d + ... + c_r d^r with coefficients in Q(x).
/// The top coefficient is nonzero unless the operator is zero.
class OrePoly {
 public:
  explicit OrePoly(AlgebraRef alg) : alg_(std::move(alg)) {}
  OrePoly(AlgebraRef alg, std::vector<RatFunc> coeffs);

  static OrePoly from_polys(AlgebraRef alg, std::span<const Poly> coeffs);
  static OrePoly generator(AlgebraRef alg, int power = 1);
  static OrePoly scalar(AlgebraRef alg, RatFunc c);

  const AlgebraRef& algebra() const { return alg_; }
  /// -1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const RatFunc& coeff(int k) const;
  std::span<const RatFunc> coeffs() const { return c_; }
  /// Requires a nonzero operator.
  const RatFunc& lc() const { return c_.back(); }

  bool has_poly_coeffs() const;
  /// Throws std::domain_error unless every coefficient is a polynomial.
  std::vector<Poly> poly_coeffs() const;
  const Poly& poly_lc() const;

  OrePoly& operator+=(const OrePoly& rhs);
  OrePoly& operator-=(const OrePoly& rhs);

  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  friend OrePoly operator-(OrePoly a);
  /// Noncommutative product.
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  /// Left multiplication by a coefficient.
  friend OrePoly operator*(const RatFunc& c, OrePoly a);
  friend bool operator==(const OrePoly& a, const OrePoly& b);

 private:
  void trim();
  void check_same(const OrePoly& other) const;

  AlgebraRef alg_;
  std::vector<RatFunc> c_;
};

OrePoly ore_mul(const OrePoly& u, const OrePoly& v);
OrePoly ore_add(const OrePoly& u, const OrePoly& v);
OrePoly ore_scale(const RatFunc& c, const OrePoly& u);

/// d * u, computed coefficient-wise without a general product.
OrePoly left_mul_generator(const OrePoly& u);

struct Normalized {
  OrePoly primitive;
  Poly cleared_denominator;
  Poly content;
};
/// u = (content / cleared_denominator) * primitive, where primitive has
/// polynomial coefficients with trivial joint content, coprime integer
/// coefficients and a positive leading rational coefficient in lc(primitive).
/// Throws std::invalid_argument for the zero operator.
Normalized normalize(const OrePoly& u);
OrePoly primitive(const OrePoly& u);

struct OreDivision {
  OrePoly quot;
  OrePoly rem;
};
/// u = quot*v + rem with order(rem) < order(v), over Q(x).
OreDivision right_divide(const OrePoly& u, const OrePoly& v);

/// Greatest common right divisor in primitive form.
OrePoly gcrd(const OrePoly& u, const OrePoly& v);

}  // namespace ore

#endif  // ORE_ORE_POLY_HPP
