#ifndef ORE_POLY_HPP
#define ORE_POLY_HPP

#include "ore/rational.hpp"

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ore {

/// Dense univariate polynomial over Q. Coefficients are indexed by exponent and
/// the top coefficient is nonzero; the zero polynomial has no coefficients.
class Poly {
 public:
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(long c);
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x();
  static Poly monomial(const Rational& c, int exponent);

  /// kMinusInfinity for the zero polynomial.
  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;

  Rational coeff(int exponent) const;
  /// Requires a nonzero polynomial.
  const Rational& lc() const { return c_.back(); }
  std::span<const Rational> coeffs() const { return c_; }
  /// Smallest exponent with a nonzero coefficient; kMinusInfinity for zero.
  int valuation() const;

  Rational operator()(const Rational& at) const;
  Poly compose(const Poly& inner) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
  friend Poly operator*(const Rational& b, Poly a) { return a *= b; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  Poly quot;
  Poly rem;
};

/// Euclidean division a = quot*b + rem, deg rem < deg b. Throws std::domain_error for b = 0.
PolyDivision divmod(const Poly& a, const Poly& b);
/// a / b, throwing std::domain_error unless b divides a exactly.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Divides by the leading coefficient (zero stays zero).
Poly monic(const Poly& p);
/// Positive rational c with p = c * primitive_part(p) where the primitive part
/// has coprime integer coefficients; the sign goes into primitive_part.
Rational rational_content(const Poly& p);
Poly primitive_part(const Poly& p);
/// Primitive part with positive leading coefficient.
Poly canonical(const Poly& p);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

struct Bezout {
  Poly g;
  Poly s;
  Poly t;
};
/// s*a + t*b = g = poly_gcd(a, b). Throws std::invalid_argument if both are zero.
Bezout poly_xgcd(const Poly& a, const Poly& b);

struct ContentSplit {
  Poly content;
  std::vector<Poly> primitive;
};
/// content = gcd of the entries scaled so the primitive entries have coprime
/// integer coefficients; content has positive leading coefficient.
/// Throws std::invalid_argument if every entry is zero.
ContentSplit content_primitive(std::span<const Poly> entries);

struct SquarefreeFactor {
  Poly factor;
  int multiplicity;
};
/// Factors are canonical, squarefree, pairwise coprime; multiplicities increase.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& q);

/// Largest k with p^k | q. Throws std::invalid_argument for constant p or zero q.
int multiplicity(const Poly& p, const Poly& q);

/// Distinct rational roots in increasing order. Throws std::invalid_argument for q = 0.
std::vector<Rational> rational_roots(const Poly& q);

std::string to_string(const Poly& p, std::string_view var = "x");

}  // namespace ore

#endif  // ORE_POLY_HPP
