#ifndef ORE_TESTS_SUPPORT_HPP
#define ORE_TESTS_SUPPORT_HPP

#include "ore/lclm.hpp"
#include "ore/poly_matrix.hpp"
#include "ore/text.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace ore {

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const OrePoly& l) { return os << print_operator(l, false); }

}  // namespace ore

namespace ore::test {

inline AlgebraRef diff() {
  static const AlgebraRef a = OreAlgebra::differential();
  return a;
}
inline AlgebraRef shift() {
  static const AlgebraRef a = OreAlgebra::shift();
  return a;
}
/// sigma(x) = x^2, delta(x) = 1 - x
inline AlgebraRef squaring() {
  static const AlgebraRef a = OreAlgebra::custom(parse_poly("x^2"), parse_poly("1 - x"));
  return a;
}

inline Poly P(const std::string& s) { return parse_poly(s); }
inline OrePoly op(const std::string& s, const AlgebraRef& alg) { return parse_operator(s, alg); }

/// Operators and results transcribed from the worked examples.
namespace golden {

inline const char* intro_l = "x*(1-x)*D - 1";
inline const char* intro_m = "(1-x)*D^2 - 2*D";

inline const char* exdiff_l = "(x-1)*(x^2-3*x+3)*x*D^2 - (x^2-3)*(x^2-2*x+2)*D + (x-2)*(2*x^2-3*x+3)";
inline const char* exdiff_a = "x^2*D^2 - 2*x*D + 2";
inline const char* exdiff_m =
    "(x^5-2*x^4+4*x^3-9*x^2+12*x-6)*D^4 - (x^5-2*x^4+x^3-12*x^2+24*x-24)*D^3"
    " - (3*x^3+9*x^2)*D^2 + (6*x^2+18*x)*D - (6*x+18)";

inline const char* ex51_a = "D^2 + D + 1";
inline const char* ex51_m =
    "(x^7-4*x^6+6*x^5-4*x^4+x^3+6*x-6)*D^4 - (2*x^6-9*x^5+15*x^4-11*x^3+3*x^2-24)*D^3"
    " - (x^7-4*x^6+6*x^5-4*x^4+x^3+6*x-6)*D + (2*x^6-9*x^5+15*x^4-11*x^3+3*x^2-24)";

inline const char* ex32_l = "x^2*(x-2)*(x-1)*D^2 + 2*x*(x^2-3*x+1)*D - 2";
inline const char* ex32_p = "((x^4-x^3-4*x^2+2*x-2)/((x-2)*x))*D - (x^2+5*x+3)";
inline const char* ex32_pl =
    "x*(x-1)*(x^4-x^3-4*x^2+2*x-2)*D^3 - (x^6-4*x^5-x^4+22*x^3-18*x^2+18*x-6)*D^2"
    " - 2*(x^5-x^4-8*x^3+8*x^2-3*x+6)*D + 2*(x^2+5*x+3)";

inline const char* ex33_l = "x*(x+1)*(5*x-2)*S^2 - 2*x*(5*x^2-2*x-9)*S + (x-4)*(x+2)*(5*x+3)";
inline const char* ex33_p = "((5*x^3+13*x^2-18*x-24)/((x+2)*(5*x+3)))*S - (2*(5*x^3+28*x^2+23*x-24))/((x+2)*(5*x+3))";
inline const char* ex33_pl =
    "(x+1)*(5*x^3+13*x^2-18*x-24)*S^3 - 2*(x+1)*(10*x^3+21*x^2-58*x+24)*S^2"
    " + (25*x^4+60*x^3-217*x^2-84*x+288)*S - 2*(x-4)*(5*x^3+28*x^2+23*x-24)";

inline const char* ex52_l =
    "2*(x+3)^2*(59*x+94)*S^3 - (2301*x^3+15171*x^2+32696*x+22876)*S^2"
    " - 5*(59*x^3+330*x^2+600*x+359)*S - (59*x+153)*(x+1)^2";
inline const char* ex52_lc = "2*(x+4)^2*(8909*x^3+57087*x^2+119629*x+81711)";

inline const char* ex53_l = "x^3*D^3 - 3*x^2*D^2 - 2*x*D + 10";

inline const char* ex54_l = "(x-7)*(x^2-2*x-12)*S^2 - (3*x^3-23*x^2-23*x+291)*S + 2*(x-6)*(x^2-13)";
inline const char* ex54_m =
    "4*(x-7)*(x-6)*(5*x-28)*S^3 - (x-7)*(3092-1138*x+105*x^2)*S^2"
    " + (x-5)*(6081-2080*x+175*x^2)*S - 18*(x-6)*(x-5)*(5*x-23)";

inline const char* ex55_l = "(2*x+1)*P^2 + (x^2+3*x-1)*P - (2*x^4+2*x^3+x^2+1)";
inline const char* ex55_m =
    "(2*x^3+4*x^2+4*x-1)*P^3 - (2*x^6-x^4-4*x^3-3*x^2+x+5)*P^2"
    " - (2*x^9+4*x^8+6*x^7+4*x^6+2*x^5+3*x^4+2*x^3+3*x^2+3*x-2)*P"
    " + (2*x^9+4*x^8+6*x^7+6*x^6+2*x^5+2*x^4-4*x^3-4*x^2+4)";

}  // namespace golden

/// Equal up to a nonzero element of Q(x) on the left (compares primitive forms).
inline bool same_up_to_constant(const OrePoly& a, const OrePoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return primitive(a) == primitive(b);
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  /// Canonical p/q with p in [lo, hi] and q in [1, max_den].
  Rational rational(long lo, long hi, long max_den) {
    Rational q(integer(lo, hi), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  /// Degree exactly `degree` (nonzero top coefficient), integer entries in [-bound, bound].
  Poly poly(int degree, long bound = 9) {
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k) c.emplace_back(integer(-bound, bound));
    long top = 0;
    while (top == 0) top = integer(-bound, bound);
    c.emplace_back(top);
    return Poly(std::move(c));
  }

  Poly poly_upto(int max_degree, long bound = 9) { return poly(static_cast<int>(integer(0, max_degree)), bound); }

  /// Order in [min_order, max_order], coefficient degrees <= max_degree.
  OrePoly ore(const AlgebraRef& alg, int min_order, int max_order, int max_degree) {
    const int r = static_cast<int>(integer(min_order, max_order));
    std::vector<Poly> c;
    for (int k = 0; k <= r; ++k) c.push_back(k == r ? poly_upto(max_degree) : Poly(maybe_zero(max_degree)));
    return OrePoly::from_polys(alg, c);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  Poly maybe_zero(int max_degree) { return integer(0, 5) == 0 ? Poly() : poly_upto(max_degree); }
  std::mt19937_64 gen_;
};

/// Rank over Q(x) by plain Gaussian elimination with rational functions.
inline std::size_t rank_over_fraction_field(const PolyMatrix& m) {
  std::vector<std::vector<RatFunc>> a(m.rows(), std::vector<RatFunc>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = RatFunc(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][c].is_zero()) continue;
      const RatFunc f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// u * L = c * m and v * A = c * m, exactly.
inline bool witness_holds(const LclmWitness& w, const OrePoly& l, const OrePoly& a) {
  const OrePoly cm = RatFunc(w.removed_content) * w.m;
  return w.u_cofactor * l == cm && w.v_cofactor * a == cm;
}

}  // namespace ore::test

#endif  // ORE_TESTS_SUPPORT_HPP
