#include "ore/lclm.hpp"

#include <stdexcept>

namespace ore {

namespace {

void check_operands(const OrePoly& l, const OrePoly& a) {
  if (l.is_zero() || a.is_zero()) throw std::invalid_argument("lclm of the zero operator");
  if (!l.algebra()->same_as(*a.algebra())) throw AlgebraMismatch();
}

}  // namespace

PolyMatrix lclm_ansatz_matrix(const OrePoly& l, const OrePoly& a, int u_order, int v_order) {
  check_operands(l, a);
  const int r = l.order(), n = a.order();
  if (u_order < 0 || v_order < 0 || u_order + r != v_order + n)
    throw std::invalid_argument("lclm_ansatz_matrix: inconsistent cofactor orders");
  const auto rows = static_cast<std::size_t>(u_order + r + 1);
  PolyMatrix m(rows, static_cast<std::size_t>(u_order + v_order + 2));

  auto fill = [&](const OrePoly& op, int count, std::size_t first_col, bool negate) {
    OrePoly shifted = op;
    for (int i = 0; i <= count; ++i) {
      if (i > 0) shifted = left_mul_generator(shifted);
      const auto coeffs = shifted.poly_coeffs();
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        m.at(k, first_col + static_cast<std::size_t>(i)) = negate ? -coeffs[k] : coeffs[k];
    }
  };
  fill(l, u_order, 0, false);
  fill(a, v_order, static_cast<std::size_t>(u_order) + 1, true);
  return m;
}

LclmWitness lclm_ansatz(const OrePoly& l, const OrePoly& a) {
  check_operands(l, a);
  if (!l.has_poly_coeffs() || !a.has_poly_coeffs())
    throw std::invalid_argument("lclm_ansatz: operands need polynomial coefficients");
  const AlgebraRef& alg = l.algebra();
  const int r = l.order(), n = a.order();

  int u_order = n, v_order = r;
  auto basis = nullspace(lclm_ansatz_matrix(l, a, u_order, v_order));
  if (basis.size() > 1) {
    // Common left multiples of order <= n + r form a space of dimension
    // order(gcrd) + 1; the lclm itself is reached with cofactors that much smaller.
    const int g = static_cast<int>(basis.size()) - 1;
    u_order -= g;
    v_order -= g;
    basis = nullspace(lclm_ansatz_matrix(l, a, u_order, v_order));
    if (basis.size() != 1) throw std::logic_error("lclm_ansatz: reduced ansatz is not one-dimensional");
  }
  const auto& sol = basis.front();
  const auto split = static_cast<std::ptrdiff_t>(u_order) + 1;
  const std::vector<Poly> u_coeffs(sol.begin(), sol.begin() + split);
  const std::vector<Poly> v_coeffs(sol.begin() + split, sol.end());

  OrePoly u = OrePoly::from_polys(alg, u_coeffs);
  OrePoly v = OrePoly::from_polys(alg, v_coeffs);
  const OrePoly ul = u * l;
  ContentSplit cs = content_primitive(ul.poly_coeffs());
  if (cs.primitive.back().lc() < 0) {
    for (auto& p : cs.primitive) p = -p;
    cs.content = -cs.content;
  }
  Poly u_n = u.poly_lc();
  return {OrePoly::from_polys(alg, cs.primitive), std::move(u), std::move(v), std::move(u_n),
          std::move(cs.content)};
}

namespace {

// mult * u = quot * v + rem with polynomial coefficients throughout.
struct PseudoDivision {
  Poly mult;
  OrePoly quot;
  OrePoly rem;
};

PseudoDivision pseudo_right_divide(const OrePoly& u, const OrePoly& v) {
  const AlgebraRef& alg = u.algebra();
  PseudoDivision out{Poly(1), OrePoly(alg), u};
  if (u.order() < v.order()) return out;
  std::vector<OrePoly> shifted{v};  // d^k * v
  for (int k = 1; k <= u.order() - v.order(); ++k) shifted.push_back(left_mul_generator(shifted.back()));
  while (!out.rem.is_zero() && out.rem.order() >= v.order()) {
    const int d = out.rem.order() - v.order();
    const OrePoly& sv = shifted[static_cast<std::size_t>(d)];
    const Poly& a = out.rem.poly_lc();
    const Poly& b = sv.poly_lc();
    const Poly g = poly_gcd(a, b);
    const RatFunc fa(exact_div(a, g)), fb(exact_div(b, g));
    out.rem = fb * out.rem - fa * sv;
    out.quot = fb * out.quot + fa * OrePoly::generator(alg, d);
    out.mult *= fb.num();
  }
  return out;
}

// Divides s and r on the left by the joint content of their coefficients.
void remove_joint_content(OrePoly& s, OrePoly& r) {
  std::vector<Poly> all = s.poly_coeffs();
  const std::vector<Poly> rc = r.poly_coeffs();
  all.insert(all.end(), rc.begin(), rc.end());
  const ContentSplit cs = content_primitive(all);
  if (cs.content.is_one()) return;
  const RatFunc inv = RatFunc(cs.content).inverse();
  s = inv * s;
  r = inv * r;
}

}  // namespace

OrePoly lclm_euclid(const OrePoly& l, const OrePoly& a) {
  check_operands(l, a);
  const AlgebraRef& alg = l.algebra();
  const OrePoly base = primitive(l);
  // Invariant: s_i * base + t_i * A = r_i (t is never needed explicitly).
  OrePoly r0 = base, r1 = primitive(a);
  OrePoly s0 = OrePoly::scalar(alg, RatFunc(1)), s1(alg);
  while (true) {
    PseudoDivision pd = pseudo_right_divide(r0, r1);
    OrePoly s2 = RatFunc(pd.mult) * s0 - pd.quot * s1;
    if (pd.rem.is_zero()) return primitive(s2 * base);
    remove_joint_content(s2, pd.rem);
    r0 = std::move(r1);
    r1 = std::move(pd.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

}  // namespace ore
