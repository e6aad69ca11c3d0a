#include "ore/diffdesing.hpp"

#include "ore/lclm.hpp"

#include <algorithm>
#include <stdexcept>

namespace ore {

namespace {

void require_differential(const OrePoly& l) {
  if (!l.algebra()->is_differential())
    throw std::invalid_argument("operation requires the differential algebra (sigma = id, delta = d/dx)");
  if (l.is_zero()) throw std::invalid_argument("operation requires a nonzero operator");
}

// falling factorial t (t-1) ... (t-i+1)
Rational falling(const Rational& t, int i) {
  Rational out = 1;
  for (int k = 0; k < i; ++k) out *= t - k;
  return out;
}

struct Term {
  int i;  // derivative order
  int j;  // power of x
  Rational c;
};

struct Expansion {
  std::vector<Term> terms;
  int nu;
};

Expansion expand(const OrePoly& l) {
  const auto coeffs = primitive(l).poly_coeffs();
  Expansion e{{}, std::numeric_limits<int>::max()};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (int j = 0; j <= coeffs[i].degree(); ++j) {
      const Rational c = coeffs[i].coeff(j);
      if (c == 0) continue;
      e.terms.push_back({static_cast<int>(i), j, c});
      e.nu = std::min(e.nu, j - static_cast<int>(i));
    }
  return e;
}

}  // namespace

Poly indicial_at_zero(const OrePoly& l) {
  require_differential(l);
  const Expansion e = expand(l);
  Poly ind;
  for (const auto& t : e.terms) {
    if (t.j - t.i != e.nu) continue;
    Poly f(1);
    for (int k = 0; k < t.i; ++k) f *= Poly::x() - Poly(static_cast<long>(k));
    ind += f * t.c;
  }
  return canonical(ind);
}

std::optional<std::vector<Rational>> series_solution(const OrePoly& l, long alpha, int terms) {
  require_differential(l);
  if (alpha < 0 || terms < alpha) throw std::invalid_argument("series_solution: need 0 <= alpha <= terms");
  const Expansion e = expand(l);
  std::vector<Rational> c(static_cast<std::size_t>(terms) + 1, Rational(0));
  c[static_cast<std::size_t>(alpha)] = 1;
  // Coefficient of x^(k+nu) in L(sum c_t x^t) collects c_t with t = k + nu + i - j <= k.
  for (long k = alpha; k <= terms; ++k) {
    Rational lead = 0, rest = 0;
    for (const auto& t : e.terms) {
      const long idx = k + e.nu + t.i - t.j;
      if (idx < alpha) continue;
      const Rational w = t.c * falling(Rational(idx), t.i);
      if (idx == k)
        lead += w;
      else
        rest += w * c[static_cast<std::size_t>(idx)];
    }
    if (k == alpha) {
      if (lead != 0) return std::nullopt;
      continue;
    }
    if (lead != 0) {
      c[static_cast<std::size_t>(k)] = -rest / lead;
    } else if (rest != 0) {
      return std::nullopt;
    }
  }
  return c;
}

ExponentSet exponents(const OrePoly& l) {
  require_differential(l);
  ExponentSet out;
  out.indicial = indicial_at_zero(l);
  for (const auto& root : rational_roots(out.indicial))
    if (root.get_den() == 1 && root >= 0 && root.get_num().fits_slong_p())
      out.candidates.push_back(root.get_num().get_si());
  int max_deg = 0;
  for (const auto& c : primitive(l).poly_coeffs()) max_deg = std::max(max_deg, c.degree());
  const long top = out.candidates.empty() ? 0 : out.candidates.back();
  out.truncation_order = static_cast<int>(top) + l.order() + max_deg + 1;
  for (long alpha : out.candidates)
    if (series_solution(l, alpha, out.truncation_order)) out.admitted.push_back(alpha);
  return out;
}

ClassicalResult classical_desingularize(const OrePoly& l) {
  require_differential(l);
  const OrePoly base = primitive(l);
  const AlgebraRef& alg = base.algebra();
  ExponentSet exps = exponents(base);
  if (base.poly_lc().coeff(0) != 0)
    return ClassicalOutcome{std::move(exps), {}, OrePoly::scalar(alg, RatFunc(1)), base};
  if (static_cast<int>(exps.admitted.size()) < base.order()) return NotDesingularizable{std::move(exps)};

  std::vector<long> missing;
  for (long e = 0; e <= exps.admitted.back(); ++e)
    if (!std::binary_search(exps.admitted.begin(), exps.admitted.end(), e)) missing.push_back(e);

  OrePoly aux = OrePoly::scalar(alg, RatFunc(1));
  for (std::size_t i = 0; i < missing.size(); ++i) {
    const Poly first[] = {Poly(-missing[i]), Poly::x()};  // x D - e
    const OrePoly factor = OrePoly::from_polys(alg, first);
    aux = i == 0 ? factor : lclm_ansatz(aux, factor).m;
  }
  OrePoly result = missing.empty() ? base : lclm_ansatz(base, aux).m;
  return ClassicalOutcome{std::move(exps), std::move(missing), std::move(aux), std::move(result)};
}

OrePoly translate(const OrePoly& l, const Rational& xi) {
  require_differential(l);
  if (xi == 0) return l;
  const Poly shift = Poly::x() + Poly(xi);
  std::vector<RatFunc> c;
  c.reserve(l.coeffs().size());
  for (const auto& f : l.coeffs())
    c.push_back(f.is_poly() ? RatFunc(f.num().compose(shift)) : RatFunc(f.num().compose(shift), f.den().compose(shift)));
  return OrePoly(l.algebra(), std::move(c));
}

ClassicalResult classical_desingularize_at(const OrePoly& l, const Rational& xi) {
  ClassicalResult res = classical_desingularize(translate(l, xi));
  if (auto* ok = std::get_if<ClassicalOutcome>(&res)) {
    ok->aux = primitive(translate(ok->aux, -xi));
    ok->result = primitive(translate(ok->result, -xi));
  }
  return res;
}

}  // namespace ore
