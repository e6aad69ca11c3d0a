#include "ore/remover.hpp"

namespace ore {

namespace {

void require_invertible(const OreAlgebra& alg) {
  if (!alg.sigma_invertible()) throw SigmaNotInvertible();
}

}  // namespace

RatFunc aligned_lc(const OrePoly& p, const OrePoly& l) {
  const OreAlgebra& alg = *l.algebra();
  require_invertible(alg);
  const OrePoly pl = p * l;
  return alg.sigma(pl.lc(), -p.order());
}

RemoverSpec make_remover_spec(const OrePoly& p, const OrePoly& l, const Poly& target) {
  require_invertible(*l.algebra());
  if (p.is_zero()) throw std::invalid_argument("remover must be nonzero");
  if (!(p * l).has_poly_coeffs()) throw std::invalid_argument("P L has non-polynomial coefficients");
  const Poly& lc = l.poly_lc();
  if (!divides(target, lc)) throw std::invalid_argument("target factor does not divide lc(L)");
  // w / v = sigma^-n(lc(P L)) * p / lc(L)
  const RatFunc ratio = aligned_lc(p, l) * RatFunc(target) / RatFunc(lc);
  if (!poly_gcd(ratio.num(), target).is_constant())
    throw std::invalid_argument("gcd(w, p) != 1: operator does not remove " + to_string(target));
  return {p, p.order(), target, ratio.num(), ratio.den()};
}

OrePoly normalize_remover(const RemoverSpec& r, const OrePoly& l) {
  const OreAlgebra& alg = *l.algebra();
  require_invertible(alg);
  if (r.p.order() != r.n) throw std::invalid_argument("normalize_remover: order mismatch");
  const RemoverSpec check = make_remover_spec(r.p, l, r.target_factor);
  if (RatFunc(check.w, check.v) != RatFunc(r.w, r.v))
    throw std::invalid_argument("normalize_remover: w, v do not match the operator");
  const Bezout b = poly_xgcd(check.w, r.target_factor);  // s w + t p = 1
  const int n = r.n;
  const OrePoly head = RatFunc(alg.sigma(b.s * check.v, n)) * r.p;
  const OrePoly tail = RatFunc(alg.sigma(b.t, n)) * OrePoly::generator(l.algebra(), n);
  return head + tail;
}

OrePoly combine_removers(const OrePoly& p1, const OrePoly& p2, const OrePoly& l, const Poly& f1,
                         const Poly& f2) {
  const OreAlgebra& alg = *l.algebra();
  require_invertible(alg);
  if (p1.order() != p2.order()) throw std::invalid_argument("combine_removers: order mismatch");
  if (!poly_gcd(f1, f2).is_constant()) throw std::invalid_argument("combine_removers: factors not coprime");
  const RatFunc lc(l.poly_lc());
  for (const auto& [p, f] : {std::pair{&p1, &f1}, std::pair{&p2, &f2}}) {
    if (!(*p * l).has_poly_coeffs()) throw std::invalid_argument("combine_removers: P L not polynomial");
    if (aligned_lc(*p, l) * RatFunc(*f) != lc)
      throw std::invalid_argument("combine_removers: operator is not an exact remover of " + to_string(*f));
  }
  const Bezout b = poly_xgcd(f2, f1);  // s f2 + t f1 = 1
  const int n = p1.order();
  return RatFunc(alg.sigma(b.s, n)) * p1 + RatFunc(alg.sigma(b.t, n)) * p2;
}

}  // namespace ore
