#ifndef ORE_REMOVER_HPP
#define ORE_REMOVER_HPP

#include "ore/ore_poly.hpp"

namespace ore {

/// A p-removing operator P of order n for some L, with
///   sigma^-n(lc(P L)) = w / (v * target_factor) * lc(L),  gcd(w, target_factor) = 1.
struct RemoverSpec {
  OrePoly p;
  int n;
  Poly target_factor;
  Poly w;
  Poly v;
};

/// sigma^-n(lc(P L)) for n = order(P). Requires invertible sigma.
RatFunc aligned_lc(const OrePoly& p, const OrePoly& l);

/// Computes w and v for P against L. Throws std::invalid_argument if P L has a
/// non-polynomial coefficient or gcd(w, target) != 1, SigmaNotInvertible if
/// the algebra has no sigma^-1.
RemoverSpec make_remover_spec(const OrePoly& p, const OrePoly& l, const Poly& target);

/// Q = sigma^n(s v) P + sigma^n(t) d^n with s w + t p = 1, so that
/// sigma^-n(lc(Q L)) = lc(L) / target_factor.
OrePoly normalize_remover(const RemoverSpec& r, const OrePoly& l);

/// R = sigma^n(s) P1 + sigma^n(t) P2 with s f2 + t f1 = 1, removing f1 f2 at
/// once. P1, P2 must be exact removers of the same order for coprime f1, f2.
OrePoly combine_removers(const OrePoly& p1, const OrePoly& p2, const OrePoly& l, const Poly& f1,
                         const Poly& f2);

}  // namespace ore

#endif  // ORE_REMOVER_HPP
