#ifndef ORE_LCLM_HPP
#define ORE_LCLM_HPP

#include "ore/ore_poly.hpp"
#include "ore/poly_matrix.hpp"

namespace ore {

/// Least common left multiple M of L and A together with the cofactors of
/// the coefficient-comparison ansatz:
///   u_cofactor * L = removed_content * m = v_cofactor * A.
/// u_cofactor and v_cofactor come from a content-primitive solution vector and
/// u_n is the leading coefficient of u_cofactor.
struct LclmWitness {
  OrePoly m;
  OrePoly u_cofactor;
  OrePoly v_cofactor;
  Poly u_n;
  Poly removed_content;
};

/// The (u_order + order(L) + 1) x (u_order + v_order + 2) coefficient matrix
/// with columns [L], [dL], ..., [d^u_order L], -[A], ..., -[d^v_order A].
/// Requires u_order + order(L) = v_order + order(A).
PolyMatrix lclm_ansatz_matrix(const OrePoly& l, const OrePoly& a, int u_order, int v_order);

/// lclm by undetermined coefficients. Both operands must be nonzero with
/// polynomial coefficients. When the nullspace has dimension g + 1 > 1 (a gcrd
/// of order g) the ansatz is repeated with cofactor orders lowered by g, which
/// yields the unique minimal-order solution.
LclmWitness lclm_ansatz(const OrePoly& l, const OrePoly& a);

/// lclm from the extended right Euclidean algorithm over Q(x), in primitive form.
OrePoly lclm_euclid(const OrePoly& l, const OrePoly& a);

}  // namespace ore

#endif  // ORE_LCLM_HPP
