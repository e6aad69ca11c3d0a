#ifndef ORE_DIFFDESING_HPP
#define ORE_DIFFDESING_HPP

#include "ore/ore_poly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace ore {

// Classical desingularization at x = 0 for differential operators, via the
// exponents of power series solutions. Everything here throws
// std::invalid_argument when the operator is not in the differential algebra.

struct ExponentSet {
  Poly indicial;                // in the variable s
  std::vector<long> candidates; // nonnegative integer roots of the indicial polynomial
  std::vector<long> admitted;   // minimal exponents of actual power series solutions
  int truncation_order = 0;
};

/// With L(x^s) = x^(s+nu) (ind(s) + O(x)); canonical (primitive, positive leading coefficient).
Poly indicial_at_zero(const OrePoly& l);

ExponentSet exponents(const OrePoly& l);

/// Coefficients c_0..c_terms of the solution x^alpha + ..., with the
/// coefficients at other indicial roots set to zero. nullopt when the
/// recurrence is obstructed at some index <= terms.
std::optional<std::vector<Rational>> series_solution(const OrePoly& l, long alpha, int terms);

struct ClassicalOutcome {
  ExponentSet exponents;
  std::vector<long> missing;  // {0..max admitted} minus the admitted exponents
  OrePoly aux;                // lclm of x D - e over the missing e
  OrePoly result;             // lclm(L, aux), primitive
};

struct NotDesingularizable {
  ExponentSet exponents;
};

using ClassicalResult = std::variant<ClassicalOutcome, NotDesingularizable>;

/// Removes the singularity at 0. If x does not divide lc(L) the result is L itself.
ClassicalResult classical_desingularize(const OrePoly& l);

/// Substitutes x -> x + xi in every coefficient.
OrePoly translate(const OrePoly& l, const Rational& xi);

/// classical_desingularize at the point xi (translate, desingularize, translate back).
ClassicalResult classical_desingularize_at(const OrePoly& l, const Rational& xi);

}  // namespace ore

#endif  // ORE_DIFFDESING_HPP
