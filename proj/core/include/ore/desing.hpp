#ifndef ORE_DESING_HPP
#define ORE_DESING_HPP

#include "ore/lclm.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ore {

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RetriesExhausted : public SearchExhausted {
 public:
  explicit RetriesExhausted(int tries)
      : SearchExhausted("retries exhausted after " + std::to_string(tries) + " uncertified trials") {}
};

class HeightCeilingReached : public SearchExhausted {
 public:
  explicit HeightCeilingReached(int height)
      : SearchExhausted("no certified auxiliary operator up to coefficient height " + std::to_string(height)) {}
};

enum class DesingMode { monte_carlo, las_vegas, deterministic };

/// One squarefree class of lc(L): its multiplicity there, and the multiplicity
/// of its sigma^n image in lc(M). Classes are split when only part of the
/// image survives in lc(M).
struct FactorRow {
  Poly factor;
  int before;
  int after;
};

struct DesingReport {
  Poly input_lc;
  OrePoly aux;  // the auxiliary operator A
  LclmWitness result;
  int order_increase = 0;
  /// sigma^n(lc L) / gcd(sigma^n(lc L), lc M), canonical.
  Poly removed_part{};
  std::vector<FactorRow> factor_table{};
  /// The order-1..n-1 auxiliary operators whose lclms with L fill the lower
  /// columns of the multiplier determinant.
  std::vector<OrePoly> lower_aux{};
  /// det([L], [M_1], ..., [M_{n-1}], [A], [dA], ..., [d^(r-1) A]) with
  /// M_i = lclm(L, lower_aux[i-1]), columns truncated to d^0 .. d^(n+r-1).
  Poly multiplier{};
  /// Every lclm involved has full order and the multiplier is coprime to
  /// sigma^n(lc L). Then each factor of sigma^n(lc L) occurs in lc(M) with the
  /// least multiplicity any order-n left multiple of L can have.
  bool certified = false;
  int trials_used = 0;
  std::uint64_t seed = 0;
};

struct DesingOptions {
  int order = 1;
  DesingMode mode = DesingMode::las_vegas;
  std::uint64_t seed = 0;
  int max_tries = 100;
  int height_ceiling = 50;
};

/// Monic operator of order n with integer coefficients uniform in [-99, 99].
/// Throws std::invalid_argument for n < 1.
OrePoly random_aux(int n, std::uint64_t seed, const AlgebraRef& alg);

/// Seed used by Las Vegas trial number `trial` (trial 0 uses the master seed).
std::uint64_t trial_seed(std::uint64_t master, int trial);

/// Seed of the order-i helper operator drawn alongside a trial with `seed`.
std::uint64_t lower_seed(std::uint64_t seed, int order);

/// random_aux(i, lower_seed(seed, i)) for i = 1..n-1.
std::vector<OrePoly> random_lower_aux(int n, std::uint64_t seed, const AlgebraRef& alg);

/// The multiplier determinant described at DesingReport::multiplier, in
/// canonical form. Zero when the columns are dependent.
Poly certificate_multiplier(const OrePoly& l, const std::vector<OrePoly>& lower_lclms, const OrePoly& aux);

/// Accounting for lclm(L, A) as a desingularization of L. lower_aux must hold
/// one operator of each order 1..n-1, n = order(aux).
DesingReport assess(const OrePoly& l, const OrePoly& aux, const std::vector<OrePoly>& lower_aux);

DesingReport desingularize_mc(const OrePoly& l, int n, std::uint64_t seed);
/// Throws RetriesExhausted after max_tries uncertified attempts.
DesingReport desingularize_lv(const OrePoly& l, int n, std::uint64_t seed, int max_tries);
/// Monic integer operators enumerated by height max|a_i|, lexicographically
/// inside a height shell; candidate number t (from 0) is assessed with
/// random_lower_aux(n, t). Throws HeightCeilingReached past height_ceiling.
DesingReport desingularize_det(const OrePoly& l, int n, int height_ceiling = 50);

DesingReport report(const OrePoly& l, const DesingOptions& opts);

struct Removability {
  int k;           // copies of p removed at order n
  bool certified;  // false if the Las Vegas loop gave up and a Monte Carlo run was used
  DesingReport report;
};

/// mult(p, lc L) - mult(sigma^n(p), lc M) for the operator M of the report.
int removed_multiplicity(const DesingReport& rep, const Poly& p);

/// k = mult(p, lc L) - mult(sigma^n(p), lc M). Throws std::invalid_argument
/// if p is constant or does not divide lc(L).
Removability is_removable(const OrePoly& l, const Poly& p, int n, std::uint64_t seed, int max_tries = 100);

}  // namespace ore

#endif  // ORE_DESING_HPP
