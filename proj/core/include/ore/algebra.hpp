#ifndef ORE_ALGEBRA_HPP
#define ORE_ALGEBRA_HPP

#include "ore/poly.hpp"
#include "ore/ratfunc.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ore {

class SigmaNotInvertible : public std::domain_error {
 public:
  SigmaNotInvertible() : std::domain_error("sigma not invertible") {}
};

/// An Ore algebra Q[x][d] given by the images sigma(x) and delta(x), with
/// d*u = sigma(u)*d + delta(u). sigma only has to be injective (nonconstant
/// image); operations that need sigma^-1 require deg sigma(x) = 1.
class OreAlgebra {
 public:
  /// Throws std::invalid_argument for a constant sigma image.
  OreAlgebra(Poly sigma_image, Poly delta_image, std::string generator);

  static std::shared_ptr<const OreAlgebra> differential(std::string generator = "D");
  static std::shared_ptr<const OreAlgebra> shift(std::string generator = "S");
  static std::shared_ptr<const OreAlgebra> custom(Poly sigma_image, Poly delta_image,
                                                  std::string generator = "P");

  const Poly& sigma_image() const { return sigma_; }
  const Poly& delta_image() const { return delta_; }
  const std::string& generator() const { return generator_; }
  const std::optional<Poly>& sigma_inverse_image() const { return sigma_inv_; }

  bool sigma_is_identity() const { return sigma_identity_; }
  bool delta_is_zero() const { return delta_.is_zero(); }
  bool is_differential() const { return sigma_identity_ && delta_.is_one(); }
  bool sigma_invertible() const { return sigma_inv_.has_value(); }

  /// Same sigma and delta; the generator symbol is presentation only.
  bool same_as(const OreAlgebra& other) const;

  /// sigma^power(q). Negative powers throw SigmaNotInvertible unless deg sigma(x) = 1.
  Poly sigma(const Poly& q, int power = 1) const;
  RatFunc sigma(const RatFunc& q, int power = 1) const;
  /// The unique r with sigma^power(r) = q, if any (power >= 0).
  std::optional<Poly> sigma_preimage(const Poly& q, int power = 1) const;

  Poly delta(const Poly& q) const;
  RatFunc delta(const RatFunc& q) const;

 private:
  const Poly& delta_of_monomial(int k) const;

  Poly sigma_;
  Poly delta_;
  std::string generator_;
  std::optional<Poly> sigma_inv_;
  bool sigma_identity_;
  bool sigma_is_power_;  // sigma(x) = x^k

  // delta(x^k) for k < size(); grown on demand, entries never change once written.
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::shared_ptr<const Poly>> delta_cache_;
};

using AlgebraRef = std::shared_ptr<const OreAlgebra>;

Poly sigma_apply(const OreAlgebra& alg, const Poly& q, int power);
Poly delta_apply(const OreAlgebra& alg, const Poly& q);

}  // namespace ore

#endif  // ORE_ALGEBRA_HPP
