#include "ore/algebra.hpp"

namespace ore {

OreAlgebra::OreAlgebra(Poly sigma_image, Poly delta_image, std::string generator)
    : sigma_(std::move(sigma_image)), delta_(std::move(delta_image)), generator_(std::move(generator)) {
  if (sigma_.is_constant())
    throw std::invalid_argument("sigma(x) must be nonconstant, got " + to_string(sigma_));
  if (generator_.empty()) throw std::invalid_argument("empty generator symbol");
  sigma_identity_ = sigma_ == Poly::x();
  sigma_is_power_ = sigma_ == Poly::monomial(1, sigma_.degree());
  if (sigma_.degree() == 1) {
    // sigma(x) = a x + b  =>  sigma^-1(x) = (x - b) / a
    const Rational a = sigma_.coeff(1), b = sigma_.coeff(0);
    sigma_inv_ = (Poly::x() - Poly(b)) * (1 / a);
  }
}

std::shared_ptr<const OreAlgebra> OreAlgebra::differential(std::string generator) {
  return std::make_shared<const OreAlgebra>(Poly::x(), Poly(1), std::move(generator));
}

std::shared_ptr<const OreAlgebra> OreAlgebra::shift(std::string generator) {
  return std::make_shared<const OreAlgebra>(Poly::x() + Poly(1), Poly(), std::move(generator));
}

std::shared_ptr<const OreAlgebra> OreAlgebra::custom(Poly sigma_image, Poly delta_image,
                                                     std::string generator) {
  return std::make_shared<const OreAlgebra>(std::move(sigma_image), std::move(delta_image),
                                            std::move(generator));
}

bool OreAlgebra::same_as(const OreAlgebra& other) const {
  return this == &other || (sigma_ == other.sigma_ && delta_ == other.delta_);
}

namespace {

Poly spread(const Poly& q, int stride) {
  std::vector<Rational> out(static_cast<std::size_t>(q.degree() * stride) + 1);
  for (int k = 0; k <= q.degree(); ++k) out[static_cast<std::size_t>(k * stride)] = q.coeff(k);
  return Poly(std::move(out));
}

}  // namespace

Poly OreAlgebra::sigma(const Poly& q, int power) const {
  if (power == 0 || sigma_identity_ || q.is_constant()) return q;
  if (power < 0) {
    if (!sigma_inv_) throw SigmaNotInvertible();
    Poly out = q;
    for (int i = 0; i < -power; ++i) out = out.compose(*sigma_inv_);
    return out;
  }
  Poly out = q;
  for (int i = 0; i < power; ++i) out = sigma_is_power_ ? spread(out, sigma_.degree()) : out.compose(sigma_);
  return out;
}

RatFunc OreAlgebra::sigma(const RatFunc& q, int power) const {
  if (power == 0 || sigma_identity_) return q;
  if (q.is_poly()) return RatFunc(sigma(q.num(), power));
  return RatFunc(sigma(q.num(), power), sigma(q.den(), power));
}

std::optional<Poly> OreAlgebra::sigma_preimage(const Poly& q, int power) const {
  if (power < 0) throw std::invalid_argument("sigma_preimage: negative power");
  if (power == 0 || sigma_identity_ || q.is_constant()) return q;
  const int ds = sigma_.degree();
  Poly cur = q;
  for (int step = 0; step < power; ++step) {
    // Peel off the top term against sigma(x)^k; images of distinct monomials have distinct degrees.
    std::vector<Poly> powers{Poly(1)};
    Poly h = cur, pre;
    while (!h.is_zero()) {
      const int d = h.degree();
      if (d % ds != 0) return std::nullopt;
      const int k = d / ds;
      while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * sigma_);
      const Rational c = h.lc() / powers[static_cast<std::size_t>(k)].lc();
      pre += Poly::monomial(c, k);
      h -= powers[static_cast<std::size_t>(k)] * c;
    }
    cur = std::move(pre);
  }
  return cur;
}

const Poly& OreAlgebra::delta_of_monomial(int k) const {
  std::lock_guard lock(cache_mutex_);
  if (delta_cache_.empty()) {
    delta_cache_.push_back(std::make_shared<const Poly>());
    delta_cache_.push_back(std::make_shared<const Poly>(delta_));
  }
  // delta(x^k) = delta(x) x^(k-1) + sigma(x) delta(x^(k-1))
  while (static_cast<int>(delta_cache_.size()) <= k) {
    const int j = static_cast<int>(delta_cache_.size());
    Poly next = delta_ * Poly::monomial(1, j - 1) + sigma_ * *delta_cache_.back();
    delta_cache_.push_back(std::make_shared<const Poly>(std::move(next)));
  }
  return *delta_cache_[static_cast<std::size_t>(k)];
}

Poly OreAlgebra::delta(const Poly& q) const {
  if (delta_.is_zero() || q.is_constant()) return {};
  if (is_differential()) return q.derivative();
  delta_of_monomial(q.degree());
  Poly out;
  for (int k = 1; k <= q.degree(); ++k) {
    const Rational c = q.coeff(k);
    if (c != 0) out += delta_of_monomial(k) * c;
  }
  return out;
}

RatFunc OreAlgebra::delta(const RatFunc& q) const {
  if (delta_.is_zero()) return {};
  if (q.is_poly()) return RatFunc(delta(q.num()));
  // From delta(b * (a/b)) = delta(a):  delta(a/b) = (b delta(a) - a delta(b)) / (b sigma(b))
  const Poly& a = q.num();
  const Poly& b = q.den();
  return RatFunc(b * delta(a) - a * delta(b), b * sigma(b));
}

Poly sigma_apply(const OreAlgebra& alg, const Poly& q, int power) { return alg.sigma(q, power); }

Poly delta_apply(const OreAlgebra& alg, const Poly& q) { return alg.delta(q); }

}  // namespace ore
