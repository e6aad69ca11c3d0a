#include "ore/ore_poly.hpp"

namespace ore {

OrePoly::OrePoly(AlgebraRef alg, std::vector<RatFunc> coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
  if (!alg_) throw std::invalid_argument("OrePoly: null algebra");
  trim();
}

OrePoly OrePoly::from_polys(AlgebraRef alg, std::span<const Poly> coeffs) {
  std::vector<RatFunc> c(coeffs.begin(), coeffs.end());
  return OrePoly(std::move(alg), std::move(c));
}

OrePoly OrePoly::generator(AlgebraRef alg, int power) {
  if (power < 0) throw std::invalid_argument("OrePoly::generator: negative power");
  std::vector<RatFunc> c(static_cast<std::size_t>(power) + 1);
  c.back() = RatFunc(1);
  return OrePoly(std::move(alg), std::move(c));
}

OrePoly OrePoly::scalar(AlgebraRef alg, RatFunc c) { return OrePoly(std::move(alg), {std::move(c)}); }

void OrePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void OrePoly::check_same(const OrePoly& other) const {
  if (!alg_->same_as(*other.alg_)) throw AlgebraMismatch();
}

const RatFunc& OrePoly::coeff(int k) const {
  static const RatFunc zero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(k)];
}

bool OrePoly::has_poly_coeffs() const {
  for (const auto& c : c_)
    if (!c.is_poly()) return false;
  return true;
}

std::vector<Poly> OrePoly::poly_coeffs() const {
  std::vector<Poly> out;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    if (!c.is_poly()) throw std::domain_error("operator has non-polynomial coefficient " + to_string(c));
    out.push_back(c.num());
  }
  return out;
}

const Poly& OrePoly::poly_lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero operator");
  if (!c_.back().is_poly()) throw std::domain_error("leading coefficient is not a polynomial");
  return c_.back().num();
}

OrePoly& OrePoly::operator+=(const OrePoly& rhs) {
  check_same(rhs);
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& rhs) {
  check_same(rhs);
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

OrePoly operator-(OrePoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

OrePoly operator*(const RatFunc& c, OrePoly a) {
  if (c.is_zero()) return OrePoly(a.alg_);
  for (auto& x : a.c_) x = c * x;
  return a;
}

bool operator==(const OrePoly& a, const OrePoly& b) { return a.alg_->same_as(*b.alg_) && a.c_ == b.c_; }

OrePoly left_mul_generator(const OrePoly& u) {
  const OreAlgebra& alg = *u.algebra();
  if (u.is_zero()) return u;
  std::vector<RatFunc> out(u.coeffs().size() + 1);
  for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
    const RatFunc& c = u.coeffs()[j];
    if (c.is_zero()) continue;
    // d c d^j = sigma(c) d^(j+1) + delta(c) d^j
    out[j + 1] += alg.sigma(c);
    if (!alg.delta_is_zero()) out[j] += alg.delta(c);
  }
  return OrePoly(u.algebra(), std::move(out));
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
  a.check_same(b);
  OrePoly result(a.alg_);
  if (a.is_zero() || b.is_zero()) return result;
  OrePoly power = b;  // d^i * b
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (i > 0) power = left_mul_generator(power);
    if (!a.c_[i].is_zero()) result += a.c_[i] * power;
  }
  return result;
}

OrePoly ore_mul(const OrePoly& u, const OrePoly& v) { return u * v; }

OrePoly ore_add(const OrePoly& u, const OrePoly& v) { return u + v; }

OrePoly ore_scale(const RatFunc& c, const OrePoly& u) { return c * u; }

Normalized normalize(const OrePoly& u) {
  if (u.is_zero()) throw std::invalid_argument("normalize: zero operator");
  Poly cleared(1);
  for (const auto& c : u.coeffs())
    if (!c.is_poly()) cleared = poly_lcm(cleared, c.den());
  std::vector<Poly> polys;
  polys.reserve(u.coeffs().size());
  for (const auto& c : u.coeffs())
    polys.push_back(c.is_poly() ? c.num() * cleared : c.num() * exact_div(cleared, c.den()));
  ContentSplit split = content_primitive(polys);
  if (split.primitive.back().lc() < 0) {
    for (auto& p : split.primitive) p = -p;
    split.content = -split.content;
  }
  return {OrePoly::from_polys(u.algebra(), split.primitive), std::move(cleared), std::move(split.content)};
}

OrePoly primitive(const OrePoly& u) { return normalize(u).primitive; }

OreDivision right_divide(const OrePoly& u, const OrePoly& v) {
  if (v.is_zero()) throw std::domain_error("right division by the zero operator");
  const AlgebraRef& alg = u.algebra();
  if (!alg->same_as(*v.algebra())) throw AlgebraMismatch();
  OrePoly rem = u;
  if (u.order() < v.order()) return {OrePoly(alg), rem};
  const int span = u.order() - v.order();
  std::vector<OrePoly> shifted{v};  // d^k * v
  for (int k = 1; k <= span; ++k) shifted.push_back(left_mul_generator(shifted.back()));
  std::vector<RatFunc> quot(static_cast<std::size_t>(span) + 1);
  while (!rem.is_zero() && rem.order() >= v.order()) {
    const int d = rem.order() - v.order();
    const OrePoly& sv = shifted[static_cast<std::size_t>(d)];
    const RatFunc t = rem.lc() / sv.lc();
    quot[static_cast<std::size_t>(d)] += t;
    rem -= t * sv;
  }
  return {OrePoly(alg, std::move(quot)), std::move(rem)};
}

OrePoly gcrd(const OrePoly& u, const OrePoly& v) {
  if (u.is_zero() && v.is_zero()) throw std::invalid_argument("gcrd: both operators are zero");
  if (u.is_zero()) return primitive(v);
  if (v.is_zero()) return primitive(u);
  OrePoly a = primitive(u), b = primitive(v);
  if (a.order() < b.order()) std::swap(a, b);
  while (!b.is_zero()) {
    OrePoly r = right_divide(a, b).rem;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : primitive(r);
  }
  return a;
}

}  // namespace ore
