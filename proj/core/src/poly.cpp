#include "ore/poly.hpp"

#include "integer_factor.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ore {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  Integer n(num.front() == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Poly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(exponent)];
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return kMinusInfinity;
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= rhs;
  return *this;
}

namespace {

bool all_integral(std::span<const Rational> c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.get_den() == 1; });
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  std::vector<Rational> out(n);
  if (all_integral(a.c_) && all_integral(b.c_)) {
    // mpq arithmetic canonicalizes after every step; stay in Z instead.
    std::vector<Integer> acc(n, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      const Integer& ai = a.c_[i].get_num();
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), b.c_[j].get_num_mpz_t());
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = Rational(acc[k]);
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(out));
}

Poly operator-(Poly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

// ---------------------------------------------------------------- division

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  const int db = b.degree();
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lc = 1 / b.lc();
  const auto bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] * inv_lc;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: " + to_string(b) + " does not divide " + to_string(a));
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).rem.is_zero();
}

// ---------------------------------------------------------------- content

Poly monic(const Poly& p) {
  if (p.is_zero() || p.lc() == 1) return p;
  return p * (1 / p.lc());
}

Rational rational_content(const Poly& p) {
  if (p.is_zero()) return 0;
  Integer g = 0, l = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational q(g, l);
  q.canonicalize();
  return q;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / rational_content(p));
}

Poly canonical(const Poly& p) {
  Poly q = primitive_part(p);
  if (!q.is_zero() && q.lc() < 0) q = -q;
  return q;
}

// ---------------------------------------------------------------- gcd

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_int_primitive(const Poly& p) {
  const Poly q = primitive_part(p);
  IntPoly out;
  out.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

// Primitive pseudo-remainder of a by b over Z.
IntPoly prem_primitive(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  IntPoly u = to_int_primitive(a);
  IntPoly v = to_int_primitive(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return Poly(1);
    IntPoly r = prem_primitive(std::move(u), v);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(u.size());
  for (auto& c : u) coeffs.emplace_back(c);
  return monic(Poly(std::move(coeffs)));
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return monic(exact_div(a, poly_gcd(a, b)) * b);
}

Bezout poly_xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_xgcd: both arguments are zero");
  Poly r0 = a, r1 = b;
  Poly s0 = 1, s1;
  Poly t0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Rational inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

ContentSplit content_primitive(std::span<const Poly> entries) {
  Poly g;
  for (const auto& e : entries) {
    g = poly_gcd(g, e);
    if (g.is_one()) break;
  }
  if (g.is_zero()) throw std::invalid_argument("content_primitive: all entries are zero");
  std::vector<Poly> prim;
  prim.reserve(entries.size());
  for (const auto& e : entries) prim.push_back(g.is_one() ? e : exact_div(e, g));
  Integer num = 0, den = 1;
  for (const auto& p : prim)
    for (const auto& c : p.coeffs()) {
      if (c == 0) continue;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  Rational scale(num, den);
  scale.canonicalize();
  if (scale != 1) {
    const Rational inv = 1 / scale;
    for (auto& p : prim) p *= inv;
  }
  return {g * scale, std::move(prim)};
}

// ---------------------------------------------------------------- factoring

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (q.is_constant()) return out;
  Poly c = poly_gcd(q, q.derivative());
  Poly w = exact_div(q, c);
  int i = 1;
  while (!w.is_constant()) {
    Poly y = poly_gcd(w, c);
    Poly z = exact_div(w, y);
    if (!z.is_constant()) out.push_back({canonical(z), i});
    ++i;
    w = std::move(y);
    c = exact_div(c, w);
  }
  return out;
}

int multiplicity(const Poly& p, const Poly& q) {
  if (p.is_constant()) throw std::invalid_argument("multiplicity: constant factor " + to_string(p));
  if (q.is_zero()) throw std::invalid_argument("multiplicity: zero polynomial");
  int k = 0;
  Poly rest = q;
  while (rest.degree() >= p.degree()) {
    auto [quot, rem] = divmod(rest, p);
    if (!rem.is_zero()) break;
    rest = std::move(quot);
    ++k;
  }
  return k;
}

std::vector<Rational> rational_roots(const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::set<Rational> roots;
  const Poly p = primitive_part(q);
  const int v = p.valuation();
  if (v > 0) roots.insert(Rational(0));
  std::vector<Rational> shifted(p.coeffs().begin() + v, p.coeffs().end());
  const Poly r(std::move(shifted));
  if (r.degree() >= 1) {
    const Integer trailing = abs(r.coeff(0).get_num());
    const Integer leading = abs(r.lc().get_num());
    const auto ps = detail::divisors(trailing);
    const auto qs = detail::divisors(leading);
    for (const auto& num : ps)
      for (const auto& den : qs) {
        Rational cand(num, den);
        cand.canonicalize();
        if (cand.get_den() != den) continue;  // duplicate of a reduced candidate
        for (const Rational& c : {cand, Rational(-cand)})
          if (r(c) == 0) roots.insert(c);
      }
  }
  return {roots.begin(), roots.end()};
}

// ---------------------------------------------------------------- printing

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace ore
