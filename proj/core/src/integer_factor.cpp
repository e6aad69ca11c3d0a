#include "integer_factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ore::detail {
namespace {

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto step = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer d = abs(x - y);
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> divisors(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
  std::map<Integer, int> primes;
  Integer rest = n;
  for (unsigned long p = 2; p < 1000 && p * p <= rest; ++p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++primes[Integer(p)];
      rest /= p;
    }
  }
  factor_into(rest, primes);

  std::vector<Integer> result{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = result.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ore::detail
