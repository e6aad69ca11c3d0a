#include "ore/desing.hpp"

#include <random>

namespace ore {

OrePoly random_aux(int n, std::uint64_t seed, const AlgebraRef& alg) {
  if (n < 1) throw std::invalid_argument("random_aux: order must be at least 1");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> coeff(-99, 99);
  std::vector<RatFunc> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) c.emplace_back(static_cast<long>(coeff(gen)));
  c.emplace_back(1);
  return OrePoly(alg, std::move(c));
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  if (trial == 0) return master;
  return splitmix64(master + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial));
}

std::uint64_t lower_seed(std::uint64_t seed, int order) {
  return splitmix64((seed ^ 0xD6E8FEB86659FD93ULL) + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(order));
}

std::vector<OrePoly> random_lower_aux(int n, std::uint64_t seed, const AlgebraRef& alg) {
  std::vector<OrePoly> out;
  for (int i = 1; i < n; ++i) out.push_back(random_aux(i, lower_seed(seed, i), alg));
  return out;
}

Poly certificate_multiplier(const OrePoly& l, const std::vector<OrePoly>& lower_lclms, const OrePoly& aux) {
  const int r = l.order(), n = aux.order();
  if (static_cast<int>(lower_lclms.size()) != n - 1)
    throw std::invalid_argument("certificate_multiplier: need one lclm for each order 1..n-1");
  const auto dim = static_cast<std::size_t>(r + n);
  std::vector<OrePoly> cols{l};
  cols.insert(cols.end(), lower_lclms.begin(), lower_lclms.end());
  OrePoly shifted = aux;
  for (int j = 0; j < r; ++j) {
    cols.push_back(shifted);
    shifted = left_mul_generator(shifted);
  }
  PolyMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const auto coeffs = cols[c].poly_coeffs();
    if (coeffs.size() > dim) throw std::invalid_argument("certificate_multiplier: column of too high order");
    for (std::size_t k = 0; k < coeffs.size(); ++k) m.at(k, c) = coeffs[k];
  }
  return canonical(determinant(m));
}

namespace {

// Splits a squarefree F by the exact multiplicity of its parts in q.
std::vector<std::pair<Poly, int>> split_by_multiplicity(const Poly& f, const Poly& q) {
  std::vector<std::pair<Poly, int>> parts;
  Poly h = poly_gcd(f, q);
  const Poly none = exact_div(f, h);
  if (!none.is_constant()) parts.emplace_back(canonical(none), 0);
  Poly rest = q;
  for (int j = 1; !h.is_constant(); ++j) {
    rest = exact_div(rest, h);
    Poly next = poly_gcd(h, rest);
    const Poly exact = exact_div(h, next);
    if (!exact.is_constant()) parts.emplace_back(canonical(exact), j);
    h = std::move(next);
  }
  return parts;
}

std::vector<FactorRow> factor_table(const OreAlgebra& alg, const Poly& input_lc, const Poly& result_lc,
                                    int shift) {
  std::vector<FactorRow> rows;
  for (const auto& [f, e] : squarefree_decomposition(input_lc)) {
    const Poly image = canonical(alg.sigma(f, shift));
    const auto parts = split_by_multiplicity(image, result_lc);
    if (parts.size() == 1) {
      rows.push_back({f, e, parts.front().second});
      continue;
    }
    std::vector<FactorRow> split;
    for (const auto& [part, j] : parts) {
      auto pre = alg.sigma_preimage(part, shift);
      if (!pre) break;
      split.push_back({canonical(*pre), e, j});
    }
    if (split.size() == parts.size()) {
      rows.insert(rows.end(), split.begin(), split.end());
    } else {
      rows.push_back({f, e, multiplicity(image, result_lc)});
    }
  }
  return rows;
}

}  // namespace

DesingReport assess(const OrePoly& l, const OrePoly& aux, const std::vector<OrePoly>& lower_aux) {
  const OrePoly base = primitive(l);
  const int n = aux.order();
  if (n < 1 || static_cast<int>(lower_aux.size()) != n - 1)
    throw std::invalid_argument("assess: need one lower auxiliary operator for each order 1..n-1");
  DesingReport rep{.input_lc = base.poly_lc(), .aux = aux, .result = lclm_ansatz(base, primitive(aux))};
  rep.lower_aux = lower_aux;
  const OreAlgebra& alg = *base.algebra();
  const Poly& m_lc = rep.result.m.poly_lc();
  rep.order_increase = rep.result.m.order() - base.order();
  const Poly shifted = alg.sigma(rep.input_lc, rep.order_increase);
  rep.removed_part = canonical(exact_div(shifted, poly_gcd(shifted, m_lc)));
  rep.factor_table = factor_table(alg, rep.input_lc, m_lc, rep.order_increase);

  bool full_order = rep.order_increase == n;
  std::vector<OrePoly> lower_lclms;
  for (std::size_t i = 0; i < lower_aux.size(); ++i) {
    if (lower_aux[i].order() != static_cast<int>(i) + 1)
      throw std::invalid_argument("assess: lower auxiliary operator of the wrong order");
    lower_lclms.push_back(lclm_ansatz(base, primitive(lower_aux[i])).m);
    full_order = full_order && lower_lclms.back().order() == base.order() + static_cast<int>(i) + 1;
  }
  if (full_order) {
    rep.multiplier = certificate_multiplier(base, lower_lclms, primitive(aux));
    rep.certified = poly_gcd(rep.multiplier, alg.sigma(rep.input_lc, n)).is_constant();
  }
  rep.trials_used = 1;
  return rep;
}

DesingReport desingularize_mc(const OrePoly& l, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("desingularize_mc: order must be at least 1");
  DesingReport rep = assess(l, random_aux(n, seed, l.algebra()), random_lower_aux(n, seed, l.algebra()));
  rep.seed = seed;
  return rep;
}

DesingReport desingularize_lv(const OrePoly& l, int n, std::uint64_t seed, int max_tries) {
  if (max_tries < 1) throw std::invalid_argument("desingularize_lv: max_tries must be at least 1");
  for (int t = 0; t < max_tries; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    DesingReport rep = assess(l, random_aux(n, s, l.algebra()), random_lower_aux(n, s, l.algebra()));
    if (rep.certified) {
      rep.seed = seed;
      rep.trials_used = t + 1;
      return rep;
    }
  }
  throw RetriesExhausted(max_tries);
}

DesingReport desingularize_det(const OrePoly& l, int n, int height_ceiling) {
  if (n < 1) throw std::invalid_argument("desingularize_det: order must be at least 1");
  const AlgebraRef& alg = l.algebra();
  int tried = 0;
  for (int h = 0; h <= height_ceiling; ++h) {
    std::vector<long> a(static_cast<std::size_t>(n), -h);
    while (true) {
      bool on_shell = false;
      for (long v : a) on_shell = on_shell || v == h || v == -h;
      if (on_shell) {
        std::vector<RatFunc> c(a.begin(), a.end());
        c.emplace_back(1);
        DesingReport rep = assess(l, OrePoly(alg, std::move(c)), random_lower_aux(n, static_cast<std::uint64_t>(tried), alg));
        ++tried;
        if (rep.certified) {
          rep.trials_used = tried;
          return rep;
        }
      }
      // Lexicographic successor in [-h, h]^n, last coordinate fastest.
      std::size_t i = a.size();
      while (i > 0 && a[i - 1] == h) a[--i] = -h;
      if (i == 0) break;
      ++a[i - 1];
    }
  }
  throw HeightCeilingReached(height_ceiling);
}

DesingReport report(const OrePoly& l, const DesingOptions& opts) {
  switch (opts.mode) {
    case DesingMode::monte_carlo:
      return desingularize_mc(l, opts.order, opts.seed);
    case DesingMode::las_vegas:
      return desingularize_lv(l, opts.order, opts.seed, opts.max_tries);
    case DesingMode::deterministic:
      return desingularize_det(l, opts.order, opts.height_ceiling);
  }
  throw std::invalid_argument("unknown desingularization mode");
}

int removed_multiplicity(const DesingReport& rep, const Poly& p) {
  const Poly image = rep.result.m.algebra()->sigma(p, rep.order_increase);
  return multiplicity(p, rep.input_lc) - multiplicity(image, rep.result.m.poly_lc());
}

Removability is_removable(const OrePoly& l, const Poly& p, int n, std::uint64_t seed, int max_tries) {
  if (p.is_constant()) throw std::invalid_argument("is_removable: factor must be nonconstant");
  const OrePoly base = primitive(l);
  const Poly& lc = base.poly_lc();
  if (!divides(p, lc))
    throw std::invalid_argument("is_removable: " + to_string(p) + " does not divide lc(L) = " + to_string(lc));
  bool certified = true;
  DesingReport rep = [&] {
    try {
      return desingularize_lv(base, n, seed, max_tries);
    } catch (const RetriesExhausted&) {
      certified = false;
      return desingularize_mc(base, n, seed);
    }
  }();
  const int k = removed_multiplicity(rep, p);
  return {k, certified, std::move(rep)};
}

}  // namespace ore
