#include "ore/poly_matrix.hpp"

#include <optional>
#include <stdexcept>

namespace ore {

std::vector<std::vector<Poly>> nullspace(const PolyMatrix& input) {
  PolyMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;  // pivot_col[k] = column of the k-th pivot row
  std::vector<bool> is_pivot(cols, false);
  Poly prev(1);
  std::size_t next_row = 0;

  for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
    // Lowest-degree nonzero entry among the unused rows keeps intermediate minors small.
    std::optional<std::size_t> best;
    for (std::size_t i = next_row; i < rows; ++i) {
      if (a.at(i, c).is_zero()) continue;
      if (!best || a.at(i, c).degree() < a.at(*best, c).degree()) best = i;
    }
    if (!best) continue;
    if (*best != next_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(*best, j), a.at(next_row, j));

    const std::size_t r = next_row;
    const Poly piv = a.at(r, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Poly factor = a.at(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        Poly v = piv * a.at(i, j);
        if (!factor.is_zero() && !a.at(r, j).is_zero()) v -= factor * a.at(r, j);
        // Every entry is a minor of the input, so the division is exact.
        a.at(i, j) = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      a.at(i, c) = Poly();
    }
    prev = piv;
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++next_row;
  }

  std::vector<std::vector<Poly>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Poly> v(cols);
    v[f] = prev;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a.at(k, f);
    ContentSplit split = content_primitive(v);
    basis.push_back(std::move(split.primitive));
  }
  return basis;
}

Poly determinant(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix is not square");
  PolyMatrix a = input;
  const std::size_t n = a.rows();
  Poly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k).is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      a.at(i, k) = Poly();
    }
    prev = a.at(k, k);
  }
  return negate ? -a.at(n - 1, n - 1) : a.at(n - 1, n - 1);
}

}  // namespace ore
