#ifndef ORE_POLY_MATRIX_HPP
#define ORE_POLY_MATRIX_HPP

#include "ore/poly.hpp"

#include <cstddef>
#include <vector>

namespace ore {

/// Row-major rectangular matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

/// Basis of the right nullspace over Q(x), one content-primitive polynomial
/// vector per free column (fraction-free Gauss-Jordan elimination). The pivot
/// columns are chosen left to right, so the basis is deterministic.
std::vector<std::vector<Poly>> nullspace(const PolyMatrix& m);

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
Poly determinant(const PolyMatrix& m);

}  // namespace ore

#endif  // ORE_POLY_MATRIX_HPP
