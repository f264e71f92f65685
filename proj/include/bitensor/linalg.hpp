#ifndef BITENSOR_LINALG_HPP
#define BITENSOR_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "bitensor/rational.hpp"

namespace bitensor {

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  std::vector<Rational> row(std::size_t i) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Sorted by column, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const std::vector<Rational>& dense);

/// Incrementally built row-echelon form. Each stored row has a leading 1 in
/// its pivot column; rows are reduced against existing pivots on insertion.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row was independent of the rows seen so far.
  bool insert(SparseVector row);
  bool insert(const std::vector<Rational>& row) { return insert(to_sparse(row)); }

  /// True when the row lies in the current row space.
  bool spans(SparseVector row) const;

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  /// Basis of the right null space. One vector per free column f, ascending,
  /// with a 1 at f and 0 at every other free column (the reduced row-echelon
  /// convention).
  std::vector<std::vector<Rational>> kernel_basis() const;

 private:
  SparseVector reduce(SparseVector row) const;

  std::size_t cols_;
  std::map<std::size_t, SparseVector> pivots_;
};

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Exact zero test for m * v.
bool annihilates(const Matrix& m, const std::vector<Rational>& v);

}  // namespace bitensor

#endif  // BITENSOR_LINALG_HPP
