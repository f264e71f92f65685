#include "bitensor/linalg.hpp"

#include "bitensor/errors.hpp"

namespace bitensor {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector out;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (dense[j] != 0) out.emplace_back(j, dense[j]);
  return out;
}

namespace {

// a - c * b
SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -c * ib->second);
      ++ib;
    } else {
      Rational v = ia->second - c * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

SparseVector RowEchelon::reduce(SparseVector row) const {
  // Entries left of the leading column are already zero, so scanning the
  // leading entry repeatedly terminates.
  std::size_t from = 0;
  while (from < row.size()) {
    auto it = pivots_.find(row[from].first);
    if (it == pivots_.end()) {
      ++from;
      continue;
    }
    Rational c = row[from].second;
    row = axpy(row, c, it->second);
  }
  return row;
}

bool RowEchelon::insert(SparseVector row) {
  for (const auto& [j, v] : row)
    if (j >= cols_) throw IndexOutOfRange("row entry beyond column count");
  // Only the leading entry has to avoid existing pivots for echelon form.
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Rational c = row.front().second;
    row = axpy(row, c, it->second);
  }
  if (row.empty()) return false;
  Rational lead = row.front().second;
  for (auto& [j, v] : row) v /= lead;
  pivots_.emplace(row.front().first, std::move(row));
  return true;
}

bool RowEchelon::spans(SparseVector row) const { return reduce(std::move(row)).empty(); }

std::vector<std::vector<Rational>> RowEchelon::kernel_basis() const {
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Rational> x(cols_);
    x[f] = 1;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rational s = 0;
      for (const auto& [j, v] : it->second)
        if (j != it->first && x[j] != 0) s += v * x[j];
      x[it->first] = -s;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.kernel_basis();
}

std::size_t rank(const Matrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.rank();
}

bool annihilates(const Matrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw InvalidArgument("vector length differs from column count");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0) s += m(i, j) * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace bitensor
