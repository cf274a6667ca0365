#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idforge/error.hpp"
#include "idforge/parallel.hpp"

namespace idforge {

// Dense row-major matrix over a scalar field.
template <class F>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::vector<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<F> apply(const std::vector<F>& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
    std::vector<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

/// Exact Gauss-Jordan elimination on [A | v]. Pivot: for each column in
/// order, the first row (top-down, among unused rows) with a nonzero entry.
/// Free variables are set to zero. Returns nullopt when inconsistent.
/// The row updates below a pivot are independent and run in parallel
/// unless `exec` is serial; both paths perform the same field operations.
template <class F>
std::optional<std::vector<F>> solve_linear(ExactMatrix<F> a, std::vector<F> v,
                                           Exec exec = Exec::parallel) {
  const std::size_t m = a.rows(), n = a.cols();
  if (v.size() != m)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix has " + std::to_string(m) + " rows, vector has " + std::to_string(v.size()));

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a(piv, col).is_zero()) ++piv;
    if (piv == m) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(row, c));
      std::swap(v[piv], v[row]);
    }
    const F inv = a(row, col).inv();
    for (std::size_t c = col; c < n; ++c) a(row, c) *= inv;
    v[row] *= inv;

    for_each_index(
        m,
        [&](std::size_t r) {
          if (r == row || a(r, col).is_zero()) return;
          const F factor = a(r, col);
          for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(row, c);
          v[r] -= factor * v[row];
        },
        exec, 16);
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (!v[r].is_zero()) return std::nullopt;

  std::vector<F> x(n);
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) x[pivot_col_of_row[r]] = v[r];
  return x;
}

}  // namespace idforge
