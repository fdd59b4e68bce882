#include "gptr/matrix.hpp"

#include <utility>

#include "gptr/errors.hpp"

namespace gptr {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, rows.empty() ? cols : rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DimensionError("append_row: expected " + std::to_string(cols_) + " columns");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
  return out;
}

Vector Matrix::left_multiply(std::span<const Rational> y) const {
  if (y.size() != rows_) throw DimensionError("vector-matrix product: length mismatch");
  Vector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (y[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += y[r] * (*this)(r, c);
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Scale each row to integers.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rk][c] * a[r][k] - a[r][c] * a[rk][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

namespace {

// Reduced row echelon form of [m | rhs]; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
    }
    Rational inv = 1 / a(r, c);
    for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSolveResult solve_linear(const Matrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("solve_linear: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto pivots = rref(aug, m.cols());
  LinearSolveResult out;
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, m.cols()) != 0) return out;
  }
  out.consistent = true;
  out.solution.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = aug(i, m.cols());
  out.underdetermined = pivots.size() < m.cols();
  return out;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix a = m;
  auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors) {
  std::vector<std::size_t> chosen;
  Matrix acc;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Matrix trial = acc;
    trial.append_row(vectors[i]);
    if (rank(trial) > chosen.size()) {
      acc = std::move(trial);
      chosen.push_back(i);
    }
  }
  return chosen;
}

}  // namespace gptr
