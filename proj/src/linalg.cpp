#include "nonassoc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nonassoc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Rational> row) {
  if (row.size() != cols_)
    throw DimensionMismatch("row of length " + std::to_string(row.size()) + " appended to matrix with " +
                            std::to_string(cols_) + " columns");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Vector Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) acc += (*this)(r, c) * v[c];
    out[r] = std::move(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        if (!other(k, c).is_zero()) out(r, c) += a * other(k, c);
    }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RowEchelonBasis rref(const Matrix& m) {
  Matrix a = m;
  RowEchelonBasis out;
  out.width = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(lead, c));
    Rational inv = a(lead, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c).sub_mul(f, a(lead, c));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  for (std::size_t r = 0; r < lead; ++r) out.rows.emplace_back(a.row(r).begin(), a.row(r).end());
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

namespace {

// Kernel vectors read off a reduced basis, one per free column, then put in
// canonical form.
RowEchelonBasis kernel_of(const RowEchelonBasis& r) {
  std::vector<bool> is_pivot(r.width, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix k(0, r.width);
  Vector v(r.width);
  for (std::size_t f = 0; f < r.width; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][f];
    k.append_row(v);
  }
  return rref(k);
}

} // namespace

RowEchelonBasis nullspace(const Matrix& m) { return kernel_of(rref(m)); }

std::optional<Vector> solve_particular(const Matrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length does not match row count");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  RowEchelonBasis e = rref(aug);
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][m.cols()];
  }
  return x;
}

bool in_row_space(const RowEchelonBasis& basis, std::span<const Rational> v) {
  if (v.size() != basis.width) throw DimensionMismatch("vector width does not match basis width");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    Rational f = r[basis.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < basis.width; ++c) r[c].sub_mul(f, basis.rows[i][c]);
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

RankSink::RankSink(std::size_t width) : width_(width), pivot_index_(width, -1), free_cols_(width) {
  std::iota(free_cols_.begin(), free_cols_.end(), std::size_t{0});
}

bool RankSink::residual(std::span<const Rational> row, std::vector<Rational>& out) const {
  // Pivot rows vanish on every other pivot column, so the coefficient of
  // pivot row i is just row[pivot_i].
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
    if (!row[pivot_cols_[i]].is_zero()) active.push_back(i);
  out.assign(free_cols_.size(), Rational());
  bool nonzero = false;
  for (std::size_t j = 0; j < free_cols_.size(); ++j) {
    const std::size_t f = free_cols_[j];
    Rational acc = row[f];
    for (std::size_t i : active) acc.sub_mul(row[pivot_cols_[i]], pivot_rows_[i][f]);
    if (!acc.is_zero()) nonzero = true;
    out[j] = std::move(acc);
  }
  return nonzero;
}

bool RankSink::feed(std::span<const Rational> row) {
  if (row.size() != width_)
    throw DimensionMismatch("row of length " + std::to_string(row.size()) + " fed to sink of width " +
                            std::to_string(width_));
  ++fed_;
  if (free_cols_.empty()) return false;
  std::vector<Rational> res;
  if (!residual(row, res)) return false;

  std::size_t lead = 0;
  while (res[lead].is_zero()) ++lead;
  const std::size_t col = free_cols_[lead];
  Rational inv = res[lead].inverse();

  Vector fresh(width_);
  for (std::size_t j = 0; j < free_cols_.size(); ++j)
    if (!res[j].is_zero()) fresh[free_cols_[j]] = res[j] * inv;
  fresh[col] = 1;

  for (auto& prow : pivot_rows_) {
    if (prow[col].is_zero()) continue;
    Rational f = prow[col];
    for (std::size_t j = 0; j < free_cols_.size(); ++j) {
      const std::size_t c = free_cols_[j];
      if (!fresh[c].is_zero()) prow[c].sub_mul(f, fresh[c]);
    }
  }

  pivot_index_[col] = static_cast<long>(pivot_rows_.size());
  pivot_rows_.push_back(std::move(fresh));
  pivot_cols_.push_back(col);
  free_cols_.erase(free_cols_.begin() + static_cast<std::ptrdiff_t>(lead));
  return true;
}

bool RankSink::contains(std::span<const Rational> row) const {
  if (row.size() != width_) throw DimensionMismatch("row width does not match sink width");
  if (free_cols_.empty()) return true;
  std::vector<Rational> res;
  return !residual(row, res);
}

RowEchelonBasis RankSink::basis() const {
  std::vector<std::size_t> order(pivot_cols_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_cols_[a] < pivot_cols_[b]; });
  RowEchelonBasis out;
  out.width = width_;
  for (auto i : order) {
    out.rows.push_back(pivot_rows_[i]);
    out.pivots.push_back(pivot_cols_[i]);
  }
  return out;
}

RowEchelonBasis RankSink::nullspace() const { return kernel_of(basis()); }

const Vector* RankSink::pivot_row_for(std::size_t col) const {
  if (col >= width_ || pivot_index_[col] < 0) return nullptr;
  return &pivot_rows_[static_cast<std::size_t>(pivot_index_[col])];
}

} // namespace nonassoc
