#ifndef NONASSOC_LINALG_HPP
#define NONASSOC_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nonassoc/rational.hpp"

namespace nonassoc {

using Vector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> row);

  Vector operator*(std::span<const Rational> v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix transposed() const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon basis of a row space.  Pivot entries are 1, pivot
/// columns are zero outside their pivot row and pivots strictly increase, so
/// two row spaces are equal iff their bases compare equal.
struct RowEchelonBasis {
  std::size_t width = 0;
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return rows.size(); }
  Matrix to_matrix() const { return Matrix::from_rows(rows, width); }

  friend bool operator==(const RowEchelonBasis&, const RowEchelonBasis&) = default;
};

/// Gauss-Jordan elimination on the whole matrix.  The pivot is the first
/// nonzero entry in column order.
RowEchelonBasis rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical basis of { v : m v = 0 }.
RowEchelonBasis nullspace(const Matrix& m);

/// Solves m v = rhs.  Free variables are set to zero, so the returned vector
/// is canonical.  Returns nullopt when the system is inconsistent.
std::optional<Vector> solve_particular(const Matrix& m, std::span<const Rational> rhs);

/// True iff v lies in the row space spanned by `basis`.
bool in_row_space(const RowEchelonBasis& basis, std::span<const Rational> v);

/// Streaming row reducer.  Rows are reduced against the stored pivots and
/// dropped when dependent, so memory is bounded by width^2 regardless of how
/// many rows are fed.  The stored pivot rows are always in reduced form.
class RankSink {
public:
  explicit RankSink(std::size_t width);

  /// Returns true if the row was independent of everything fed before.
  bool feed(std::span<const Rational> row);

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return pivot_rows_.size(); }
  std::size_t rows_fed() const noexcept { return fed_; }
  bool saturated() const noexcept { return free_cols_.empty(); }

  /// True iff row is in the span of the fed rows (nothing is stored).
  bool contains(std::span<const Rational> row) const;

  RowEchelonBasis basis() const;
  RowEchelonBasis nullspace() const;

  /// Pivot row whose pivot is `col`, if any; used by callers that carry an
  /// augmented right-hand-side column.
  const Vector* pivot_row_for(std::size_t col) const;

private:
  // Residual of `row` on the current free columns; returns false when it is
  // identically zero.
  bool residual(std::span<const Rational> row, std::vector<Rational>& out) const;

  std::size_t width_;
  std::size_t fed_ = 0;
  std::vector<Vector> pivot_rows_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<long> pivot_index_;  // column -> index into pivot_rows_, or -1
  std::vector<std::size_t> free_cols_;
};

} // namespace nonassoc

#endif
