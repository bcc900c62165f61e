#ifndef NONASSOC_ALGEBRA_HPP
#define NONASSOC_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonassoc/linalg.hpp"

namespace nonassoc {

/// Linear map W -> W, stored as a square matrix acting on coordinate columns:
/// the image of e_j is column j.
class LinearMap {
public:
  LinearMap() = default;
  explicit LinearMap(std::size_t n) : m_(n, n) {}
  explicit LinearMap(Matrix m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  Rational& operator()(std::size_t r, std::size_t c) { return m_(r, c); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  Vector apply(std::span<const Rational> v) const { return m_ * v; }
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
  Matrix m_;
};

/// Bilinear map W x W -> W in structure-constant form:
/// B(e_i, e_j) = sum_k at(i, j, k) e_k, indices 0-based.
class BilinearMap {
public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t n) : n_(n), c_(n * n * n) {}

  std::size_t dim() const noexcept { return n_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  /// Coordinates of B(e_i, e_j).
  std::span<const Rational> on_basis(std::size_t i, std::size_t j) const { return {c_.data() + (i * n_ + j) * n_, n_}; }
  std::span<Rational> on_basis(std::size_t i, std::size_t j) { return {c_.data() + (i * n_ + j) * n_, n_}; }

  Vector apply(std::span<const Rational> x, std::span<const Rational> y) const;
  bool is_zero() const;

  BilinearMap operator+(const BilinearMap& o) const;
  BilinearMap operator*(const Rational& s) const;

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Rational> c_;
};

/// A finite-dimensional algebra given by its structure constants.
struct Algebra {
  std::string name;
  BilinearMap product;

  Algebra() = default;
  Algebra(std::string n, BilinearMap p) : name(std::move(n)), product(std::move(p)) {}
  Algebra(std::string n, std::size_t dim) : name(std::move(n)), product(dim) {}

  std::size_t dim() const noexcept { return product.dim(); }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return product.at(i, j, k); }
  std::span<const Rational> basis_product(std::size_t i, std::size_t j) const { return product.on_basis(i, j); }

  /// Same structure constants; names are ignored.
  bool same_table(const Algebra& o) const { return product == o.product; }
};

/// A subspace of F^n held in canonical reduced form.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : basis_{ambient, {}, {}} {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  /// Span of the basis vectors e_i for the given 1-based indices.
  static Subspace of_basis_vectors(std::size_t ambient, const std::vector<std::size_t>& one_based);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const noexcept { return basis_.width; }
  std::size_t dim() const noexcept { return basis_.rank(); }
  const RowEchelonBasis& basis() const noexcept { return basis_; }

  bool contains(std::span<const Rational> v) const { return in_row_space(basis_, v); }
  /// Coordinates of v (assumed to lie in the subspace) in the canonical basis.
  Vector coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  RowEchelonBasis basis_;
};

class NotASubalgebra : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Vector basis_vector(std::size_t n, std::size_t i);

Vector multiply(const Algebra& a, std::span<const Rational> x, std::span<const Rational> y);

/// Matrix of y -> x y.
LinearMap left_mul_operator(const Algebra& a, std::span<const Rational> x);

/// [A, B](x, y) = A(B(x, y)) - B(A x, y) - B(x, A y).
BilinearMap bracket(const LinearMap& a, const BilinearMap& b);

struct DerivationAlgebra {
  std::size_t dimension = 0;
  std::vector<LinearMap> basis;
};

/// Solves D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for all i, j.  The unknowns
/// are the n^2 matrix entries of D in row-major order.
DerivationAlgebra derivation_algebra(const Algebra& a);

bool is_derivation(const Algebra& a, const LinearMap& d);

bool is_subalgebra(const Algebra& a, const Subspace& s);
bool is_ideal(const Algebra& a, const Subspace& s);

/// The algebra induced on s, written in s's canonical basis.
/// Throws NotASubalgebra naming the first product that leaves s.
Algebra restrict(const Algebra& a, const Subspace& s, std::string name = {});

/// Rewrites the algebra in a new basis.  Row r of `new_basis` holds the old
/// coordinates of the r-th new basis vector; it must be invertible.
Algebra change_basis(const Algebra& a, const Matrix& new_basis, std::string name = {});

/// Relabels basis vectors: new e_i is old e_{perm[i]} (0-based).
Algebra permute_basis(const Algebra& a, std::span<const std::size_t> perm);

} // namespace nonassoc

#endif
