#include "nonassoc/algebra.hpp"

#include <algorithm>
#include <string>

namespace nonassoc {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(want) + ", got " +
                            std::to_string(got));
}

std::string vec_str(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

// First product of a left factor from `left` and a right factor from `right`
// that escapes s; empty when closed.
std::string first_escape(const Algebra& a, const Subspace& s, const std::vector<Vector>& left,
                         const std::vector<Vector>& right) {
  for (const auto& x : left)
    for (const auto& y : right) {
      Vector p = multiply(a, x, y);
      if (!s.contains(p)) return vec_str(x) + " * " + vec_str(y) + " = " + vec_str(p);
    }
  return {};
}

std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(basis_vector(n, i));
  return out;
}

} // namespace

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("linear map must be square");
}

Vector BilinearMap::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  require_dim(x.size(), n_, "left argument");
  require_dim(y.size(), n_, "right argument");
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Rational s = x[i] * y[j];
      auto col = on_basis(i, j);
      for (std::size_t k = 0; k < n_; ++k)
        if (!col[k].is_zero()) out[k] += s * col[k];
    }
  }
  return out;
}

bool BilinearMap::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

BilinearMap BilinearMap::operator+(const BilinearMap& o) const {
  require_dim(o.n_, n_, "bilinear map sum");
  BilinearMap r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

BilinearMap BilinearMap::operator*(const Rational& s) const {
  BilinearMap r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Matrix m(0, ambient);
  for (const auto& v : vectors) m.append_row(v);
  Subspace s(ambient);
  s.basis_ = rref(m);
  return s;
}

Subspace Subspace::of_basis_vectors(std::size_t ambient, const std::vector<std::size_t>& one_based) {
  std::vector<Vector> vs;
  for (auto i : one_based) {
    if (i == 0 || i > ambient)
      throw std::out_of_range("basis index " + std::to_string(i) + " outside 1.." + std::to_string(ambient));
    vs.push_back(basis_vector(ambient, i - 1));
  }
  return span(ambient, vs);
}

Subspace Subspace::full(std::size_t ambient) { return span(ambient, standard_basis(ambient)); }

Vector Subspace::coordinates(std::span<const Rational> v) const {
  Vector out;
  out.reserve(dim());
  for (auto p : basis_.pivots) out.push_back(v[p]);
  return out;
}

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector multiply(const Algebra& a, std::span<const Rational> x, std::span<const Rational> y) {
  return a.product.apply(x, y);
}

LinearMap left_mul_operator(const Algebra& a, std::span<const Rational> x) {
  const std::size_t n = a.dim();
  require_dim(x.size(), n, "left multiplier");
  LinearMap l(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      auto col = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!col[k].is_zero()) l(k, j) += x[i] * col[k];
    }
  }
  return l;
}

BilinearMap bracket(const LinearMap& a, const BilinearMap& b) {
  const std::size_t n = b.dim();
  require_dim(a.dim(), n, "bracket operands");
  BilinearMap out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto dst = out.on_basis(i, j);
      Vector abij = a.apply(b.on_basis(i, j));
      for (std::size_t k = 0; k < n; ++k) dst[k] = abij[k];
      for (std::size_t l = 0; l < n; ++l) {
        if (!a(l, i).is_zero()) {
          auto bl = b.on_basis(l, j);
          for (std::size_t k = 0; k < n; ++k) dst[k].sub_mul(a(l, i), bl[k]);
        }
        if (!a(l, j).is_zero()) {
          auto bl = b.on_basis(i, l);
          for (std::size_t k = 0; k < n; ++k) dst[k].sub_mul(a(l, j), bl[k]);
        }
      }
    }
  return out;
}

DerivationAlgebra derivation_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  RankSink sink(n * n);
  Vector row(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        std::fill(row.begin(), row.end(), Rational());
        // D(e_i e_j)_m
        for (std::size_t l = 0; l < n; ++l) row[m * n + l] += a.c(i, j, l);
        // (D e_i) e_j and e_i (D e_j)
        for (std::size_t l = 0; l < n; ++l) {
          row[l * n + i] -= a.c(l, j, m);
          row[l * n + j] -= a.c(i, l, m);
        }
        sink.feed(row);
      }
  RowEchelonBasis ker = sink.nullspace();
  DerivationAlgebra out;
  out.dimension = ker.rank();
  for (const auto& v : ker.rows) {
    LinearMap d(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
    out.basis.push_back(std::move(d));
  }
  return out;
}

bool is_derivation(const Algebra& a, const LinearMap& d) {
  const std::size_t n = a.dim();
  require_dim(d.dim(), n, "derivation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = basis_vector(n, i), ej = basis_vector(n, j);
      Vector lhs = d.apply(a.basis_product(i, j));
      Vector r1 = multiply(a, d.apply(ei), ej);
      Vector r2 = multiply(a, ei, d.apply(ej));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  require_dim(s.ambient(), a.dim(), "subspace ambient dimension");
  return first_escape(a, s, s.basis().rows, s.basis().rows).empty();
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  require_dim(s.ambient(), a.dim(), "subspace ambient dimension");
  auto all = standard_basis(a.dim());
  return first_escape(a, s, all, s.basis().rows).empty() && first_escape(a, s, s.basis().rows, all).empty();
}

Algebra restrict(const Algebra& a, const Subspace& s, std::string name) {
  require_dim(s.ambient(), a.dim(), "subspace ambient dimension");
  const auto& rows = s.basis().rows;
  std::string esc = first_escape(a, s, rows, rows);
  if (!esc.empty()) throw NotASubalgebra("not a subalgebra: " + esc);
  const std::size_t m = s.dim();
  Algebra out(name.empty() ? a.name + "|sub" : std::move(name), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector coords = s.coordinates(multiply(a, rows[i], rows[j]));
      auto dst = out.product.on_basis(i, j);
      for (std::size_t k = 0; k < m; ++k) dst[k] = coords[k];
    }
  return out;
}

Algebra change_basis(const Algebra& a, const Matrix& new_basis, std::string name) {
  const std::size_t n = a.dim();
  if (new_basis.rows() != n || new_basis.cols() != n) throw DimensionMismatch("basis matrix must be n x n");
  // Columns of P are the new basis vectors; coordinates in the new basis are P^{-1} v.
  Matrix p = new_basis.transposed();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = p(r, c);
      if (r == c) aug(r, n + c) = 1;
    }
  RowEchelonBasis e = rref(aug);
  if (e.rank() != n || e.pivots.back() != n - 1) throw std::invalid_argument("change_basis: basis is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rows[r][n + c];

  Algebra out(name.empty() ? a.name + "|rebased" : std::move(name), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = multiply(a, new_basis.row(i), new_basis.row(j));
      Vector coords = inv * prod;
      auto dst = out.product.on_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) dst[k] = coords[k];
    }
  return out;
}

Algebra permute_basis(const Algebra& a, std::span<const std::size_t> perm) {
  const std::size_t n = a.dim();
  require_dim(perm.size(), n, "permutation");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = 1;
  return change_basis(a, m, a.name + "|permuted");
}

} // namespace nonassoc
