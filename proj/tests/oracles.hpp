#ifndef NONASSOC_TEST_ORACLES_HPP
#define NONASSOC_TEST_ORACLES_HPP

#include <initializer_list>
#include <string>
#include <utility>

#include <optional>

#include "nonassoc/algebra.hpp"
#include "nonassoc/identity.hpp"
#include "nonassoc/monomial.hpp"

namespace oracle {

using nonassoc::Matrix;
using nonassoc::Rational;
using nonassoc::Vector;

// Plain mpq elimination, kept separate from the library code.
inline std::size_t rank(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).to_mpq();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t p = rk;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = rk + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rk][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

// Sparse 1-based vector literal, e.g. vec(8, {{3, 2}, {7, -1}}) = 2 e3 - e7.
inline Vector vec(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> cells) {
  Vector v(n);
  for (const auto& [k, c] : cells) v.at(k - 1) = c;
  return v;
}

// Product of basis vectors, 1-based.
inline Vector prod(const nonassoc::Algebra& a, std::size_t i, std::size_t j) {
  auto s = a.basis_product(i - 1, j - 1);
  return Vector(s.begin(), s.end());
}

// Recursive evaluation straight from the bracket tree, one product at a time.
inline Vector evaluate(const nonassoc::Algebra& a, const nonassoc::BracketShape& s,
                       const std::vector<std::size_t>& leaf_basis, std::size_t& next) {
  if (s.is_leaf()) return nonassoc::basis_vector(a.dim(), leaf_basis[next++]);
  Vector l = evaluate(a, s.left(), leaf_basis, next);
  Vector r = evaluate(a, s.right(), leaf_basis, next);
  return nonassoc::multiply(a, l, r);
}

// Value of m with x_v = e_{args[v]} (0-based).
inline Vector evaluate(const nonassoc::Algebra& a, const nonassoc::MultilinearMonomial& m,
                       const std::vector<std::size_t>& args) {
  std::vector<std::size_t> leaves;
  for (auto v : m.perm) leaves.push_back(args[v]);
  std::size_t next = 0;
  return evaluate(a, m.shape, leaves, next);
}

// The algebra A + Fc with (x, l)(y, m) = (xy, theta(x, y)), built directly.
inline nonassoc::Algebra extension(const nonassoc::Algebra& a, const Matrix& theta) {
  const std::size_t n = a.dim();
  nonassoc::Algebra out("ext", n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.product.at(i, j, k) = a.c(i, j, k);
      out.product.at(i, j, n) = theta(i, j);
    }
  return out;
}

// Every value of P on basis tuples of `a`, concatenated.
inline Vector all_values(const nonassoc::Algebra& a, const nonassoc::IdentityCombination& P) {
  const std::size_t n = a.dim(), d = P.degree();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < d; ++i) tuples *= n;
  nonassoc::MonomialEvaluator ev(a);
  auto terms = P.terms();
  Vector out(tuples * n);
  std::vector<std::size_t> args(d);
  for (std::size_t t = 0; t < tuples; ++t) {
    for (std::size_t i = 0, r = t; i < d; ++i, r /= n) args[d - 1 - i] = r % n;
    for (const auto& [coef, m] : terms) {
      auto v = ev.shape_value(m.shape, ev.encode(nonassoc::leaf_assignment(m, args)));
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) out[t * n + k] += coef * v[k];
    }
  }
  return out;
}

// dim Z^2_P by brute force: evaluate P on the central extension for every
// elementary form E_ij and count the forms whose extension satisfies P.
// Nothing when the zero extension (hence the base) already violates P.
inline std::optional<std::size_t> cocycle_dim_by_extension(const nonassoc::Algebra& a,
                                                           const nonassoc::IdentityCombination& P) {
  const std::size_t n = a.dim();
  Vector base = all_values(extension(a, Matrix(n, n)), P);
  for (const auto& x : base)
    if (!x.is_zero()) return std::nullopt;
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix theta(n, n);
      theta(i, j) = 1;
      columns.push_back(all_values(extension(a, theta), P));
    }
  // Drop rows that vanish for every form; they do not change the rank.
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < columns.front().size(); ++r)
    for (const auto& c : columns)
      if (!c[r].is_zero()) {
        live.push_back(r);
        break;
      }
  Matrix m(live.size(), columns.size());
  for (std::size_t r = 0; r < live.size(); ++r)
    for (std::size_t c = 0; c < columns.size(); ++c) m(r, c) = columns[c][live[r]];
  return n * n - oracle::rank(m);
}

} // namespace oracle

#endif
