#include "nonassoc/cohomology.hpp"

#include "nonassoc/conservative.hpp"

namespace nonassoc {

Vector flatten(const BilinearForm& theta) {
  Vector v;
  v.reserve(theta.rows() * theta.cols());
  for (std::size_t i = 0; i < theta.rows(); ++i)
    for (std::size_t j = 0; j < theta.cols(); ++j) v.push_back(theta(i, j));
  return v;
}

BilinearForm unflatten(std::span<const Rational> v, std::size_t n) {
  if (v.size() != n * n) throw DimensionMismatch("form vector has the wrong length");
  BilinearForm m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

namespace {

FormSpace from_rows(const RowEchelonBasis& rows, std::size_t n) {
  FormSpace out;
  out.dimension = rows.rank();
  for (const auto& r : rows.rows) out.basis.push_back(unflatten(r, n));
  return out;
}

Vector coborder_row(const Algebra& a, std::size_t k) {
  const std::size_t n = a.dim();
  Vector v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a.c(i, j, k);
  return v;
}

RankSink cocycle_sink(const Algebra& a, const IdentityCombination& P) {
  if (!satisfies_identity(a, P)) throw BaseViolatesIdentity();
  const std::size_t n = a.dim();
  const std::size_t deg = P.degree();
  const auto terms = P.terms();
  MonomialEvaluator ev(a);
  RankSink sink(n * n);
  if (n == 0) return sink;

  std::vector<std::size_t> t(deg, 0), leaves(deg);
  Vector row(n * n);
  while (!sink.saturated()) {
    std::fill(row.begin(), row.end(), Rational());
    bool any = false;
    for (const auto& [coef, m] : terms) {
      for (std::size_t p = 0; p < deg; ++p) leaves[p] = t[m.perm[p]];
      const std::size_t split = m.shape.left_degree();
      auto u = ev.shape_value(m.shape.left(), ev.encode(std::span(leaves).first(split)));
      auto v = ev.shape_value(m.shape.right(), ev.encode(std::span(leaves).subspan(split)));
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        Rational cu = coef * u[i];
        for (std::size_t j = 0; j < n; ++j)
          if (!v[j].is_zero()) {
            row[i * n + j] += cu * v[j];
            any = true;
          }
      }
    }
    if (any) sink.feed(row);

    std::size_t p = deg;
    while (p > 0) {
      --p;
      if (++t[p] < n) break;
      t[p] = 0;
      if (p == 0) return sink;
    }
  }
  return sink;
}

} // namespace

FormSpace coborder_space(const Algebra& a) {
  const std::size_t n = a.dim();
  RankSink sink(n * n);
  for (std::size_t k = 0; k < n; ++k) sink.feed(coborder_row(a, k));
  return from_rows(sink.basis(), n);
}

FormSpace cocycle_space(const Algebra& a, const IdentityCombination& P) {
  return from_rows(cocycle_sink(a, P).nullspace(), a.dim());
}

FormSpace terminal_cocycle_space(const Algebra& a) {
  if (!is_terminal(a)) throw NotTerminal();
  return cocycle_space(a, terminal_identity());
}

CohomologyReport cohomology(const Algebra& a, const IdentityCombination& P) {
  const std::size_t n = a.dim();
  RankSink equations = cocycle_sink(a, P);
  CohomologyReport r;
  r.dim_Z = n * n - equations.rank();
  r.dim_B = coborder_space(a).dimension;
  r.contained = true;
  // A form lies in Z iff it satisfies every equation, i.e. is orthogonal to
  // each reduced equation row.
  const RowEchelonBasis eqs = equations.basis();
  for (std::size_t k = 0; k < n && r.contained; ++k) {
    const Vector b = coborder_row(a, k);
    for (const auto& e : eqs.rows) {
      Rational dot;
      for (std::size_t c = 0; c < b.size(); ++c)
        if (!b[c].is_zero() && !e[c].is_zero()) dot += b[c] * e[c];
      if (!dot.is_zero()) {
        r.contained = false;
        r.witness = k;
        break;
      }
    }
  }
  r.dim_H = r.contained ? r.dim_Z - r.dim_B : 0;
  return r;
}

Algebra central_extension(const Algebra& a, const BilinearForm& theta) {
  const std::size_t n = a.dim();
  if (theta.rows() != n || theta.cols() != n) throw DimensionMismatch("form size does not match algebra");
  Algebra out(a.name + "+c", n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.product.at(i, j, k) = a.c(i, j, k);
      out.product.at(i, j, n) = theta(i, j);
    }
  return out;
}

} // namespace nonassoc
