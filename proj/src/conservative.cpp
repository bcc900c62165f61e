#include "nonassoc/conservative.hpp"

namespace nonassoc {

namespace {

BilinearMap product_map(const Algebra& a) { return a.product; }

// [L_b, [L_a, P]] for every basis pair, indexed a * n + b.
std::vector<BilinearMap> double_brackets(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const BilinearMap P = product_map(alg);
  std::vector<LinearMap> L;
  for (std::size_t i = 0; i < n; ++i) L.push_back(left_mul_operator(alg, basis_vector(n, i)));
  std::vector<BilinearMap> inner;
  for (std::size_t i = 0; i < n; ++i) inner.push_back(bracket(L[i], P));
  std::vector<BilinearMap> out;
  out.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.push_back(bracket(L[b], inner[a]));
  return out;
}

} // namespace

std::optional<ConservativeWitness> conservative_solve(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const BilinearMap P = product_map(alg);
  std::vector<BilinearMap> coeff;  // [L_{e_m}, P]
  for (std::size_t m = 0; m < n; ++m) coeff.push_back(bracket(left_mul_operator(alg, basis_vector(n, m)), P));
  const auto lhs = double_brackets(alg);

  ConservativeWitness w{BilinearMap(n), 0};
  Vector row(n + 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // sum_m F_ab^m [L_{e_m}, P](x, y)_k = -[L_b, [L_a, P]](x, y)_k
      RankSink sink(n + 1);
      const BilinearMap& rhs = lhs[a * n + b];
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t k = 0; k < n; ++k) {
            bool any = false;
            for (std::size_t m = 0; m < n; ++m) {
              row[m] = coeff[m].at(x, y, k);
              any = any || !row[m].is_zero();
            }
            row[n] = -rhs.at(x, y, k);
            if (any || !row[n].is_zero()) sink.feed(row);
          }
      if (sink.pivot_row_for(n)) return std::nullopt;
      w.freedom += n - sink.rank();
      RowEchelonBasis reduced = sink.basis();
      for (std::size_t r = 0; r < reduced.rows.size(); ++r) w.F.at(a, b, reduced.pivots[r]) = reduced.rows[r][n];
    }
  return w;
}

std::optional<Violation> find_conservative_violation(const Algebra& alg, const BilinearMap& F) {
  const std::size_t n = alg.dim();
  if (F.dim() != n) throw DimensionMismatch("F and algebra dimensions differ");
  const BilinearMap P = product_map(alg);
  const auto lhs = double_brackets(alg);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      BilinearMap total = lhs[a * n + b] + bracket(left_mul_operator(alg, F.on_basis(a, b)), P);
      if (total.is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t k = 0; k < n; ++k)
            if (!total.at(x, y, k).is_zero()) return Violation{a, b, x, y};
    }
  return std::nullopt;
}

bool verify_witness(const Algebra& a, const BilinearMap& F) { return !find_conservative_violation(a, F).has_value(); }

BilinearMap terminal_F(const Algebra& alg) {
  const std::size_t n = alg.dim();
  BilinearMap F(n);
  const Rational third(1, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) F.at(i, j, k) = third * (Rational(2) * alg.c(i, j, k) + alg.c(j, i, k));
  return F;
}

std::optional<Violation> terminal_violation(const Algebra& a) { return find_conservative_violation(a, terminal_F(a)); }

bool is_terminal(const Algebra& a) { return !terminal_violation(a).has_value(); }

Vector conservative_residual(const Algebra& alg, const BilinearMap& F, const Violation& abxy) {
  const std::size_t n = alg.dim();
  for (auto i : abxy)
    if (i >= n) throw std::out_of_range("basis index out of range");
  const Vector a = basis_vector(n, abxy[0]), b = basis_vector(n, abxy[1]);
  const Vector x = basis_vector(n, abxy[2]), y = basis_vector(n, abxy[3]);
  auto mul = [&](const Vector& u, const Vector& v) { return multiply(alg, u, v); };
  auto acc = [](Vector& into, const Vector& v, int s) {
    for (std::size_t k = 0; k < into.size(); ++k) into[k] += s > 0 ? v[k] : -v[k];
  };

  Vector inner = mul(a, mul(x, y));
  acc(inner, mul(mul(a, x), y), -1);
  acc(inner, mul(x, mul(a, y)), -1);
  const Vector bx = mul(b, x), by = mul(b, y), ax = mul(a, x), ay = mul(a, y);

  Vector r = mul(b, inner);
  acc(r, mul(a, mul(bx, y)), -1);
  acc(r, mul(mul(a, bx), y), +1);
  acc(r, mul(bx, ay), +1);
  acc(r, mul(a, mul(x, by)), -1);
  acc(r, mul(ax, by), +1);
  acc(r, mul(x, mul(a, by)), +1);

  const Vector f = F.apply(a, b);
  acc(r, mul(f, mul(x, y)), +1);
  acc(r, mul(mul(f, x), y), -1);
  acc(r, mul(x, mul(f, y)), -1);
  return r;
}

} // namespace nonassoc
