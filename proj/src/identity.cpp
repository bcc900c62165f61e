#include "nonassoc/identity.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace nonassoc {

IdentityCombination::IdentityCombination(std::size_t degree) : degree_(degree), coeffs_(monomial_count(degree)) {}

IdentityCombination::IdentityCombination(std::size_t degree, Vector coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != monomial_count(degree))
    throw DimensionMismatch("coefficient vector of length " + std::to_string(coeffs_.size()) + " for degree " +
                            std::to_string(degree));
}

IdentityCombination IdentityCombination::from_terms(std::size_t degree,
                                                    const std::vector<std::pair<Rational, std::string>>& terms) {
  IdentityCombination c(degree);
  for (const auto& [coef, text] : terms) {
    MultilinearMonomial m = MultilinearMonomial::parse(text);
    if (m.degree() != degree) throw std::invalid_argument("\"" + text + "\" has the wrong degree");
    c.add(m, coef);
  }
  return c;
}

void IdentityCombination::add(const MultilinearMonomial& m, const Rational& c) {
  if (m.degree() != degree_) throw DimensionMismatch("monomial degree does not match combination");
  coeffs_[monomial_column(m)] += c;
}

bool IdentityCombination::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<std::pair<Rational, MultilinearMonomial>> IdentityCombination::terms() const {
  std::vector<std::pair<Rational, MultilinearMonomial>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace_back(coeffs_[i], monomial_at(degree_, i));
  return out;
}

std::string IdentityCombination::str() const {
  std::string s;
  for (const auto& [c, m] : terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (s.empty())
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    if (!mag.is_one()) s += mag.str() + " ";
    s += m.str();
  }
  return s.empty() ? "0" : s;
}

IdentityCombination IdentityCombination::operator+(const IdentityCombination& o) const {
  if (o.degree_ != degree_) throw DimensionMismatch("adding combinations of different degree");
  IdentityCombination r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

IdentityCombination IdentityCombination::operator-(const IdentityCombination& o) const { return *this + o * Rational(-1); }

IdentityCombination IdentityCombination::operator*(const Rational& s) const {
  IdentityCombination r = *this;
  for (auto& x : r.coeffs_) x *= s;
  return r;
}

MonomialEvaluator::MonomialEvaluator(const Algebra& a) : n_(a.dim()), cells_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      auto col = a.basis_product(i, j);
      for (std::size_t k = 0; k < n_; ++k)
        if (!col[k].is_zero()) cells_[i * n_ + j].push_back({k, col[k]});
    }
}

std::size_t MonomialEvaluator::encode(std::span<const std::size_t> leaves) const {
  std::size_t code = 0;
  for (auto l : leaves) code = code * n_ + l;
  return code;
}

void MonomialEvaluator::multiply_into(std::span<const Rational> x, std::span<const Rational> y,
                                      std::span<Rational> out) const {
  for (auto& o : out) o = Rational();
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& cell = cells_[i * n_ + j];
      if (cell.empty()) continue;
      Rational s = x[i] * y[j];
      for (const auto& [k, c] : cell) out[k] += s * c;
    }
  }
}

const std::vector<Rational>& MonomialEvaluator::table(const BracketShape& s) {
  std::string key = s.str();
  if (auto it = tables_.find(key); it != tables_.end()) return it->second;

  std::size_t count = 1;
  for (std::size_t i = 0; i < s.degree(); ++i) count *= n_;
  std::vector<Rational> t(count * n_);
  if (s.is_leaf()) {
    for (std::size_t i = 0; i < n_; ++i) t[i * n_ + i] = 1;
  } else {
    const auto& lt = table(s.left());
    const auto& rt = table(s.right());
    std::size_t right_count = 1;
    for (std::size_t i = 0; i < s.right().degree(); ++i) right_count *= n_;
    for (std::size_t code = 0; code < count; ++code) {
      std::span<const Rational> x(lt.data() + (code / right_count) * n_, n_);
      std::span<const Rational> y(rt.data() + (code % right_count) * n_, n_);
      multiply_into(x, y, std::span<Rational>(t.data() + code * n_, n_));
    }
  }
  return tables_.emplace(std::move(key), std::move(t)).first->second;
}

std::span<const Rational> MonomialEvaluator::shape_value(const BracketShape& s, std::size_t leaf_code) {
  const auto& t = table(s);
  return {t.data() + leaf_code * n_, n_};
}

std::vector<std::size_t> leaf_assignment(const MultilinearMonomial& m, std::span<const std::size_t> args) {
  if (args.size() != m.degree()) throw DimensionMismatch("argument count does not match monomial degree");
  std::vector<std::size_t> leaves(m.degree());
  for (std::size_t p = 0; p < m.degree(); ++p) leaves[p] = args[m.perm[p]];
  return leaves;
}

Vector evaluate_monomial(const Algebra& a, const MultilinearMonomial& m, std::span<const std::size_t> args) {
  for (auto x : args)
    if (x >= a.dim()) throw std::out_of_range("basis index out of range");
  std::vector<std::size_t> leaves = leaf_assignment(m, args);
  // Direct recursion; the memoized tables are for bulk work.
  std::size_t leaf = 0;
  auto go = [&](auto&& self, const BracketShape& s) -> Vector {
    if (s.is_leaf()) return basis_vector(a.dim(), leaves[leaf++]);
    Vector l = self(self, s.left());
    Vector r = self(self, s.right());
    return multiply(a, l, r);
  };
  return go(go, m.shape);
}

namespace {

// Walks every basis tuple of length n in lexicographic order.
template <class F>
void for_each_tuple(std::size_t dim, std::size_t n, F&& f) {
  std::vector<std::size_t> t(n, 0);
  if (dim == 0) return;
  while (true) {
    if (!f(std::span<const std::size_t>(t))) return;
    std::size_t p = n;
    while (p > 0) {
      --p;
      if (++t[p] < dim) break;
      t[p] = 0;
      if (p == 0) return;
    }
  }
}

struct Column {
  const BracketShape* shape;
  std::vector<std::size_t> perm;
};

std::vector<Column> columns_for(std::size_t n, const std::vector<std::size_t>& shape_ids) {
  std::vector<Column> cols;
  const auto& shapes = shapes_of_degree(n);
  std::vector<std::size_t> perm(n);
  for (auto s : shape_ids) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do cols.push_back({&shapes[s], perm});
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  return cols;
}

// Nullspace of the evaluation system restricted to the given shapes; basis
// vectors are embedded back into full coefficient vectors.
IdentitySpace vanishing_space(const Algebra& a, std::size_t n, const std::vector<std::size_t>& shape_ids) {
  std::vector<Column> cols = columns_for(n, shape_ids);
  const std::size_t dim = a.dim();
  MonomialEvaluator ev(a);
  RankSink sink(cols.size());
  std::vector<std::span<const Rational>> values(cols.size());
  std::vector<std::size_t> leaves(n);
  Vector row(cols.size());

  for_each_tuple(dim, n, [&](std::span<const std::size_t> t) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t p = 0; p < n; ++p) leaves[p] = t[cols[c].perm[p]];
      values[c] = ev.shape_value(*cols[c].shape, ev.encode(leaves));
    }
    for (std::size_t k = 0; k < dim; ++k) {
      bool any = false;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        row[c] = values[c][k];
        any = any || !row[c].is_zero();
      }
      if (any) sink.feed(row);
    }
    return !sink.saturated();
  });

  RowEchelonBasis ker = sink.nullspace();
  IdentitySpace out;
  out.degree = n;
  out.dimension = ker.rank();
  const std::size_t f = factorial(n);
  for (const auto& v : ker.rows) {
    IdentityCombination c(n);
    Vector full(monomial_count(n));
    for (std::size_t i = 0; i < shape_ids.size(); ++i)
      for (std::size_t p = 0; p < f; ++p) full[shape_ids[i] * f + p] = v[i * f + p];
    out.basis.emplace_back(n, std::move(full));
  }
  return out;
}

} // namespace

IdentitySpace identity_space(const Algebra& a, std::size_t n) {
  if (n < 2) throw DegreeOutOfRange("identity degree must be at least 2");
  check_degree(n);
  std::vector<std::size_t> all(shapes_of_degree(n).size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return vanishing_space(a, n, all);
}

IdentitySpace shape_identity_space(const Algebra& a, std::size_t n, std::size_t shape_index) {
  if (n < 2) throw DegreeOutOfRange("identity degree must be at least 2");
  check_degree(n);
  if (shape_index < 1 || shape_index > shapes_of_degree(n).size())
    throw std::out_of_range("shape index " + std::to_string(shape_index) + " outside 1.." +
                            std::to_string(shapes_of_degree(n).size()));
  return vanishing_space(a, n, {shape_index - 1});
}

std::optional<std::vector<std::size_t>> find_violation(const Algebra& a, const IdentityCombination& c) {
  const std::size_t n = c.degree();
  const std::size_t dim = a.dim();
  auto terms = c.terms();
  MonomialEvaluator ev(a);
  std::vector<std::size_t> leaves(n);
  Vector acc(dim);
  std::optional<std::vector<std::size_t>> bad;
  for_each_tuple(dim, n, [&](std::span<const std::size_t> t) {
    std::fill(acc.begin(), acc.end(), Rational());
    for (const auto& [coef, m] : terms) {
      for (std::size_t p = 0; p < n; ++p) leaves[p] = t[m.perm[p]];
      auto v = ev.shape_value(m.shape, ev.encode(leaves));
      for (std::size_t k = 0; k < dim; ++k)
        if (!v[k].is_zero()) acc[k] += coef * v[k];
    }
    for (const auto& x : acc)
      if (!x.is_zero()) {
        bad = std::vector<std::size_t>(t.begin(), t.end());
        return false;
      }
    return true;
  });
  return bad;
}

bool satisfies_identity(const Algebra& a, const IdentityCombination& c) { return !find_violation(a, c).has_value(); }

bool combination_in_span(const IdentityCombination& c, const std::vector<IdentityCombination>& basis) {
  RankSink sink(c.coefficients().size());
  for (const auto& b : basis) {
    if (b.degree() != c.degree()) throw DimensionMismatch("combinations of different degree");
    sink.feed(b.coefficients());
  }
  return sink.contains(c.coefficients());
}

bool same_span(const std::vector<IdentityCombination>& a, const std::vector<IdentityCombination>& b) {
  if (a.empty() || b.empty()) {
    auto all_zero = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.is_zero(); }); };
    return all_zero(a) && all_zero(b);
  }
  const std::size_t width = a.front().coefficients().size();
  RankSink sa(width), sb(width);
  for (const auto& c : a) sa.feed(c.coefficients());
  for (const auto& c : b) sb.feed(c.coefficients());
  return sa.basis() == sb.basis();
}

IdentityCombination st_identity(std::size_t n, int variant) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("st identity variant must be 1 or 2");
  if (n < 2) throw DegreeOutOfRange("st identity degree must be at least 2");
  check_degree(n);
  IdentityCombination c(n);
  const BracketShape shape = variant == 1 ? left_comb(n) : right_comb(n);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    // Variant 2 reads the leaves right to left: x_{s(n)} ... x_{s(2)} x_{s(1)}.
    std::vector<std::size_t> leaves = sigma;
    if (variant == 2) std::reverse(leaves.begin(), leaves.end());
    c.add({shape, leaves}, Rational(permutation_sign(sigma)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return c;
}

IdentityCombination terminal_identity() {
  // a = x1, b = x2, x = x3, y = x4.
  // b(a(xy) - (ax)y - x(ay)) - a((bx)y) + (a(bx))y + (bx)(ay) - a(x(by)) + (ax)(by) + x(a(by))
  //   + F(xy) - (Fx)y - x(Fy),  F = (2ab + ba)/3
  const Rational two_thirds(2, 3), third(1, 3);
  return IdentityCombination::from_terms(4, {
                                                {1, "x2(x1(x3x4))"},
                                                {-1, "x2((x1x3)x4)"},
                                                {-1, "x2(x3(x1x4))"},
                                                {-1, "x1((x2x3)x4)"},
                                                {1, "(x1(x2x3))x4"},
                                                {1, "(x2x3)(x1x4)"},
                                                {-1, "x1(x3(x2x4))"},
                                                {1, "(x1x3)(x2x4)"},
                                                {1, "x3(x1(x2x4))"},
                                                {two_thirds, "(x1x2)(x3x4)"},
                                                {third, "(x2x1)(x3x4)"},
                                                {-two_thirds, "((x1x2)x3)x4"},
                                                {-third, "((x2x1)x3)x4"},
                                                {-two_thirds, "x3((x1x2)x4)"},
                                                {-third, "x3((x2x1)x4)"},
                                            });
}

std::optional<IdentityCombination> named_identity(const std::string& name) {
  if (name == "terminal" || name == "T") return terminal_identity();
  static const std::regex st_re(R"(st\^?([2-5])_([12]))");
  std::smatch m;
  if (std::regex_match(name, m, st_re)) return st_identity(std::stoul(m[1]), std::stoi(m[2]));
  return std::nullopt;
}

IdentityCombination parse_identity_expression(const std::string& text) {
  static const std::regex term_re(R"(\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z][A-Za-z0-9_^]*)\s*)");
  std::optional<IdentityCombination> total;
  auto it = text.cbegin();
  bool first = true;
  std::smatch m;
  while (it != text.cend()) {
    if (!std::regex_search(it, text.cend(), m, term_re, std::regex_constants::match_continuous))
      throw std::invalid_argument("cannot parse identity expression \"" + text + "\"");
    if (!first && m[1].length() == 0) throw std::invalid_argument("missing '+' or '-' in \"" + text + "\"");
    first = false;
    auto named = named_identity(m[3]);
    if (!named) throw std::invalid_argument("unknown identity \"" + m[3].str() + "\"");
    Rational coef = m[2].matched ? Rational::parse(m[2].str()) : Rational(1);
    if (m[1] == "-") coef = -coef;
    IdentityCombination term = *named * coef;
    if (total && total->degree() != term.degree()) throw std::invalid_argument("identities of different degree in \"" + text + "\"");
    total = total ? *total + term : term;
    it = m[0].second;
  }
  if (!total) throw std::invalid_argument("empty identity expression");
  return *total;
}

} // namespace nonassoc
