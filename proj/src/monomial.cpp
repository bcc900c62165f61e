#include "nonassoc/monomial.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

namespace nonassoc {

namespace {

std::string wrap(const BracketShape& s) { return s.is_leaf() ? "x" : "(" + s.str() + ")"; }

// Recursive-descent parser shared by shapes and labelled monomials.
//   factor := 'x' [digits] | '(' product ')'
//   product := factor [factor]
struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  bool labelled;
  std::vector<std::size_t> vars;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse \"" + std::string(text) + "\" at offset " + std::to_string(pos) + ": " + why);
  }

  BracketShape factor() {
    if (pos >= text.size()) fail("unexpected end");
    if (text[pos] == 'x') {
      ++pos;
      if (labelled) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("variable index expected");
        vars.push_back(std::stoul(std::string(text.substr(start, pos - start))));
      }
      return BracketShape::leaf();
    }
    if (text[pos] == '(') {
      ++pos;
      BracketShape inner = product();
      if (pos >= text.size() || text[pos] != ')') fail("')' expected");
      ++pos;
      if (inner.is_leaf()) fail("redundant parentheses around a single variable");
      return inner;
    }
    fail(std::string("unexpected character '") + text[pos] + "'");
  }

  BracketShape product() {
    BracketShape l = factor();
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == '(')) return BracketShape::product(l, factor());
    return l;
  }

  BracketShape run() {
    std::string cleaned;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    owned = std::move(cleaned);
    text = owned;
    BracketShape s = product();
    if (pos != text.size()) fail("trailing input");
    return s;
  }

  std::string owned;
};

} // namespace

void check_degree(std::size_t n) {
  if (n < 1 || n > kMaxDegree)
    throw DegreeOutOfRange("degree " + std::to_string(n) + " outside supported range 1.." + std::to_string(kMaxDegree));
}

BracketShape BracketShape::leaf() { return BracketShape(); }

BracketShape BracketShape::product(BracketShape left, BracketShape right) {
  BracketShape s;
  s.degree_ = left.degree_ + right.degree_;
  s.left_ = std::make_shared<const BracketShape>(std::move(left));
  s.right_ = std::make_shared<const BracketShape>(std::move(right));
  return s;
}

BracketShape BracketShape::parse(std::string_view text) {
  Parser p{text, 0, false, {}, {}};
  return p.run();
}

std::string BracketShape::str() const { return is_leaf() ? "x" : wrap(*left_) + wrap(*right_); }

std::string BracketShape::postfix() const { return is_leaf() ? "x" : left_->postfix() + right_->postfix() + "*"; }

const std::vector<BracketShape>& shapes_of_degree(std::size_t n) {
  check_degree(n);
  static const std::array<std::vector<BracketShape>, kMaxDegree + 1> built = [] {
    std::array<std::vector<BracketShape>, kMaxDegree + 1> t;
    t[1] = {BracketShape::leaf()};
    for (std::size_t d = 2; d <= kMaxDegree; ++d) {
      std::vector<BracketShape> out;
      for (std::size_t k = 1; k < d; ++k)
        for (const auto& l : t[k])
          for (const auto& r : t[d - k]) out.push_back(BracketShape::product(l, r));
      std::stable_sort(out.begin(), out.end(), [](const BracketShape& a, const BracketShape& b) {
        std::string ka = a.postfix(), kb = b.postfix();
        std::replace(ka.begin(), ka.end(), '*', '0');
        std::replace(kb.begin(), kb.end(), '*', '0');
        return ka < kb;
      });
      t[d] = std::move(out);
    }
    return t;
  }();
  return built[n];
}

std::size_t shape_index(const BracketShape& s) {
  const auto& all = shapes_of_degree(s.degree());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == s) return i;
  throw std::logic_error("shape missing from enumeration");
}

BracketShape left_comb(std::size_t n) {
  BracketShape s = BracketShape::leaf();
  for (std::size_t i = 1; i < n; ++i) s = BracketShape::product(s, BracketShape::leaf());
  return s;
}

BracketShape right_comb(std::size_t n) {
  BracketShape s = BracketShape::leaf();
  for (std::size_t i = 1; i < n; ++i) s = BracketShape::product(BracketShape::leaf(), s);
  return s;
}

std::string MultilinearMonomial::str() const {
  std::size_t leaf = 0;
  auto go = [&](auto&& self, const BracketShape& s, bool top) -> std::string {
    if (s.is_leaf()) return "x" + std::to_string(perm[leaf++] + 1);
    std::string body = self(self, s.left(), false);
    body += self(self, s.right(), false);
    return top ? body : "(" + body + ")";
  };
  return go(go, shape, true);
}

MultilinearMonomial MultilinearMonomial::parse(std::string_view text) {
  Parser p{text, 0, true, {}, {}};
  BracketShape s = p.run();
  const std::size_t n = p.vars.size();
  std::vector<bool> seen(n, false);
  MultilinearMonomial m{s, {}};
  for (auto v : p.vars) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("\"" + std::string(text) + "\" is not multilinear in x1..x" + std::to_string(n));
    seen[v - 1] = true;
    m.perm.push_back(v - 1);
  }
  return m;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t permutation_rank(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

std::vector<std::size_t> permutation_unrank(std::size_t rank, std::size_t n) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t f = factorial(n - 1 - i);
    std::size_t q = rank / f;
    rank %= f;
    out.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return out;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

std::size_t monomial_count(std::size_t n) { return shapes_of_degree(n).size() * factorial(n); }

std::size_t monomial_column(const MultilinearMonomial& m) {
  return shape_index(m.shape) * factorial(m.degree()) + permutation_rank(m.perm);
}

MultilinearMonomial monomial_at(std::size_t n, std::size_t column) {
  const std::size_t f = factorial(n);
  const auto& shapes = shapes_of_degree(n);
  if (column >= shapes.size() * f) throw std::out_of_range("monomial column out of range");
  return {shapes[column / f], permutation_unrank(column % f, n)};
}

std::vector<MultilinearMonomial> enumerate_monomials(std::size_t n) {
  if (n < 2) throw DegreeOutOfRange("degree " + std::to_string(n) + " outside supported range 2.." + std::to_string(kMaxDegree));
  check_degree(n);
  std::vector<MultilinearMonomial> out;
  std::vector<std::size_t> perm(n);
  for (const auto& s : shapes_of_degree(n)) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do out.push_back({s, perm});
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

} // namespace nonassoc
