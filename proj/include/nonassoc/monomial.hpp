#ifndef NONASSOC_MONOMIAL_HPP
#define NONASSOC_MONOMIAL_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonassoc {

constexpr std::size_t kMaxDegree = 5;

class DegreeOutOfRange : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Planar binary tree: the bracketing of a nonassociative monomial.
///
/// Serialized as in "((xx)x)x": a product is the juxtaposition of its two
/// factors, and a factor that is itself a product is parenthesized.
class BracketShape {
public:
  static BracketShape leaf();
  static BracketShape product(BracketShape left, BracketShape right);
  /// Throws std::invalid_argument on malformed input.
  static BracketShape parse(std::string_view text);

  std::size_t degree() const noexcept { return degree_; }
  bool is_leaf() const noexcept { return !left_; }
  const BracketShape& left() const { return *left_; }
  const BracketShape& right() const { return *right_; }
  std::size_t left_degree() const noexcept { return left_ ? left_->degree_ : 0; }

  std::string str() const;
  /// Postfix word with '*' for products and 'x' for leaves.  Shapes of one
  /// degree are ordered by this word with '*' sorting before 'x'.
  std::string postfix() const;

  friend bool operator==(const BracketShape& a, const BracketShape& b) { return a.str() == b.str(); }

private:
  std::size_t degree_ = 1;
  std::shared_ptr<const BracketShape> left_;
  std::shared_ptr<const BracketShape> right_;
};

/// All bracketings with n leaves in canonical order (Catalan(n-1) of them).
/// For n = 5 the order is w_1 = (((xx)x)x)x, ..., w_14 = x(x(x(xx))).
const std::vector<BracketShape>& shapes_of_degree(std::size_t n);

/// Index of `s` in shapes_of_degree(s.degree()).
std::size_t shape_index(const BracketShape& s);

BracketShape left_comb(std::size_t n);
BracketShape right_comb(std::size_t n);

/// A shape with variables on its leaves: leaf p (left to right) carries
/// variable perm[p], 0-based.
struct MultilinearMonomial {
  BracketShape shape;
  std::vector<std::size_t> perm;

  std::size_t degree() const noexcept { return perm.size(); }
  /// Human form with 1-based variables, e.g. "(x1x3)x2".
  std::string str() const;
  /// Parses the human form; every variable 1..n must occur exactly once.
  static MultilinearMonomial parse(std::string_view text);

  friend bool operator==(const MultilinearMonomial&, const MultilinearMonomial&) = default;
};

std::size_t factorial(std::size_t n);

/// Rank of a permutation of 0..n-1 in lexicographic order.
std::size_t permutation_rank(const std::vector<std::size_t>& perm);
std::vector<std::size_t> permutation_unrank(std::size_t rank, std::size_t n);
int permutation_sign(const std::vector<std::size_t>& perm);

/// Number of multilinear monomials of degree n: Catalan(n-1) * n!.
std::size_t monomial_count(std::size_t n);

/// Canonical column of a monomial: shape index * n! + permutation rank.
std::size_t monomial_column(const MultilinearMonomial& m);
MultilinearMonomial monomial_at(std::size_t n, std::size_t column);

/// Every monomial of degree n (2 <= n <= 5) in canonical column order.
std::vector<MultilinearMonomial> enumerate_monomials(std::size_t n);

void check_degree(std::size_t n);

} // namespace nonassoc

#endif
