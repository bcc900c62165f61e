#ifndef NONASSOC_IDENTITY_HPP
#define NONASSOC_IDENTITY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonassoc/algebra.hpp"
#include "nonassoc/monomial.hpp"

namespace nonassoc {

/// A multilinear element of the free nonassociative algebra: a rational
/// coefficient for every monomial of one degree, in canonical column order.
class IdentityCombination {
public:
  IdentityCombination() = default;
  explicit IdentityCombination(std::size_t degree);
  IdentityCombination(std::size_t degree, Vector coefficients);

  /// Builds from human-readable terms, e.g. {{1, "x1(x2x3)"}, {-1, "x2(x1x3)"}}.
  static IdentityCombination from_terms(std::size_t degree,
                                        const std::vector<std::pair<Rational, std::string>>& terms);

  std::size_t degree() const noexcept { return degree_; }
  const Vector& coefficients() const noexcept { return coeffs_; }
  const Rational& coefficient(std::size_t column) const { return coeffs_.at(column); }

  void add(const MultilinearMonomial& m, const Rational& c);
  bool is_zero() const;

  /// Nonzero terms in column order.
  std::vector<std::pair<Rational, MultilinearMonomial>> terms() const;
  std::string str() const;

  IdentityCombination operator+(const IdentityCombination& o) const;
  IdentityCombination operator-(const IdentityCombination& o) const;
  IdentityCombination operator*(const Rational& s) const;
  friend IdentityCombination operator*(const Rational& s, const IdentityCombination& c) { return c * s; }

  friend bool operator==(const IdentityCombination&, const IdentityCombination&) = default;

private:
  std::size_t degree_ = 0;
  Vector coeffs_;
};

/// Memoized evaluation of bracket shapes on basis vectors of one algebra.
///
/// The value of a shape of degree d is tabulated over all dim^d assignments
/// of basis vectors to its leaves (leaf 0 is the most significant digit of
/// the assignment code), built from the tables of its two factors.  Tables
/// are filled lazily; an evaluator is not safe to share between threads.
class MonomialEvaluator {
public:
  explicit MonomialEvaluator(const Algebra& a);

  std::size_t dim() const noexcept { return n_; }

  /// Value of `s` with leaf p set to e_{leaves[p]}.
  std::span<const Rational> shape_value(const BracketShape& s, std::size_t leaf_code);

  /// Code of a leaf assignment.
  std::size_t encode(std::span<const std::size_t> leaves) const;

  /// Product of two coordinate vectors using the cached basis products.
  void multiply_into(std::span<const Rational> x, std::span<const Rational> y, std::span<Rational> out) const;

private:
  struct Cell {
    std::size_t k;
    Rational c;
  };
  const std::vector<Rational>& table(const BracketShape& s);

  std::size_t n_;
  std::vector<std::vector<Cell>> cells_;  // i*n + j -> nonzero coordinates of e_i e_j
  std::map<std::string, std::vector<Rational>> tables_;
};

/// Value of monomial m at x_i = e_{args[i]} (0-based basis indices).
Vector evaluate_monomial(const Algebra& a, const MultilinearMonomial& m, std::span<const std::size_t> args);

/// Leaf assignment of monomial m at x_i = e_{args[i]}: leaf p gets args[perm[p]].
std::vector<std::size_t> leaf_assignment(const MultilinearMonomial& m, std::span<const std::size_t> args);

struct IdentitySpace {
  std::size_t degree = 0;
  std::size_t dimension = 0;
  std::vector<IdentityCombination> basis;  // canonical (reduced) basis
};

/// All multilinear identities of degree n that vanish on a.  Rows of the
/// evaluation system (basis tuple x output coordinate) are generated in
/// lexicographic order and streamed through one RankSink.
IdentitySpace identity_space(const Algebra& a, std::size_t n);

/// The vanishing identities spanned by the n! relabellings of one shape.
/// shape_index is 1-based in canonical shape order.
IdentitySpace shape_identity_space(const Algebra& a, std::size_t n, std::size_t shape_index);

/// First basis tuple (0-based indices for x_1..x_n) where c does not vanish.
std::optional<std::vector<std::size_t>> find_violation(const Algebra& a, const IdentityCombination& c);
bool satisfies_identity(const Algebra& a, const IdentityCombination& c);

bool combination_in_span(const IdentityCombination& c, const std::vector<IdentityCombination>& basis);
/// True iff the two lists span the same subspace.
bool same_span(const std::vector<IdentityCombination>& a, const std::vector<IdentityCombination>& b);

/// st^n_1 (variant 1): sum over S_n of sign * (..((x_s1 x_s2) x_s3)..) x_sn.
/// st^n_2 (variant 2): sum over S_n of sign * x_sn(..(x_s3 (x_s2 x_s1))..).
IdentityCombination st_identity(std::size_t n, int variant);

/// The terminal identity as a degree-4 combination in (a, b, x, y) =
/// (x1, x2, x3, x4): the conservative identity with F(a,b) = (2ab + ba)/3
/// substituted and everything moved to one side.
IdentityCombination terminal_identity();

/// Resolves "st3_1", "st5_2", "terminal" and similar names.
std::optional<IdentityCombination> named_identity(const std::string& name);

/// Rational combinations of named identities, e.g. "2*st3_1 - 3*st3_2".
/// Throws std::invalid_argument on unknown names or mixed degrees.
IdentityCombination parse_identity_expression(const std::string& text);

} // namespace nonassoc

#endif
