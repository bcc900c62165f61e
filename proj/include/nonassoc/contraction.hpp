#ifndef NONASSOC_CONTRACTION_HPP
#define NONASSOC_CONTRACTION_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonassoc/algebra.hpp"

namespace nonassoc {

/// Exponents of t on each basis vector of the parametrized basis
/// E_i(t) = t^{s_i} e_i.  Standard IW contractions use s_i in {0, 1}.
struct ScaledBasis {
  std::vector<int> exponents;

  static ScaledBasis from_indices(std::size_t dim, const std::vector<std::size_t>& one_based_scaled);

  std::size_t dim() const noexcept { return exponents.size(); }
  /// 1-based indices with exponent 0, i.e. the subalgebra being kept.
  std::vector<std::size_t> unscaled() const;
};

/// Finite Laurent polynomial in t with rational coefficients.
class LaurentConstant {
public:
  void add(int exponent, const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const { return terms_.begin()->first; }
  /// Value at t = 0; requires no negative exponents.
  Rational at_zero() const;
  const std::map<int, Rational>& terms() const noexcept { return terms_; }

private:
  std::map<int, Rational> terms_;
};

class ContractionError : public std::runtime_error {
public:
  enum class Kind { NotSubalgebra, NegativePower };
  ContractionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// mu_{ij}^k(t) for the basis t^{s_i} e_i, indexed (i*n + j)*n + k.
std::vector<LaurentConstant> laurent_structure(const Algebra& a, const ScaledBasis& basis);

/// IW contraction of `a` with respect to the subalgebra spanned by the basis
/// vectors not listed in `scaled` (1-based).  Throws ContractionError when
/// the complement is not closed under the product.
Algebra iw_contract(const Algebra& a, const std::vector<std::size_t>& scaled, std::string name = {});

struct ContractionCheck {
  std::string target;
  std::string source;
  std::vector<std::size_t> scaled;
  bool matched = false;
  std::vector<std::string> mismatches;  // "e_i e_j: expected ..., computed ..."
};

/// Cell-by-cell differences between two tables of equal dimension.
std::vector<std::string> table_differences(const Algebra& expected, const Algebra& computed);

/// Recomputes every built-in contraction from its source and compares it
/// with the catalog table.  The S_{alpha,beta} family is checked at each of
/// the given parameter pairs.
std::vector<ContractionCheck> contraction_chain_check(
    const std::vector<std::pair<Rational, Rational>>& sab_params = {{2, 1}, {0, -3}, {-1, 1}, {0, 0}, {Rational(1, 2), Rational(-3, 7)}});

} // namespace nonassoc

#endif
