#ifndef NONASSOC_COHOMOLOGY_HPP
#define NONASSOC_COHOMOLOGY_HPP

#include <optional>
#include <stdexcept>

#include "nonassoc/algebra.hpp"
#include "nonassoc/identity.hpp"

namespace nonassoc {

/// theta(e_i, e_j) = (i, j) entry.
using BilinearForm = Matrix;

class BaseViolatesIdentity : public std::invalid_argument {
public:
  BaseViolatesIdentity() : std::invalid_argument("base does not satisfy P") {}
};

class NotTerminal : public std::invalid_argument {
public:
  NotTerminal() : std::invalid_argument("not terminal") {}
};

struct FormSpace {
  std::size_t dimension = 0;
  std::vector<BilinearForm> basis;
};

/// Flattens theta to length n^2, index i * n + j.
Vector flatten(const BilinearForm& theta);
BilinearForm unflatten(std::span<const Rational> v, std::size_t n);

/// Span of f o mu over linear functionals f: the n forms (c_ij^k)_{ij}.
FormSpace coborder_space(const Algebra& a);

/// Forms theta whose one-dimensional central extension still satisfies P.
/// Each term of P contributes theta(u, v) where u and v are the values of
/// the two factors of its outermost product; one equation per basis tuple.
/// Throws BaseViolatesIdentity when P fails on a.
FormSpace cocycle_space(const Algebra& a, const IdentityCombination& P);

/// cocycle_space with P the terminal identity; throws NotTerminal.
FormSpace terminal_cocycle_space(const Algebra& a);

struct CohomologyReport {
  std::size_t dim_B = 0;
  std::size_t dim_Z = 0;
  bool contained = false;  // B^2 inside Z^2_P
  /// dim Z - dim B, only meaningful when contained.
  std::size_t dim_H = 0;
  /// Index k of a coborder c^k outside Z^2_P when not contained.
  std::optional<std::size_t> witness;
};

CohomologyReport cohomology(const Algebra& a, const IdentityCombination& P);

/// The (n+1)-dimensional algebra A + F c with (x, l)(y, m) = (xy, theta(x, y));
/// c is the last basis vector.
Algebra central_extension(const Algebra& a, const BilinearForm& theta);

} // namespace nonassoc

#endif
