#ifndef NONASSOC_CONSERVATIVE_HPP
#define NONASSOC_CONSERVATIVE_HPP

#include <array>
#include <cstddef>
#include <optional>

#include "nonassoc/algebra.hpp"

namespace nonassoc {

/// An associated multiplication F with [L_b, [L_a, P]] = -[L_{F(a,b)}, P].
struct ConservativeWitness {
  BilinearMap F;
  /// Dimension of the space of F' with [L_{F'(a,b)}, P] = 0 for all a, b.
  std::size_t freedom = 0;
};

/// Solves for F block by block: for fixed (a, b) the unknowns are the n
/// coordinates of F(e_a, e_b), with one equation per (x, y, k).  Returns the
/// particular solution with free variables set to zero, or nothing when some
/// block is inconsistent.
std::optional<ConservativeWitness> conservative_solve(const Algebra& a);

/// Basis 4-tuple (a, b, x, y), 0-based, at which the conservative identity
/// fails for F.
using Violation = std::array<std::size_t, 4>;

std::optional<Violation> find_conservative_violation(const Algebra& a, const BilinearMap& F);
bool verify_witness(const Algebra& a, const BilinearMap& F);

/// F(a, b) = (2ab + ba)/3.
BilinearMap terminal_F(const Algebra& a);

bool is_terminal(const Algebra& a);
std::optional<Violation> terminal_violation(const Algebra& a);

/// The conservative identity expanded into products, evaluated at basis
/// vectors: left side minus right side.  Independent of the operator form
/// used by the solver.
Vector conservative_residual(const Algebra& a, const BilinearMap& F, const Violation& abxy);

} // namespace nonassoc

#endif
