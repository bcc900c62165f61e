#include <doctest.h>

#include <random>

#include "nonassoc/catalog.hpp"
#include "nonassoc/cohomology.hpp"
#include "oracles.hpp"

using namespace nonassoc;

namespace {

IdentityCombination left_commutator() {
  return IdentityCombination::from_terms(3, {{1, "x1(x2x3)"}, {-1, "x2(x1x3)"}});
}

void compare_with_extension_oracle(const std::string& name, const IdentityCombination& P) {
  INFO(name << " with " << P.str());
  Algebra a = catalog(name);
  auto expected = oracle::cocycle_dim_by_extension(a, P);
  if (!expected) {
    CHECK_THROWS_AS(cocycle_space(a, P), BaseViolatesIdentity);
    return;
  }
  FormSpace z = cocycle_space(a, P);
  CHECK(z.dimension == *expected);
  for (const auto& theta : z.basis) CHECK(satisfies_identity(central_extension(a, theta), P));
}

} // namespace

TEST_CASE("cocycle spaces agree with the central extension oracle") {
  const auto st31 = st_identity(3, 1), st32 = st_identity(3, 2);
  compare_with_extension_oracle("D2", st31);
  compare_with_extension_oracle("E2", st32);
  compare_with_extension_oracle("W2tildetilde", st31);
  compare_with_extension_oracle("S2", st31);
  compare_with_extension_oracle("Sab_bar(2,1)", left_commutator());
  compare_with_extension_oracle("Sab_bar(0,-3)", st31 * Rational(2) + st32 * Rational(3));
  compare_with_extension_oracle("D2", st_identity(4, 1));
  compare_with_extension_oracle("E2", st_identity(4, 2));
}

TEST_CASE("central_extension layout") {
  Algebra a = catalog("D2");
  Matrix theta(3, 3);
  theta(0, 2) = Rational(5, 2);
  theta(1, 1) = -1;
  Algebra e = central_extension(a, theta);
  CHECK(e.same_table(oracle::extension(a, theta)));
  CHECK(e.dim() == 4);
  CHECK(e.c(0, 2, 3) == Rational(5, 2));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(oracle::prod(e, 4, i + 1) == Vector(4));
    CHECK(oracle::prod(e, i + 1, 4) == Vector(4));
  }
  CHECK_THROWS_AS(central_extension(a, Matrix(2, 2)), DimensionMismatch);
}

TEST_CASE("forms outside the cocycle space break the identity") {
  std::mt19937 rng(4);
  Algebra a = catalog("W2tildetilde");
  const auto P = st_identity(3, 1);
  FormSpace z = cocycle_space(a, P);
  std::vector<Vector> rows;
  for (const auto& t : z.basis) rows.push_back(flatten(t));
  Subspace zs = Subspace::span(64, rows);
  int outside = 0;
  for (int t = 0; t < 20; ++t) {
    Matrix theta(8, 8);
    theta(rng() % 8, rng() % 8) = 1 + static_cast<int>(rng() % 3);
    theta(rng() % 8, rng() % 8) = -1;
    bool in_z = zs.contains(flatten(theta));
    outside += !in_z;
    CHECK(satisfies_identity(central_extension(a, theta), P) == in_z);
  }
  CHECK(outside > 0);
}

TEST_CASE("coborders") {
  for (const char* name : {"D2", "E2", "S2", "W2(big)"}) {
    INFO(name);
    Algebra a = catalog(name);
    const std::size_t n = a.dim();
    Matrix slices(n, n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) slices(k, i * n + j) = a.c(i, j, k);
    FormSpace b = coborder_space(a);
    CHECK(b.dimension == oracle::rank(slices));
  }
  CHECK(coborder_space(catalog("D2")).dimension == 3);
  CHECK(coborder_space(catalog("E2")).dimension == 2);
}

TEST_CASE("coborders are cocycles when the base satisfies P") {
  Algebra a = catalog("E2");
  const auto P = st_identity(3, 1);
  CohomologyReport r = cohomology(a, P);
  CHECK(r.contained);
  CHECK(r.dim_B == 2);
  CHECK(r.dim_Z == 4);
  CHECK(r.dim_H == 2);
  for (const auto& f : coborder_space(a).basis) CHECK(satisfies_identity(central_extension(a, f), P));
}

TEST_CASE("zero algebra") {
  Algebra z("zero", 2);
  CohomologyReport r = cohomology(z, st_identity(3, 2));
  CHECK(r.dim_B == 0);
  CHECK(r.dim_Z == 4);
  CHECK(r.dim_H == 4);
  CHECK(terminal_cocycle_space(z).dimension == 4);
}

TEST_CASE("terminal cocycles") {
  for (const char* name : {"E2", "D2"}) {
    INFO(name);
    Algebra a = catalog(name);
    CohomologyReport r = cohomology(a, terminal_identity());
    CHECK(r.contained);
    CHECK(r.dim_H == 0);
    CHECK(terminal_cocycle_space(a).dimension == r.dim_Z);
    CHECK(oracle::cocycle_dim_by_extension(a, terminal_identity()) == r.dim_Z);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(cocycle_space(catalog("W2(big)"), st_identity(3, 1)), BaseViolatesIdentity);
  CHECK_THROWS_AS(cohomology(catalog("W2(big)"), st_identity(3, 1)), BaseViolatesIdentity);
  CHECK_THROWS_AS(terminal_cocycle_space(catalog("W2(big)")), NotTerminal);
  CHECK(std::string(BaseViolatesIdentity().what()) == "base does not satisfy P");
}

TEST_CASE("flatten and unflatten") {
  Matrix t(3, 3);
  t(1, 2) = 7;
  t(2, 0) = Rational(-1, 3);
  Vector f = flatten(t);
  CHECK(f[5] == Rational(7));
  CHECK(f[6] == Rational(-1, 3));
  CHECK(unflatten(f, 3) == t);
}
