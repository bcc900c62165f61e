#include <doctest.h>

#include "nonassoc/catalog.hpp"
#include "oracles.hpp"

using namespace nonassoc;
using oracle::prod;
using oracle::vec;

namespace {

struct Entry {
  std::size_t i, j;
  Vector value;
};

void check_entries(const Algebra& a, const std::vector<Entry>& entries) {
  for (const auto& e : entries) {
    INFO(a.name << ": e" << e.i << " e" << e.j);
    CHECK(prod(a, e.i, e.j) == e.value);
  }
}

// Independent derivation count: n^3 equations in the n^2 entries of D.
std::size_t derivation_dim_oracle(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix sys(n * n * n, n * n);
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };  // D e_c = sum_r d(r, c) e_r
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = (i * n + j) * n + k;
        for (std::size_t l = 0; l < n; ++l) sys(row, var(k, l)) += a.c(i, j, l);
        for (std::size_t r = 0; r < n; ++r) {
          sys(row, var(r, i)) -= a.c(r, j, k);
          sys(row, var(r, j)) -= a.c(i, r, k);
        }
      }
  return n * n - oracle::rank(sys);
}

} // namespace

TEST_CASE("W2(big) spot checks") {
  Algebra w = catalog("W2(big)");
  CHECK(w.dim() == 8);
  check_entries(w, {
                       {1, 1, vec(8, {{1, -1}})},
                       {1, 2, vec(8, {{2, -3}})},
                       {1, 8, vec(8, {{8, -1}})},
                       {2, 3, vec(8, {{1, 2}})},
                       {2, 6, vec(8, {{5, -1}})},
                       {2, 7, vec(8, {{8, 1}})},
                       {3, 2, vec(8, {{1, -1}})},
                       {3, 3, vec(8, {{4, -3}})},
                       {4, 5, Vector(8)},
                       {5, 1, vec(8, {{1, -2}})},
                       {5, 8, vec(8, {{8, -2}})},
                       {6, 1, vec(8, {{3, 2}})},
                       {7, 3, vec(8, {{4, 3}})},
                       {8, 4, vec(8, {{4, -2}})},
                       {8, 7, vec(8, {{7, -1}})},
                   });
}

TEST_CASE("W2bar spot checks") {
  Algebra w = catalog("W2bar");
  check_entries(w, {
                       {2, 1, vec(8, {{2, 3}})},
                       {2, 3, Vector(8)},
                       {2, 7, Vector(8)},
                       {3, 2, Vector(8)},
                       {3, 5, vec(8, {{6, 1}})},
                       {6, 2, Vector(8)},
                       {7, 8, vec(8, {{7, 1}})},
                       {5, 2, vec(8, {{2, -3}})},
                       {8, 2, vec(8, {{2, 1}})},
                   });
}

TEST_CASE("S1bar spot checks") {
  Algebra s = catalog("S1bar");
  check_entries(s, {
                       {1, 1, Vector(8)},
                       {1, 2, Vector(8)},
                       {3, 3, vec(8, {{4, -3}})},
                       {3, 8, vec(8, {{7, -1}})},
                       {5, 1, vec(8, {{1, -2}})},
                       {5, 4, Vector(8)},
                       {6, 5, vec(8, {{6, -1}})},
                       {8, 4, vec(8, {{4, -2}})},
                       {2, 1, Vector(8)},
                   });
}

TEST_CASE("S5bar spot checks") {
  Algebra s = catalog("S5bar");
  check_entries(s, {
                       {1, 4, vec(8, {{4, 3}})},
                       {1, 5, vec(8, {{5, -1}})},
                       {3, 1, vec(8, {{3, -2}})},
                       {3, 5, Vector(8)},
                       {5, 1, Vector(8)},
                       {6, 1, vec(8, {{3, 2}})},
                       {7, 8, vec(8, {{7, 1}})},
                       {8, 6, vec(8, {{6, -1}})},
                   });
}

TEST_CASE("Sab_bar spot checks") {
  const Rational a(2, 3), b(-5, 4);
  Algebra s = catalog("Sab_bar(2/3,-5/4)");
  check_entries(s, {
                       {1, 2, vec(8, {{2, -3 + a}})},
                       {1, 4, vec(8, {{4, 3 - 2 * a}})},
                       {1, 8, vec(8, {{8, -1}})},
                       {3, 1, vec(8, {{3, -2}, {7, -a}})},
                       {3, 5, vec(8, {{6, 1}, {7, -b}})},
                       {3, 8, Vector(8)},
                       {5, 4, vec(8, {{4, -2 * b}})},
                       {5, 6, vec(8, {{6, -1 - b}})},
                       {6, 1, vec(8, {{3, 2}, {7, a}})},
                       {7, 5, vec(8, {{6, -1}, {7, b}})},
                       {8, 2, Vector(8)},
                   });
}

TEST_CASE("hat, double hat, tilde and double tilde spot checks") {
  check_entries(catalog("W2hat"), {
                                      {2, 3, vec(8, {{1, 2}})},
                                      {3, 2, vec(8, {{1, -1}})},
                                      {6, 2, vec(8, {{1, 1}})},
                                      {6, 8, vec(8, {{7, 1}})},
                                      {7, 1, Vector(8)},
                                      {8, 2, Vector(8)},
                                  });
  check_entries(catalog("W2hathat"), {
                                         {1, 8, vec(8, {{8, -1}})},
                                         {2, 7, vec(8, {{8, 1}})},
                                         {3, 8, vec(8, {{7, -1}})},
                                         {5, 1, Vector(8)},
                                         {6, 1, Vector(8)},
                                     });
  check_entries(catalog("W2tilde"), {
                                        {2, 3, Vector(8)},
                                        {2, 4, vec(8, {{3, 1}})},
                                        {2, 6, vec(8, {{5, -1}})},
                                        {3, 1, vec(8, {{3, -2}})},
                                        {3, 3, Vector(8)},
                                        {7, 1, vec(8, {{3, 2}})},
                                        {5, 1, Vector(8)},
                                    });
  check_entries(catalog("W2tildetilde"), {
                                             {1, 3, vec(8, {{3, 1}})},
                                             {2, 1, vec(8, {{2, 3}})},
                                             {2, 4, Vector(8)},
                                             {6, 1, vec(8, {{3, 2}})},
                                             {8, 8, Vector(8)},
                                         });
}

TEST_CASE("adapted W2bar equals a change of basis of W2bar") {
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{0, 0}, {2, 1}, {Rational(-3, 5), Rational(7, 2)}}) {
    Matrix basis = Matrix::identity(8);
    basis(0, 7) = a;
    basis(4, 7) = b;
    CHECK(change_basis(catalog("W2bar"), basis).same_table(w2bar_adapted(a, b)));
  }
  CHECK(catalog("W2bar").same_table(w2bar_adapted(0, 0)));
}

TEST_CASE("subalgebra tables equal restrictions of their parents") {
  Algebra w = catalog("W2(big)");
  for (const auto& s : w2_subalgebra_spans()) {
    INFO(s.name);
    CHECK(restrict(w, Subspace::of_basis_vectors(8, s.indices)).same_table(catalog(s.name)));
  }
  Algebra wb = catalog("W2bar");
  for (const auto& s : w2bar_subalgebra_spans()) {
    INFO(s.name);
    CHECK(restrict(wb, Subspace::of_basis_vectors(8, s.indices)).same_table(catalog(s.name)));
  }
  // B2 keeps e1, e3, ..., e8, so its e2 e4 is W2(big)'s e3 e5 = e6, which is B2's e5.
  CHECK(prod(catalog("B2"), 2, 4) == vec(7, {{5, 1}}));
}

TEST_CASE("derivation dimensions against an independent linear system") {
  for (const char* name : {"W2(big)", "W2bar", "S1bar", "E2", "D2", "W2tildetilde"}) {
    INFO(name);
    Algebra a = catalog(name);
    DerivationAlgebra d = derivation_algebra(a);
    CHECK(d.dimension == derivation_dim_oracle(a));
    CHECK(d.basis.size() == d.dimension);
    for (const auto& D : d.basis) CHECK(is_derivation(a, D));
  }
  CHECK(derivation_algebra(catalog("W2(big)")).dimension == 2);
  CHECK(derivation_algebra(catalog("W2bar")).dimension == 3);
}

TEST_CASE("derivation check on a hand-built map") {
  // Inner-type map: in E2 = <e1, e2> with e1e1 = -e1, e1e2 = -3e2, e2e1 = 3e2, the map e2 -> e2 is a derivation.
  Algebra e = catalog("E2");
  LinearMap D(2);
  D(1, 1) = 1;
  CHECK(is_derivation(e, D));
  LinearMap bad(2);
  bad(0, 0) = 1;
  CHECK_FALSE(is_derivation(e, bad));
}

TEST_CASE("ideals and subalgebras") {
  Algebra wb = catalog("W2bar");
  CHECK(is_ideal(wb, Subspace::of_basis_vectors(8, {2, 3, 4, 6, 7, 8})));
  CHECK_FALSE(is_ideal(wb, Subspace::of_basis_vectors(8, {1, 2})));
  Algebra w = catalog("W2(big)");
  CHECK(is_subalgebra(w, Subspace::of_basis_vectors(8, {1, 3, 4, 5, 6, 7, 8})));
  CHECK_FALSE(is_subalgebra(w, Subspace::of_basis_vectors(8, {2, 3})));
  CHECK_THROWS_AS(restrict(w, Subspace::of_basis_vectors(8, {2, 3})), NotASubalgebra);
  CHECK_THROWS_AS(Subspace::of_basis_vectors(8, {9}), std::out_of_range);
}

TEST_CASE("basis permutation is an isomorphism") {
  Algebra w = catalog("W2bar");
  std::vector<std::size_t> perm{7, 2, 0, 5, 1, 4, 3, 6};
  Algebra p = permute_basis(w, perm);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) CHECK(p.c(i, j, k) == w.c(perm[i], perm[j], perm[k]));
}

TEST_CASE("change_basis rejects singular input") {
  Matrix m = Matrix::identity(8);
  m(1, 1) = 0;
  CHECK_THROWS(change_basis(catalog("W2bar"), m));
  CHECK_THROWS_AS(change_basis(catalog("W2bar"), Matrix::identity(3)), DimensionMismatch);
}

TEST_CASE("catalog lookup errors and suggestions") {
  CHECK(catalog_entries().size() == 19);
  try {
    catalog("W2bra");
    FAIL("expected UnknownAlgebra");
  } catch (const UnknownAlgebra& e) {
    REQUIRE_FALSE(e.suggestions().empty());
    CHECK(e.suggestions().front() == "W2bar");
  }
  CHECK_THROWS_AS(catalog("Sab_bar"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("Sab_bar(1)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("Sab_bar(1,1/0)"), std::invalid_argument);
  CHECK(catalog("Sab_bar( 2 , 1 )").same_table(catalog("Sab_bar(2,1)")));
}
