#include <doctest.h>

#include <random>

#include "nonassoc/linalg.hpp"
#include "oracles.hpp"

using namespace nonassoc;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t target_rank) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix left(rows, target_rank), right(target_rank, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < target_rank; ++k) left(r, k) = Rational(d(rng), 1 + (d(rng) + 3) % 3);
  for (std::size_t k = 0; k < target_rank; ++k)
    for (std::size_t c = 0; c < cols; ++c) right(k, c) = Rational(d(rng));
  return target_rank == 0 ? Matrix(rows, cols) : left * right;
}

} // namespace

TEST_CASE("rref of a fixed matrix") {
  Matrix m{{2, 4, 6}, {1, 2, 4}, {3, 6, 9}};
  RowEchelonBasis e = rref(m);
  REQUIRE(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.rows[0] == (Vector{1, 2, 0}));
  CHECK(e.rows[1] == (Vector{0, 0, 1}));
  RowEchelonBasis k = nullspace(m);
  REQUIRE(k.rank() == 1);
  CHECK(m * k.rows[0] == Vector(3));
}

TEST_CASE("solve_particular") {
  Matrix m{{1, 1}, {1, -1}};
  auto x = solve_particular(m, Vector{3, 1});
  REQUIRE(x);
  CHECK(*x == (Vector{2, 1}));
  Matrix singular{{1, 1}, {2, 2}};
  CHECK_FALSE(solve_particular(singular, Vector{1, 3}));
  auto y = solve_particular(singular, Vector{1, 2});
  REQUIRE(y);
  CHECK(singular * *y == (Vector{1, 2}));
}

TEST_CASE("rank-nullity and nullspace on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    std::size_t target = rng() % (std::min(rows, cols) + 1);
    Matrix m = random_matrix(rng, rows, cols, target);
    std::size_t r = rank(m);
    CHECK(r == oracle::rank(m));
    RowEchelonBasis k = nullspace(m);
    CHECK(r + k.rank() == cols);
    for (const auto& v : k.rows) CHECK(m * v == Vector(rows));
    CHECK(rank(m.transposed()) == r);
  }
}

TEST_CASE("streaming sink agrees with batch elimination on 1000 random matrices") {
  std::mt19937 rng(20261015);
  for (int t = 0; t < 1000; ++t) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 9;
    std::size_t target = rng() % (std::min(rows, cols) + 1);
    Matrix m = random_matrix(rng, rows, cols, target);
    RankSink sink(cols);
    std::size_t independent = 0;
    for (std::size_t r = 0; r < rows; ++r) independent += sink.feed(m.row(r));
    RowEchelonBasis batch = rref(m);
    CHECK(sink.rank() == batch.rank());
    CHECK(independent == batch.rank());
    CHECK(sink.basis() == batch);
    CHECK(sink.nullspace() == nullspace(m));
    CHECK(sink.saturated() == (batch.rank() == cols));
    for (std::size_t r = 0; r < rows; ++r) CHECK(sink.contains(m.row(r)));
  }
}

TEST_CASE("in_row_space") {
  RowEchelonBasis b = rref(Matrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(in_row_space(b, (Vector{2, 3, 5})));
  CHECK_FALSE(in_row_space(b, (Vector{0, 0, 1})));
}

TEST_CASE("dimension mismatches throw") {
  Matrix m(2, 3);
  CHECK_THROWS_AS(m * (Vector{1, 2}), DimensionMismatch);
  CHECK_THROWS_AS(m * Matrix(2, 2), DimensionMismatch);
  CHECK_THROWS_AS(m.append_row(Vector{1}), DimensionMismatch);
  CHECK_THROWS_AS(solve_particular(m, (Vector{1, 2, 3})), DimensionMismatch);
  RankSink sink(3);
  CHECK_THROWS_AS(sink.feed((Vector{1, 2})), DimensionMismatch);
  CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), DimensionMismatch);
}
