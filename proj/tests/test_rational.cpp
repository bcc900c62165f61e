#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_set>

#include "nonassoc/rational.hpp"

using nonassoc::Rational;

TEST_CASE("rational arithmetic in lowest terms") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, -5).str() == "0");
  CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational ordering and sign") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(-7, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(1, 9).sign() == 1);
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(Rational(5, 2).is_integer());
}

TEST_CASE("overflow promotes to GMP and demotes back") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational x(big);
  Rational y = x + Rational(1);
  CHECK_FALSE(y.is_small());
  CHECK(y.str() == "9223372036854775808");
  Rational z = y - Rational(1);
  CHECK(z.is_small());
  CHECK(z == x);

  Rational sq = x * x;
  CHECK_FALSE(sq.is_small());
  CHECK(sq / x == x);
  CHECK((sq / x).is_small());

  Rational m(std::numeric_limits<std::int64_t>::min());
  CHECK(-(-m) == m);
  CHECK((-m).str() == "9223372036854775808");

  Rational tiny(1, big);
  CHECK((tiny * tiny).denominator() == mpz_class(big) * big);
}

TEST_CASE("small and big paths agree with mpq") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int t = 0; t < 2000; ++t) {
    std::int64_t p = d(rng), q = d(rng), r = d(rng), s = d(rng);
    if (q == 0 || s == 0) continue;
    mpq_class a{mpz_class(p), mpz_class(q)}, b{mpz_class(r), mpz_class(s)};
    a.canonicalize();
    b.canonicalize();
    Rational ra(p, q), rb(r, s);
    CHECK((ra * rb).to_mpq() == a * b);
    CHECK((ra + rb).to_mpq() == a + b);
    CHECK((ra - rb).to_mpq() == a - b);
    if (r != 0) CHECK((ra / rb).to_mpq() == a / b);
    Rational acc = ra;
    acc.sub_mul(rb, ra);
    CHECK(acc.to_mpq() == a - b * a);
  }
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse("10/-4"), std::invalid_argument);
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("hash respects equality across representations") {
  Rational a(2, 4);
  Rational b = Rational::parse("1/2");
  CHECK(a.hash() == b.hash());
  Rational big = Rational::parse("100000000000000000000");
  Rational same = Rational::parse("300000000000000000000") / Rational(3);
  CHECK(big == same);
  CHECK(big.hash() == same.hash());
  std::unordered_set<Rational> s{Rational(1), Rational(2, 2), Rational(-1), big, same};
  CHECK(s.size() == 3);
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Rational(-5, 10);
  CHECK(os.str() == "-1/2");
}
