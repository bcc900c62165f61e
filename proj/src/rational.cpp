#include "nonassoc/rational.hpp"

#include <cctype>
#include <ostream>

namespace nonassoc {

namespace {

using i128 = __int128;

constexpr i128 kMaxSmall = INT64_MAX;
constexpr i128 kMinSmall = -static_cast<i128>(INT64_MAX);

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t y = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<std::int64_t>(x);
}

bool fits(i128 num, i128 den) { return num >= kMinSmall && num <= kMaxSmall && den <= kMaxSmall; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(0), den_(1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    assign_canonical(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = gcd64(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : num_(0), den_(1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  assign_canonical(mpq_class(num, den));
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) { assign_canonical(mpq_class(q)); }

void Rational::promote_min() {
  big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(INT64_MIN)));
  num_ = 0;
  den_ = 1;
}

void Rational::assign_canonical(mpq_class&& q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

Rational Rational::from_mpq(mpq_class&& q) {
  Rational r;
  r.assign_canonical(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&]() { return std::invalid_argument("malformed rational \"" + std::string(text) + "\""); };
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') throw bad();
  std::string ns(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(ns, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: \"" + std::string(text) + "\"");
  return Rational(n, d);
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(mpq_class(-*big_));
  return Rational(Raw{}, -num_, den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return from_mpq(mpq_class(1 / *big_));
  if (num_ < 0) return Rational(Raw{}, -den_, -num_);
  return Rational(Raw{}, den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) return Rational(Rational::Raw{}, s, 1);
      return Rational::from_mpq(mpq_class(to_mpz(static_cast<i128>(a.num_) + b.num_)));
    }
    std::int64_t g = gcd64(a.den_, b.den_);
    i128 t = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
    if (t == 0) return Rational();
    i128 g2 = gcd128(t, g);
    i128 num = t / g2;
    i128 den = static_cast<i128>(a.den_ / g) * (b.den_ / g2);
    if (fits(num, den)) return Rational(Rational::Raw{}, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    return Rational::from_mpq(mpq_class(to_mpz(num), to_mpz(den)));
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(num, den)) return Rational(Rational::Raw{}, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    return Rational::from_mpq(mpq_class(to_mpz(num), to_mpz(den)));
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

void Rational::sub_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this = *this - a * b;
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace nonassoc
