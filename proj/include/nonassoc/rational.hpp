#ifndef NONASSOC_RATIONAL_HPP
#define NONASSOC_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nonassoc {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word
/// are kept inline; anything larger lives in a GMP mpq.  The representation
/// is canonical: a value is stored inline if and only if it fits, so two
/// equal rationals always have identical representations.
class Rational {
public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(int v) noexcept : num_(v), den_(1) {}
  Rational(long v) noexcept : num_(v), den_(1) { if (v == INT64_MIN) promote_min(); }
  Rational(long long v) noexcept : num_(v), den_(1) { if (v == INT64_MIN) promote_min(); }
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on malformed
  /// input or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  /// this -= a * b, the inner step of every elimination loop.
  void sub_mul(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::size_t hash() const;

private:
  struct Raw {};
  Rational(Raw, std::int64_t num, std::int64_t den) noexcept : num_(num), den_(den) {}

  void promote_min();
  void assign_canonical(mpq_class&& q);
  static Rational from_mpq(mpq_class&& q);

  std::int64_t num_;
  std::int64_t den_;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace nonassoc

template <>
struct std::hash<nonassoc::Rational> {
  std::size_t operator()(const nonassoc::Rational& r) const { return r.hash(); }
};

#endif
