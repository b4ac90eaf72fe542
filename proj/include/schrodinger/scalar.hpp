#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace schrodinger {

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Thin value wrapper over mpq_class so that gmpxx expression
/// templates never escape into client code.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral T>
  Scalar(T n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Scalar(long num, long den);
  explicit Scalar(mpq_class v);
  Scalar(const mpz_class& num, const mpz_class& den);

  /// Accepts "n", "-n", "p/q" with q != 0. Floats and whitespace are rejected.
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Scalar floor() const;
  Scalar abs() const;

  /// Integer value if the scalar is integral and fits in a long.
  std::optional<long> to_long() const;

  /// "n" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q" (integers as "n/1").
  std::string fraction_str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Binomial coefficient over nonnegative machine integers, exact.
Scalar binomial(long n, long k);

}  // namespace schrodinger
