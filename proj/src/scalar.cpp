#include "schrodinger/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace schrodinger {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t k = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) k = 1;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar::Scalar(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Scalar::Scalar(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    }
    return Scalar(mpq_class(to_mpz(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  const mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Scalar(to_mpz(num), d);
}

Scalar Scalar::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Scalar(mpq_class(q));
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(value_))); }

std::optional<long> Scalar::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

std::string Scalar::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Scalar::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(mpq_class(r));
}

}  // namespace schrodinger
