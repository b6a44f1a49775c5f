#include "koszul/rational.hpp"

#include <cctype>
#include <ostream>

#include "koszul/error.hpp"

namespace koszul {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    fail(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::SingularMatrix, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(Rational const& o) {
  if (o.is_zero()) fail(ErrorCode::SingularMatrix, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.str(); }

}  // namespace koszul
