#include "dloci/rational.hpp"

#include <limits>
#include <stdexcept>

#include "dloci/error.hpp"

namespace dloci {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(text, 10)));
    return Rational(mpz_class(text.substr(0, slash), 10), mpz_class(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::overflow_error("rational " + str() + " is not a 64-bit integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division of " + str() + " by zero");
  v_ /= o.v_;
  return *this;
}

Rational factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(mpq_class(out));
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(mpq_class(out));
}

}  // namespace dloci
