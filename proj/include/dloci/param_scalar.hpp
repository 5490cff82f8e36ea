#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dloci/rational.hpp"

namespace dloci {

/// Polynomial in the two formal parameters n_a ("na") and kappa ("ka") with
/// rational coefficients. Numeric values are the constant polynomials.
class ParamScalar {
 public:
  struct Term {
    std::uint16_t na = 0;
    std::uint16_t ka = 0;
    Rational coeff;
  };

  ParamScalar() = default;
  ParamScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamScalar(long c) : ParamScalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(int c) : ParamScalar(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static ParamScalar na();
  static ParamScalar ka();
  static ParamScalar monomial(unsigned na_exp, unsigned ka_exp, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the value itself when is_constant()).
  Rational constant_term() const;
  Rational coefficient(unsigned na_exp, unsigned ka_exp) const;
  unsigned total_degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  /// Substitute concrete values for both parameters.
  Rational evaluate(const Rational& na_value, const Rational& ka_value) const;
  /// Substitute arbitrary parameter polynomials (e.g. na -> c - ka).
  ParamScalar substitute(const ParamScalar& na_value, const ParamScalar& ka_value) const;

  /// Canonical text, graded by total degree with na before ka, e.g.
  /// "-1/2·na - 1/3·ka" or "3/2".
  std::string str() const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator*=(const Rational& c);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(ParamScalar a, const Rational& c) { return a *= c; }
  friend ParamScalar operator*(const Rational& c, ParamScalar a) { return a *= c; }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b);

  friend std::ostream& operator<<(std::ostream& os, const ParamScalar& p) { return os << p.str(); }

 private:
  void add_term(std::uint16_t na, std::uint16_t ka, const Rational& c);

  // Sorted by (na+ka, -na); never holds a zero coefficient.
  std::vector<Term> terms_;
};

}  // namespace dloci
