#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dloci/polynomial.hpp"

namespace dloci {

/// Truncated multivariate formal power series: every stored monomial has
/// weighted degree <= order(). Arithmetic requires identical variable tables
/// and identical truncation orders; there is no implicit re-truncation.
class GradedSeries {
 public:
  GradedSeries(VariableTablePtr vars, unsigned order);
  /// Truncates `p` to `order`.
  GradedSeries(const Polynomial& p, unsigned order);

  static GradedSeries constant(VariableTablePtr vars, unsigned order, const ParamScalar& c);
  static GradedSeries variable(VariableTablePtr vars, unsigned order, std::string_view name);

  unsigned order() const { return order_; }
  const VariableTablePtr& vars() const { return poly_.vars(); }
  const Polynomial& polynomial() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  ParamScalar coefficient(const std::vector<std::uint16_t>& exps) const { return poly_.coefficient(exps); }
  ParamScalar constant_term() const { return poly_.constant_term(); }

  GradedSeries lifted(VariableTablePtr target) const;
  GradedSeries map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& f) const;
  std::string str() const { return poly_.str() + " + O(" + std::to_string(order_ + 1) + ")"; }

  GradedSeries operator-() const;
  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  GradedSeries& operator*=(const GradedSeries& o);
  GradedSeries& operator*=(const ParamScalar& c);

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const GradedSeries& b) { return a *= b; }
  friend GradedSeries operator*(GradedSeries a, const ParamScalar& c) { return a *= c; }
  friend GradedSeries operator*(const ParamScalar& c, GradedSeries a) { return a *= c; }
  friend GradedSeries operator*(GradedSeries a, const Rational& c) { return a *= ParamScalar(c); }
  friend GradedSeries operator*(const Rational& c, GradedSeries a) { return a *= ParamScalar(c); }

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.order_ == b.order_ && a.poly_ == b.poly_;
  }

 private:
  void require_compatible(const GradedSeries& o) const;

  Polynomial poly_;
  unsigned order_;
};

/// sum_{k>=0} u^k / k!; u must have zero constant term.
GradedSeries series_exp(const GradedSeries& u);
/// sum_{k>=1} (-1)^{k+1} u^k / k; u must have zero constant term.
GradedSeries series_log1p(const GradedSeries& u);
/// Formal antiderivative in `var` with zero constant of integration; terms
/// pushed above the truncation order are dropped.
GradedSeries series_integrate(const GradedSeries& q, std::string_view var);
/// Formal partial derivative in `var`.
GradedSeries series_derivative(const GradedSeries& q, std::string_view var);

enum class JSeries { J1 = 1, J2 = 2, J3 = 3 };

/// The even series J1 = arctan(z)/z, J2 = (z - arctan z)/z^3 and
/// J3 = -(na/2) log(1+z^2) + ka (arctan(z)/z - 1) in a single variable "z"
/// of weight 1, truncated at z^order. J3 carries symbolic na and ka.
GradedSeries j_series(JSeries which, unsigned order);
/// Same, over an explicit variable table whose variable `z` is the argument.
GradedSeries j_series(JSeries which, unsigned order, const VariableTablePtr& vars, std::string_view z);

}  // namespace dloci
