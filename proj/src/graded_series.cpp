#include "dloci/graded_series.hpp"

#include "dloci/error.hpp"

namespace dloci {

GradedSeries::GradedSeries(VariableTablePtr vars, unsigned order) : poly_(std::move(vars)), order_(order) {}

GradedSeries::GradedSeries(const Polynomial& p, unsigned order) : poly_(p.truncated(order)), order_(order) {}

GradedSeries GradedSeries::constant(VariableTablePtr vars, unsigned order, const ParamScalar& c) {
  return GradedSeries(Polynomial::constant(std::move(vars), c), order);
}

GradedSeries GradedSeries::variable(VariableTablePtr vars, unsigned order, std::string_view name) {
  return GradedSeries(Polynomial::variable(std::move(vars), name), order);
}

void GradedSeries::require_compatible(const GradedSeries& o) const {
  if (order_ != o.order_)
    throw Error(ErrorCode::IncompatibleSeries, "truncation orders differ (" + std::to_string(order_) +
                                                   " vs " + std::to_string(o.order_) + ")");
  if (!poly_.same_variables(o.poly_))
    throw Error(ErrorCode::IncompatibleSeries, "operands use different variable tables");
}

GradedSeries GradedSeries::lifted(VariableTablePtr target) const {
  return GradedSeries(poly_.lifted(std::move(target)), order_);
}

GradedSeries GradedSeries::map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& f) const {
  return GradedSeries(poly_.map_coefficients(f), order_);
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out(*this);
  out.poly_ = -out.poly_;
  return out;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  require_compatible(o);
  poly_ += o.poly_;
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  require_compatible(o);
  poly_ -= o.poly_;
  return *this;
}

GradedSeries& GradedSeries::operator*=(const GradedSeries& o) {
  require_compatible(o);
  poly_ = Polynomial::multiply(poly_, o.poly_, order_);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const ParamScalar& c) {
  poly_ *= c;
  return *this;
}

namespace {

void require_nilpotent(const GradedSeries& u, const char* op) {
  if (!u.constant_term().is_zero())
    throw Error(ErrorCode::NonNilpotentArgument,
                std::string(op) + " needs a zero constant term, got " + u.constant_term().str());
}

}  // namespace

GradedSeries series_exp(const GradedSeries& u) {
  require_nilpotent(u, "exp");
  GradedSeries sum = GradedSeries::constant(u.vars(), u.order(), ParamScalar(1));
  GradedSeries power = sum;
  // u^k has degree >= k, so the loop ends once k exceeds the order.
  for (unsigned k = 1; k <= u.order(); ++k) {
    power *= u;
    if (power.is_zero()) break;
    sum += power * (Rational(1) / factorial(k));
  }
  return sum;
}

GradedSeries series_log1p(const GradedSeries& u) {
  require_nilpotent(u, "log1p");
  GradedSeries sum(u.vars(), u.order());
  GradedSeries power = GradedSeries::constant(u.vars(), u.order(), ParamScalar(1));
  for (unsigned k = 1; k <= u.order(); ++k) {
    power *= u;
    if (power.is_zero()) break;
    sum += power * Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
  }
  return sum;
}

GradedSeries series_integrate(const GradedSeries& q, std::string_view var) {
  const std::size_t idx = q.vars()->require(var);
  Polynomial out(q.vars());
  for (const auto& [m, c] : q.polynomial().terms()) {
    auto exps = m.exps;
    const unsigned new_exp = exps[idx] + 1u;
    exps[idx] = static_cast<std::uint16_t>(new_exp);
    out.add_term(out.make_monomial(std::move(exps)), c * Rational(1, static_cast<long>(new_exp)));
  }
  return GradedSeries(out, q.order());
}

GradedSeries series_derivative(const GradedSeries& q, std::string_view var) {
  const std::size_t idx = q.vars()->require(var);
  Polynomial out(q.vars());
  for (const auto& [m, c] : q.polynomial().terms()) {
    if (m.exps[idx] == 0) continue;
    auto exps = m.exps;
    const long e = exps[idx];
    exps[idx] = static_cast<std::uint16_t>(e - 1);
    out.add_term(out.make_monomial(std::move(exps)), c * Rational(e));
  }
  return GradedSeries(out, q.order());
}

GradedSeries j_series(JSeries which, unsigned order) {
  return j_series(which, order, make_variables({{"z", 1}}), "z");
}

GradedSeries j_series(JSeries which, unsigned order, const VariableTablePtr& vars, std::string_view z) {
  const std::size_t zi = vars->require(z);
  const unsigned weight = (*vars)[zi].weight;
  Polynomial p(vars);
  auto z_power = [&](unsigned e, const ParamScalar& c) {
    std::vector<std::uint16_t> exps(vars->size(), 0);
    exps[zi] = static_cast<std::uint16_t>(e);
    p.add_term(p.make_monomial(std::move(exps)), c);
  };
  switch (which) {
    case JSeries::J1:
      // arctan(z)/z = sum (-1)^k z^{2k} / (2k+1)
      for (unsigned k = 0; 2 * k * weight <= order; ++k)
        z_power(2 * k, ParamScalar(sign_power(k) * Rational(1, 2 * k + 1)));
      return GradedSeries(p, order);
    case JSeries::J2:
      // (z - arctan z)/z^3 = sum_{k>=1} (-1)^{k+1} z^{2k-2} / (2k+1)
      for (unsigned k = 1; (2 * k - 2) * weight <= order; ++k)
        z_power(2 * k - 2, ParamScalar(sign_power(k + 1) * Rational(1, 2 * k + 1)));
      return GradedSeries(p, order);
    case JSeries::J3: {
      const GradedSeries zz = GradedSeries::variable(vars, order, z) * GradedSeries::variable(vars, order, z);
      const GradedSeries one = GradedSeries::constant(vars, order, ParamScalar(1));
      const GradedSeries log_part = series_log1p(zz) * (ParamScalar::na() * Rational(-1, 2));
      const GradedSeries atan_part = (j_series(JSeries::J1, order, vars, z) - one) * ParamScalar::ka();
      return log_part + atan_part;
    }
  }
  throw std::invalid_argument("unknown J series");
}

}  // namespace dloci
