#include "dloci/polynomial.hpp"

#include <algorithm>
#include <set>

#include "dloci/error.hpp"

namespace dloci {

VariableTable::VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.weight == 0) throw std::invalid_argument("variable '" + v.name + "' has zero weight");
    if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable '" + v.name + "'");
  }
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VariableTable::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorCode::UnknownVariable, "no variable named '" + std::string(name) + "'");
}

unsigned VariableTable::min_weight() const {
  unsigned w = 0;
  for (const auto& v : vars_) w = (w == 0) ? v.weight : std::min(w, v.weight);
  return w;
}

VariableTablePtr make_variables(std::vector<VariableTable::Variable> vars) {
  return std::make_shared<const VariableTable>(std::move(vars));
}

Polynomial::Polynomial(VariableTablePtr vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(VariableTablePtr vars, const ParamScalar& c) {
  Polynomial out(std::move(vars));
  out.add_term(out.make_monomial({}), c);
  return out;
}

Polynomial Polynomial::variable(VariableTablePtr vars, std::string_view name) {
  Polynomial out(std::move(vars));
  std::vector<std::uint16_t> exps(out.vars_->size(), 0);
  exps[out.vars_->require(name)] = 1;
  out.add_term(out.make_monomial(std::move(exps)), ParamScalar(1));
  return out;
}

Polynomial Polynomial::monomial(VariableTablePtr vars, const std::vector<std::uint16_t>& exps,
                                const ParamScalar& c) {
  Polynomial out(std::move(vars));
  out.add_term(out.make_monomial(exps), c);
  return out;
}

bool Polynomial::same_variables(const Polynomial& o) const {
  return vars_ == o.vars_ || *vars_ == *o.vars_;
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (!same_variables(o))
    throw Error(ErrorCode::IncompatibleSeries, "operands use different variable tables");
}

Monomial Polynomial::make_monomial(std::vector<std::uint16_t> exps) const {
  if (exps.empty()) exps.assign(vars_->size(), 0);
  if (exps.size() != vars_->size())
    throw Error(ErrorCode::UnknownVariable, "exponent vector length does not match variable table");
  Monomial m{0, std::move(exps)};
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.degree += m.exps[i] * (*vars_)[i].weight;
  return m;
}

ParamScalar Polynomial::coefficient(const std::vector<std::uint16_t>& exps) const {
  auto it = terms_.find(make_monomial(exps));
  return it == terms_.end() ? ParamScalar() : it->second;
}

ParamScalar Polynomial::constant_term() const { return coefficient({}); }

void Polynomial::add_term(const Monomial& m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned lo = terms_.begin()->first.degree;
  const unsigned hi = terms_.rbegin()->first.degree;
  if (lo != hi) return std::nullopt;
  return lo;
}

std::optional<unsigned> Polynomial::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree;
}

std::optional<unsigned> Polynomial::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree > max_degree) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_)
    if (m.degree == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Polynomial Polynomial::multiply(const Polynomial& a, const Polynomial& b,
                                std::optional<unsigned> max_degree) {
  a.require_compatible(b);
  Polynomial out(a.vars_);
  const std::size_t n = a.vars_->size();
  Monomial m;
  m.exps.resize(n);
  for (const auto& [ma, ca] : a.terms_) {
    if (max_degree && ma.degree > *max_degree) break;
    for (const auto& [mb, cb] : b.terms_) {
      m.degree = ma.degree + mb.degree;
      if (max_degree && m.degree > *max_degree) break;
      for (std::size_t i = 0; i < n; ++i) m.exps[i] = static_cast<std::uint16_t>(ma.exps[i] + mb.exps[i]);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& f) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) out.add_term(m, f(c));
  return out;
}

Polynomial Polynomial::lifted(VariableTablePtr target) const {
  std::vector<std::size_t> where(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    where[i] = target->require((*vars_)[i].name);
    if ((*target)[where[i]].weight != (*vars_)[i].weight)
      throw Error(ErrorCode::IncompatibleSeries, "variable '" + (*vars_)[i].name + "' changes weight");
  }
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint16_t> exps(target->size(), 0);
    for (std::size_t i = 0; i < m.exps.size(); ++i) exps[where[i]] = m.exps[i];
    out.add_term(out.make_monomial(std::move(exps)), c);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c0] : terms_) {
    // A negative rational coefficient folds its sign into the separator.
    ParamScalar c = c0;
    const bool negative = c.is_constant() && c.constant_term().sign() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!mono.empty()) mono += "·";
      mono += (*vars_)[i].name;
      if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
    }
    const std::string coeff = c.str();
    const bool compound = !c.is_constant() && c.terms().size() > 1;
    if (mono.empty()) {
      out += compound ? "(" + coeff + ")" : coeff;
    } else if (c == ParamScalar(1)) {
      out += mono;
    } else {
      out += (compound ? "(" + coeff + ")" : coeff) + "·" + mono;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.same_variables(b) && a.terms_ == b.terms_;
}

Polynomial substitute(const Polynomial& p, const VariableTablePtr& target, const std::vector<Polynomial>& images) {
  if (images.size() != p.vars()->size())
    throw std::invalid_argument("substitute: one image per variable required");
  // powers[i][e] = images[i]^e, grown on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (auto& row : powers) row.push_back(Polynomial::constant(target, ParamScalar(1)));
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      while (powers[i].size() <= m.exps[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (m.exps[i] > 0) term = term * powers[i][m.exps[i]];
    }
    out += term;
  }
  return out;
}

}  // namespace dloci
