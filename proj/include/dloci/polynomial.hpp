#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dloci/param_scalar.hpp"

namespace dloci {

/// Ordered list of named generators, each with a positive integer weight
/// (the degree a generator contributes to a monomial).
class VariableTable {
 public:
  struct Variable {
    std::string name;
    unsigned weight = 1;
    friend bool operator==(const Variable&, const Variable&) = default;
  };

  explicit VariableTable(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of, but throws UnknownVariable.
  std::size_t require(std::string_view name) const;
  unsigned min_weight() const;

  friend bool operator==(const VariableTable& a, const VariableTable& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

VariableTablePtr make_variables(std::vector<VariableTable::Variable> vars);

/// Exponent vector tagged with its weighted degree.
struct Monomial {
  unsigned degree = 0;
  std::vector<std::uint16_t> exps;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex: lower weighted degree first; within a degree, larger
/// exponent of earlier variables first (x^2 < xy < y^2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exps > b.exps;
  }
};

/// Sparse commutative polynomial over a VariableTable with ParamScalar
/// coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, ParamScalar, MonomialOrder>;

  explicit Polynomial(VariableTablePtr vars);

  static Polynomial constant(VariableTablePtr vars, const ParamScalar& c);
  static Polynomial variable(VariableTablePtr vars, std::string_view name);
  static Polynomial monomial(VariableTablePtr vars, const std::vector<std::uint16_t>& exps,
                             const ParamScalar& c);

  const VariableTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool same_variables(const Polynomial& o) const;

  Monomial make_monomial(std::vector<std::uint16_t> exps) const;
  ParamScalar coefficient(const std::vector<std::uint16_t>& exps) const;
  ParamScalar constant_term() const;
  void add_term(const Monomial& m, const ParamScalar& c);

  /// Weighted degree shared by every term, nullopt if mixed; zero has none.
  std::optional<unsigned> homogeneous_degree() const;
  std::optional<unsigned> min_degree() const;
  std::optional<unsigned> max_degree() const;

  Polynomial truncated(unsigned max_degree) const;
  Polynomial homogeneous_part(unsigned degree) const;
  Polynomial one_like() const { return constant(vars_, ParamScalar(1)); }
  Polynomial zero_like() const { return Polynomial(vars_); }

  /// Product keeping only monomials of weighted degree <= max_degree.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b,
                             std::optional<unsigned> max_degree = std::nullopt);

  Polynomial map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& f) const;
  /// Re-express over a table containing every variable of this one (by name).
  Polynomial lifted(VariableTablePtr target) const;

  std::string str() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const ParamScalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(Polynomial a, const ParamScalar& c) { return a *= c; }
  friend Polynomial operator*(const ParamScalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= ParamScalar(c); }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= ParamScalar(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_compatible(const Polynomial& o) const;

  VariableTablePtr vars_;
  TermMap terms_;
};

/// Ring homomorphism: sends the i-th variable of `p` to images[i] (all
/// images over `target`).
Polynomial substitute(const Polynomial& p, const VariableTablePtr& target, const std::vector<Polynomial>& images);

}  // namespace dloci
