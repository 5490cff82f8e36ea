#include "dloci/chern_expansion.hpp"

#include <stdexcept>

namespace dloci {

std::string Triple::str() const {
  return "(" + std::to_string(i) + "," + std::to_string(2 * j) + "," + std::to_string(2 * k) + ")";
}

std::vector<Triple> triples_of_degree(unsigned r) {
  std::vector<Triple> out;
  for (unsigned i = r + 1; i-- > 0;) {
    if ((r - i) % 2 != 0) continue;
    const unsigned half = (r - i) / 2;
    for (unsigned j = half + 1; j-- > 0;) out.push_back({i, j, half - j});
  }
  return out;
}

std::string to_string(ExpansionRole role) {
  switch (role) {
    case ExpansionRole::Chern: return "chern";
    case ExpansionRole::PowerSum: return "power-sum";
    case ExpansionRole::LogCoefficient: return "log-coefficient";
  }
  return "?";
}

ParamScalar ChernExpansion::coefficient(unsigned i, unsigned two_j, unsigned two_k) const {
  if (two_j % 2 != 0 || two_k % 2 != 0) return ParamScalar();
  return at({i, two_j / 2, two_k / 2});
}

ParamScalar ChernExpansion::at(const Triple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void ChernExpansion::set(const Triple& t, const ParamScalar& c) {
  if (c.is_zero())
    terms_.erase(t);
  else
    terms_[t] = c;
}

void ChernExpansion::add(const Triple& t, const ParamScalar& c) { set(t, at(t) + c); }

std::vector<std::pair<Triple, ParamScalar>> ChernExpansion::slice(unsigned r) const {
  std::vector<std::pair<Triple, ParamScalar>> out;
  for (const auto& [t, c] : terms_)
    if (t.degree() == r) out.emplace_back(t, c);
  return out;
}

Polynomial ChernExpansion::slice_polynomial(unsigned r) const {
  Polynomial p(tautological_generators());
  for (const auto& [t, c] : terms_)
    if (t.degree() == r)
      p.add_term(p.make_monomial({static_cast<std::uint16_t>(t.i), static_cast<std::uint16_t>(t.j),
                                  static_cast<std::uint16_t>(t.k)}),
                 c);
  return p;
}

void ChernExpansion::add_polynomial(const Polynomial& p) {
  if (!(*p.vars() == *tautological_generators()))
    throw std::invalid_argument("polynomial is not over the tautological generators");
  for (const auto& [m, c] : p.terms()) add({m.exps[0], m.exps[1], m.exps[2]}, c);
}

ChernExpansion ChernExpansion::map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& f) const {
  ChernExpansion out(role_, max_r_);
  for (const auto& [t, c] : terms_) out.set(t, f(c));
  return out;
}

const VariableTablePtr& tautological_generators() {
  static const VariableTablePtr table = make_variables({{"mu_t", 2}, {"Omega", 4}, {"wp", 4}});
  return table;
}

}  // namespace dloci
