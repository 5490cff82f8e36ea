#include "dloci/param_scalar.hpp"

#include <algorithm>
#include <map>

namespace dloci {
namespace {

bool term_less(std::uint16_t na1, std::uint16_t ka1, std::uint16_t na2, std::uint16_t ka2) {
  const unsigned d1 = na1 + ka1, d2 = na2 + ka2;
  if (d1 != d2) return d1 < d2;
  return na1 > na2;
}

Rational power(const Rational& base, unsigned exp) {
  Rational out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

ParamScalar power(const ParamScalar& base, unsigned exp) {
  ParamScalar out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

ParamScalar::ParamScalar(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({0, 0, c});
}

ParamScalar ParamScalar::na() { return monomial(1, 0); }
ParamScalar ParamScalar::ka() { return monomial(0, 1); }

ParamScalar ParamScalar::monomial(unsigned na_exp, unsigned ka_exp, const Rational& c) {
  ParamScalar out;
  if (!c.is_zero())
    out.terms_.push_back({static_cast<std::uint16_t>(na_exp), static_cast<std::uint16_t>(ka_exp), c});
  return out;
}

bool ParamScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].na == 0 && terms_[0].ka == 0);
}

Rational ParamScalar::constant_term() const { return coefficient(0, 0); }

Rational ParamScalar::coefficient(unsigned na_exp, unsigned ka_exp) const {
  for (const auto& t : terms_)
    if (t.na == na_exp && t.ka == ka_exp) return t.coeff;
  return Rational(0);
}

unsigned ParamScalar::total_degree() const {
  return terms_.empty() ? 0u : static_cast<unsigned>(terms_.back().na + terms_.back().ka);
}

void ParamScalar::add_term(std::uint16_t na, std::uint16_t ka, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{na, ka},
                             [](const Term& t, const std::pair<std::uint16_t, std::uint16_t>& key) {
                               return term_less(t.na, t.ka, key.first, key.second);
                             });
  if (it != terms_.end() && it->na == na && it->ka == ka) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{na, ka, c});
  }
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (is_constant() && o.is_constant()) {
    const Rational sum = constant_term() + o.constant_term();
    terms_.clear();
    if (!sum.is_zero()) terms_.push_back({0, 0, sum});
    return *this;
  }
  for (const auto& t : o.terms_) add_term(t.na, t.ka, t.coeff);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_constant()) return ParamScalar(b) *= a.terms_[0].coeff;
  if (b.is_constant()) return ParamScalar(a) *= b.terms_[0].coeff;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      out.add_term(static_cast<std::uint16_t>(x.na + y.na), static_cast<std::uint16_t>(x.ka + y.ka),
                   x.coeff * y.coeff);
  return out;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) { return *this = *this * o; }

ParamScalar& ParamScalar::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.na != y.na || x.ka != y.ka || x.coeff != y.coeff) return false;
  }
  return true;
}

Rational ParamScalar::evaluate(const Rational& na_value, const Rational& ka_value) const {
  Rational out(0);
  for (const auto& t : terms_) out += t.coeff * power(na_value, t.na) * power(ka_value, t.ka);
  return out;
}

ParamScalar ParamScalar::substitute(const ParamScalar& na_value, const ParamScalar& ka_value) const {
  ParamScalar out;
  for (const auto& t : terms_) out += power(na_value, t.na) * power(ka_value, t.ka) * t.coeff;
  return out;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    std::string mono;
    auto append = [&mono](const char* name, unsigned e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "·";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append("na", t.na);
    append("ka", t.ka);
    if (mono.empty()) {
      out += c.str();
    } else if (c == Rational(1)) {
      out += mono;
    } else {
      out += c.str() + "·" + mono;
    }
  }
  return out;
}

}  // namespace dloci
