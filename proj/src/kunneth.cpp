#include "dloci/kunneth.hpp"

#include <string>

#include "dloci/error.hpp"

namespace dloci {

KunnethClass::KunnethClass(ManifoldPtr m, VariableTablePtr base)
    : m_(std::move(m)), base_(std::move(base)), unit_(base_), beta_(m_->b2(), BaseClass(base_)), top_(base_) {}

KunnethClass KunnethClass::cross(ManifoldPtr m, const BaseClass& b, XBasis e) {
  KunnethClass out(std::move(m), b.vars());
  out.component(e) = b;
  return out;
}

KunnethClass KunnethClass::cross(const VariableTablePtr& base, const CohClassX& h) {
  KunnethClass out(h.manifold(), base);
  out.unit_ = BaseClass::constant(base, h.deg0());
  for (std::size_t j = 0; j < out.beta_.size(); ++j) out.beta_[j] = BaseClass::constant(base, h.deg2()[j]);
  out.top_ = BaseClass::constant(base, h.deg4());
  return out;
}

const BaseClass& KunnethClass::component(XBasis e) const {
  return const_cast<KunnethClass*>(this)->component(e);
}

BaseClass& KunnethClass::component(XBasis e) {
  switch (e.kind) {
    case XBasis::Kind::Unit: return unit_;
    case XBasis::Kind::PointDual: return top_;
    case XBasis::Kind::Beta:
      if (e.index >= beta_.size())
        throw Error(ErrorCode::UnknownBasis, "beta*_" + std::to_string(e.index + 1) + " with b2 = " +
                                                 std::to_string(beta_.size()));
      return beta_[e.index];
  }
  throw std::logic_error("bad XBasis");
}

bool KunnethClass::is_zero() const {
  if (!unit_.is_zero() || !top_.is_zero()) return false;
  for (const auto& b : beta_)
    if (!b.is_zero()) return false;
  return true;
}

std::optional<unsigned> KunnethClass::homogeneous_degree() const {
  std::optional<unsigned> deg;
  bool mixed = false;
  auto visit = [&](const BaseClass& b, unsigned xdeg) {
    if (b.is_zero()) return;
    const auto d = b.homogeneous_degree();
    if (!d) {
      mixed = true;
      return;
    }
    if (deg && *deg != *d + xdeg) mixed = true;
    deg = *d + xdeg;
  };
  visit(unit_, 0);
  for (const auto& b : beta_) visit(b, 2);
  visit(top_, 4);
  if (mixed) return std::nullopt;
  return deg;
}

KunnethClass KunnethClass::truncated(unsigned max_degree) const {
  KunnethClass out(m_, base_);
  out.unit_ = unit_.truncated(max_degree);
  if (max_degree >= 2)
    for (std::size_t j = 0; j < beta_.size(); ++j) out.beta_[j] = beta_[j].truncated(max_degree - 2);
  if (max_degree >= 4) out.top_ = top_.truncated(max_degree - 4);
  return out;
}

KunnethClass KunnethClass::one_like() const {
  return cross(m_, BaseClass::constant(base_, ParamScalar(1)), XBasis::unit());
}

void KunnethClass::require_compatible(const KunnethClass& o) const {
  if (m_ != o.m_ && m_->q() != o.m_->q())
    throw Error(ErrorCode::IncompatibleSeries, "Kunneth classes over different manifolds");
  if (!(base_ == o.base_ || *base_ == *o.base_))
    throw Error(ErrorCode::IncompatibleSeries, "Kunneth classes over different base generators");
}

KunnethClass KunnethClass::multiply(const KunnethClass& a, const KunnethClass& b,
                                    std::optional<unsigned> max_degree) {
  a.require_compatible(b);
  auto bound = [&](unsigned xdeg) -> std::optional<unsigned> {
    if (!max_degree) return std::nullopt;
    return *max_degree >= xdeg ? std::optional<unsigned>(*max_degree - xdeg) : std::nullopt;
  };
  KunnethClass out(a.m_, a.base_);
  const std::size_t d = a.beta_.size();
  const bool fits2 = !max_degree || *max_degree >= 2;
  const bool fits4 = !max_degree || *max_degree >= 4;

  out.unit_ = BaseClass::multiply(a.unit_, b.unit_, bound(0));
  if (fits2) {
    for (std::size_t j = 0; j < d; ++j) {
      out.beta_[j] = BaseClass::multiply(a.unit_, b.beta_[j], bound(2));
      out.beta_[j] += BaseClass::multiply(a.beta_[j], b.unit_, bound(2));
    }
  }
  if (fits4) {
    out.top_ = BaseClass::multiply(a.unit_, b.top_, bound(4));
    out.top_ += BaseClass::multiply(a.top_, b.unit_, bound(4));
    // beta*_j ⌣ beta*_l = Q_{jl} PD[x]
    const auto& q = a.m_->q();
    for (std::size_t j = 0; j < d; ++j) {
      if (a.beta_[j].is_zero()) continue;
      BaseClass paired(a.base_);
      for (std::size_t l = 0; l < d; ++l)
        if (q[j][l] != 0 && !b.beta_[l].is_zero()) paired += b.beta_[l] * Rational(static_cast<long>(q[j][l]));
      out.top_ += BaseClass::multiply(a.beta_[j], paired, bound(4));
    }
  }
  return out;
}

KunnethClass& KunnethClass::operator+=(const KunnethClass& o) {
  require_compatible(o);
  unit_ += o.unit_;
  for (std::size_t j = 0; j < beta_.size(); ++j) beta_[j] += o.beta_[j];
  top_ += o.top_;
  return *this;
}

KunnethClass& KunnethClass::operator-=(const KunnethClass& o) {
  require_compatible(o);
  unit_ -= o.unit_;
  for (std::size_t j = 0; j < beta_.size(); ++j) beta_[j] -= o.beta_[j];
  top_ -= o.top_;
  return *this;
}

KunnethClass& KunnethClass::operator*=(const ParamScalar& c) {
  unit_ *= c;
  for (auto& b : beta_) b *= c;
  top_ *= c;
  return *this;
}

bool operator==(const KunnethClass& a, const KunnethClass& b) {
  return a.m_->q() == b.m_->q() && a.unit_ == b.unit_ && a.beta_ == b.beta_ && a.top_ == b.top_;
}

KunnethClass cup(const KunnethClass& a, const KunnethClass& b) { return KunnethClass::multiply(a, b); }

BaseClass slant(const KunnethClass& a, HomologyClass h) {
  switch (h.kind) {
    case HomologyClass::Kind::Point: return a.component(XBasis::unit());
    case HomologyClass::Kind::Fundamental: return a.component(XBasis::point_dual());
    case HomologyClass::Kind::Beta: {
      const auto& q = a.manifold()->q();
      if (h.index >= q.size())
        throw Error(ErrorCode::UnknownBasis, "beta_" + std::to_string(h.index + 1) + " with b2 = " +
                                                 std::to_string(q.size()));
      // <beta*_j, beta_k> = Q_{jk}
      BaseClass out(a.base());
      for (std::size_t j = 0; j < q.size(); ++j)
        if (q[j][h.index] != 0) out += a.component(XBasis::beta(j)) * Rational(static_cast<long>(q[j][h.index]));
      return out;
    }
  }
  throw std::logic_error("bad HomologyClass");
}

BaseClass mu_class(const FourManifold& m, std::size_t i) {
  if (i >= m.b2()) throw Error(ErrorCode::UnknownBasis, "mu_" + std::to_string(i + 1));
  return BaseClass::variable(m.base_generators(), "mu_" + std::to_string(i + 1));
}

BaseClass point_class(const FourManifold& m) { return BaseClass::variable(m.base_generators(), "wp"); }

BaseClass mu_t_class(const FourManifold& m, const IntVector& lambda) {
  if (lambda.size() != m.b2())
    throw Error(ErrorCode::UnknownBasis, "lambda has " + std::to_string(lambda.size()) + " entries, b2 = " +
                                             std::to_string(m.b2()));
  BaseClass out(m.base_generators());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] != 0) out += mu_class(m, i) * Rational(static_cast<long>(lambda[i]));
  return out;
}

BaseClass omega_class(const FourManifold& m) {
  BaseClass out(m.base_generators());
  for (std::size_t i = 0; i < m.b2(); ++i)
    for (std::size_t j = 0; j < m.b2(); ++j)
      if (!m.p()[i][j].is_zero()) out += mu_class(m, i) * mu_class(m, j) * m.p()[i][j];
  return out;
}

KunnethClass universal_p1(const ManifoldPtr& m, const ParamScalar& kappa) {
  const auto& base = m->base_generators();
  KunnethClass out(m, base);
  out.component(XBasis::unit()) = point_class(*m) * Rational(-4);
  for (std::size_t j = 0; j < m->b2(); ++j) {
    BaseClass coeff(base);
    for (std::size_t i = 0; i < m->b2(); ++i)
      if (!m->p()[i][j].is_zero()) coeff += mu_class(*m, i) * m->p()[i][j];
    out.component(XBasis::beta(j)) = coeff * Rational(-4);
  }
  out.component(XBasis::point_dual()) = BaseClass::constant(base, kappa * Rational(-4));
  return out;
}

KunnethClass universal_c1(const ManifoldPtr& m, const IntVector& w) {
  return KunnethClass::cross(m->base_generators(), CohClassX::degree2(m, w));
}

}  // namespace dloci
