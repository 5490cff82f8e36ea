#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dloci/param_scalar.hpp"
#include "dloci/polynomial.hpp"
#include "dloci/rational.hpp"

namespace dloci {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rational cohomology model of a closed oriented 4-manifold with b1 = 0:
/// Euler characteristic, signature, intersection form Q on H^2 in the basis
/// beta*_1..beta*_d and its exact inverse P.
class FourManifold {
 public:
  /// Validates Q (symmetric, unimodular) and the topology (d = chi - 2,
  /// signature(Q) = sigma); throws BadForm / NotUnimodular /
  /// InconsistentTopology.
  FourManifold(std::int64_t chi, std::int64_t sigma, IntMatrix q);

  std::int64_t chi() const { return chi_; }
  std::int64_t sigma() const { return sigma_; }
  std::size_t b2() const { return q_.size(); }
  const IntMatrix& q() const { return q_; }
  const RationalMatrix& p() const { return p_; }

  /// a^T Q b.
  Rational pairing(const IntVector& a, const IntVector& b) const;
  Rational pairing(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

  /// Generators of H*(B): mu_1..mu_d in degree 2 and wp in degree 4.
  const VariableTablePtr& base_generators() const { return base_; }

 private:
  std::int64_t chi_;
  std::int64_t sigma_;
  IntMatrix q_;
  RationalMatrix p_;
  VariableTablePtr base_;
};

using ManifoldPtr = std::shared_ptr<const FourManifold>;

ManifoldPtr manifold_new(std::int64_t chi, std::int64_t sigma, IntMatrix q);

/// Signature of a symmetric integer form by exact congruence diagonalisation.
std::int64_t signature(const IntMatrix& q);
Rational determinant(RationalMatrix m);
/// Exact inverse; throws NotUnimodular-free std::domain_error when singular.
RationalMatrix inverse(RationalMatrix m);
RationalMatrix to_rational(const IntMatrix& m);

namespace forms {
IntMatrix hyperbolic();
/// Positive definite E8 (Cartan matrix).
IntMatrix e8();
IntMatrix diagonal(const IntVector& entries);
IntMatrix negated(IntMatrix m);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
}  // namespace forms

/// Element of H*(X; Q) = H^0 + H^2 + H^4 (odd cohomology vanishes when b1 = 0).
class CohClassX {
 public:
  explicit CohClassX(ManifoldPtr m);

  static CohClassX unit(ManifoldPtr m, const ParamScalar& c = ParamScalar(1));
  static CohClassX degree2(ManifoldPtr m, const std::vector<ParamScalar>& h);
  static CohClassX degree2(ManifoldPtr m, const IntVector& h);
  static CohClassX point_dual(ManifoldPtr m, const ParamScalar& c = ParamScalar(1));

  const ManifoldPtr& manifold() const { return m_; }
  const ParamScalar& deg0() const { return deg0_; }
  const std::vector<ParamScalar>& deg2() const { return deg2_; }
  const ParamScalar& deg4() const { return deg4_; }

  bool is_zero() const;
  std::optional<unsigned> homogeneous_degree() const;
  CohClassX truncated(unsigned max_degree) const;
  CohClassX one_like() const { return unit(m_); }
  /// Evaluation on the fundamental class.
  ParamScalar integrate() const { return deg4_; }

  static CohClassX multiply(const CohClassX& a, const CohClassX& b,
                            std::optional<unsigned> max_degree = std::nullopt);

  CohClassX& operator+=(const CohClassX& o);
  CohClassX& operator-=(const CohClassX& o);
  CohClassX& operator*=(const ParamScalar& c);
  friend CohClassX operator+(CohClassX a, const CohClassX& b) { return a += b; }
  friend CohClassX operator-(CohClassX a, const CohClassX& b) { return a -= b; }
  friend CohClassX operator*(const CohClassX& a, const CohClassX& b) { return multiply(a, b); }
  friend CohClassX operator*(CohClassX a, const ParamScalar& c) { return a *= c; }
  friend CohClassX operator*(CohClassX a, const Rational& c) { return a *= ParamScalar(c); }
  friend bool operator==(const CohClassX& a, const CohClassX& b);

 private:
  void require_compatible(const CohClassX& o) const;

  ManifoldPtr m_;
  ParamScalar deg0_;
  std::vector<ParamScalar> deg2_;
  ParamScalar deg4_;
};

}  // namespace dloci
