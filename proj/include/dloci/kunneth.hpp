#pragma once

#include <optional>
#include <vector>

#include "dloci/manifold.hpp"
#include "dloci/polynomial.hpp"

namespace dloci {

/// Element of H*(B): polynomial in mu_1..mu_d (degree 2) and wp (degree 4).
/// The same type also serves the tautological ring in mu(t), Omega, wp.
using BaseClass = Polynomial;

/// One of the basis classes 1, beta*_j (0-based j), PD[x] of H*(X).
struct XBasis {
  enum class Kind { Unit, Beta, PointDual };
  Kind kind = Kind::Unit;
  std::size_t index = 0;

  static XBasis unit() { return {Kind::Unit, 0}; }
  static XBasis beta(std::size_t j) { return {Kind::Beta, j}; }
  static XBasis point_dual() { return {Kind::PointDual, 0}; }
  unsigned degree() const { return kind == Kind::Unit ? 0u : (kind == Kind::Beta ? 2u : 4u); }
};

/// Homology class to slant against: beta_k, the point x, or [X].
struct HomologyClass {
  enum class Kind { Beta, Point, Fundamental };
  Kind kind = Kind::Point;
  std::size_t index = 0;

  static HomologyClass beta(std::size_t k) { return {Kind::Beta, k}; }
  static HomologyClass point() { return {Kind::Point, 0}; }
  static HomologyClass fundamental() { return {Kind::Fundamental, 0}; }
};

/// Element of H*(B) ⊗ H*(X), stored as one BaseClass per X-basis element.
/// Degrees are real cohomological degrees: total = base degree + X degree.
class KunnethClass {
 public:
  KunnethClass(ManifoldPtr m, VariableTablePtr base);

  /// b × e
  static KunnethClass cross(ManifoldPtr m, const BaseClass& b, XBasis e);
  /// 1 × h for h in H*(X).
  static KunnethClass cross(const VariableTablePtr& base, const CohClassX& h);

  const ManifoldPtr& manifold() const { return m_; }
  const VariableTablePtr& base() const { return base_; }
  const BaseClass& component(XBasis e) const;
  BaseClass& component(XBasis e);

  bool is_zero() const;
  std::optional<unsigned> homogeneous_degree() const;
  KunnethClass truncated(unsigned max_degree) const;
  KunnethClass one_like() const;

  /// Cup product; terms of total degree above max_degree are dropped.
  static KunnethClass multiply(const KunnethClass& a, const KunnethClass& b,
                               std::optional<unsigned> max_degree = std::nullopt);

  KunnethClass& operator+=(const KunnethClass& o);
  KunnethClass& operator-=(const KunnethClass& o);
  KunnethClass& operator*=(const ParamScalar& c);
  friend KunnethClass operator+(KunnethClass a, const KunnethClass& b) { return a += b; }
  friend KunnethClass operator-(KunnethClass a, const KunnethClass& b) { return a -= b; }
  friend KunnethClass operator*(const KunnethClass& a, const KunnethClass& b) { return multiply(a, b); }
  friend KunnethClass operator*(KunnethClass a, const ParamScalar& c) { return a *= c; }
  friend KunnethClass operator*(KunnethClass a, const Rational& c) { return a *= ParamScalar(c); }
  friend bool operator==(const KunnethClass& a, const KunnethClass& b);

 private:
  void require_compatible(const KunnethClass& o) const;

  ManifoldPtr m_;
  VariableTablePtr base_;
  BaseClass unit_;
  std::vector<BaseClass> beta_;
  BaseClass top_;
};

KunnethClass cup(const KunnethClass& a, const KunnethClass& b);

/// Slant product a / h. Throws UnknownBasis for an out-of-range beta index.
BaseClass slant(const KunnethClass& a, HomologyClass h);

/// p1 of the universal SO(3) bundle:
/// -4 wp×1 - 4 sum P^{ij} mu_i×beta*_j - 4 kappa (1×PD[x]).
KunnethClass universal_p1(const ManifoldPtr& m, const ParamScalar& kappa);
/// c1 of the universal U(2) bundle: 1 × (sum w_i beta*_i).
KunnethClass universal_c1(const ManifoldPtr& m, const IntVector& w);

/// mu_i (0-based), wp, mu(t) = sum lambda^i mu_i and Omega = sum P^{ij} mu_i mu_j
/// in the base generators of `m`.
BaseClass mu_class(const FourManifold& m, std::size_t i);
BaseClass point_class(const FourManifold& m);
BaseClass mu_t_class(const FourManifold& m, const IntVector& lambda);
BaseClass omega_class(const FourManifold& m);

}  // namespace dloci
