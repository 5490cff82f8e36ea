#pragma once

#include <cstdint>
#include <vector>

#include "dloci/chern_expansion.hpp"
#include "dloci/kunneth.hpp"
#include "dloci/manifold.hpp"

namespace dloci {

/// Spin-u structure data: Lambda = c1(t) = sum lambda^i beta*_i,
/// kappa = -p1(t)/4, and an integer lift w of w2(t). Construction checks that
/// the Dirac index is an integer (NonIntegralIndex otherwise).
class SpinUStructure {
 public:
  SpinUStructure(ManifoldPtr m, IntVector lambda, std::int64_t kappa, IntVector w);

  const ManifoldPtr& manifold() const { return m_; }
  const IntVector& lambda() const { return lambda_; }
  std::int64_t kappa() const { return kappa_; }
  const IntVector& w() const { return w_; }
  std::int64_t n_a() const { return n_a_; }

  SpinUStructure with_lift(IntVector w) const { return SpinUStructure(m_, lambda_, kappa_, std::move(w)); }

 private:
  ManifoldPtr m_;
  IntVector lambda_;
  std::int64_t kappa_;
  IntVector w_;
  std::int64_t n_a_;
};

/// (p1(t) + c1(t)^2 - sigma)/4 = (-4 kappa + lambda^T Q lambda - sigma)/4,
/// possibly non-integral.
Rational dirac_index_value(const FourManifold& m, const IntVector& lambda, std::int64_t kappa);
std::int64_t dirac_index(const SpinUStructure& s);

/// Dimension 8 kappa - 3(chi + sigma)/2 of the ASD moduli space.
std::int64_t asd_dimension(const FourManifold& m, std::int64_t kappa);

struct DegeneracyDimensions {
  std::int64_t codim = 0;  ///< real codimension 2(1 - n_a)
  std::int64_t dim = 0;    ///< d(kappa) - codim
  bool vacuous = false;    ///< dim < 0: the locus is empty for generic data
};

/// Throws PositiveIndex when n_a > 0.
DegeneracyDimensions degeneracy_dimensions(const SpinUStructure& s);

/// ch_0..ch_r of an index bundle, ch_k of real degree 2k, all over one
/// generator table (either a manifold's mu_i/wp or the tautological ring).
struct IndexCharacter {
  VariableTablePtr basis;
  std::vector<BaseClass> ch;

  unsigned max_r() const { return static_cast<unsigned>(ch.size()) - 1; }
  const BaseClass& operator[](std::size_t k) const { return ch.at(k); }
  friend bool operator==(const IndexCharacter& a, const IndexCharacter& b) { return a.ch == b.ch; }
};

/// Families-index route: -e^{(Lambda-w)/2} ch(E) (1 - p1(X)/24) / [X] evaluated in
/// the Kunneth algebra, with ch(E) from rank2_chern_character. Result is in
/// the manifold's mu_i, wp generators.
IndexCharacter index_character_families(const SpinUStructure& s, unsigned max_r);
/// Same with kappa left as a ParamScalar (typically the symbol ka).
IndexCharacter index_character_families(const ManifoldPtr& m, const IntVector& lambda, const ParamScalar& kappa,
                                        const IntVector& w, unsigned max_r);

/// Closed-form character in the tautological generators mu_t, Omega, wp;
/// n_a and kappa may be symbolic.
IndexCharacter index_character_closed_form(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r);
/// Closed form for concrete data, expanded into the manifold's generators.
IndexCharacter index_character_closed_form(const SpinUStructure& s, unsigned max_r);

/// Expands mu_t -> sum lambda^i mu_i, Omega -> sum P^{ij} mu_i mu_j, wp -> wp.
BaseClass expand_tautological(const BaseClass& c, const FourManifold& m, const IntVector& lambda);
IndexCharacter expand_tautological(const IndexCharacter& c, const FourManifold& m, const IntVector& lambda);

/// Writes a concrete character in mu_t, Omega, wp. When the expansion map is
/// not injective the solution with the fewest mu_t/Omega factors is chosen.
/// Throws BasisMismatch if some ch_k is outside the image.
IndexCharacter rewrite_tautological(const IndexCharacter& c, const FourManifold& m, const IntVector& lambda);

/// q_r = r! ch_r as a power-sum table; the character must be over the
/// tautological generators (BasisMismatch otherwise).
ChernExpansion power_sum_classes(const IndexCharacter& c);

}  // namespace dloci
