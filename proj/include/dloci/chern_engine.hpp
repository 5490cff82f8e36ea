#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dloci/chern_expansion.hpp"
#include "dloci/graded_series.hpp"
#include "dloci/index_theory.hpp"

namespace dloci {

/// Chern classes from power sums by Newton's identities, slice by slice.
/// Throws IncompleteInput if q does not cover degree max_r.
ChernExpansion newton_from_power_sums(const ChernExpansion& q, unsigned max_r);
/// The inverse transform; needs c_{0,0,0} = 1.
ChernExpansion power_sums_from_chern(const ChernExpansion& c, unsigned max_r);

/// f_{i,2j,2k} for i + 2j + 2k <= max_r from the three-sum recursion.
ChernExpansion coefficients_by_recursion(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r);

/// Provider of the J series over (vars, z); the default is j_series.
using JSource = std::function<GradedSeries(JSeries, unsigned order, const VariableTablePtr& vars, std::string_view z)>;
JSource default_j_source();

/// Exponent G = x J1(z)/2 + y^2 J2(z)/4 + J3(z) over variables x, y, z
/// (weight 1 each), with n_a and kappa substituted into J3.
GradedSeries generating_exponent(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r,
                                 const JSource& source = default_j_source());
/// f_{i,2j,2k} read off exp(G).
ChernExpansion coefficients_by_generating_function(const ParamScalar& n_a, const ParamScalar& kappa,
                                                   unsigned max_r, const JSource& source = default_j_source());
/// f_{i,2j,2k} from Newton applied to the power sums of the closed-form
/// index character.
ChernExpansion coefficients_by_newton(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r);

/// m_{i,2j,2k}: coefficients of the integral of Q(-t) dt, built as a series
/// in x, y, z, t and integrated in t.
ChernExpansion log_coefficients(const ChernExpansion& q, unsigned max_r);
/// m_{i,2j,2k} read off the exponent G directly.
ChernExpansion log_coefficients_from_exponent(const GradedSeries& g);

enum class CoefficientMethod { Recursion, GeneratingFunction, Newton };
ChernExpansion chern_coefficients(CoefficientMethod method, const ParamScalar& n_a, const ParamScalar& kappa,
                                  unsigned max_r);

/// Signed degree-(1 - n_a) slice of the Chern table: the Poincaré dual of the
/// degeneracy locus in mu(t), Omega, wp.
struct DualClassExpansion {
  std::int64_t n_a = 0;
  ParamScalar kappa;
  int sign = 1;  ///< (-1)^{1 - n_a}, already applied to `terms`
  std::vector<std::pair<Triple, ParamScalar>> terms;

  unsigned degree() const { return static_cast<unsigned>(1 - n_a); }
  /// As a polynomial over the tautological generators.
  BaseClass tautological() const;
  /// Expanded into mu_i, wp for concrete (X, Lambda).
  BaseClass expand(const FourManifold& m, const IntVector& lambda) const;
};

/// Throws PositiveIndex for n_a > 0.
DualClassExpansion poincare_dual_class(std::int64_t n_a, const ParamScalar& kappa);
DualClassExpansion poincare_dual_class(const SpinUStructure& s);

struct VerifyOptions {
  unsigned max_r = 12;
  bool symbolic = true;
  std::int64_t na_min = 0, na_max = 0;
  std::int64_t kappa_min = 0, kappa_max = 0;
  JSource j_source = default_j_source();
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct Discrepancy {
  std::string point;  ///< "symbolic" or "n_a=..,kappa=.."
  std::string check;  ///< e.g. "recursion vs generating-function"
  Triple triple;
  ParamScalar left;
  ParamScalar right;
};

struct VerifyReport {
  bool equal = true;
  std::size_t points = 0;
  std::size_t comparisons = 0;
  std::size_t discrepancies = 0;
  std::optional<Discrepancy> first;
};

/// Checks recursion = exp(G) = Newton(closed form) coefficient by
/// coefficient, and that integrating Q(-t) reproduces the exponent G.
VerifyReport verify_threeway(const VerifyOptions& options);

}  // namespace dloci
