#pragma once

#include <optional>
#include <string>

#include "dloci/chern_engine.hpp"
#include "dloci/manifest.hpp"

namespace dloci {

/// Everything `dual` reports for one (X, t).
struct DualReport {
  std::int64_t n_a = 0;
  std::int64_t kappa = 0;
  DegeneracyDimensions dims;
  std::int64_t asd_dim = 0;
  DualClassExpansion dual;
  BaseClass expanded{tautological_generators()};
  /// Whether sign * c_{1-n_a} of the families character agrees with
  /// `expanded`; nullopt when the check exceeded max_order.
  std::optional<bool> families_agree;
};

std::string render_coefficients(const ChernExpansion& f, OutputFormat fmt, const std::string& title);
std::string render_series(JSeries which, const GradedSeries& s, OutputFormat fmt);
std::string render_dual(const DualReport& r, OutputFormat fmt);
std::string render_verify(const VerifyReport& r, const VerifyOptions& o, OutputFormat fmt);

}  // namespace dloci
