#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dloci/index_theory.hpp"
#include "dloci/manifold.hpp"

namespace dloci {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(const std::string& name);  // ManifestError on unknown names
std::string to_string(OutputFormat f);

/// Parsed and validated manifest. `manifold` and `spinu` are re-checked on
/// load, so a Manifest always describes a consistent (X, t).
struct Manifest {
  ManifoldPtr manifold;
  std::optional<SpinUStructure> spinu;  // always set after parsing
  unsigned max_order = 12;
  bool symbolic = false;
  OutputFormat format = OutputFormat::Text;
};

/// YAML with sections `manifold` (chi, sigma, intersection), `spinu`
/// (lambda, kappa, w) and an optional `compute` (max_order, symbolic, format).
/// `w` defaults to the zero vector. Unknown keys raise ManifestError; domain
/// problems keep their own codes (BadForm, NonIntegralIndex, ...).
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

}  // namespace dloci
