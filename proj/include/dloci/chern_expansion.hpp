#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dloci/param_scalar.hpp"
#include "dloci/polynomial.hpp"

namespace dloci {

/// Exponents of mu(t)^i Omega^j wp^k. Printed and addressed externally as
/// the index triple (i, 2j, 2k), whose sum i + 2j + 2k is the complex degree.
struct Triple {
  unsigned i = 0;
  unsigned j = 0;
  unsigned k = 0;

  unsigned degree() const { return i + 2 * j + 2 * k; }
  std::string str() const;  // "(i,2j,2k)"
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Graded-lex: total degree, then i descending, then j descending.
struct TripleOrder {
  bool operator()(const Triple& a, const Triple& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

/// All triples of complex degree r in canonical order.
std::vector<Triple> triples_of_degree(unsigned r);

enum class ExpansionRole { Chern, PowerSum, LogCoefficient };

std::string to_string(ExpansionRole role);

/// Coefficient table (i, 2j, 2k) -> ParamScalar covering total degrees
/// 0..max_r. Zero coefficients are not stored.
class ChernExpansion {
 public:
  using Map = std::map<Triple, ParamScalar, TripleOrder>;

  ChernExpansion(ExpansionRole role, unsigned max_r) : role_(role), max_r_(max_r) {}

  ExpansionRole role() const { return role_; }
  unsigned max_r() const { return max_r_; }
  const Map& terms() const { return terms_; }

  /// Coefficient at the index triple (i, two_j, two_k); odd even-slots give 0.
  ParamScalar coefficient(unsigned i, unsigned two_j, unsigned two_k) const;
  ParamScalar at(const Triple& t) const;
  void set(const Triple& t, const ParamScalar& c);
  void add(const Triple& t, const ParamScalar& c);

  /// Terms of total degree r, canonical order.
  std::vector<std::pair<Triple, ParamScalar>> slice(unsigned r) const;

  /// Degree-r slice as a polynomial in the tautological generators.
  Polynomial slice_polynomial(unsigned r) const;
  /// Adds every term of a polynomial over the tautological generators.
  void add_polynomial(const Polynomial& p);

  ChernExpansion map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& f) const;

  friend bool operator==(const ChernExpansion& a, const ChernExpansion& b) {
    return a.role_ == b.role_ && a.max_r_ == b.max_r_ && a.terms_ == b.terms_;
  }

 private:
  ExpansionRole role_;
  unsigned max_r_;
  Map terms_;
};

/// Generators mu_t (degree 2), Omega (degree 4), wp (degree 4) of the ring
/// in which the index character and the dual class are written.
const VariableTablePtr& tautological_generators();

}  // namespace dloci
