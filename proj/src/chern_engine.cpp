#include "dloci/chern_engine.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "dloci/characteristic.hpp"
#include "dloci/error.hpp"

namespace dloci {

ChernExpansion newton_from_power_sums(const ChernExpansion& q, unsigned max_r) {
  if (q.role() != ExpansionRole::PowerSum) throw std::invalid_argument("newton_from_power_sums needs power sums");
  if (q.max_r() < max_r)
    throw Error(ErrorCode::IncompleteInput, "power sums cover degree " + std::to_string(q.max_r()) +
                                                 ", need " + std::to_string(max_r));
  std::vector<Polynomial> qs;
  for (unsigned r = 0; r <= max_r; ++r) qs.push_back(q.slice_polynomial(r));
  const auto cs = chern_from_power_sums(qs, Polynomial::constant(tautological_generators(), ParamScalar(1)));
  ChernExpansion out(ExpansionRole::Chern, max_r);
  for (const auto& c : cs) out.add_polynomial(c);
  return out;
}

ChernExpansion power_sums_from_chern(const ChernExpansion& c, unsigned max_r) {
  if (c.role() != ExpansionRole::Chern) throw std::invalid_argument("power_sums_from_chern needs Chern classes");
  if (c.max_r() < max_r)
    throw Error(ErrorCode::IncompleteInput, "Chern classes cover degree " + std::to_string(c.max_r()) +
                                                 ", need " + std::to_string(max_r));
  if (c.at({0, 0, 0}) != ParamScalar(1)) throw std::invalid_argument("c_0 must be 1");
  std::vector<Polynomial> cs;
  for (unsigned r = 0; r <= max_r; ++r) cs.push_back(c.slice_polynomial(r));
  const auto qs = power_sums_from_chern(cs);
  ChernExpansion out(ExpansionRole::PowerSum, max_r);
  for (std::size_t r = 1; r < qs.size(); ++r) out.add_polynomial(qs[r]);
  return out;
}

ChernExpansion coefficients_by_recursion(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r) {
  ChernExpansion f(ExpansionRole::Chern, max_r);
  f.set({0, 0, 0}, ParamScalar(1));
  auto get = [&f](long i, long j, long k) {
    if (i < 0 || j < 0 || k < 0) return ParamScalar();
    return f.at({static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<unsigned>(k)});
  };
  for (unsigned r = 1; r <= max_r; ++r) {
    for (const Triple& t : triples_of_degree(r)) {
      const long i = t.i, j = t.j, k = t.k;
      ParamScalar acc;
      for (long u = 1; u <= k; ++u)
        acc += (n_a + kappa * Rational(2 * u, 2 * u + 1)) * get(i, j, k - u) * sign_power(u);
      for (long u = 1; u <= k + 1; ++u)
        acc -= get(i, j - 1, k - u + 1) * (sign_power(u) * Rational(u, 2 * (2 * u + 1)));
      for (long u = 0; u <= k; ++u) acc += get(i - 1, j, k - u) * (sign_power(u) * Rational(1, 2));
      f.set(t, acc * Rational(1, static_cast<long>(r)));
    }
  }
  return f;
}

JSource default_j_source() {
  return [](JSeries which, unsigned order, const VariableTablePtr& vars, std::string_view z) {
    return j_series(which, order, vars, z);
  };
}

namespace {

const VariableTablePtr& xyz_variables() {
  static const VariableTablePtr table = make_variables({{"x", 1}, {"y", 1}, {"z", 1}});
  return table;
}

const VariableTablePtr& xyzt_variables() {
  static const VariableTablePtr table = make_variables({{"x", 1}, {"y", 1}, {"z", 1}, {"t", 1}});
  return table;
}

// x^i y^{2j} z^{2k} -> (i, j, k)
ChernExpansion read_xyz(const Polynomial& p, ExpansionRole role, unsigned max_r) {
  ChernExpansion out(role, max_r);
  for (const auto& [m, c] : p.terms()) {
    if (m.exps[1] % 2 != 0 || m.exps[2] % 2 != 0)
      throw std::logic_error("odd power of y or z in generating series");
    out.add({m.exps[0], m.exps[1] / 2u, m.exps[2] / 2u}, c);
  }
  return out;
}

}  // namespace

GradedSeries generating_exponent(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r,
                                 const JSource& source) {
  const VariableTablePtr& vars = xyz_variables();
  const GradedSeries x = GradedSeries::variable(vars, max_r, "x");
  const GradedSeries y = GradedSeries::variable(vars, max_r, "y");
  const GradedSeries j1 = source(JSeries::J1, max_r, vars, "z");
  const GradedSeries j2 = source(JSeries::J2, max_r, vars, "z");
  const GradedSeries j3 = source(JSeries::J3, max_r, vars, "z").map_coefficients(
      [&](const ParamScalar& c) { return c.substitute(n_a, kappa); });
  return x * j1 * Rational(1, 2) + y * y * j2 * Rational(1, 4) + j3;
}

ChernExpansion coefficients_by_generating_function(const ParamScalar& n_a, const ParamScalar& kappa,
                                                   unsigned max_r, const JSource& source) {
  const GradedSeries f = series_exp(generating_exponent(n_a, kappa, max_r, source));
  return read_xyz(f.polynomial(), ExpansionRole::Chern, max_r);
}

ChernExpansion coefficients_by_newton(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r) {
  const ChernExpansion q = power_sum_classes(index_character_closed_form(n_a, kappa, max_r));
  return newton_from_power_sums(q, max_r);
}

ChernExpansion log_coefficients(const ChernExpansion& q, unsigned max_r) {
  const VariableTablePtr& vars = xyzt_variables();
  const unsigned order = 2 * max_r;
  // Q(-t) = sum_r (-t)^{r-1} q_r, each q_{i,2j,2k} carried by x^i y^{2j} z^{2k}.
  Polynomial q_minus_t(vars);
  for (const auto& [t, c] : q.terms()) {
    const unsigned r = t.degree();
    if (r == 0 || r > max_r) continue;
    q_minus_t.add_term(q_minus_t.make_monomial({static_cast<std::uint16_t>(t.i), static_cast<std::uint16_t>(2 * t.j),
                                                static_cast<std::uint16_t>(2 * t.k),
                                                static_cast<std::uint16_t>(r - 1)}),
                       c * sign_power(r - 1));
  }
  const GradedSeries p = series_integrate(GradedSeries(q_minus_t, order), "t");
  ChernExpansion out(ExpansionRole::LogCoefficient, max_r);
  for (const auto& [m, c] : p.polynomial().terms()) {
    if (m.exps[1] % 2 != 0 || m.exps[2] % 2 != 0) throw std::logic_error("odd power of y or z");
    const Triple t{m.exps[0], m.exps[1] / 2u, m.exps[2] / 2u};
    if (m.exps[3] != t.degree()) throw std::logic_error("t-degree does not match class degree");
    out.add(t, c);
  }
  return out;
}

ChernExpansion log_coefficients_from_exponent(const GradedSeries& g) {
  return read_xyz(g.polynomial(), ExpansionRole::LogCoefficient, g.order());
}

ChernExpansion chern_coefficients(CoefficientMethod method, const ParamScalar& n_a, const ParamScalar& kappa,
                                  unsigned max_r) {
  switch (method) {
    case CoefficientMethod::Recursion: return coefficients_by_recursion(n_a, kappa, max_r);
    case CoefficientMethod::GeneratingFunction: return coefficients_by_generating_function(n_a, kappa, max_r);
    case CoefficientMethod::Newton: return coefficients_by_newton(n_a, kappa, max_r);
  }
  throw std::invalid_argument("unknown coefficient method");
}

BaseClass DualClassExpansion::tautological() const {
  ChernExpansion e(ExpansionRole::Chern, degree());
  for (const auto& [t, c] : terms) e.add(t, c);
  return e.slice_polynomial(degree());
}

BaseClass DualClassExpansion::expand(const FourManifold& m, const IntVector& lambda) const {
  return expand_tautological(tautological(), m, lambda);
}

DualClassExpansion poincare_dual_class(std::int64_t n_a, const ParamScalar& kappa) {
  if (n_a > 0)
    throw Error(ErrorCode::PositiveIndex, "n_a = " + std::to_string(n_a) + " > 0 has no degeneracy locus");
  DualClassExpansion out;
  out.n_a = n_a;
  out.kappa = kappa;
  const unsigned r = out.degree();
  out.sign = (r % 2 == 0) ? 1 : -1;
  const ChernExpansion f = coefficients_by_recursion(ParamScalar(static_cast<long>(n_a)), kappa, r);
  for (auto [t, c] : f.slice(r)) out.terms.emplace_back(t, c * Rational(out.sign));
  return out;
}

DualClassExpansion poincare_dual_class(const SpinUStructure& s) {
  return poincare_dual_class(s.n_a(), ParamScalar(static_cast<long>(s.kappa())));
}

namespace {

struct PointResult {
  std::size_t comparisons = 0;
  std::size_t discrepancies = 0;
  std::optional<Discrepancy> first;
};

void compare_tables(const ChernExpansion& a, const ChernExpansion& b, unsigned max_r, const std::string& point,
                    const std::string& check, PointResult& result) {
  for (unsigned r = 0; r <= max_r; ++r) {
    for (const Triple& t : triples_of_degree(r)) {
      ++result.comparisons;
      const ParamScalar left = a.at(t), right = b.at(t);
      if (left == right) continue;
      ++result.discrepancies;
      if (!result.first) result.first = Discrepancy{point, check, t, left, right};
    }
  }
}

PointResult check_point(const ParamScalar& n_a, const ParamScalar& kappa, const std::string& label,
                        const VerifyOptions& options) {
  PointResult result;
  const unsigned r = options.max_r;
  const ChernExpansion rec = coefficients_by_recursion(n_a, kappa, r);
  const ChernExpansion gen = coefficients_by_generating_function(n_a, kappa, r, options.j_source);
  const ChernExpansion q = power_sum_classes(index_character_closed_form(n_a, kappa, r));
  const ChernExpansion newt = newton_from_power_sums(q, r);
  compare_tables(rec, gen, r, label, "recursion vs generating-function", result);
  compare_tables(rec, newt, r, label, "recursion vs newton", result);
  const ChernExpansion m_q = log_coefficients(q, r);
  const ChernExpansion m_g = log_coefficients_from_exponent(generating_exponent(n_a, kappa, r, options.j_source));
  compare_tables(m_q, m_g, r, label, "integrated power sums vs exponent", result);
  return result;
}

}  // namespace

VerifyReport verify_threeway(const VerifyOptions& options) {
  if (options.max_r < 1) throw std::invalid_argument("verify needs max_r >= 1");
  struct Point {
    ParamScalar n_a, kappa;
    std::string label;
  };
  std::vector<Point> points;
  if (options.symbolic) {
    points.push_back({ParamScalar::na(), ParamScalar::ka(), "symbolic"});
  } else {
    for (auto na = options.na_min; na <= options.na_max; ++na)
      for (auto ka = options.kappa_min; ka <= options.kappa_max; ++ka)
        points.push_back({ParamScalar(static_cast<long>(na)), ParamScalar(static_cast<long>(ka)),
                          "n_a=" + std::to_string(na) + ",kappa=" + std::to_string(ka)});
  }

  std::vector<PointResult> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < points.size(); idx = next++)
      results[idx] = check_point(points[idx].n_a, points[idx].kappa, points[idx].label, options);
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, points.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerifyReport report;
  report.points = points.size();
  for (auto& r : results) {
    report.comparisons += r.comparisons;
    report.discrepancies += r.discrepancies;
    if (r.first && !report.first) report.first = r.first;
  }
  report.equal = !report.first.has_value();
  return report;
}

}  // namespace dloci
