#include "dloci/index_theory.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dloci/characteristic.hpp"
#include "dloci/error.hpp"

namespace dloci {

SpinUStructure::SpinUStructure(ManifoldPtr m, IntVector lambda, std::int64_t kappa, IntVector w)
    : m_(std::move(m)), lambda_(std::move(lambda)), kappa_(kappa), w_(std::move(w)) {
  if (lambda_.size() != m_->b2())
    throw Error(ErrorCode::UnknownBasis, "lambda has " + std::to_string(lambda_.size()) + " entries, b2 = " +
                                             std::to_string(m_->b2()));
  if (w_.size() != m_->b2())
    throw Error(ErrorCode::UnknownBasis, "w has " + std::to_string(w_.size()) + " entries, b2 = " +
                                             std::to_string(m_->b2()));
  const Rational value = dirac_index_value(*m_, lambda_, kappa_);
  if (!value.is_integer()) throw Error(ErrorCode::NonIntegralIndex, "n_a = " + value.str());
  n_a_ = value.to_int64();
}

Rational dirac_index_value(const FourManifold& m, const IntVector& lambda, std::int64_t kappa) {
  const Rational lambda_sq = m.pairing(lambda, lambda);
  return (Rational(-4 * static_cast<long>(kappa)) + lambda_sq - Rational(static_cast<long>(m.sigma()))) /
         Rational(4);
}

std::int64_t dirac_index(const SpinUStructure& s) { return s.n_a(); }

std::int64_t asd_dimension(const FourManifold& m, std::int64_t kappa) {
  // chi + sigma = 2 + 2 b+ is even whenever b1 = 0.
  return 8 * kappa - 3 * (m.chi() + m.sigma()) / 2;
}

DegeneracyDimensions degeneracy_dimensions(const SpinUStructure& s) {
  if (s.n_a() > 0)
    throw Error(ErrorCode::PositiveIndex, "n_a = " + std::to_string(s.n_a()) + " > 0 has no degeneracy locus");
  DegeneracyDimensions out;
  out.codim = 2 * (1 - s.n_a());
  out.dim = asd_dimension(*s.manifold(), s.kappa()) - out.codim;
  out.vacuous = out.dim < 0;
  return out;
}

IndexCharacter index_character_families(const SpinUStructure& s, unsigned max_r) {
  return index_character_families(s.manifold(), s.lambda(), ParamScalar(static_cast<long>(s.kappa())), s.w(), max_r);
}

IndexCharacter index_character_families(const ManifoldPtr& m, const IntVector& lambda, const ParamScalar& kappa,
                                        const IntVector& w, unsigned max_r) {
  if (lambda.size() != m->b2() || w.size() != m->b2())
    throw Error(ErrorCode::UnknownBasis, "lambda and w need b2 = " + std::to_string(m->b2()) + " entries");
  const unsigned bound = 2 * max_r + 4;

  const KunnethClass c1 = universal_c1(m, w);
  const KunnethClass p1 = universal_p1(m, kappa);
  const KunnethClass ch_e = rank2_chern_character(c1, p1, bound);

  // c1 of the spin-c structure is Lambda - w.
  IntVector spinc(lambda.size());
  for (std::size_t i = 0; i < spinc.size(); ++i) spinc[i] = lambda[i] - w[i];
  const KunnethClass twist = exponential(universal_c1(m, spinc) * Rational(1, 2), bound);

  // 1 - p1(X)/24 with <p1(X), [X]> = 3 sigma.
  KunnethClass todd = ch_e.one_like();
  todd += KunnethClass::cross(m, BaseClass::constant(m->base_generators(), ParamScalar(1)), XBasis::point_dual()) *
          Rational(-static_cast<long>(m->sigma()), 8);

  const KunnethClass integrand =
      KunnethClass::multiply(KunnethClass::multiply(twist, ch_e, bound), todd, bound) * Rational(-1);
  const BaseClass pushed = slant(integrand, HomologyClass::fundamental());

  IndexCharacter out{m->base_generators(), {}};
  for (unsigned k = 0; k <= max_r; ++k) out.ch.push_back(pushed.homogeneous_part(2 * k));
  return out;
}

IndexCharacter index_character_closed_form(const ParamScalar& n_a, const ParamScalar& kappa, unsigned max_r) {
  const VariableTablePtr& taut = tautological_generators();
  auto mono = [&](unsigned i, unsigned j, unsigned k, const ParamScalar& c) {
    return BaseClass::monomial(taut, {static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                                      static_cast<std::uint16_t>(k)},
                               c);
  };
  IndexCharacter out{taut, {}};
  for (unsigned r = 0; r <= max_r; ++r) {
    const unsigned k = r / 2;
    if (r % 2 == 0) {
      // -((-1)^k/(2k)!) ((n_a + 2k kappa/(2k+1)) wp^k - k/(2(2k+1)) Omega wp^{k-1})
      const Rational lead = -sign_power(k) / factorial(2 * k);
      const ParamScalar wp_coeff = n_a + kappa * Rational(2 * k, 2 * k + 1);
      BaseClass ch = mono(0, 0, k, wp_coeff * lead);
      if (k >= 1) ch += mono(0, 1, k - 1, ParamScalar(-lead * Rational(k, 2 * (2 * k + 1))));
      out.ch.push_back(ch);
    } else {
      // ((-1)^k / (2 (2k+1)!)) mu(t) wp^k
      out.ch.push_back(mono(1, 0, k, ParamScalar(sign_power(k) / (Rational(2) * factorial(2 * k + 1)))));
    }
  }
  return out;
}

IndexCharacter index_character_closed_form(const SpinUStructure& s, unsigned max_r) {
  const IndexCharacter taut = index_character_closed_form(ParamScalar(static_cast<long>(s.n_a())),
                                                          ParamScalar(static_cast<long>(s.kappa())), max_r);
  return expand_tautological(taut, *s.manifold(), s.lambda());
}

BaseClass expand_tautological(const BaseClass& c, const FourManifold& m, const IntVector& lambda) {
  if (!(*c.vars() == *tautological_generators()))
    throw Error(ErrorCode::BasisMismatch, "class is not written in mu_t, Omega, wp");
  return substitute(c, m.base_generators(), {mu_t_class(m, lambda), omega_class(m), point_class(m)});
}

IndexCharacter expand_tautological(const IndexCharacter& c, const FourManifold& m, const IntVector& lambda) {
  IndexCharacter out{m.base_generators(), {}};
  for (const auto& ch : c.ch) out.ch.push_back(expand_tautological(ch, m, lambda));
  return out;
}

namespace {

// Solve sum_c x_c image_c = target over Q (images have rational
// coefficients, target may be symbolic). Columns earlier in `images` are
// preferred as pivots; free columns are set to zero.
std::optional<std::vector<ParamScalar>> solve_in_span(const std::vector<BaseClass>& images,
                                                      const BaseClass& target) {
  std::map<Monomial, std::size_t, MonomialOrder> row_of;
  auto row_index = [&row_of](const Monomial& mono) {
    auto [it, inserted] = row_of.try_emplace(mono, row_of.size());
    return it->second;
  };
  for (const auto& img : images)
    for (const auto& [mono, c] : img.terms()) row_index(mono);
  for (const auto& [mono, c] : target.terms()) row_index(mono);

  const std::size_t rows = row_of.size(), cols = images.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
  std::vector<ParamScalar> rhs(rows);
  for (std::size_t col = 0; col < cols; ++col)
    for (const auto& [mono, c] : images[col].terms()) {
      if (!c.is_constant()) throw std::logic_error("expansion images must have rational coefficients");
      a[row_of.at(mono)][col] = c.constant_term();
    }
  for (const auto& [mono, c] : target.terms()) rhs[row_of.at(mono)] = c;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    const Rational inv = Rational(1) / a[r][col];
    for (auto& v : a[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == r || a[other][col].is_zero()) continue;
      const Rational f = a[other][col];
      for (std::size_t c2 = 0; c2 < cols; ++c2) a[other][c2] -= f * a[r][c2];
      rhs[other] -= rhs[r] * f;
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t rest = r; rest < rows; ++rest)
    if (!rhs[rest].is_zero()) return std::nullopt;
  std::vector<ParamScalar> x(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace

IndexCharacter rewrite_tautological(const IndexCharacter& c, const FourManifold& m, const IntVector& lambda) {
  const VariableTablePtr& taut = tautological_generators();
  IndexCharacter out{taut, {}};
  for (unsigned r = 0; r < c.ch.size(); ++r) {
    std::vector<Triple> candidates = triples_of_degree(r);
    std::stable_sort(candidates.begin(), candidates.end(), [](const Triple& x, const Triple& y) {
      if (x.i + x.j != y.i + y.j) return x.i + x.j < y.i + y.j;
      return x.i < y.i;
    });
    std::vector<BaseClass> images;
    for (const auto& t : candidates)
      images.push_back(expand_tautological(
          BaseClass::monomial(taut,
                              {static_cast<std::uint16_t>(t.i), static_cast<std::uint16_t>(t.j),
                               static_cast<std::uint16_t>(t.k)},
                              ParamScalar(1)),
          m, lambda));
    const auto x = solve_in_span(images, c.ch[r]);
    if (!x) throw Error(ErrorCode::BasisMismatch, "ch_" + std::to_string(r) + " is not a combination of mu(t), Omega, wp");
    BaseClass ch(taut);
    for (std::size_t col = 0; col < candidates.size(); ++col) {
      const auto& t = candidates[col];
      ch += BaseClass::monomial(taut,
                                {static_cast<std::uint16_t>(t.i), static_cast<std::uint16_t>(t.j),
                                 static_cast<std::uint16_t>(t.k)},
                                (*x)[col]);
    }
    out.ch.push_back(ch);
  }
  return out;
}

ChernExpansion power_sum_classes(const IndexCharacter& c) {
  if (!(*c.basis == *tautological_generators()))
    throw Error(ErrorCode::BasisMismatch, "power sums need a character written in mu(t), Omega, wp");
  ChernExpansion q(ExpansionRole::PowerSum, c.max_r());
  for (unsigned r = 1; r < c.ch.size(); ++r) {
    if (c.ch[r].is_zero()) continue;
    if (c.ch[r].homogeneous_degree() != 2 * r)
      throw Error(ErrorCode::BasisMismatch, "ch_" + std::to_string(r) + " is not of degree " + std::to_string(2 * r));
    q.add_polynomial(c.ch[r] * factorial(r));
  }
  return q;
}

}  // namespace dloci
