#include <doctest.h>

#include <random>

#include "dloci/characteristic.hpp"
#include "dloci/chern_engine.hpp"
#include "dloci/error.hpp"
#include "oracles.hpp"

using namespace dloci;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no dloci::Error thrown");
  return ErrorCode::ManifestError;
}

const ParamScalar na = ParamScalar::na();
const ParamScalar ka = ParamScalar::ka();

ChernExpansion evaluated(const ChernExpansion& f, long n, long k) {
  return f.map_coefficients([&](const ParamScalar& c) { return ParamScalar(c.evaluate(Rational(n), Rational(k))); });
}

void check_against_oracle(const ChernExpansion& f, long n, long k, unsigned order) {
  const auto table = oracle::f_table(oracle::q(n), oracle::q(k), order);
  std::size_t nonzero = 0;
  for (const auto& [t, c] : f.terms()) {
    const auto it = table.find({t.i, t.j, t.k});
    REQUIRE(it != table.end());
    CHECK(c == ParamScalar(Rational(it->second)));
    ++nonzero;
  }
  CHECK(nonzero == table.size());
}

}  // namespace

TEST_CASE("low-order coefficients by every route") {
  for (auto method : {CoefficientMethod::Recursion, CoefficientMethod::GeneratingFunction, CoefficientMethod::Newton}) {
    const ChernExpansion f = chern_coefficients(method, na, ka, 4);
    CHECK(f.coefficient(0, 0, 0) == ParamScalar(1));
    CHECK(f.coefficient(1, 0, 0) == ParamScalar(Rational(1, 2)));
    CHECK(f.coefficient(2, 0, 0) == ParamScalar(Rational(1, 8)));
    CHECK(f.coefficient(0, 2, 0) == ParamScalar(Rational(1, 12)));
    CHECK(f.coefficient(0, 0, 2) == na * Rational(-1, 2) - ka * Rational(1, 3));
    CHECK(f.coefficient(0, 0, 2).str() == "-1/2·na - 1/3·ka");
  }
}

TEST_CASE("every route matches the dense exponential oracle") {
  const unsigned order = 9;
  const ChernExpansion rec = coefficients_by_recursion(na, ka, order);
  const ChernExpansion gen = coefficients_by_generating_function(na, ka, order);
  const ChernExpansion newt = coefficients_by_newton(na, ka, order);
  for (long n = -3; n <= 0; ++n)
    for (long k = -1; k <= 3; ++k) {
      check_against_oracle(evaluated(rec, n, k), n, k, order);
      check_against_oracle(evaluated(gen, n, k), n, k, order);
      check_against_oracle(evaluated(newt, n, k), n, k, order);
      check_against_oracle(coefficients_by_recursion(ParamScalar(n), ParamScalar(k), order), n, k, order);
    }
}

TEST_CASE("parity: odd even-slots read as zero") {
  const ChernExpansion f = coefficients_by_recursion(na, ka, 8);
  for (unsigned i = 0; i <= 8; ++i)
    for (unsigned a = 0; i + a <= 8; ++a)
      for (unsigned b = 0; i + a + b <= 8; ++b)
        if (a % 2 || b % 2) CHECK(f.coefficient(i, a, b).is_zero());
  for (const auto& [t, c] : f.terms()) CHECK(t.degree() <= 8);
}

TEST_CASE("newton examples") {
  const auto v = make_variables({{"x", 1}, {"y", 1}});
  const Polynomial x = Polynomial::variable(v, "x"), y = Polynomial::variable(v, "y");
  const Polynomial one = x.one_like(), zero = x.zero_like();

  // c1 = q1; a line bundle has q_r = c1^r and c2 = 0.
  std::vector<Polynomial> line{zero, x, x * x, x * x * x};
  const auto c_line = chern_from_power_sums(line, one);
  CHECK(c_line[1] == x);
  CHECK(c_line[2].is_zero());
  CHECK(c_line[3].is_zero());

  std::vector<Polynomial> two{zero, x + y, x * x + y * y};
  const auto c_two = chern_from_power_sums(two, one);
  CHECK(c_two[1] == x + y);
  CHECK(c_two[2] == x * y);
}

TEST_CASE("newton agrees with elementary symmetric functions of random roots") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4), count(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<mpq_class> rs;
    for (long r = count(rng); r > 0; --r) rs.push_back(oracle::q(num(rng), den(rng)));
    const unsigned n = 8;
    const auto p = oracle::power_sums(rs, n);
    const auto e = oracle::elementary(rs, n);
    std::vector<Rational> q;
    for (const auto& v : p) q.push_back(Rational(v));
    const auto c = chern_from_power_sums(q, Rational(1));
    for (unsigned k = 0; k <= n; ++k) CHECK(c[k] == Rational(e[k]));
    const auto back = power_sums_from_chern(c);
    for (unsigned k = 1; k <= n; ++k) CHECK(back[k] == q[k]);
  }
}

TEST_CASE("newton on coefficient tables") {
  ChernExpansion q(ExpansionRole::PowerSum, 3);
  q.set({1, 0, 0}, ParamScalar(Rational(1, 2)));
  CHECK(newton_from_power_sums(q, 3).coefficient(1, 0, 0) == ParamScalar(Rational(1, 2)));
  CHECK(code_of([&] { (void)newton_from_power_sums(q, 4); }) == ErrorCode::IncompleteInput);
}

TEST_CASE("property: q -> c -> q roundtrip on random tables") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<unsigned> order(1, 10);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 6), pick(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned r = order(rng);
    ChernExpansion q(ExpansionRole::PowerSum, r);
    for (unsigned d = 1; d <= r; ++d)
      for (const Triple& t : triples_of_degree(d)) {
        if (pick(rng) == 0) continue;
        ParamScalar c(Rational(num(rng), den(rng)));
        if (pick(rng) == 0) c += na * Rational(num(rng));
        q.set(t, c);
      }
    CHECK(power_sums_from_chern(newton_from_power_sums(q, r), r) == q);
  }
}

TEST_CASE("log coefficients reproduce the exponent") {
  const unsigned r = 12;
  const ChernExpansion q = power_sum_classes(index_character_closed_form(na, ka, r));
  const ChernExpansion m = log_coefficients(q, r);
  CHECK(m == log_coefficients_from_exponent(generating_exponent(na, ka, r)));
  // The four pieces: x J1/2, y^2 J2/4, -(n_a/2) log(1+z^2), kappa (J1 - 1).
  for (unsigned k = 0; 2 * k + 1 <= r; ++k)
    CHECK(m.coefficient(1, 0, 2 * k) == ParamScalar(sign_power(k) * Rational(1, 2 * (2 * k + 1))));
  for (unsigned k = 1; 2 * k <= r; ++k) {
    CHECK(m.coefficient(0, 2, 2 * k - 2) == ParamScalar(sign_power(k + 1) * Rational(1, 4 * (2 * k + 1))));
    CHECK(m.coefficient(0, 0, 2 * k) ==
          na * (sign_power(k) * Rational(1, 2 * k)) + ka * (sign_power(k) * Rational(1, 2 * k + 1)));
  }
  std::size_t expected = 0;
  for (unsigned d = 1; d <= r; ++d) expected += (d % 2) ? 1 : 2;
  CHECK(m.terms().size() == expected);
}

TEST_CASE("poincare dual examples") {
  const DualClassExpansion d0 = poincare_dual_class(0, ka);
  REQUIRE(d0.terms.size() == 1);
  CHECK(d0.terms[0].first == Triple{1, 0, 0});
  CHECK(d0.terms[0].second == ParamScalar(Rational(-1, 2)));

  const DualClassExpansion d1 = poincare_dual_class(-1, ka);
  CHECK(d1.sign == 1);
  CHECK(d1.tautological() == BaseClass::monomial(tautological_generators(), {2, 0, 0}, Rational(1, 8)) +
                                 BaseClass::monomial(tautological_generators(), {0, 1, 0}, Rational(1, 12)) +
                                 BaseClass::monomial(tautological_generators(), {0, 0, 1},
                                                     ParamScalar(Rational(1, 2)) - ka * Rational(1, 3)));

  const ManifoldPtr m = manifold_new(4, 0, forms::hyperbolic());
  const SpinUStructure s(m, {0, 0}, 1, {0, 0});
  const BaseClass expanded = poincare_dual_class(s).expand(*m, s.lambda());
  CHECK(expanded == omega_class(*m) * Rational(1, 12) + point_class(*m) * Rational(1, 6));

  // ... and it is c2 of the families character.
  const IndexCharacter ch = index_character_families(s, 2);
  const auto c = chern_from_power_sums(std::vector<BaseClass>{ch[0].zero_like(), ch[1], ch[2] * Rational(2)},
                                       ch[0].one_like());
  CHECK(c[2] == expanded);

  CHECK(code_of([] { (void)poincare_dual_class(1, ka); }) == ErrorCode::PositiveIndex);
}

TEST_CASE("sign law and degree of the dual class") {
  for (long n = 0; n >= -6; --n) {
    const DualClassExpansion d = poincare_dual_class(n, ka);
    const unsigned r = static_cast<unsigned>(1 - n);
    CHECK(d.degree() == r);
    const ChernExpansion f = coefficients_by_recursion(ParamScalar(n), ka, r);
    const auto slice = f.slice(r);
    REQUIRE(slice.size() == d.terms.size());
    const Rational sign = sign_power(1 - n);
    for (std::size_t i = 0; i < slice.size(); ++i) {
      CHECK(d.terms[i].first == slice[i].first);
      CHECK(d.terms[i].second == slice[i].second * sign);
      const Triple& t = d.terms[i].first;
      CHECK(2 * t.i + 4 * t.j + 4 * t.k == 2 * r);
    }
    CHECK(d.tautological().homogeneous_degree() == std::optional<unsigned>(2 * r));
  }
}

TEST_CASE("verify_threeway certifies agreement") {
  VerifyOptions sym;
  sym.max_r = 8;
  const VerifyReport a = verify_threeway(sym);
  CHECK(a.equal);
  CHECK(a.discrepancies == 0);
  CHECK(a.points == 1);

  VerifyOptions num;
  num.symbolic = false;
  num.max_r = 10;
  num.na_min = -4;
  num.na_max = 0;
  num.kappa_min = 0;
  num.kappa_max = 4;
  num.threads = 3;
  const VerifyReport b = verify_threeway(num);
  CHECK(b.equal);
  CHECK(b.points == 25);
}

TEST_CASE("a perturbed J2 is caught at (0,2,0)") {
  VerifyOptions o;
  o.max_r = 6;
  const JSource honest = default_j_source();
  o.j_source = [honest](JSeries which, unsigned order, const VariableTablePtr& vars, std::string_view z) {
    GradedSeries s = honest(which, order, vars, z);
    return which == JSeries::J2 ? s * Rational(-1) : s;
  };
  const VerifyReport r = verify_threeway(o);
  CHECK_FALSE(r.equal);
  REQUIRE(r.first.has_value());
  CHECK(r.first->triple == Triple{0, 1, 0});
  CHECK(r.first->check == "recursion vs generating-function");
  CHECK(r.first->left == ParamScalar(Rational(1, 12)));
  CHECK(r.first->right == ParamScalar(Rational(-1, 12)));
}
