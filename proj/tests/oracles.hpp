#pragma once

// Test-only reference computations. None of these call into the library's
// series, polynomial or lattice code, so agreement with them is evidence and
// not a tautology.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using Key = std::tuple<unsigned, unsigned, unsigned>;  // exponents of x, y, z

// Dense truncated series in x, y, z with total degree <= order.
struct Dense3 {
  unsigned order;
  std::vector<mpq_class> c;  // (order+1)^3 cube, entries above order stay zero

  explicit Dense3(unsigned n) : order(n), c((n + 1) * (n + 1) * (n + 1)) {}
  mpq_class& at(unsigned a, unsigned b, unsigned z) { return c[(a * (order + 1) + b) * (order + 1) + z]; }
  const mpq_class& at(unsigned a, unsigned b, unsigned z) const {
    return c[(a * (order + 1) + b) * (order + 1) + z];
  }

  Dense3 times(const Dense3& o) const {
    Dense3 out(order);
    for (unsigned a = 0; a <= order; ++a)
      for (unsigned b = 0; a + b <= order; ++b)
        for (unsigned z = 0; a + b + z <= order; ++z) {
          if (at(a, b, z) == 0) continue;
          for (unsigned a2 = 0; a + b + z + a2 <= order; ++a2)
            for (unsigned b2 = 0; a + b + z + a2 + b2 <= order; ++b2)
              for (unsigned z2 = 0; a + b + z + a2 + b2 + z2 <= order; ++z2)
                out.at(a + a2, b + b2, z + z2) += at(a, b, z) * o.at(a2, b2, z2);
        }
    return out;
  }
};

inline mpq_class q(long n, long d = 1) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

// Printed coefficients: J1 = sum (-1)^k z^{2k}/(2k+1), J2 = sum (-1)^k z^{2k}/(2k+3),
// log(1+z^2) = sum (-1)^{m+1} z^{2m}/m.
inline mpq_class j1(unsigned k) { return q(k % 2 ? -1 : 1, 2 * k + 1); }
inline mpq_class j2(unsigned k) { return q(k % 2 ? -1 : 1, 2 * k + 3); }
inline mpq_class log1p_z2(unsigned m) { return m == 0 ? q(0) : q(m % 2 ? 1 : -1, m); }

// f_{i,2j,2k} at numeric (n_a, kappa) by exponentiating
// x J1/2 + y^2 J2/4 - (n_a/2) log(1+z^2) + kappa (J1 - 1) term by term.
inline std::map<Key, mpq_class> f_table(const mpq_class& n_a, const mpq_class& kappa, unsigned order) {
  Dense3 g(order);
  for (unsigned k = 0; 2 * k <= order; ++k) {
    if (1 + 2 * k <= order) g.at(1, 0, 2 * k) += j1(k) / 2;
    if (2 + 2 * k <= order) g.at(0, 2, 2 * k) += j2(k) / 4;
    g.at(0, 0, 2 * k) += -n_a / 2 * log1p_z2(k) + (k == 0 ? q(0) : kappa * j1(k));
  }
  Dense3 sum(order), term(order);
  sum.at(0, 0, 0) = 1;
  term.at(0, 0, 0) = 1;
  for (unsigned n = 1; n <= order; ++n) {
    term = term.times(g);
    for (auto& v : term.c) v /= n;
    for (std::size_t i = 0; i < sum.c.size(); ++i) sum.c[i] += term.c[i];
  }
  std::map<Key, mpq_class> out;
  for (unsigned a = 0; a <= order; ++a)
    for (unsigned b = 0; a + b <= order; b += 2)
      for (unsigned z = 0; a + b + z <= order; z += 2)
        if (sum.at(a, b, z) != 0) out[{a, b / 2, z / 2}] = sum.at(a, b, z);
  return out;
}

// Elementary symmetric e_1..e_n and power sums p_1..p_n of explicit roots.
inline std::vector<mpq_class> elementary(const std::vector<mpq_class>& roots, unsigned n) {
  std::vector<mpq_class> e(n + 1, 0);
  e[0] = 1;
  for (const auto& r : roots)
    for (unsigned k = n; k >= 1; --k) e[k] += e[k - 1] * r;
  return e;
}

inline std::vector<mpq_class> power_sums(const std::vector<mpq_class>& roots, unsigned n) {
  std::vector<mpq_class> p(n + 1, 0);
  for (const auto& r : roots) {
    mpq_class pw = 1;
    for (unsigned k = 1; k <= n; ++k) {
      pw *= r;
      p[k] += pw;
    }
  }
  return p;
}

using IMat = std::vector<std::vector<std::int64_t>>;

// Laplace expansion; fine for the n <= 4 forms the tests enumerate.
inline mpz_class det(const IMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class acc = 0;
  for (std::size_t col = 0; col < n; ++col) {
    IMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const mpz_class term = mpz_class(static_cast<long>(m[0][col])) * det(minor);
    if (col % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// Signature from the characteristic polynomial (Faddeev-LeVerrier) and
// Descartes' rule of signs, exact because a symmetric matrix has only real
// eigenvalues. Assumes a non-degenerate form.
inline long signature(const IMat& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
  std::vector<mpq_class> coeff(n + 1, 0);  // det(tI - A) = sum coeff[k] t^{n-k}
  coeff[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k
    std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += mpq_class(static_cast<long>(a[i][l])) * m[l][j];
        if (i == j) next[i][j] += coeff[k - 1];
      }
    m = next;
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += mpq_class(static_cast<long>(a[i][l])) * m[l][i];
    coeff[k] = -tr / static_cast<long>(k);
  }
  auto changes = [](const std::vector<mpq_class>& c) {
    long count = 0;
    int last = 0;
    for (const auto& v : c) {
      const int s = sgn(v);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  std::vector<mpq_class> neg = coeff;  // p(-t), up to overall sign
  for (std::size_t k = 0; k <= n; ++k)
    if ((n - k) % 2) neg[k] = -neg[k];
  return changes(coeff) - changes(neg);
}

}  // namespace oracle
