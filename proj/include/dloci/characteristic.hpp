#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "dloci/error.hpp"
#include "dloci/rational.hpp"

namespace dloci {

/// Commutative, even-graded algebra with truncated multiplication. Satisfied
/// by Polynomial (BaseClass), CohClassX and KunnethClass.
template <class A>
concept GradedAlgebra = requires(const A& a, const A& b, const Rational& r, unsigned d) {
  { A::multiply(a, b, std::optional<unsigned>(d)) } -> std::convertible_to<A>;
  { a + b } -> std::convertible_to<A>;
  { a * r } -> std::convertible_to<A>;
  { a.homogeneous_degree() } -> std::same_as<std::optional<unsigned>>;
  { a.truncated(d) } -> std::convertible_to<A>;
  { a.one_like() } -> std::convertible_to<A>;
  { a.is_zero() } -> std::same_as<bool>;
};

/// exp(a) = sum a^m/m! for nilpotent-by-degree `a` (no degree-0 part),
/// truncated at max_degree.
template <GradedAlgebra A>
A exponential(const A& a, unsigned max_degree) {
  A sum = a.one_like().truncated(max_degree);
  A term = sum;
  for (unsigned m = 1;; ++m) {
    term = A::multiply(term, a, max_degree) * Rational(1, static_cast<long>(m));
    if (term.is_zero() || m > max_degree) break;
    sum = sum + term;
  }
  return sum;
}

namespace detail {
template <GradedAlgebra A>
void require_degree(const A& a, unsigned expected, const char* what) {
  if (a.is_zero()) return;
  const auto d = a.homogeneous_degree();
  if (!d || *d != expected)
    throw Error(ErrorCode::DegreeMismatch, std::string(what) + " must be homogeneous of degree " +
                                               std::to_string(expected));
}
}  // namespace detail

/// Chern character of a rank-2 bundle from c1 (degree 2) and p1 of its
/// trace-free endomorphism bundle (degree 4):
///   ch = 2 e^{c1/2} sum_{n>=0} p1^n / (4^n (2n)!),
/// truncated at real degree max_degree.
template <GradedAlgebra A>
A rank2_chern_character(const A& c1, const A& p1, unsigned max_degree) {
  detail::require_degree(c1, 2, "c1");
  detail::require_degree(p1, 4, "p1");
  const A twist = exponential(c1 * Rational(1, 2), max_degree);
  A sum = p1.one_like().truncated(max_degree);
  A term = sum;
  for (unsigned n = 1; 4 * n <= max_degree; ++n) {
    term = A::multiply(term, p1, max_degree) * Rational(1, static_cast<long>(4 * (2 * n) * (2 * n - 1)));
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return A::multiply(twist, sum, max_degree) * Rational(2);
}

/// Newton's identities c_n = -(1/n) sum_{i=1}^n (-1)^i q_i c_{n-i} with
/// q_i = i! ch_i. Index 0 of `q` is ignored; returns c_0..c_{q.size()-1}.
template <class A>
std::vector<A> chern_from_power_sums(const std::vector<A>& q, const A& one) {
  std::vector<A> c{one};
  for (std::size_t n = 1; n < q.size(); ++n) {
    A acc = one * Rational(0);
    for (std::size_t i = 1; i <= n; ++i) acc = acc + q[i] * c[n - i] * sign_power(static_cast<long>(i));
    c.push_back(acc * Rational(-1, static_cast<long>(n)));
  }
  return c;
}

/// Inverse of chern_from_power_sums: q_n = (-1)^{n-1} (n c_n - sum_{i<n} (-1)^{i-1} q_i c_{n-i}).
/// Requires c_0 = 1. Index 0 of the result holds zero.
template <class A>
std::vector<A> power_sums_from_chern(const std::vector<A>& c) {
  const A zero = c.at(0) * Rational(0);
  std::vector<A> q{zero};
  for (std::size_t n = 1; n < c.size(); ++n) {
    A acc = c[n] * Rational(static_cast<long>(n));
    for (std::size_t i = 1; i < n; ++i) acc = acc - q[i] * c[n - i] * sign_power(static_cast<long>(i - 1));
    q.push_back(acc * sign_power(static_cast<long>(n - 1)));
  }
  return q;
}

}  // namespace dloci
