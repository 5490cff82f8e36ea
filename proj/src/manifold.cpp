#include "dloci/manifold.hpp"

#include <stdexcept>
#include <string>

#include "dloci/error.hpp"

namespace dloci {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) out[i].emplace_back(static_cast<long>(v));
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational scale = Rational(1) / m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::int64_t signature(const IntMatrix& q) {
  RationalMatrix a = to_rational(q);
  const std::size_t n = a.size();
  std::int64_t sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // Find a nonzero diagonal pivot in the trailing block.
    std::size_t piv = k;
    while (piv < n && a[piv][piv].is_zero()) ++piv;
    if (piv == n) {
      // All trailing diagonals vanish: a nonzero a[k][j] lets the congruence
      // e_k -> e_k + e_j create the diagonal entry 2 a[k][j].
      std::size_t row = n, other = n;
      for (std::size_t i = k; i < n && row == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a[i][j].is_zero()) {
            row = i;
            other = j;
            break;
          }
      if (row == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a[row][c] += a[other][c];
      for (std::size_t r = 0; r < n; ++r) a[r][row] += a[r][other];
      piv = row;
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (auto& r : a) std::swap(r[piv], r[k]);
    }
    sig += a[k][k].sign();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      const Rational f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      for (std::size_t c = k; c < n; ++c) a[c][r] = a[r][c];
    }
  }
  return sig;
}

FourManifold::FourManifold(std::int64_t chi, std::int64_t sigma, IntMatrix q)
    : chi_(chi), sigma_(sigma), q_(std::move(q)) {
  const std::size_t d = q_.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (q_[i].size() != d) throw Error(ErrorCode::BadForm, "intersection matrix is not square");
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (q_[i][j] != q_[j][i])
        throw Error(ErrorCode::BadForm, "intersection matrix is not symmetric at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
  const Rational det = determinant(to_rational(q_));
  if (det != Rational(1) && det != Rational(-1))
    throw Error(ErrorCode::NotUnimodular, "det Q = " + det.str());
  if (static_cast<std::int64_t>(d) != chi_ - 2)
    throw Error(ErrorCode::InconsistentTopology, "b2 = " + std::to_string(d) + " but chi - 2 = " +
                                                     std::to_string(chi_ - 2));
  const std::int64_t sig = signature(q_);
  if (sig != sigma_)
    throw Error(ErrorCode::InconsistentTopology,
                "signature of Q is " + std::to_string(sig) + " but sigma = " + std::to_string(sigma_));
  p_ = inverse(to_rational(q_));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Rational s(0);
      for (std::size_t j = 0; j < d; ++j) s += p_[i][j] * Rational(static_cast<long>(q_[j][k]));
      if (s != Rational(i == k ? 1 : 0)) throw std::logic_error("P·Q != identity");
    }
  std::vector<VariableTable::Variable> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back({"mu_" + std::to_string(i + 1), 2});
  gens.push_back({"wp", 4});
  base_ = make_variables(std::move(gens));
}

Rational FourManifold::pairing(const IntVector& a, const IntVector& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * q_[i][j] * b[j];
  return Rational(static_cast<long>(s));
}

Rational FourManifold::pairing(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (q_[i][j] != 0) s += a[i] * Rational(static_cast<long>(q_[i][j])) * b[j];
  return s;
}

ManifoldPtr manifold_new(std::int64_t chi, std::int64_t sigma, IntMatrix q) {
  return std::make_shared<const FourManifold>(chi, sigma, std::move(q));
}

namespace forms {

IntMatrix hyperbolic() { return {{0, 1}, {1, 0}}; }

IntMatrix e8() {
  // Dynkin diagram: chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
  IntMatrix m(8, IntVector(8, 0));
  for (int i = 0; i < 8; ++i) m[i][i] = 2;
  auto edge = [&m](int a, int b) { m[a][b] = m[b][a] = -1; };
  for (int i = 0; i < 6; ++i) edge(i, i + 1);
  edge(4, 7);
  return m;
}

IntMatrix diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), IntVector(entries.size(), 0));
  for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
  return m;
}

IntMatrix negated(IntMatrix m) {
  for (auto& r : m)
    for (auto& v : r) v = -v;
  return m;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size() + b.size();
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m[a.size() + i][a.size() + j] = b[i][j];
  return m;
}

}  // namespace forms

// ---------------------------------------------------------------------------

CohClassX::CohClassX(ManifoldPtr m) : m_(std::move(m)), deg2_(m_->b2()) {}

CohClassX CohClassX::unit(ManifoldPtr m, const ParamScalar& c) {
  CohClassX out(std::move(m));
  out.deg0_ = c;
  return out;
}

CohClassX CohClassX::degree2(ManifoldPtr m, const std::vector<ParamScalar>& h) {
  CohClassX out(std::move(m));
  if (h.size() != out.deg2_.size())
    throw Error(ErrorCode::UnknownBasis, "degree-2 class has " + std::to_string(h.size()) +
                                             " coordinates, b2 = " + std::to_string(out.deg2_.size()));
  out.deg2_ = h;
  return out;
}

CohClassX CohClassX::degree2(ManifoldPtr m, const IntVector& h) {
  std::vector<ParamScalar> coords;
  for (auto v : h) coords.emplace_back(static_cast<long>(v));
  return degree2(std::move(m), coords);
}

CohClassX CohClassX::point_dual(ManifoldPtr m, const ParamScalar& c) {
  CohClassX out(std::move(m));
  out.deg4_ = c;
  return out;
}

bool CohClassX::is_zero() const {
  if (!deg0_.is_zero() || !deg4_.is_zero()) return false;
  for (const auto& c : deg2_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<unsigned> CohClassX::homogeneous_degree() const {
  bool has2 = false;
  for (const auto& c : deg2_) has2 = has2 || !c.is_zero();
  const int count = int(!deg0_.is_zero()) + int(has2) + int(!deg4_.is_zero());
  if (count != 1) return std::nullopt;
  return !deg0_.is_zero() ? 0u : (has2 ? 2u : 4u);
}

CohClassX CohClassX::truncated(unsigned max_degree) const {
  CohClassX out(*this);
  if (max_degree < 4) out.deg4_ = ParamScalar();
  if (max_degree < 2)
    for (auto& c : out.deg2_) c = ParamScalar();
  return out;
}

void CohClassX::require_compatible(const CohClassX& o) const {
  if (m_ != o.m_ && m_->q() != o.m_->q())
    throw Error(ErrorCode::IncompatibleSeries, "classes live on different manifolds");
}

CohClassX CohClassX::multiply(const CohClassX& a, const CohClassX& b, std::optional<unsigned> max_degree) {
  a.require_compatible(b);
  CohClassX out(a.m_);
  out.deg0_ = a.deg0_ * b.deg0_;
  for (std::size_t j = 0; j < out.deg2_.size(); ++j) out.deg2_[j] = a.deg0_ * b.deg2_[j] + a.deg2_[j] * b.deg0_;
  out.deg4_ = a.deg0_ * b.deg4_ + a.deg4_ * b.deg0_;
  const auto& q = a.m_->q();
  for (std::size_t j = 0; j < out.deg2_.size(); ++j)
    for (std::size_t l = 0; l < out.deg2_.size(); ++l)
      if (q[j][l] != 0) out.deg4_ += a.deg2_[j] * b.deg2_[l] * Rational(static_cast<long>(q[j][l]));
  return max_degree ? out.truncated(*max_degree) : out;
}

CohClassX& CohClassX::operator+=(const CohClassX& o) {
  require_compatible(o);
  deg0_ += o.deg0_;
  for (std::size_t j = 0; j < deg2_.size(); ++j) deg2_[j] += o.deg2_[j];
  deg4_ += o.deg4_;
  return *this;
}

CohClassX& CohClassX::operator-=(const CohClassX& o) {
  CohClassX neg(o);
  neg *= ParamScalar(-1);
  return *this += neg;
}

CohClassX& CohClassX::operator*=(const ParamScalar& c) {
  deg0_ *= c;
  for (auto& v : deg2_) v *= c;
  deg4_ *= c;
  return *this;
}

bool operator==(const CohClassX& a, const CohClassX& b) {
  return a.m_->q() == b.m_->q() && a.deg0_ == b.deg0_ && a.deg2_ == b.deg2_ && a.deg4_ == b.deg4_;
}

}  // namespace dloci
