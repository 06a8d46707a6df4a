#pragma once

#include <cstddef>
#include <vector>

#include "xqm/errors.hpp"
#include "xqm/ring_traits.hpp"

namespace xqm {

/// Element of a free rank-n bimodule over a star-ring: coefficients r_alpha
/// against the distinguished orthonormal left basis e_alpha, so that
/// v = sum_alpha e_alpha r_alpha uniquely.
template <StarRing R>
struct ModuleVector {
  std::vector<R> coeffs;

  ModuleVector() = default;
  explicit ModuleVector(std::size_t rank)
      : coeffs(rank, RingTraits<R>::zero()) {}
  explicit ModuleVector(std::vector<R> c) : coeffs(std::move(c)) {}

  std::size_t rank() const { return coeffs.size(); }

  /// The basis vector e_alpha of the given rank.
  static ModuleVector basis(std::size_t rank, std::size_t alpha) {
    ModuleVector v(rank);
    v.coeffs[alpha] = RingTraits<R>::one();
    return v;
  }

  ModuleVector operator+(const ModuleVector& o) const {
    check_rank(o.rank());
    ModuleVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
  }
  ModuleVector operator-(const ModuleVector& o) const {
    check_rank(o.rank());
    ModuleVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      r.coeffs[i] = coeffs[i] - o.coeffs[i];
    return r;
  }

  /// Right scalar multiplication, componentwise.
  ModuleVector operator*(const R& q) const {
    ModuleVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.coeffs[i] = coeffs[i] * q;
    return r;
  }
  ModuleVector operator*(double s) const {
    return *this * RingTraits<R>::from_real(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, c.max_abs());
    return m;
  }

  void check_rank(std::size_t other) const {
    if (other != rank()) throw RankMismatch("module vector rank mismatch");
  }
};

/// n x n matrix of ring elements acting on the left of the coefficients:
/// (A v)_beta = sum_alpha A_{beta alpha} r_alpha.  Commutes with right
/// scalar multiplication.
template <StarRing R>
class RingOperator {
 public:
  RingOperator() : n_(0) {}
  explicit RingOperator(std::size_t n)
      : n_(n), e_(n * n, RingTraits<R>::zero()) {}
  RingOperator(std::size_t n, std::vector<R> entries)
      : n_(n), e_(std::move(entries)) {
    if (e_.size() != n * n) throw RankMismatch("operator entry count");
  }

  static RingOperator identity(std::size_t n) {
    RingOperator a(n);
    for (std::size_t i = 0; i < n; ++i) a.at(i, i) = RingTraits<R>::one();
    return a;
  }
  /// Diagonal operator with real entries.
  static RingOperator diagonal(const std::vector<double>& d) {
    RingOperator a(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      a.at(i, i) = RingTraits<R>::from_real(d[i]);
    return a;
  }

  std::size_t rank() const { return n_; }
  R& at(std::size_t row, std::size_t col) { return e_[row * n_ + col]; }
  const R& at(std::size_t row, std::size_t col) const {
    return e_[row * n_ + col];
  }
  const std::vector<R>& entries() const { return e_; }

  RingOperator operator+(const RingOperator& o) const {
    check_rank(o);
    RingOperator r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  RingOperator operator-(const RingOperator& o) const {
    check_rank(o);
    RingOperator r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  RingOperator operator*(const RingOperator& o) const {
    check_rank(o);
    RingOperator r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    return r;
  }
  RingOperator operator*(double s) const {
    RingOperator r(n_);
    const R q = RingTraits<R>::from_real(s);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * q;
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& c : e_) m = std::max(m, c.max_abs());
    return m;
  }

  void check_rank(const RingOperator& o) const {
    if (o.n_ != n_) throw RankMismatch("operator rank mismatch");
  }

 private:
  std::size_t n_;
  std::vector<R> e_;
};

/// Gram matrix G_{alpha beta} = <v_alpha | v_beta> of a family of vectors.
/// Hermitian under the involution: G_{alpha beta} = tilde(G_{beta alpha}).
template <StarRing R>
struct GramData {
  std::size_t n = 0;
  std::vector<R> gram;  // row-major n x n

  const R& at(std::size_t row, std::size_t col) const {
    return gram[row * n + col];
  }
};

/// Left scalar multiplication: the distinguished basis commutes with ring
/// scalars, so (q v)_alpha = q r_alpha.
template <StarRing R>
ModuleVector<R> left_mul(const R& q, const ModuleVector<R>& v) {
  ModuleVector<R> r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r.coeffs[i] = q * v.coeffs[i];
  return r;
}

/// Scalar product <v|w> = sum_alpha tilde(r_alpha) s_alpha.  Right-linear
/// in w, conjugate right-linear in v, hermitian under the involution.
template <StarRing R>
R inner(const ModuleVector<R>& v, const ModuleVector<R>& w) {
  v.check_rank(w.rank());
  R acc = RingTraits<R>::zero();
  for (std::size_t i = 0; i < v.rank(); ++i)
    acc = acc + tilde(v.coeffs[i]) * w.coeffs[i];
  return acc;
}

template <StarRing R>
GramData<R> gram_matrix(const std::vector<ModuleVector<R>>& vs) {
  GramData<R> g;
  g.n = vs.size();
  g.gram.reserve(g.n * g.n);
  for (const auto& v : vs)
    for (const auto& w : vs) g.gram.push_back(inner(v, w));
  return g;
}

/// (A v)_beta = sum_alpha A_{beta alpha} r_alpha.
template <StarRing R>
ModuleVector<R> apply(const RingOperator<R>& A, const ModuleVector<R>& v) {
  if (A.rank() != v.rank()) throw RankMismatch("apply: rank mismatch");
  ModuleVector<R> out(v.rank());
  for (std::size_t b = 0; b < A.rank(); ++b) {
    R acc = RingTraits<R>::zero();
    for (std::size_t a = 0; a < A.rank(); ++a)
      acc = acc + A.at(b, a) * v.coeffs[a];
    out.coeffs[b] = acc;
  }
  return out;
}

/// Adjoint with respect to the distinguished orthonormal basis:
/// (A^dag)_{alpha beta} = tilde(A_{beta alpha}), so <v|Aw> = <A^dag v|w>.
template <StarRing R>
RingOperator<R> adjoint(const RingOperator<R>& A) {
  RingOperator<R> r(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t j = 0; j < A.rank(); ++j)
      r.at(i, j) = tilde(A.at(j, i));
  return r;
}

/// True when the family {v_a} is a left basis: every element writes
/// uniquely as sum v_a r_a.  Decided through the complex representation of
/// the coefficient matrix with a relative singular-value threshold.
template <StarRing R>
bool is_left_basis(const std::vector<ModuleVector<R>>& vs,
                   double rel_tol = 1e-8);

}  // namespace xqm
