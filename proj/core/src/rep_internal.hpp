#pragma once

// Internal helpers mapping ring-valued vectors and operators into the
// complex matrix representation.  Eigen stays out of the public headers.

#include <Eigen/Dense>

#include "xqm/bimodule.hpp"
#include "xqm/ring_traits.hpp"

namespace xqm::detail {

using Eigen::MatrixXcd;

template <StarRing R>
MatrixXcd ring_to_block(const R& a) {
  constexpr int d = RingTraits<R>::rep_dim;
  const auto flat = RingTraits<R>::rep_flat(a);
  MatrixXcd m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = flat[r * d + c];
  return m;
}

template <StarRing R>
R block_to_ring(const MatrixXcd& m) {
  constexpr int d = RingTraits<R>::rep_dim;
  std::vector<std::complex<double>> flat(d * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) flat[r * d + c] = m(r, c);
  return RingTraits<R>::from_rep_flat(flat);
}

// rep(tilde(a)) = twist * rep(a)^H * twist.  Identity for quaternions,
// rep(g0) for the Clifford algebra.
template <StarRing R>
const MatrixXcd& metric_twist() {
  static const MatrixXcd t = [] {
    if constexpr (RingTraits<R>::rep_dim == 2) {
      return MatrixXcd(MatrixXcd::Identity(2, 2));
    } else {
      return ring_to_block<CliffordElement>(CliffordElement::gamma(0));
    }
  }();
  return t;
}

// I_n tensor twist; the matrix G with rep(<v|w>) = twist * S_v^H G S_w.
template <StarRing R>
MatrixXcd big_metric(std::size_t n) {
  constexpr int d = RingTraits<R>::rep_dim;
  const MatrixXcd& t = metric_twist<R>();
  MatrixXcd g = MatrixXcd::Zero(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    g.block(i * d, i * d, d, d) = t;
  return g;
}

// nd x nd complex representation of an operator, block (beta, alpha) =
// rep(A_{beta alpha}).  Faithful: left eigenvectors with real eigenvalue
// correspond to ordinary kernel vectors of (L - lambda I).
template <StarRing R>
MatrixXcd op_rep(const RingOperator<R>& A) {
  constexpr int d = RingTraits<R>::rep_dim;
  const std::size_t n = A.rank();
  MatrixXcd L(n * d, n * d);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      L.block(b * d, a * d, d, d) = ring_to_block<R>(A.at(b, a));
  return L;
}

// nd x d stack of the coefficient representations.
template <StarRing R>
MatrixXcd stack_rep(const ModuleVector<R>& v) {
  constexpr int d = RingTraits<R>::rep_dim;
  MatrixXcd s(v.rank() * d, d);
  for (std::size_t b = 0; b < v.rank(); ++b)
    s.block(b * d, 0, d, d) = ring_to_block<R>(v.coeffs[b]);
  return s;
}

// Rebuild a module vector from its nd x d representation stack.
template <StarRing R>
ModuleVector<R> unstack_rep(const MatrixXcd& s) {
  constexpr int d = RingTraits<R>::rep_dim;
  const std::size_t n = s.rows() / d;
  ModuleVector<R> v(n);
  for (std::size_t b = 0; b < n; ++b)
    v.coeffs[b] = block_to_ring<R>(s.block(b * d, 0, d, d));
  return v;
}

}  // namespace xqm::detail
