#pragma once

// Shared helpers for the unit suites: independent matrix arithmetic used
// as oracles, and deterministic random generators.

#include <array>
#include <complex>
#include <random>

#include "xqm/bimodule.hpp"
#include "xqm/clifford.hpp"
#include "xqm/quaternion.hpp"

namespace xqm_test {

using Cplx = std::complex<double>;

// Plain row-major complex matrix arithmetic, written without the library's
// multiplication paths.
template <int D>
using Mat = std::array<Cplx, D * D>;

template <int D>
Mat<D> mat_mul(const Mat<D>& a, const Mat<D>& b) {
  Mat<D> r{};
  for (int i = 0; i < D; ++i)
    for (int k = 0; k < D; ++k)
      for (int j = 0; j < D; ++j) r[i * D + j] += a[i * D + k] * b[k * D + j];
  return r;
}

template <int D>
double mat_max_diff(const Mat<D>& a, const Mat<D>& b) {
  double m = 0.0;
  for (int i = 0; i < D * D; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

template <int D>
Cplx mat_trace(const Mat<D>& a) {
  Cplx t = 0.0;
  for (int i = 0; i < D; ++i) t += a[i * D + i];
  return t;
}

// conj-transpose
template <int D>
Mat<D> mat_adjoint(const Mat<D>& a) {
  Mat<D> r{};
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) r[i * D + j] = std::conj(a[j * D + i]);
  return r;
}

template <int D>
std::array<Cplx, D> mat_vec(const Mat<D>& a, const std::array<Cplx, D>& v) {
  std::array<Cplx, D> r{};
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) r[i] += a[i * D + j] * v[j];
  return r;
}

template <int D>
Cplx vec_dot(const std::array<Cplx, D>& a, const std::array<Cplx, D>& b) {
  Cplx r = 0.0;
  for (int i = 0; i < D; ++i) r += std::conj(a[i]) * b[i];
  return r;
}

inline std::mt19937_64 test_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline double rnormal(std::mt19937_64& g) {
  static thread_local std::normal_distribution<double> d(0.0, 1.0);
  return d(g);
}

inline xqm::Quaternion random_quaternion(std::mt19937_64& g) {
  return {rnormal(g), rnormal(g), rnormal(g), rnormal(g)};
}

inline xqm::CliffordElement random_clifford(std::mt19937_64& g) {
  xqm::CliffordElement e;
  for (int i = 0; i < xqm::CliffordElement::kBlades; ++i)
    e[i] = {rnormal(g), rnormal(g)};
  return e;
}

template <class R>
R random_ring(std::mt19937_64& g);
template <>
inline xqm::Quaternion random_ring<xqm::Quaternion>(std::mt19937_64& g) {
  return random_quaternion(g);
}
template <>
inline xqm::CliffordElement random_ring<xqm::CliffordElement>(
    std::mt19937_64& g) {
  return random_clifford(g);
}

template <class R>
xqm::ModuleVector<R> random_vector(std::size_t rank, std::mt19937_64& g) {
  xqm::ModuleVector<R> v(rank);
  for (auto& c : v.coeffs) c = random_ring<R>(g);
  return v;
}

template <class R>
xqm::RingOperator<R> random_operator(std::size_t rank, std::mt19937_64& g) {
  xqm::RingOperator<R> a(rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) a.at(i, j) = random_ring<R>(g);
  return a;
}

inline double diff(const xqm::Quaternion& a, const xqm::Quaternion& b) {
  return (a - b).max_abs();
}
inline double diff(const xqm::CliffordElement& a,
                   const xqm::CliffordElement& b) {
  return (a - b).max_abs();
}

// The commuting pair with no joint real eigenbasis: A = diag(lambda, mu)
// real, B twists the basis by g0.  The kets 3 and 4 form the left
// orthonormal eigenbasis of B with eigenvalues +1 and -1.
struct TwistedPair {
  xqm::RingOperator<xqm::CliffordElement> a;
  xqm::RingOperator<xqm::CliffordElement> b;
  xqm::ModuleVector<xqm::CliffordElement> ket3, ket4;
};

inline TwistedPair make_twisted_pair(double lambda, double mu) {
  using xqm::CliffordElement;
  const auto g0 = CliffordElement::gamma(0);
  TwistedPair t{xqm::RingOperator<CliffordElement>(2),
                xqm::RingOperator<CliffordElement>(2),
                xqm::ModuleVector<CliffordElement>(2),
                xqm::ModuleVector<CliffordElement>(2)};
  t.a.at(0, 0) = CliffordElement::scalar(lambda);
  t.a.at(1, 1) = CliffordElement::scalar(mu);
  t.b.at(0, 0) = g0;
  t.b.at(1, 1) = -g0;
  const auto plus = (CliffordElement::one() + g0) * 0.5;
  const auto minus = (CliffordElement::one() - g0) * 0.5;
  t.ket3.coeffs = {plus, minus};
  t.ket4.coeffs = {minus, plus};
  return t;
}

}  // namespace xqm_test
