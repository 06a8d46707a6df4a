#pragma once

#include <complex>
#include <concepts>
#include <string_view>
#include <vector>

#include "xqm/clifford.hpp"
#include "xqm/quaternion.hpp"

namespace xqm {

/// Capability record unifying the two star-rings behind one compile-time
/// interface: arithmetic, involution, scalar part, the faithful complex
/// matrix representation of dimension rep_dim, and an invertibility test.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Quaternion> {
  using Ring = Quaternion;
  static constexpr int rep_dim = 2;
  static constexpr std::string_view name = "quaternion";

  static Quaternion zero() { return Quaternion::zero(); }
  static Quaternion one() { return Quaternion::one(); }
  static Quaternion from_real(double x) { return Quaternion(x); }
  static std::complex<double> scalar(const Quaternion& a) {
    return {a.a0, 0.0};
  }
  static std::vector<std::complex<double>> rep_flat(const Quaternion& a) {
    const auto m = rep(a);
    return {m.begin(), m.end()};
  }
  static Quaternion from_rep_flat(const std::vector<std::complex<double>>& m) {
    return quaternion_from_rep({m[0], m[1], m[2], m[3]});
  }
  static bool invertible(const Quaternion& a, double rel_tol) {
    return a.norm_sq() > rel_tol * rel_tol;
  }
};

template <>
struct RingTraits<CliffordElement> {
  using Ring = CliffordElement;
  static constexpr int rep_dim = 4;
  static constexpr std::string_view name = "clifford";

  static CliffordElement zero() { return CliffordElement::zero(); }
  static CliffordElement one() { return CliffordElement::one(); }
  static CliffordElement from_real(double x) {
    return CliffordElement::scalar(x);
  }
  static std::complex<double> scalar(const CliffordElement& a) {
    return scalar_part(a);
  }
  static std::vector<std::complex<double>> rep_flat(const CliffordElement& a) {
    const auto m = rep(a);
    return {m.begin(), m.end()};
  }
  static CliffordElement from_rep_flat(
      const std::vector<std::complex<double>>& m) {
    std::array<std::complex<double>, 16> arr;
    for (int i = 0; i < 16; ++i) arr[i] = m[i];
    return clifford_from_rep(arr);
  }
  static bool invertible(const CliffordElement& a, double rel_tol) {
    return is_invertible(a, rel_tol);
  }
};

/// A star-ring: associative algebra with a conjugate-linear
/// anti-multiplicative involution and a distinguished scalar-part
/// functional.
template <class R>
concept StarRing = requires(const R a, const R b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a* b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { tilde(a) } -> std::convertible_to<R>;
  { a.max_abs() } -> std::convertible_to<double>;
  { RingTraits<R>::rep_dim } -> std::convertible_to<int>;
};

static_assert(StarRing<Quaternion>);
static_assert(StarRing<CliffordElement>);

}  // namespace xqm
