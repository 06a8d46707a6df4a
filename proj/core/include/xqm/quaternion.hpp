#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "xqm/errors.hpp"

namespace xqm {

/// Element of the real quaternion division algebra.
///
/// Coefficients are stored against the basis {1, i, j, k} with
/// i^2 = j^2 = k^2 = -1 and ij = -ji = k.  Values are immutable in
/// spirit: every operation returns a new element.
struct Quaternion {
  double a0 = 0.0;  ///< coefficient of 1
  double a1 = 0.0;  ///< coefficient of i
  double a2 = 0.0;  ///< coefficient of j
  double a3 = 0.0;  ///< coefficient of k

  constexpr Quaternion() = default;
  constexpr Quaternion(double s) : a0(s) {}
  constexpr Quaternion(double c0, double c1, double c2, double c3)
      : a0(c0), a1(c1), a2(c2), a3(c3) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return {1.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {a0 + o.a0, a1 + o.a1, a2 + o.a2, a3 + o.a3};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {a0 - o.a0, a1 - o.a1, a2 - o.a2, a3 - o.a3};
  }
  constexpr Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }

  // Bilinear associative product from the basis relations.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {a0 * o.a0 - a1 * o.a1 - a2 * o.a2 - a3 * o.a3,
            a0 * o.a1 + a1 * o.a0 + a2 * o.a3 - a3 * o.a2,
            a0 * o.a2 - a1 * o.a3 + a2 * o.a0 + a3 * o.a1,
            a0 * o.a3 + a1 * o.a2 - a2 * o.a1 + a3 * o.a0};
  }
  constexpr Quaternion operator*(double s) const {
    return {a0 * s, a1 * s, a2 * s, a3 * s};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) {
    return q * s;
  }

  /// Squared Euclidean norm; equals the scalar part of tilde(a) * a.
  constexpr double norm_sq() const {
    return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3;
  }

  double max_abs() const {
    return std::max(std::max(std::abs(a0), std::abs(a1)),
                    std::max(std::abs(a2), std::abs(a3)));
  }
};

/// Involution: fixes the scalar part, negates i, j, k.  Conjugate-linear
/// anti-automorphism of the algebra.
constexpr Quaternion tilde(const Quaternion& a) {
  return {a.a0, -a.a1, -a.a2, -a.a3};
}

/// Coefficient of the unit element.
constexpr double scalar_part(const Quaternion& a) { return a.a0; }

/// Two-sided inverse.  Throws ZeroDivision when |a| = 0.
inline Quaternion inverse(const Quaternion& a) {
  const double n = a.norm_sq();
  if (n == 0.0) throw ZeroDivision("quaternion inverse of zero");
  return tilde(a) * (1.0 / n);
}

/// Faithful embedding into the 2x2 complex matrices, row-major:
///   a0 + i a1 + j a2 + k a3  ->  [[a0+i*a1, a2+i*a3], [-a2+i*a3, a0-i*a1]]
inline std::array<std::complex<double>, 4> rep(const Quaternion& a) {
  using C = std::complex<double>;
  return {C{a.a0, a.a1}, C{a.a2, a.a3}, C{-a.a2, a.a3}, C{a.a0, -a.a1}};
}

/// Inverse of rep().  The matrix must lie in the quaternion image; the
/// off-subalgebra residual is folded away by averaging the redundant
/// entries.
inline Quaternion quaternion_from_rep(
    const std::array<std::complex<double>, 4>& m) {
  return {0.5 * (m[0].real() + m[3].real()), 0.5 * (m[0].imag() - m[3].imag()),
          0.5 * (m[1].real() - m[2].real()), 0.5 * (m[1].imag() + m[2].imag())};
}

}  // namespace xqm
