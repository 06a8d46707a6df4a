#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace xqm {

/// Element of the complexified Clifford algebra Cl(1,3) generated by the
/// gamma matrices with {g^mu, g^nu} = 2 eta^{mu nu}, signature (+,-,-,-).
///
/// Sixteen complex coefficients against the canonical blade basis, ordered:
///   [0]      1
///   [1..4]   g0, g1, g2, g3
///   [5..10]  g0g1, g0g2, g0g3, g1g2, g1g3, g2g3
///   [11..14] g0g1g2, g0g1g3, g0g2g3, g1g2g3
///   [15]     g5 = g0g1g2g3
class CliffordElement {
 public:
  using Complex = std::complex<double>;
  static constexpr int kBlades = 16;

  CliffordElement() = default;

  /// c * 1 for a complex scalar c.
  static CliffordElement scalar(Complex c) {
    CliffordElement e;
    e.c_[0] = c;
    return e;
  }
  /// The generator g^mu, mu in 0..3.
  static CliffordElement gamma(int mu);
  /// g5 = g0 g1 g2 g3.
  static CliffordElement gamma5();
  /// Basis blade by canonical index 0..15.
  static CliffordElement blade(int index);
  static CliffordElement zero() { return {}; }
  static CliffordElement one() { return scalar(1.0); }

  Complex& operator[](int i) { return c_[i]; }
  const Complex& operator[](int i) const { return c_[i]; }
  const std::array<Complex, kBlades>& coeffs() const { return c_; }

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement operator*(Complex s) const;
  CliffordElement operator*(double s) const { return *this * Complex(s); }
  friend CliffordElement operator*(Complex s, const CliffordElement& e) {
    return e * s;
  }

  /// Largest coefficient magnitude; the norm used for residual checks.
  double max_abs() const;

  /// Grade (number of generators) of blade index i.
  static int blade_grade(int i);

 private:
  std::array<Complex, kBlades> c_{};
};

/// Involution: conjugate-linear anti-automorphism fixing every g^mu.
/// On a grade-k blade this is complex conjugation of the coefficient
/// times the reversion sign (-1)^{k(k-1)/2}.
CliffordElement tilde(const CliffordElement& a);

/// Coefficient of the unit blade.  Equals trace(rep(a)) / 4.
inline std::complex<double> scalar_part(const CliffordElement& a) {
  return a[0];
}

/// Faithful representation as a 4x4 complex matrix (row-major), in the
/// Dirac basis: g0 = diag(1,1,-1,-1), g^k off-diagonal Pauli blocks.
std::array<std::complex<double>, 16> rep(const CliffordElement& a);

/// Inverse of rep(): every 4x4 complex matrix is the image of exactly one
/// element.  Coefficients are recovered from blade traces.
CliffordElement clifford_from_rep(
    const std::array<std::complex<double>, 16>& m);

/// True when the representation matrix is invertible relative to the
/// given singular-value threshold.
bool is_invertible(const CliffordElement& a, double rel_tol = 1e-8);

}  // namespace xqm
