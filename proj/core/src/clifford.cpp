#include "xqm/clifford.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cassert>

namespace xqm {
namespace {

using Complex = std::complex<double>;

// Canonical blade order as a generator bitmask (bit mu set when g^mu is a
// factor).  Index layout matches the class doc comment.
constexpr std::array<int, 16> kIdxToMask = {0,  1,  2,  4, 8,  3,  5,  9,
                                            6,  10, 12, 7, 11, 13, 14, 15};

constexpr std::array<int, 16> make_mask_to_idx() {
  std::array<int, 16> m{};
  for (int i = 0; i < 16; ++i) m[kIdxToMask[i]] = i;
  return m;
}
constexpr std::array<int, 16> kMaskToIdx = make_mask_to_idx();

// Sign of blade(a) * blade(b) for generator masks a, b.  Counts the
// transpositions needed to merge the two ascending factor lists, then one
// metric factor per contracted pair: eta = (+,-,-,-).
constexpr int product_sign(int a, int b) {
  int swaps = 0;
  for (int mu = 0; mu < 4; ++mu) {
    if (b & (1 << mu)) swaps += std::popcount(unsigned(a) >> (mu + 1));
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  const int common = a & b;
  for (int mu = 1; mu < 4; ++mu) {
    if (common & (1 << mu)) sign = -sign;
  }
  return sign;
}

struct ProductTable {
  // result blade index and sign for every pair of blade indices
  std::array<std::array<int, 16>, 16> target{};
  std::array<std::array<int, 16>, 16> sign{};
};

constexpr ProductTable make_table() {
  ProductTable t{};
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const int ma = kIdxToMask[i];
      const int mb = kIdxToMask[j];
      t.target[i][j] = kMaskToIdx[ma ^ mb];
      t.sign[i][j] = product_sign(ma, mb);
    }
  }
  return t;
}

constexpr ProductTable kTable = make_table();

constexpr std::array<int, 16> make_reversion_signs() {
  std::array<int, 16> s{};
  for (int i = 0; i < 16; ++i) {
    const int k = std::popcount(unsigned(kIdxToMask[i]));
    s[i] = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  }
  return s;
}
constexpr std::array<int, 16> kReversionSign = make_reversion_signs();

using RepMatrix = Eigen::Matrix4cd;

std::array<RepMatrix, 4> make_gamma_reps() {
  const Complex I(0.0, 1.0);
  std::array<RepMatrix, 4> g;
  g[0] << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1;
  // g^k = [[0, sigma_k], [-sigma_k, 0]]
  g[1] << 0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0;
  g[2] << 0, 0, 0, -I, 0, 0, I, 0, 0, I, 0, 0, -I, 0, 0, 0;
  g[3] << 0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0;
  return g;
}

const std::array<RepMatrix, 16>& blade_reps() {
  static const std::array<RepMatrix, 16> reps = [] {
    const auto g = make_gamma_reps();
    std::array<RepMatrix, 16> r;
    for (int i = 0; i < 16; ++i) {
      RepMatrix m = RepMatrix::Identity();
      for (int mu = 0; mu < 4; ++mu) {
        if (kIdxToMask[i] & (1 << mu)) m = m * g[mu];
      }
      r[i] = m;
    }
    return r;
  }();
  return reps;
}

RepMatrix to_eigen(const std::array<Complex, 16>& m) {
  RepMatrix e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = m[4 * r + c];
  return e;
}

}  // namespace

CliffordElement CliffordElement::gamma(int mu) {
  assert(mu >= 0 && mu < 4);
  CliffordElement e;
  e.c_[1 + mu] = 1.0;
  return e;
}

CliffordElement CliffordElement::gamma5() { return blade(15); }

CliffordElement CliffordElement::blade(int index) {
  assert(index >= 0 && index < kBlades);
  CliffordElement e;
  e.c_[index] = 1.0;
  return e;
}

int CliffordElement::blade_grade(int i) {
  return std::popcount(unsigned(kIdxToMask[i]));
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  CliffordElement r;
  for (int i = 0; i < kBlades; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  CliffordElement r;
  for (int i = 0; i < kBlades; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r;
  for (int i = 0; i < kBlades; ++i) r.c_[i] = -c_[i];
  return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  CliffordElement r;
  for (int i = 0; i < kBlades; ++i) {
    if (c_[i] == 0.0) continue;
    for (int j = 0; j < kBlades; ++j) {
      if (o.c_[j] == 0.0) continue;
      r.c_[kTable.target[i][j]] +=
          double(kTable.sign[i][j]) * c_[i] * o.c_[j];
    }
  }
  return r;
}

CliffordElement CliffordElement::operator*(Complex s) const {
  CliffordElement r;
  for (int i = 0; i < kBlades; ++i) r.c_[i] = c_[i] * s;
  return r;
}

double CliffordElement::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

CliffordElement tilde(const CliffordElement& a) {
  CliffordElement r;
  for (int i = 0; i < CliffordElement::kBlades; ++i) {
    r[i] = double(kReversionSign[i]) * std::conj(a[i]);
  }
  return r;
}

std::array<Complex, 16> rep(const CliffordElement& a) {
  const auto& reps = blade_reps();
  RepMatrix m = RepMatrix::Zero();
  for (int i = 0; i < CliffordElement::kBlades; ++i) {
    if (a[i] != 0.0) m += a[i] * reps[i];
  }
  std::array<Complex, 16> out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[4 * r + c] = m(r, c);
  return out;
}

CliffordElement clifford_from_rep(const std::array<Complex, 16>& m) {
  // tr(rep(a) * B_i) = 4 * c_i * sign(B_i^2); all cross terms are traceless.
  const auto& reps = blade_reps();
  const RepMatrix em = to_eigen(m);
  CliffordElement out;
  for (int i = 0; i < CliffordElement::kBlades; ++i) {
    const double s = double(kTable.sign[i][i]);
    out[i] = (em * reps[i]).trace() / (4.0 * s);
  }
  return out;
}

bool is_invertible(const CliffordElement& a, double rel_tol) {
  const RepMatrix m = to_eigen(rep(a));
  Eigen::JacobiSVD<RepMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return false;
  return sv(3) > rel_tol * sv(0);
}

}  // namespace xqm
