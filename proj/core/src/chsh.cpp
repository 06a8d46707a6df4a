#include "xqm/chsh.hpp"

#include <cmath>
#include <numbers>

#include "xqm/philox.hpp"
#include "xqm/twoparty.hpp"

namespace xqm {

void SignedLhvModel::validate() const {
  if (weights.empty()) throw WeightSumInvalid("model has no hidden states");
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (std::abs(sum - 1.0) > 1e-12)
    throw WeightSumInvalid("hidden-state weights do not sum to 1");
  for (const auto& party : outcomes)
    for (const auto& setting : party) {
      if (setting.size() != weights.size())
        throw WeightSumInvalid("outcome map does not cover all hidden states");
      for (int v : setting)
        if (v != 1 && v != -1)
          throw WeightSumInvalid("outcomes must be +1 or -1");
    }
}

double lhv_correlator(const SignedLhvModel& model, int a_setting,
                      int b_setting, LhvMode mode) {
  const auto& a = model.outcomes[0][a_setting];
  const auto& b = model.outcomes[1][b_setting];
  if (mode == LhvMode::kRaw) {
    double e = 0.0;
    for (std::size_t l = 0; l < model.states(); ++l)
      e += model.weights[l] * a[l] * b[l];
    return e;
  }
  double norm = 0.0;
  for (double w : model.weights) norm += std::abs(w);
  double e = 0.0;
  for (std::size_t l = 0; l < model.states(); ++l)
    e += std::abs(model.weights[l]) / norm * a[l] * b[l];
  return e;
}

double chsh_signed_lhv(const SignedLhvModel& model, LhvMode mode) {
  model.validate();
  return lhv_correlator(model, 0, 0, mode) + lhv_correlator(model, 0, 1, mode) +
         lhv_correlator(model, 1, 0, mode) - lhv_correlator(model, 1, 1, mode);
}

SignedLhvModel chsh_witness_model() {
  SignedLhvModel m;
  m.weights = {2.0, -1.0};
  m.outcomes[0][0] = {1, 1};
  m.outcomes[0][1] = {1, 1};
  m.outcomes[1][0] = {1, -1};
  m.outcomes[1][1] = {1, -1};
  return m;
}

SignedLhvModel random_signed_model(std::uint64_t seed, std::uint64_t index) {
  // Stream per model index: shards of a scan draw identical models.
  PhiloxSequence rng(seed, index + 1);
  SignedLhvModel m;
  const std::size_t states = 2 + rng.next_below(5);
  m.weights.resize(states);
  double sum = 0.0;
  do {
    sum = 0.0;
    for (auto& w : m.weights) {
      w = rng.next_normal();
      sum += w;
    }
  } while (std::abs(sum) < 1e-3);
  for (auto& w : m.weights) w /= sum;
  for (auto& party : m.outcomes)
    for (auto& setting : party) {
      setting.resize(states);
      for (auto& v : setting) v = rng.next_uniform() < 0.5 ? -1 : 1;
    }
  return m;
}

template <StarRing R>
QuantumChsh chsh_quantum(const ModuleVector<R>& psi,
                         const std::array<std::vector<Projection<R>>, 2>& alice,
                         const std::array<std::vector<Projection<R>>, 2>& bob,
                         const Tolerances& tol) {
  QuantumChsh out;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double e = 0.0;
      for (std::size_t i = 0; i < alice[x].size(); ++i)
        for (std::size_t j = 0; j < bob[y].size(); ++j)
          e += alice[x][i].eigenvalue * bob[y][j].eigenvalue *
               symmetrized_joint(psi, alice[x], bob[y], i, j, tol);
      out.correlators[x][y] = e;
    }
  }
  out.s = out.correlators[0][0] + out.correlators[0][1] +
          out.correlators[1][0] - out.correlators[1][1];
  return out;
}

namespace {

// (I +- (cos t sz + sin t sx)) / 2 as a real 2x2 quaternion-entry matrix.
RingOperator<Quaternion> spin_projection(double theta, int sign) {
  RingOperator<Quaternion> p(2);
  const double c = std::cos(theta), s = std::sin(theta);
  p.at(0, 0) = Quaternion(0.5 * (1.0 + sign * c));
  p.at(0, 1) = Quaternion(0.5 * sign * s);
  p.at(1, 0) = Quaternion(0.5 * sign * s);
  p.at(1, 1) = Quaternion(0.5 * (1.0 - sign * c));
  return p;
}

std::vector<Projection<Quaternion>> joint_spin_family(double theta,
                                                      bool first_party) {
  std::vector<Projection<Quaternion>> fam;
  for (int sign : {+1, -1}) {
    Projection<Quaternion> p;
    p.eigenvalue = sign;
    p.signs_used = {1};
    const auto local = spin_projection(theta, sign);
    p.op = first_party ? left_factor_operator(local, 2)
                       : right_factor_operator(2, local);
    fam.push_back(std::move(p));
  }
  return fam;
}

}  // namespace

QuantumChsh chsh_singlet_demo(const Tolerances& tol) {
  // Singlet analog (e_01 - e_10) / sqrt(2) on the rank-4 module; settings
  // at the maximizing angles for E(a, b) = -cos(a - b).
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  ModuleVector<Quaternion> psi(4);
  psi.coeffs[1] = Quaternion(inv_sqrt2);
  psi.coeffs[2] = Quaternion(-inv_sqrt2);

  const double pi = std::numbers::pi;
  const std::array<std::vector<Projection<Quaternion>>, 2> alice = {
      joint_spin_family(0.0, true), joint_spin_family(-pi / 2, true)};
  const std::array<std::vector<Projection<Quaternion>>, 2> bob = {
      joint_spin_family(3 * pi / 4, false),
      joint_spin_family(-3 * pi / 4, false)};
  return chsh_quantum(psi, alice, bob, tol);
}

template QuantumChsh chsh_quantum<Quaternion>(
    const ModuleVector<Quaternion>&,
    const std::array<std::vector<Projection<Quaternion>>, 2>&,
    const std::array<std::vector<Projection<Quaternion>>, 2>&,
    const Tolerances&);
template QuantumChsh chsh_quantum<CliffordElement>(
    const ModuleVector<CliffordElement>&,
    const std::array<std::vector<Projection<CliffordElement>>, 2>&,
    const std::array<std::vector<Projection<CliffordElement>>, 2>&,
    const Tolerances&);

}  // namespace xqm
