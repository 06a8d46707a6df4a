#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "xqm/measurement.hpp"

namespace xqm {

/// Local hidden-variable model with a signed weight per hidden state
/// (weights sum to one, signs unrestricted) and deterministic +-1 outcome
/// maps per party and setting.
struct SignedLhvModel {
  std::vector<double> weights;
  /// outcomes[party][setting][hidden_state] in {+1, -1}
  std::array<std::array<std::vector<int>, 2>, 2> outcomes;

  std::size_t states() const { return weights.size(); }
  /// Throws WeightSumInvalid unless the weights sum to 1 within 1e-12 and
  /// every outcome map is total and valued in {+1, -1}.
  void validate() const;
};

enum class LhvMode {
  kRaw,           ///< correlators with the signed weights as they stand
  kRenormalized,  ///< weights replaced by |w| / sum |w|
};

/// E(a, b) = sum_l w_l A_a(l) B_b(l) under the chosen weight treatment.
double lhv_correlator(const SignedLhvModel& model, int a_setting,
                      int b_setting, LhvMode mode);

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b').
double chsh_signed_lhv(const SignedLhvModel& model, LhvMode mode);

/// The two-state witness: weights (2, -1), first state all outcomes +1,
/// second state +1 for the first party and -1 for the second.  Raw S = 6,
/// renormalized S = 2/3.
SignedLhvModel chsh_witness_model();

/// Reproducible random signed model; `index` selects the model within the
/// seed's scan so shards draw identical models regardless of scheduling.
SignedLhvModel random_signed_model(std::uint64_t seed, std::uint64_t index);

/// CHSH from quantum statistics: correlators assembled from the
/// symmetrized joint probabilities, outcome values taken from the
/// projection eigenvalues.
struct QuantumChsh {
  double s = 0.0;
  std::array<std::array<double, 2>, 2> correlators{};  // [a_setting][b_setting]
};

template <StarRing R>
QuantumChsh chsh_quantum(const ModuleVector<R>& psi,
                         const std::array<std::vector<Projection<R>>, 2>& alice,
                         const std::array<std::vector<Projection<R>>, 2>& bob,
                         const Tolerances& tol = {});

/// Built-in demonstration: the rank-4 quaternion singlet analog measured
/// at the settings that maximize S; reaches 2*sqrt(2) since the state is
/// positive-definite and the rule reduces to the Born values.
QuantumChsh chsh_singlet_demo(const Tolerances& tol = {});

}  // namespace xqm
