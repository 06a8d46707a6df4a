#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "xqm/errors.hpp"

namespace xqm {

/// Fine-grained stochastic law of detector response: a finite set of
/// integer colors n with probabilities summing to one.  Negative colors
/// record the absence of quanta relative to the detector ground state.
struct ColorModel {
  std::vector<int> colors;
  std::vector<double> probs;

  static constexpr int kMaxColor = 64;

  /// Throws InvalidModel on empty/duplicated support, probabilities
  /// outside [0, 1], sums away from 1, or colors beyond +-kMaxColor.
  void validate() const;

  /// Probability of a color (0 when outside the support).
  double prob_of(int color) const;
};

/// Tallies of one simulated run and the derived statistics: the extended
/// absorption number P_a = sum colors / N, the fine-grained frequencies
/// P(n) = N_n / N, the coarse view, and the | P_a - (1 - P(0)) | mismatch.
struct RunResult {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<int> colors;
  std::vector<std::uint64_t> counts;
  std::vector<double> p_n;
  double p_a = 0.0;
  double p0 = 0.0;
  double coarse = 0.0;
  double mismatch = 0.0;
};

/// Closed-form limit of RunResult under the model: P_a = sum n p(n),
/// P(n) = p(n).  Serves as the oracle for simulate().
struct ExactLimit {
  std::vector<int> colors;
  std::vector<double> p_n;
  double p_a = 0.0;
  double p0 = 0.0;
  double coarse = 0.0;
  double mismatch = 0.0;
  double stddev = 0.0;  ///< per-shot standard deviation of the color
};

/// N independent draws from the model, deterministic in (model, N, seed):
/// shot i consumes the counter-based variate at index i, so any shard
/// count reproduces the serial sequence bit-exactly.
RunResult simulate(const ColorModel& model, std::uint64_t shots,
                   std::uint64_t seed, unsigned shards = 1);

ExactLimit exact_expectations(const ColorModel& model);

/// What an observer who only distinguishes color 0 from the rest sees.
struct CoarseView {
  double p0 = 0.0;
  double one_minus_p0 = 0.0;
};

CoarseView coarse_view(const RunResult& r);

/// The quantitative gap between the extended prediction P_a and the
/// fine-grained law: P_a underdetermines P(n).
struct PredictivityReport {
  ExactLimit exact;
  double p_a = 0.0;
  double coarse = 0.0;
  double mismatch = 0.0;
};

PredictivityReport predictivity_report(const ColorModel& model);

/// Two models with identical P_a but different fine-grained laws, for any
/// target in [-1, 2]; the supports {-1, 2} and {-2, 4} never produce the
/// same distribution.
std::pair<ColorModel, ColorModel> equal_pa_witness(double target);

}  // namespace xqm
