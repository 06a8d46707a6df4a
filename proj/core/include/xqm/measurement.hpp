#pragma once

#include <vector>

#include "xqm/spectral.hpp"

namespace xqm {

/// Raw measurement weight for one eigenvalue: the ring value
/// phi_lambda = <phi|P_lambda|phi>, its real scalar part, and the
/// magnitude that enters the renormalized probability rule.  The scalar
/// may be negative or exceed one; only its absolute value is used for
/// probabilities, the full ring value is kept for diagnostics.
template <StarRing R>
struct RawWeight {
  double eigenvalue = 0.0;
  R value;
  double scalar = 0.0;
  double magnitude = 0.0;
};

/// Renormalized distribution P(phi, lambda) = |phi_lambda| / sum_mu
/// |phi_mu|: nonnegative, sums to one whenever the denominator does not
/// vanish.
struct ExtDistribution {
  std::vector<double> eigenvalues;
  std::vector<double> probabilities;
  std::vector<double> raw_scalars;
  double denominator = 0.0;
};

/// One raw weight per eigenvalue group of the spectral result.
template <StarRing R>
std::vector<RawWeight<R>> raw_weights(const ModuleVector<R>& phi,
                                      const SpectralResult<R>& spec,
                                      const Tolerances& tol = {});

/// Renormalizes raw scalars into a distribution.  Throws DegenerateState
/// when every magnitude vanishes.
ExtDistribution ext_probabilities(const std::vector<double>& eigenvalues,
                                  const std::vector<double>& scalars,
                                  const Tolerances& tol = {});

template <StarRing R>
ExtDistribution ext_probabilities(const std::vector<RawWeight<R>>& weights,
                                  const Tolerances& tol = {});

/// Convenience: solo distribution of a state under a projection family.
template <StarRing R>
ExtDistribution solo_distribution(const ModuleVector<R>& phi,
                                  const std::vector<Projection<R>>& family,
                                  const Tolerances& tol = {});

/// State after a measurement outcome: P applied to phi, unnormalized.
template <StarRing R>
ModuleVector<R> collapse(const ModuleVector<R>& phi, const Projection<R>& p) {
  return apply(p.op, phi);
}

/// Probability of seeing outcome i for the first family and then outcome j
/// for the second, when the first measurement happens first:
///   [ |<psi|P_i Q_j P_i|psi>| / sum_k |<psi|P_i Q_k P_i|psi>| ]
///   * [ |<psi|P_i|psi>| / sum_k |<psi|P_k|psi>| ]
/// with magnitudes of scalar parts throughout.  Requires every pair
/// (P_i, Q_k) to commute; throws NotCommuting otherwise and
/// DegenerateState on vanishing denominators.
template <StarRing R>
double ordered_joint(const ModuleVector<R>& psi,
                     const std::vector<Projection<R>>& first,
                     const std::vector<Projection<R>>& second, std::size_t i,
                     std::size_t j, const Tolerances& tol = {});

/// Average of the two measurement orders; symmetric under exchanging
/// (first, i) with (second, j).
template <StarRing R>
double symmetrized_joint(const ModuleVector<R>& psi,
                         const std::vector<Projection<R>>& first,
                         const std::vector<Projection<R>>& second,
                         std::size_t i, std::size_t j,
                         const Tolerances& tol = {});

/// Comparison of the marginals of the ordered joint statistics against
/// each party's solo distribution.  The first-measured marginal matches
/// the solo distribution identically; the gap for the second party is
/// reported and may be nonzero.
struct MarginalReport {
  ExtDistribution solo_first;
  ExtDistribution solo_second;
  // ordered_table[i][j] = ordered_joint(psi, first, second, i, j)
  std::vector<std::vector<double>> ordered_table;
  double first_marginal_gap = 0.0;
  double second_marginal_gap = 0.0;
};

template <StarRing R>
MarginalReport first_marginal_invariance(
    const ModuleVector<R>& psi, const std::vector<Projection<R>>& first,
    const std::vector<Projection<R>>& second, const Tolerances& tol = {});

}  // namespace xqm
