#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xqm/bimodule.hpp"

namespace xqm {

/// Numerical thresholds used across the spectral routines.
struct Tolerances {
  /// Residual bound for algebra identities.
  double algebra = 1e-10;
  /// Relative bound on the imaginary part of representation eigenvalues.
  double eig_imag = 1e-8;
  /// Relative gap below which eigenvalues belong to one eigenspace.
  double grouping = 1e-7;
  /// Relative singular-value threshold for rank and invertibility checks.
  double rank = 1e-8;
  /// Entrywise relative bound for commutator and hermiticity checks.
  double commute = 1e-10;
  /// Absolute floor below which a probability denominator counts as zero.
  double degenerate = 1e-13;
};

/// Left eigenbasis of a physical observable: A psi_a = psi_a lambda_a with
/// real eigenvalues, <psi_a|psi_b> = eps_a delta_ab, eps_a = +-1, and the
/// family {psi_a} a left basis of the module.
template <StarRing R>
struct SpectralResult {
  std::vector<double> eigenvalues;          // per basis vector
  std::vector<ModuleVector<R>> basis;       // psi_a
  std::vector<int> signs;                   // eps_a
  std::vector<std::vector<std::size_t>> groups;  // indices per eigenspace
  std::vector<double> group_values;         // representative eigenvalue

  std::size_t rank() const { return basis.empty() ? 0 : basis[0].rank(); }
};

/// Result of the left-eigenvector solve: a SpectralResult on success, a
/// rejection reason otherwise.  Rejections are diagnostic, not proof that
/// no basis exists; the reason string records what obstructed the search.
template <StarRing R>
struct SpectralOutcome {
  std::optional<SpectralResult<R>> result;
  std::string diagnostic;

  bool physical() const { return result.has_value(); }
  const SpectralResult<R>& value() const { return *result; }
};

/// Signed projection operator onto one eigenspace:
/// P entries (P)_{ab} = sum_g r^g_a eps_g tilde(r^g_b).  Idempotent and
/// self-adjoint.
template <StarRing R>
struct Projection {
  RingOperator<R> op;
  double eigenvalue = 0.0;
  std::vector<int> signs_used;
};

/// Solves the left eigenvector problem A v = v lambda over the ring for
/// real lambda.  Forms the complex representation of A, splits it into
/// eigenspaces, and reassembles ring-valued eigenvectors normalized to
/// <psi|psi> = +-1.  Fails with a diagnostic when the representation has
/// eigenvalues with nonvanishing imaginary part, defective eigenspaces,
/// eigenspace dimensions incompatible with the ring, or isotropic
/// obstructions that prevent normalization.
template <StarRing R>
SpectralOutcome<R> left_eigen_real(const RingOperator<R>& A,
                                   const Tolerances& tol = {});

/// Entrywise A = adjoint(A) within tolerance.
template <StarRing R>
bool is_hermitian(const RingOperator<R>& A, const Tolerances& tol = {});

/// Physical means a left orthonormal eigenbasis with real eigenvalues
/// exists; wraps left_eigen_real and returns the witness basis on success.
template <StarRing R>
SpectralOutcome<R> is_physical(const RingOperator<R>& A,
                               const Tolerances& tol = {});

/// Projection onto the eigenspace of the given eigenvalue.  Throws
/// UnknownEigenvalue when no eigenvalue group matches within the grouping
/// tolerance.
template <StarRing R>
Projection<R> projection(const SpectralResult<R>& spec, double lambda,
                         const Tolerances& tol = {});

/// All signed projections of the spectral result, one per eigenvalue group.
template <StarRing R>
std::vector<Projection<R>> projection_family(const SpectralResult<R>& spec,
                                             const Tolerances& tol = {});

/// True when AB - BA vanishes entrywise within tolerance.
template <StarRing R>
bool commute(const RingOperator<R>& A, const RingOperator<R>& B,
             const Tolerances& tol = {});

/// Outcome of the compatibility search for two commuting physical
/// observables: a mutual left orthonormal eigenbasis with the per-vector
/// eigenvalue pairs, or a reason explaining the obstruction.
template <StarRing R>
struct CompatibilityResult {
  bool compatible = false;
  std::string reason;
  std::vector<ModuleVector<R>> joint_basis;
  std::vector<std::pair<double, double>> eigenvalue_pairs;
};

/// Searches for a mutual left orthonormal real eigenbasis by restricting B
/// to each eigenspace of A in the complex representation and re-running
/// the left-eigenvector solve there.  Throws NotPhysicalInput when either
/// operator is not physical, NotCommuting when they do not commute.
template <StarRing R>
CompatibilityResult<R> are_compatible(const RingOperator<R>& A,
                                      const RingOperator<R>& B,
                                      const Tolerances& tol = {});

/// Reconstructs sum_a psi_a lambda_a eps_a <psi_a|.| as an operator;
/// equals A for every successful spectral result.
template <StarRing R>
RingOperator<R> reconstruct(const SpectralResult<R>& spec,
                            const Tolerances& tol = {});

/// A generalized unitary U (adjoint(U) U = 1) drawn reproducibly from the
/// seed.  Quaternion case: Gram-Schmidt of a random matrix.  Clifford
/// case: exponential of a random anti-self-adjoint operator, computed in
/// the representation.
template <StarRing R>
RingOperator<R> random_generalized_unitary(std::size_t n, std::uint64_t seed);

/// A random Hermitian operator with standard normal ring coefficients,
/// A = (X + adjoint(X)) / 2; reproducible from the seed.
template <StarRing R>
RingOperator<R> random_hermitian(std::size_t n, std::uint64_t seed);

}  // namespace xqm
