#include "xqm/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unsupported/Eigen/MatrixFunctions>

#include "rep_internal.hpp"
#include "xqm/philox.hpp"

namespace xqm {
namespace {

using detail::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// One eigenspace of the complex representation: clustered eigenvalue and an
// orthonormal basis of the corresponding null space.
struct RepEigenspace {
  double lambda;
  MatrixXcd basis;  // N x m, orthonormal columns
};

struct RepSplit {
  bool ok = false;
  std::string reason;
  std::vector<RepEigenspace> spaces;
  double scale = 1.0;
};

// Splits a complex matrix into real eigenspaces.  Fails when eigenvalues
// have nonvanishing imaginary part or the matrix is defective over the
// detected clusters.
RepSplit split_real_eigenspaces(const MatrixXcd& L, const Tolerances& tol) {
  RepSplit out;
  const auto N = L.rows();
  out.scale = std::max(1.0, L.norm());

  Eigen::ComplexEigenSolver<MatrixXcd> es(L, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    out.reason = "eigensolver did not converge";
    return out;
  }

  std::vector<double> reals;
  reals.reserve(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const auto ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > tol.eig_imag * out.scale) {
      std::ostringstream ss;
      ss << "non-real eigenvalue " << ev.real() << (ev.imag() < 0 ? "-" : "+")
         << std::abs(ev.imag()) << "i in the representation";
      out.reason = ss.str();
      return out;
    }
    reals.push_back(ev.real());
  }
  std::sort(reals.begin(), reals.end());

  // Cluster eigenvalues closer than the grouping tolerance.
  std::vector<std::pair<double, int>> clusters;  // (mean, count)
  for (double v : reals) {
    if (!clusters.empty()) {
      auto& [mean, count] = clusters.back();
      if (std::abs(v - mean) <= tol.grouping * std::max(1.0, std::abs(v))) {
        mean = (mean * count + v) / (count + 1);
        ++count;
        continue;
      }
    }
    clusters.push_back({v, 1});
  }

  Eigen::Index total = 0;
  for (const auto& [lambda, count] : clusters) {
    MatrixXcd shifted = L;
    shifted.diagonal().array() -= lambda;
    Eigen::JacobiSVD<MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double thresh = std::max(tol.grouping * std::max(1.0, std::abs(lambda)),
                                   tol.rank * out.scale);
    Eigen::Index m = 0;
    while (m < N && sv(N - 1 - m) <= thresh) ++m;
    if (m == 0) {
      out.reason = "eigenvalue cluster with empty null space";
      return out;
    }
    out.spaces.push_back({lambda, svd.matrixV().rightCols(m)});
    total += m;
  }
  if (total != N) {
    std::ostringstream ss;
    ss << "defective eigenspace structure (null spaces span " << total
       << " of " << N << " dimensions)";
    out.reason = ss.str();
    return out;
  }
  out.ok = true;
  return out;
}

// Quaternion coefficients are determined by the first column of their
// representation; lift a kernel vector into a module vector.
ModuleVector<Quaternion> quaternion_from_column(const VectorXcd& u) {
  const std::size_t n = u.size() / 2;
  ModuleVector<Quaternion> v(n);
  for (std::size_t b = 0; b < n; ++b) {
    const auto alpha = u(2 * b);
    const auto gamma = u(2 * b + 1);
    v.coeffs[b] =
        Quaternion(alpha.real(), alpha.imag(), -gamma.real(), gamma.imag());
  }
  return v;
}

// Extracts a left orthonormal family of ring eigenvectors spanning the
// eigenspace whose representation basis is given (N x m orthonormal
// columns).  Returns false with a reason when the eigenspace cannot host
// such a family.
template <StarRing R>
bool assemble_eigenspace(const MatrixXcd& basis, const MatrixXcd& big_metric,
                         const Tolerances& tol,
                         std::vector<ModuleVector<R>>& out,
                         std::string& reason) {
  constexpr int d = RingTraits<R>::rep_dim;
  const Eigen::Index m = basis.cols();
  if (m % d != 0) {
    std::ostringstream ss;
    ss << "eigenspace dimension " << m << " is not a multiple of the ring"
       << " representation dimension " << d;
    reason = ss.str();
    return false;
  }
  const std::size_t k = std::size_t(m / d);

  if constexpr (std::is_same_v<R, Quaternion>) {
    // Positive-definite scalar product: ring-valued Gram-Schmidt over the
    // kernel columns always completes.
    std::vector<ModuleVector<Quaternion>> cands;
    cands.reserve(m);
    for (Eigen::Index c = 0; c < m; ++c)
      cands.push_back(quaternion_from_column(basis.col(c)));

    std::vector<ModuleVector<Quaternion>> chosen;
    while (chosen.size() < k) {
      std::size_t best = 0;
      double best_norm = -1.0;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        const double s = scalar_part(inner(cands[c], cands[c]));
        if (s > best_norm) {
          best_norm = s;
          best = c;
        }
      }
      if (best_norm <= tol.rank) {
        reason = "Gram-Schmidt ran out of independent eigenvectors";
        return false;
      }
      const ModuleVector<Quaternion> psi =
          cands[best] * (1.0 / std::sqrt(best_norm));
      for (auto& c : cands) c = c - psi * inner(psi, c);
      chosen.push_back(psi);
    }
    out.insert(out.end(), chosen.begin(), chosen.end());
    return true;
  } else {
    // Indefinite case: diagonalize the restriction of the metric to the
    // eigenspace and regroup its +-1 directions into blocks congruent to
    // the twist matrix diag(1,1,-1,-1).
    MatrixXcd M = basis.adjoint() * big_metric * basis;
    M = 0.5 * (M + MatrixXcd(M.adjoint()));
    Eigen::SelfAdjointEigenSolver<MatrixXcd> sa(M);
    if (sa.info() != Eigen::Success) {
      reason = "restricted metric eigensolver did not converge";
      return false;
    }
    const VectorXd mu = sa.eigenvalues();
    std::vector<Eigen::Index> pos, neg;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (mu(i) > tol.rank) {
        pos.push_back(i);
      } else if (mu(i) < -tol.rank) {
        neg.push_back(i);
      } else {
        reason = "isotropic eigenspace: restricted metric is degenerate";
        return false;
      }
    }
    if (pos.size() != neg.size()) {
      std::ostringstream ss;
      ss << "eigenspace metric signature (" << pos.size() << "," << neg.size()
         << ") cannot be regrouped into unit-norm eigenvectors";
      reason = ss.str();
      return false;
    }
    MatrixXcd W = sa.eigenvectors();
    for (Eigen::Index i = 0; i < m; ++i)
      W.col(i) /= std::sqrt(std::abs(mu(i)));

    for (std::size_t a = 0; a < k; ++a) {
      MatrixXcd X(m, d);
      X.col(0) = W.col(pos[2 * a]);
      X.col(1) = W.col(pos[2 * a + 1]);
      X.col(2) = W.col(neg[2 * a]);
      X.col(3) = W.col(neg[2 * a + 1]);
      out.push_back(detail::unstack_rep<R>(basis * X));
    }
    return true;
  }
}

// Final consistency pass over an assembled eigenbasis.  Loose internal
// bound; the unit tests pin the tight ones.
template <StarRing R>
bool validate_basis(const RingOperator<R>& A,
                    const std::vector<ModuleVector<R>>& basis,
                    const std::vector<double>& eigenvalues,
                    const Tolerances& tol, std::string& reason) {
  const double scale = std::max(1.0, A.max_abs());
  const double bound = 1e-6 * scale;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto residual =
        apply(A, basis[a]) - basis[a] * eigenvalues[a];
    if (residual.max_abs() > bound) {
      reason = "numerical validation failed: eigenvector residual";
      return false;
    }
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      R g = inner(basis[a], basis[b]);
      if (a == b) {
        const double s = RingTraits<R>::scalar(g).real();
        g = g - RingTraits<R>::from_real(s < 0 ? -1.0 : 1.0);
      }
      if (g.max_abs() > 1e-6) {
        reason = "numerical validation failed: basis is not orthonormal";
        return false;
      }
    }
  }
  if (!is_left_basis(basis, tol.rank)) {
    reason = "numerical validation failed: family is not a left basis";
    return false;
  }
  return true;
}

template <StarRing R>
R random_ring_element(PhiloxSequence& rng) {
  if constexpr (std::is_same_v<R, Quaternion>) {
    return Quaternion(rng.next_normal(), rng.next_normal(), rng.next_normal(),
                      rng.next_normal());
  } else {
    CliffordElement e;
    for (int i = 0; i < CliffordElement::kBlades; ++i)
      e[i] = {rng.next_normal(), rng.next_normal()};
    return e;
  }
}

}  // namespace

template <StarRing R>
SpectralOutcome<R> left_eigen_real(const RingOperator<R>& A,
                                   const Tolerances& tol) {
  SpectralOutcome<R> out;
  if (A.rank() == 0) {
    out.diagnostic = "empty operator";
    return out;
  }

  const MatrixXcd L = detail::op_rep(A);
  const RepSplit split = split_real_eigenspaces(L, tol);
  if (!split.ok) {
    out.diagnostic = split.reason;
    return out;
  }

  const MatrixXcd G = detail::big_metric<R>(A.rank());
  SpectralResult<R> res;
  for (const auto& space : split.spaces) {
    std::vector<ModuleVector<R>> vecs;
    std::string reason;
    if (!assemble_eigenspace<R>(space.basis, G, tol, vecs, reason)) {
      std::ostringstream ss;
      ss << "eigenvalue " << space.lambda << ": " << reason;
      out.diagnostic = ss.str();
      return out;
    }
    std::vector<std::size_t> group;
    for (auto& v : vecs) {
      group.push_back(res.basis.size());
      res.eigenvalues.push_back(space.lambda);
      const double s = RingTraits<R>::scalar(inner(v, v)).real();
      res.signs.push_back(s < 0 ? -1 : 1);
      res.basis.push_back(std::move(v));
    }
    res.groups.push_back(std::move(group));
    res.group_values.push_back(space.lambda);
  }

  std::string reason;
  if (!validate_basis(A, res.basis, res.eigenvalues, tol, reason)) {
    out.diagnostic = reason;
    return out;
  }
  out.result = std::move(res);
  return out;
}

template <StarRing R>
bool is_hermitian(const RingOperator<R>& A, const Tolerances& tol) {
  const RingOperator<R> diff = A - adjoint(A);
  return diff.max_abs() <= tol.commute * std::max(1.0, A.max_abs());
}

template <StarRing R>
SpectralOutcome<R> is_physical(const RingOperator<R>& A,
                               const Tolerances& tol) {
  SpectralOutcome<R> out = left_eigen_real(A, tol);
  // Physical observables are Hermitian; a physical verdict on a
  // non-Hermitian operator signals an internal inconsistency.
  if (out.physical() && !is_hermitian(A, tol)) {
    out.result.reset();
    out.diagnostic =
        "internal inconsistency: eigenbasis found for a non-Hermitian "
        "operator";
  }
  return out;
}

template <StarRing R>
Projection<R> projection(const SpectralResult<R>& spec, double lambda,
                         const Tolerances& tol) {
  for (std::size_t g = 0; g < spec.group_values.size(); ++g) {
    const double gv = spec.group_values[g];
    if (std::abs(lambda - gv) <= tol.grouping * std::max(1.0, std::abs(gv))) {
      Projection<R> p;
      p.eigenvalue = gv;
      p.op = RingOperator<R>(spec.rank());
      for (std::size_t idx : spec.groups[g]) {
        const auto& psi = spec.basis[idx];
        const double eps = spec.signs[idx];
        p.signs_used.push_back(spec.signs[idx]);
        for (std::size_t a = 0; a < spec.rank(); ++a)
          for (std::size_t b = 0; b < spec.rank(); ++b)
            p.op.at(a, b) = p.op.at(a, b) +
                            psi.coeffs[a] * eps * tilde(psi.coeffs[b]);
      }
      return p;
    }
  }
  std::ostringstream ss;
  ss << "no eigenvalue group matches " << lambda;
  throw UnknownEigenvalue(ss.str());
}

template <StarRing R>
std::vector<Projection<R>> projection_family(const SpectralResult<R>& spec,
                                             const Tolerances& tol) {
  std::vector<Projection<R>> fam;
  fam.reserve(spec.group_values.size());
  for (double gv : spec.group_values) fam.push_back(projection(spec, gv, tol));
  return fam;
}

template <StarRing R>
bool commute(const RingOperator<R>& A, const RingOperator<R>& B,
             const Tolerances& tol) {
  A.check_rank(B);
  const RingOperator<R> c = A * B - B * A;
  const double scale = std::max(1.0, A.max_abs() * B.max_abs());
  return c.max_abs() <= tol.commute * scale;
}

template <StarRing R>
CompatibilityResult<R> are_compatible(const RingOperator<R>& A,
                                      const RingOperator<R>& B,
                                      const Tolerances& tol) {
  const SpectralOutcome<R> oa = left_eigen_real(A, tol);
  if (!oa.physical())
    throw NotPhysicalInput("first operator is not physical: " + oa.diagnostic);
  const SpectralOutcome<R> ob = left_eigen_real(B, tol);
  if (!ob.physical())
    throw NotPhysicalInput("second operator is not physical: " +
                           ob.diagnostic);
  if (!commute(A, B, tol))
    throw NotCommuting("operators do not commute");

  CompatibilityResult<R> out;
  const MatrixXcd LA = detail::op_rep(A);
  const MatrixXcd LB = detail::op_rep(B);
  const MatrixXcd G = detail::big_metric<R>(A.rank());

  const RepSplit split = split_real_eigenspaces(LA, tol);
  if (!split.ok) {
    out.reason = "first operator: " + split.reason;
    return out;
  }

  for (const auto& space : split.spaces) {
    // Commutation keeps each eigenspace of A invariant under B; restrict.
    const MatrixXcd C = space.basis.adjoint() * LB * space.basis;
    const double leak = (LB * space.basis - space.basis * C).norm();
    if (leak > 1e-6 * std::max(1.0, LB.norm())) {
      out.reason = "eigenspace of the first operator is not invariant "
                   "under the second";
      return out;
    }
    const RepSplit sub = split_real_eigenspaces(C, tol);
    if (!sub.ok) {
      std::ostringstream ss;
      ss << "restriction to eigenvalue " << space.lambda << ": "
         << sub.reason;
      out.reason = ss.str();
      return out;
    }
    for (const auto& subspace : sub.spaces) {
      const MatrixXcd joint_basis = space.basis * subspace.basis;
      std::vector<ModuleVector<R>> vecs;
      std::string reason;
      if (!assemble_eigenspace<R>(joint_basis, G, tol, vecs, reason)) {
        std::ostringstream ss;
        ss << "joint eigenspace (" << space.lambda << ", " << subspace.lambda
           << "): " << reason;
        out.reason = ss.str();
        return out;
      }
      for (auto& v : vecs) {
        out.joint_basis.push_back(std::move(v));
        out.eigenvalue_pairs.push_back({space.lambda, subspace.lambda});
      }
    }
  }

  // Validate against both operators.
  std::vector<double> la, lb;
  for (const auto& [x, y] : out.eigenvalue_pairs) {
    la.push_back(x);
    lb.push_back(y);
  }
  std::string reason;
  if (!validate_basis(A, out.joint_basis, la, tol, reason) ||
      !validate_basis(B, out.joint_basis, lb, tol, reason)) {
    out.reason = reason;
    out.joint_basis.clear();
    out.eigenvalue_pairs.clear();
    return out;
  }
  out.compatible = true;
  return out;
}

template <StarRing R>
RingOperator<R> reconstruct(const SpectralResult<R>& spec,
                            const Tolerances& tol) {
  RingOperator<R> acc(spec.rank());
  for (const auto& p : projection_family(spec, tol))
    acc = acc + p.op * p.eigenvalue;
  return acc;
}

template <StarRing R>
RingOperator<R> random_hermitian(std::size_t n, std::uint64_t seed) {
  PhiloxSequence rng(seed);
  RingOperator<R> x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      x.at(i, j) = random_ring_element<R>(rng);
  return (x + adjoint(x)) * 0.5;
}

template <StarRing R>
RingOperator<R> random_generalized_unitary(std::size_t n,
                                           std::uint64_t seed) {
  PhiloxSequence rng(seed);
  if constexpr (std::is_same_v<R, Quaternion>) {
    // Gram-Schmidt of a random matrix under the positive-definite product.
    std::vector<ModuleVector<Quaternion>> cols;
    for (std::size_t a = 0; a < n; ++a) {
      ModuleVector<Quaternion> v(n);
      for (std::size_t b = 0; b < n; ++b)
        v.coeffs[b] = random_ring_element<Quaternion>(rng);
      for (const auto& u : cols) v = v - u * inner(u, v);
      const double s = scalar_part(inner(v, v));
      cols.push_back(v * (1.0 / std::sqrt(s)));
    }
    RingOperator<Quaternion> u(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) u.at(b, a) = cols[a].coeffs[b];
    return u;
  } else {
    // exp of an anti-self-adjoint operator, computed in the representation
    // (the representation is onto, so every block maps back to the ring).
    RingOperator<R> x(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        x.at(i, j) = random_ring_element<R>(rng) * (0.25 / double(n));
    const RingOperator<R> s = (x - adjoint(x)) * 0.5;
    const MatrixXcd e = detail::op_rep(s).exp();
    constexpr int d = RingTraits<R>::rep_dim;
    RingOperator<R> u(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        u.at(i, j) = detail::block_to_ring<R>(e.block(i * d, j * d, d, d));
    return u;
  }
}

#define XQM_INSTANTIATE(R)                                                    \
  template SpectralOutcome<R> left_eigen_real<R>(const RingOperator<R>&,      \
                                                 const Tolerances&);          \
  template bool is_hermitian<R>(const RingOperator<R>&, const Tolerances&);   \
  template SpectralOutcome<R> is_physical<R>(const RingOperator<R>&,          \
                                             const Tolerances&);              \
  template Projection<R> projection<R>(const SpectralResult<R>&, double,      \
                                       const Tolerances&);                    \
  template std::vector<Projection<R>> projection_family<R>(                   \
      const SpectralResult<R>&, const Tolerances&);                           \
  template bool commute<R>(const RingOperator<R>&, const RingOperator<R>&,    \
                           const Tolerances&);                                \
  template CompatibilityResult<R> are_compatible<R>(                          \
      const RingOperator<R>&, const RingOperator<R>&, const Tolerances&);     \
  template RingOperator<R> reconstruct<R>(const SpectralResult<R>&,           \
                                          const Tolerances&);                 \
  template RingOperator<R> random_hermitian<R>(std::size_t, std::uint64_t);   \
  template RingOperator<R> random_generalized_unitary<R>(std::size_t,         \
                                                         std::uint64_t);

XQM_INSTANTIATE(Quaternion)
XQM_INSTANTIATE(CliffordElement)

#undef XQM_INSTANTIATE

}  // namespace xqm
