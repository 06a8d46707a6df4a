#include "xqm/measurement.hpp"

#include <cmath>

namespace xqm {
namespace {

// |<phi | P phi>| as the absolute value of the real scalar part.
template <StarRing R>
double weight_scalar(const ModuleVector<R>& phi, const Projection<R>& p) {
  return RingTraits<R>::scalar(inner(phi, collapse(phi, p))).real();
}

template <StarRing R>
void check_cross_commuting(const std::vector<Projection<R>>& first,
                           const std::vector<Projection<R>>& second,
                           const Tolerances& tol) {
  for (const auto& p : first)
    for (const auto& q : second)
      if (!commute(p.op, q.op, tol))
        throw NotCommuting("projection families do not commute");
}

}  // namespace

template <StarRing R>
std::vector<RawWeight<R>> raw_weights(const ModuleVector<R>& phi,
                                      const SpectralResult<R>& spec,
                                      const Tolerances& tol) {
  if (phi.rank() != spec.rank())
    throw RankMismatch("state rank does not match the spectral result");
  std::vector<RawWeight<R>> out;
  out.reserve(spec.group_values.size());
  for (const auto& p : projection_family(spec, tol)) {
    RawWeight<R> w;
    w.eigenvalue = p.eigenvalue;
    w.value = inner(phi, collapse(phi, p));
    w.scalar = RingTraits<R>::scalar(w.value).real();
    w.magnitude = std::abs(w.scalar);
    out.push_back(std::move(w));
  }
  return out;
}

ExtDistribution ext_probabilities(const std::vector<double>& eigenvalues,
                                  const std::vector<double>& scalars,
                                  const Tolerances& tol) {
  ExtDistribution d;
  d.eigenvalues = eigenvalues;
  d.raw_scalars = scalars;
  for (double s : scalars) d.denominator += std::abs(s);
  if (d.denominator <= tol.degenerate)
    throw DegenerateState("all raw weights vanish; no distribution exists");
  d.probabilities.reserve(scalars.size());
  for (double s : scalars) d.probabilities.push_back(std::abs(s) / d.denominator);
  return d;
}

template <StarRing R>
ExtDistribution ext_probabilities(const std::vector<RawWeight<R>>& weights,
                                  const Tolerances& tol) {
  std::vector<double> ev, sc;
  ev.reserve(weights.size());
  sc.reserve(weights.size());
  for (const auto& w : weights) {
    ev.push_back(w.eigenvalue);
    sc.push_back(w.scalar);
  }
  return ext_probabilities(ev, sc, tol);
}

template <StarRing R>
ExtDistribution solo_distribution(const ModuleVector<R>& phi,
                                  const std::vector<Projection<R>>& family,
                                  const Tolerances& tol) {
  std::vector<double> ev, sc;
  for (const auto& p : family) {
    ev.push_back(p.eigenvalue);
    sc.push_back(weight_scalar(phi, p));
  }
  return ext_probabilities(ev, sc, tol);
}

template <StarRing R>
double ordered_joint(const ModuleVector<R>& psi,
                     const std::vector<Projection<R>>& first,
                     const std::vector<Projection<R>>& second, std::size_t i,
                     std::size_t j, const Tolerances& tol) {
  check_cross_commuting(first, second, tol);

  double solo_num = 0.0, solo_den = 0.0;
  for (std::size_t k = 0; k < first.size(); ++k) {
    const double s = std::abs(weight_scalar(psi, first[k]));
    if (k == i) solo_num = s;
    solo_den += s;
  }
  if (solo_den <= tol.degenerate)
    throw DegenerateState("state has no weight on the first family");
  if (solo_num == 0.0) return 0.0;

  // <psi|P_i Q_k P_i|psi> = <P_i psi|Q_k P_i psi> since P_i is self-adjoint.
  const ModuleVector<R> collapsed = collapse(psi, first[i]);
  double cond_num = 0.0, cond_den = 0.0;
  for (std::size_t k = 0; k < second.size(); ++k) {
    const double s = std::abs(
        RingTraits<R>::scalar(inner(collapsed, collapse(collapsed, second[k])))
            .real());
    if (k == j) cond_num = s;
    cond_den += s;
  }
  if (cond_den <= tol.degenerate)
    throw DegenerateState("collapsed state has no weight on the second family");

  return (cond_num / cond_den) * (solo_num / solo_den);
}

template <StarRing R>
double symmetrized_joint(const ModuleVector<R>& psi,
                         const std::vector<Projection<R>>& first,
                         const std::vector<Projection<R>>& second,
                         std::size_t i, std::size_t j, const Tolerances& tol) {
  return 0.5 * ordered_joint(psi, first, second, i, j, tol) +
         0.5 * ordered_joint(psi, second, first, j, i, tol);
}

template <StarRing R>
MarginalReport first_marginal_invariance(
    const ModuleVector<R>& psi, const std::vector<Projection<R>>& first,
    const std::vector<Projection<R>>& second, const Tolerances& tol) {
  MarginalReport rep;
  rep.solo_first = solo_distribution(psi, first, tol);
  rep.solo_second = solo_distribution(psi, second, tol);
  rep.ordered_table.assign(first.size(),
                           std::vector<double>(second.size(), 0.0));
  for (std::size_t i = 0; i < first.size(); ++i)
    for (std::size_t j = 0; j < second.size(); ++j)
      rep.ordered_table[i][j] = ordered_joint(psi, first, second, i, j, tol);

  for (std::size_t i = 0; i < first.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < second.size(); ++j)
      sum += rep.ordered_table[i][j];
    rep.first_marginal_gap = std::max(
        rep.first_marginal_gap, std::abs(sum - rep.solo_first.probabilities[i]));
  }
  for (std::size_t j = 0; j < second.size(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < first.size(); ++i)
      sum += rep.ordered_table[i][j];
    rep.second_marginal_gap =
        std::max(rep.second_marginal_gap,
                 std::abs(sum - rep.solo_second.probabilities[j]));
  }
  return rep;
}

#define XQM_INSTANTIATE(R)                                                    \
  template std::vector<RawWeight<R>> raw_weights<R>(                          \
      const ModuleVector<R>&, const SpectralResult<R>&, const Tolerances&);   \
  template ExtDistribution ext_probabilities<R>(                              \
      const std::vector<RawWeight<R>>&, const Tolerances&);                   \
  template ExtDistribution solo_distribution<R>(                              \
      const ModuleVector<R>&, const std::vector<Projection<R>>&,              \
      const Tolerances&);                                                     \
  template double ordered_joint<R>(                                           \
      const ModuleVector<R>&, const std::vector<Projection<R>>&,              \
      const std::vector<Projection<R>>&, std::size_t, std::size_t,            \
      const Tolerances&);                                                     \
  template double symmetrized_joint<R>(                                       \
      const ModuleVector<R>&, const std::vector<Projection<R>>&,              \
      const std::vector<Projection<R>>&, std::size_t, std::size_t,            \
      const Tolerances&);                                                     \
  template MarginalReport first_marginal_invariance<R>(                       \
      const ModuleVector<R>&, const std::vector<Projection<R>>&,              \
      const std::vector<Projection<R>>&, const Tolerances&);

XQM_INSTANTIATE(Quaternion)
XQM_INSTANTIATE(CliffordElement)

#undef XQM_INSTANTIATE

}  // namespace xqm
