#include "xqm/bimodule.hpp"

#include "rep_internal.hpp"

namespace xqm {

template <StarRing R>
bool is_left_basis(const std::vector<ModuleVector<R>>& vs, double rel_tol) {
  if (vs.empty()) return false;
  const std::size_t n = vs[0].rank();
  if (vs.size() != n) return false;
  for (const auto& v : vs)
    if (v.rank() != n) throw RankMismatch("is_left_basis: rank mismatch");

  constexpr int d = RingTraits<R>::rep_dim;
  Eigen::MatrixXcd m(n * d, n * d);
  for (std::size_t a = 0; a < n; ++a)
    m.block(0, a * d, n * d, d) = detail::stack_rep(vs[a]);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return false;
  return sv(sv.size() - 1) > rel_tol * sv(0);
}

template bool is_left_basis<Quaternion>(
    const std::vector<ModuleVector<Quaternion>>&, double);
template bool is_left_basis<CliffordElement>(
    const std::vector<ModuleVector<CliffordElement>>&, double);

}  // namespace xqm
