#pragma once

// Two-party systems live on a single module of rank n*m; party observables
// act on their own index and are the identity on the other.  Lexicographic
// site order: (i, j) -> i * right_rank + j.

#include "xqm/bimodule.hpp"

namespace xqm {

/// A tensor I on a module of rank a.rank() * right_rank.
template <StarRing R>
RingOperator<R> left_factor_operator(const RingOperator<R>& a,
                                     std::size_t right_rank) {
  const std::size_t n = a.rank();
  RingOperator<R> out(n * right_rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < right_rank; ++j)
        out.at(i * right_rank + j, k * right_rank + j) = a.at(i, k);
  return out;
}

/// I tensor b on a module of rank left_rank * b.rank().
template <StarRing R>
RingOperator<R> right_factor_operator(std::size_t left_rank,
                                      const RingOperator<R>& b) {
  const std::size_t m = b.rank();
  RingOperator<R> out(left_rank * m);
  for (std::size_t i = 0; i < left_rank; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        out.at(i * m + j, i * m + l) = b.at(j, l);
  return out;
}

/// Product state with coefficients c_{ij} = l_i * r_j.  Meaningful as a
/// product when at least one factor has central (complex or real)
/// coefficients.
template <StarRing R>
ModuleVector<R> product_state(const ModuleVector<R>& l,
                              const ModuleVector<R>& r) {
  ModuleVector<R> out(l.rank() * r.rank());
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j)
      out.coeffs[i * r.rank() + j] = l.coeffs[i] * r.coeffs[j];
  return out;
}

}  // namespace xqm
