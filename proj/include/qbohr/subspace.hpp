#pragma once

#include <vector>

#include "qbohr/algebra.hpp"

namespace qbohr {

/// A linear subspace of a multi-matrix algebra, stored as an orthonormal
/// spanning matrix (dim x rank) in the canonical coordinates.
struct Subspace {
  AlgebraPtr parent;
  Mat basis;

  int rank() const { return static_cast<int>(basis.cols()); }
  /// Orthogonal projector onto the subspace (dim x dim).
  Mat projector() const { return basis * basis.adjoint(); }
  /// Membership within tolerance (relative to the element's size).
  bool contains(const AlgebraElement& a, double tol = kEqTol) const;
  /// Distance from a to the subspace in the max-norm.
  double distance(const AlgebraElement& a) const;
};

/// Orthonormalize the columns of `vectors` into a Subspace (rank decided by
/// the singular-value threshold).
Subspace subspace_from_span(AlgebraPtr A, const Mat& vectors,
                            double rank_tol = kRankTol);

/// Smallest subspace containing the unit and the generators that is closed
/// under multiplication and star. Breadth-first product generation against
/// the current orthonormal basis, with incremental re-orthonormalization;
/// terminates because the rank strictly increases (capped at dim rounds).
Subspace span_closure(const std::vector<AlgebraElement>& generators,
                      AlgebraPtr A, double rank_tol = kRankTol);

}  // namespace qbohr
