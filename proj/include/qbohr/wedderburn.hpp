#pragma once

#include "qbohr/linmap.hpp"
#include "qbohr/subspace.hpp"

namespace qbohr {

/// Result of identifying a *-closed unital subspace S of an ambient algebra
/// with an abstract multi-matrix algebra: the block sizes (sorted
/// ascending) and a *-isomorphism of the abstract algebra onto S.
struct WedderburnResult {
  AlgebraPtr algebra;
  LinearMap iso;  // abstract -> ambient, image = S
};

/// Decompose a subalgebra: verify closure (throws NotASubalgebra), find the
/// minimal central projections via spectral decomposition of a generic
/// self-adjoint central element, split each factor into matrix units, and
/// return the abstract presentation with its embedding. Deterministic: the
/// internal RNG is seeded with a fixed constant offset by `seed`; failed
/// generic choices are retried with fresh draws.
WedderburnResult wedderburn_decompose(const Subspace& S, double tol = 1e-8,
                                      unsigned seed = 0);

}  // namespace qbohr
