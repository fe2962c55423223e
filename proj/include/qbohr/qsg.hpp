#pragma once

#include <memory>
#include <utility>

#include "qbohr/linmap.hpp"
#include "qbohr/verdict.hpp"

namespace qbohr {

/// A quantum semigroup G = (A, Delta): a multi-matrix algebra together with
/// a comultiplication Delta : A -> A (x) A. The constructor validates that
/// Delta is a unital *-homomorphism and coassociative (throws
/// InvalidComultiplication otherwise), so every live instance is a genuine
/// quantum semigroup.
class QuantumSemigroup {
 public:
  QuantumSemigroup(AlgebraPtr algebra, LinearMap delta, double tol = 1e-8);

  const AlgebraPtr& algebra() const { return algebra_; }
  /// Cached A (x) A, the target of delta.
  const AlgebraPtr& tensor() const { return tensor_; }
  const LinearMap& delta() const { return delta_; }
  /// Cached coordinate table for A (x) A.
  const TensorIndexer& indexer() const { return idx_; }
  int dim() const { return algebra_->dim(); }

 private:
  AlgebraPtr algebra_;
  TensorIndexer idx_;
  AlgebraPtr tensor_;
  LinearMap delta_;
};

using QsgPtr = std::shared_ptr<const QuantumSemigroup>;

QsgPtr make_qsg(AlgebraPtr algebra, LinearMap delta, double tol = 1e-8);

/// Structural identity: same blocks and bit-equal delta matrices.
bool same_qsg(const QuantumSemigroup& a, const QuantumSemigroup& b);

/// A linear functional on an algebra with cached property flags.
struct StateFunctional {
  AlgebraPtr parent;
  RowVec covector;
  bool positive = false;
  bool tracial = false;
  bool normalized = false;
};

/// Build a functional and classify it (positivity via block matrices being
/// PSD, traciality on basis pairs, normalization phi(1)=1).
StateFunctional make_functional(AlgebraPtr A, RowVec covector,
                                double tol = kEqTol);
Complex apply(const StateFunctional& phi, const AlgebraElement& a);

/// Positivity: for each block i the matrix [phi(E^{(i)}_{rs})]_{rs} must be
/// positive semidefinite (eigenvalues >= -eig_floor).
Verdict check_positive(const StateFunctional& phi, double eig_floor = 1e-10);
/// Traciality: phi(ab) = phi(ba) on all basis pairs.
Verdict check_tracial(const StateFunctional& phi, double tol = kEqTol);

/// Cancellation laws: (left) span{Delta(a)(1 (x) b)} and (right)
/// span{(a (x) 1) Delta(b)} must each have full rank dim(A)^2.
std::pair<Verdict, Verdict> check_cancellation(const QuantumSemigroup& G,
                                               double rank_tol = kRankTol);

/// Compact quantum group predicate: unital (always, here) + both
/// cancellation laws.
Verdict is_compact_quantum_group(const QuantumSemigroup& G,
                                 double rank_tol = kRankTol);

/// Convolution (phi * psi) = (phi (x) psi) o Delta; flags re-tested.
StateFunctional convolve(const StateFunctional& phi, const StateFunctional& psi,
                         const QuantumSemigroup& G);

/// The unique bi-invariant state: (h (x) id)Delta(a) = (id (x) h)Delta(a)
/// = h(a) 1, h(1) = 1. Solved as a linear system; throws NoSolution /
/// NonUnique when the null space has dimension 0 / >= 2 (signals that G is
/// not a compact quantum group), NotPositive when the solution fails the
/// positivity check.
StateFunctional haar_state(const QuantumSemigroup& G, double tol = kEqTol);

/// Morphism check: Phi a unital *-homomorphism with
/// (Phi (x) Phi) o Delta_1 = Delta_2 o Phi.
Verdict check_qsg_morphism(const LinearMap& Phi, const QuantumSemigroup& G1,
                           const QuantumSemigroup& G2, double tol = 1e-8);

}  // namespace qbohr
