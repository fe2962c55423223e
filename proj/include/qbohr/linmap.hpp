#pragma once

#include "qbohr/algebra.hpp"
#include "qbohr/verdict.hpp"

namespace qbohr {

/// A linear map between multi-matrix algebras, stored as its matrix with
/// respect to the canonical bases (target.dim x source.dim).
struct LinearMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Mat matrix;

  AlgebraElement apply(const AlgebraElement& a) const;
};

LinearMap make_map(AlgebraPtr source, AlgebraPtr target, Mat matrix);
LinearMap identity_map(AlgebraPtr A);
/// f after g (source of f must equal target of g structurally).
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// f (x) g between the corresponding tensor algebras.
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
/// The multiplication map A (x) A -> A, a (x) b -> ab, as a LinearMap.
LinearMap multiplication_map(const AlgebraPtr& A);

/// Verify that f is a unital *-homomorphism: f(1)=1, f(ab)=f(a)f(b) on all
/// basis pairs, f(a*)=f(a)*. On failure the witness names the offending
/// basis pair (or "unit"/"star") and the defect is the worst residual.
Verdict check_star_homomorphism(const LinearMap& f, double tol = kEqTol);

}  // namespace qbohr
