#pragma once

#include <vector>

#include "qbohr/qsg.hpp"
#include "qbohr/subspace.hpp"

namespace qbohr {

/// A list of tracial states on an algebra (every member checked tracial,
/// positive, and normalized on construction).
struct StateFamily {
  AlgebraPtr parent;
  std::vector<StateFunctional> members;
};

/// The full family of extreme tracial states of A = (+)_i M_{n_i}: the
/// normalized block traces tr_i / n_i.
StateFamily tracial_state_family(AlgebraPtr A);

/// A user-supplied restricted family. Throws NotTracial when a member
/// fails the traciality / positivity / normalization checks.
StateFamily tracial_state_family(AlgebraPtr A,
                                 std::vector<StateFunctional> members,
                                 double tol = kEqTol);

/// The null ideal J = { b : tau(b* b) = 0 for all tau in F }, the joint
/// kernel of the positive semidefinite forms b -> tau(b* b). For an empty
/// family J = A.
Subspace null_ideal(const AlgebraPtr& A, const StateFamily& F,
                    double rank_tol = kRankTol);

/// Outcome of the canonical Kac quotient construction. When J = A the
/// quotient is zero-dimensional: quotient_algebra is null and descends
/// reports failure. When Delta fails to descend along pi (possible for
/// restricted families) this is reported in `descends`, not thrown.
struct QuotientResult {
  QsgPtr source;
  Subspace ideal;              // J
  AlgebraPtr quotient_algebra; // A / J as a block algebra (null when J = A)
  LinearMap projection;        // pi : A -> A/J (empty when J = A)
  QsgPtr quotient;             // (A/J, induced Delta); null unless descends
  Verdict descends;            // does (pi (x) pi) o Delta factor through pi?
  Verdict cqg;                 // is_compact_quantum_group on the quotient
  Verdict kac;                 // is_kac_type on the quotient
};

/// Quotient G by the null ideal of F and push Delta down. The induced
/// comultiplication is solved from Delta-check o pi = (pi (x) pi) o Delta
/// and its well-definedness is verified constructively.
QuotientResult kac_quotient(const QuantumSemigroup& G, const StateFamily& F,
                            double tol = 1e-8);

/// Kac type: the Haar state is a trace. Requires G to be a compact
/// quantum group (so that haar_state exists); Haar failures propagate.
Verdict is_kac_type(const QuantumSemigroup& G, double tol = kEqTol);

}  // namespace qbohr
