#include "qbohr/kacq.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qbohr {

StateFamily tracial_state_family(AlgebraPtr A) {
  StateFamily F{A, {}};
  for (int i = 0; i < A->block_count(); ++i) {
    const int n = A->block_size(i);
    RowVec cov = RowVec::Zero(A->dim());
    for (int r = 0; r < n; ++r) cov(A->index_of(i, r, r)) = 1.0 / n;
    F.members.push_back(make_functional(A, std::move(cov)));
  }
  return F;
}

StateFamily tracial_state_family(AlgebraPtr A,
                                 std::vector<StateFunctional> members,
                                 double tol) {
  for (size_t i = 0; i < members.size(); ++i) {
    const StateFunctional& phi = members[i];
    if (!phi.parent || !same_algebra(*phi.parent, *A))
      throw ParentMismatch("family member lives on a different algebra");
    if (!check_tracial(phi, tol))
      throw NotTracial("family member " + std::to_string(i) +
                       " is not tracial");
    if (!check_positive(phi))
      throw NotTracial("family member " + std::to_string(i) +
                       " is not positive");
    if (std::abs(apply(phi, unit(A)) - 1.0) > tol)
      throw NotTracial("family member " + std::to_string(i) +
                       " is not normalized");
  }
  return {std::move(A), std::move(members)};
}

Subspace null_ideal(const AlgebraPtr& A, const StateFamily& F,
                    double rank_tol) {
  if (!same_algebra(*F.parent, *A))
    throw ParentMismatch("family lives on a different algebra");
  const int d = A->dim();
  if (F.members.empty()) return {A, Mat::Identity(d, d)};

  // Gram of the family: M[a, b] = sum_tau tau(e_a* e_b); the joint left
  // kernel of the states is the kernel of this positive matrix.
  Mat M = Mat::Zero(d, d);
  for (const StateFunctional& tau : F.members)
    for (int alpha = 0; alpha < d; ++alpha) {
      const auto [i, r, s] = A->decode(alpha);
      for (int beta = 0; beta < d; ++beta) {
        const auto [j, p, q] = A->decode(beta);
        if (i == j && r == p) M(alpha, beta) += tau.covector(A->index_of(i, s, q));
      }
    }
  return {A, nullspace(M, rank_tol)};
}

QuotientResult kac_quotient(const QuantumSemigroup& G, const StateFamily& F,
                            double tol) {
  const AlgebraPtr& A = G.algebra();
  QuotientResult R;
  R.source = std::make_shared<const QuantumSemigroup>(G);
  R.ideal = null_ideal(A, F);
  const int d = A->dim();

  if (R.ideal.rank() == d) {
    R.descends = Verdict::fail("quotient is zero-dimensional");
    R.cqg = Verdict::fail("quotient is zero-dimensional");
    R.kac = Verdict::fail("quotient is zero-dimensional");
    return R;
  }

  // The null ideal of a tracial family is a two-sided *-ideal, hence a sum
  // of full blocks. Identify which blocks it swallows (and verify that it
  // really is a block subsum).
  const Mat PJ = R.ideal.projector();
  std::vector<int> kept;
  int dropped_dim = 0;
  for (int i = 0; i < A->block_count(); ++i) {
    const int n2 = A->block_size(i) * A->block_size(i);
    double mass = 0.0;
    for (int local = 0; local < n2; ++local) {
      const int flat = A->block_offset(i) + local;
      mass += std::real(PJ(flat, flat));
    }
    if (mass < 1e-6)
      kept.push_back(i);
    else if (std::abs(mass - n2) < 1e-6)
      dropped_dim += n2;
    else
      throw Error("null ideal is not a sum of full blocks");
  }
  if (dropped_dim != R.ideal.rank())
    throw Error("null ideal rank does not match the dropped blocks");

  std::vector<int> qblocks;
  for (int i : kept) qblocks.push_back(A->block_size(i));
  R.quotient_algebra = make_algebra(qblocks);
  const int dq = R.quotient_algebra->dim();

  Mat proj = Mat::Zero(dq, d);
  int at = 0;
  for (int i : kept) {
    const int n2 = A->block_size(i) * A->block_size(i);
    for (int local = 0; local < n2; ++local)
      proj(at + local, A->block_offset(i) + local) = 1.0;
    at += n2;
  }
  R.projection = make_map(A, R.quotient_algebra, proj);
  const Mat section = proj.transpose();

  // Descent: (pi (x) pi) o Delta must be constant on pi-fibers,
  // equivalently it must vanish on the ideal.
  const LinearMap pi2 = tensor_map(R.projection, R.projection);
  const Mat pushed = pi2.matrix * G.delta().matrix;
  const double scale = std::max(1.0, max_abs(pushed));
  const double defect = max_abs(pushed * R.ideal.basis) / scale;
  if (defect > tol) {
    R.descends = Verdict::fail(
        "comultiplication does not descend along the quotient", defect);
    R.cqg = Verdict::fail("comultiplication does not descend");
    R.kac = Verdict::fail("comultiplication does not descend");
    return R;
  }

  try {
    const TensorIndexer qidx(R.quotient_algebra, R.quotient_algebra);
    LinearMap delta_q = make_map(R.quotient_algebra, qidx.tensor(),
                                 pushed * section);
    R.quotient = make_qsg(R.quotient_algebra, std::move(delta_q), tol);
  } catch (const InvalidComultiplication& ex) {
    R.descends = Verdict::fail(std::string("descended map is invalid: ") +
                               ex.what());
    R.cqg = Verdict::fail("descended map is invalid");
    R.kac = Verdict::fail("descended map is invalid");
    return R;
  }

  R.descends = Verdict::ok(defect);
  R.cqg = is_compact_quantum_group(*R.quotient);
  if (!R.cqg) {
    R.kac = Verdict::fail("quotient is not a compact quantum group");
    return R;
  }
  try {
    R.kac = is_kac_type(*R.quotient, std::max(tol, kEqTol));
  } catch (const Error& ex) {
    R.kac = Verdict::fail(std::string("Haar state failed: ") + ex.what());
  }
  return R;
}

Verdict is_kac_type(const QuantumSemigroup& G, double tol) {
  const StateFunctional h = haar_state(G, tol);
  Verdict v = check_tracial(h, tol);
  if (!v) v.witness = "Haar state is not a trace";
  return v;
}

}  // namespace qbohr
