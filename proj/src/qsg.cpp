#include "qbohr/qsg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qbohr/kernels.hpp"

namespace qbohr {

QuantumSemigroup::QuantumSemigroup(AlgebraPtr algebra, LinearMap delta,
                                   double tol)
    : algebra_(std::move(algebra)),
      idx_(algebra_, algebra_),
      tensor_(idx_.tensor()),
      delta_(std::move(delta)) {
  if (!same_algebra(*delta_.source, *algebra_) ||
      !same_algebra(*delta_.target, *tensor_))
    throw InvalidComultiplication(
        "comultiplication must map the algebra into its tensor square");
  const Verdict hom = check_star_homomorphism(delta_, tol);
  if (!hom)
    throw InvalidComultiplication("comultiplication is " + hom.witness);
  // Coassociativity. The two triple-tensor coordinate systems coincide
  // bit-exactly (Kronecker index composition is associative), so the two
  // composites can be compared entry by entry.
  const LinearMap id = identity_map(algebra_);
  const LinearMap left = compose(tensor_map(delta_, id), delta_);
  const LinearMap right = compose(tensor_map(id, delta_), delta_);
  const double defect = rel_defect(left.matrix, right.matrix);
  if (defect > tol)
    throw InvalidComultiplication("comultiplication is not coassociative");
}

QsgPtr make_qsg(AlgebraPtr algebra, LinearMap delta, double tol) {
  return std::make_shared<const QuantumSemigroup>(std::move(algebra),
                                                  std::move(delta), tol);
}

bool same_qsg(const QuantumSemigroup& a, const QuantumSemigroup& b) {
  if (!same_algebra(*a.algebra(), *b.algebra())) return false;
  const Mat& da = a.delta().matrix;
  const Mat& db = b.delta().matrix;
  return da.rows() == db.rows() && da.cols() == db.cols() &&
         (da.array() == db.array()).all();
}

StateFunctional make_functional(AlgebraPtr A, RowVec covector, double tol) {
  if (covector.size() != A->dim())
    throw InputError("functional covector has wrong length");
  StateFunctional phi{std::move(A), std::move(covector), false, false, false};
  phi.positive = static_cast<bool>(check_positive(phi));
  phi.tracial = static_cast<bool>(check_tracial(phi, tol));
  const Complex at_unit = apply(phi, unit(phi.parent));
  phi.normalized = std::abs(at_unit - 1.0) <= tol;
  return phi;
}

Complex apply(const StateFunctional& phi, const AlgebraElement& a) {
  if (!same_algebra(*phi.parent, *a.parent))
    throw ParentMismatch("functional applied to an element of another algebra");
  return phi.covector * a.coords;
}

Verdict check_positive(const StateFunctional& phi, double eig_floor) {
  const auto& A = *phi.parent;
  for (int i = 0; i < A.block_count(); ++i) {
    const int n = A.block_size(i);
    Mat M(n, n);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) M(r, s) = phi.covector(A.index_of(i, r, s));
    const double scale = std::max(1.0, max_abs(M));
    const double herm = max_abs(M - Mat(M.adjoint()));
    if (herm > 1e-8 * scale)
      return Verdict::fail(
          "functional matrix of block " + std::to_string(i) + " not Hermitian",
          herm);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (M + Mat(M.adjoint())));
    const double lambda_min = es.eigenvalues().minCoeff();
    if (lambda_min < -eig_floor * scale)
      return Verdict::fail("functional matrix of block " + std::to_string(i) +
                               " has negative eigenvalue",
                           -lambda_min);
  }
  return Verdict::ok();
}

Verdict check_tracial(const StateFunctional& phi, double tol) {
  const auto& A = *phi.parent;
  const double scale = std::max(1.0, max_abs(Mat(phi.covector)));
  double worst = 0.0;
  // Cross-block products vanish in both orders, so only within-block pairs
  // matter: phi(E_rs E_pq) = d_sp phi(E_rq) vs phi(E_pq E_rs) = d_qr phi(E_ps).
  for (int i = 0; i < A.block_count(); ++i) {
    const int n = A.block_size(i);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Complex ab =
                s == p ? phi.covector(A.index_of(i, r, q)) : Complex(0);
            const Complex ba =
                q == r ? phi.covector(A.index_of(i, p, s)) : Complex(0);
            worst = std::max(worst, std::abs(ab - ba));
          }
  }
  if (worst <= tol * scale) return Verdict::ok(worst / scale);
  return Verdict::fail("functional is not tracial", worst / scale);
}

std::pair<Verdict, Verdict> check_cancellation(const QuantumSemigroup& G,
                                               double rank_tol) {
  const AlgebraPtr& A = G.algebra();
  const int d = A->dim();
  const int d2 = G.tensor()->dim();
  const TensorIndexer& idx = G.indexer();

  // 1 (x) e_beta and e_alpha (x) 1 as column stacks.
  const Vec u = unit(A).coords;
  Mat right_leg = Mat::Zero(d2, d);
  Mat left_leg = Mat::Zero(d2, d);
  for (int beta = 0; beta < d; ++beta)
    for (int gamma = 0; gamma < d; ++gamma) {
      if (u(gamma) != 0.0) right_leg(idx(gamma, beta), beta) += u(gamma);
      if (u(gamma) != 0.0) left_leg(idx(beta, gamma), beta) += u(gamma);
    }

  const Mat& D = G.delta().matrix;
  const Mat left_span = kernels::pairwise_products(*G.tensor(), D, right_leg);
  const Mat right_span = kernels::pairwise_products(*G.tensor(), left_leg, D);

  auto side = [&](const Mat& span, const char* name) {
    const int rank = numeric_rank(span, rank_tol);
    if (rank == d2) return Verdict::ok();
    return Verdict::fail(std::string(name) + " cancellation span has rank " +
                             std::to_string(rank) + " < " + std::to_string(d2),
                         double(d2 - rank));
  };
  return {side(left_span, "left"), side(right_span, "right")};
}

Verdict is_compact_quantum_group(const QuantumSemigroup& G, double rank_tol) {
  auto [left, right] = check_cancellation(G, rank_tol);
  return left.merge(right);
}

StateFunctional convolve(const StateFunctional& phi, const StateFunctional& psi,
                         const QuantumSemigroup& G) {
  if (!same_algebra(*phi.parent, *G.algebra()) ||
      !same_algebra(*psi.parent, *G.algebra()))
    throw ParentMismatch("convolution operands live on another algebra");
  const int d = G.dim();
  const TensorIndexer& idx = G.indexer();
  RowVec pair = RowVec::Zero(G.tensor()->dim());
  for (int alpha = 0; alpha < d; ++alpha)
    for (int beta = 0; beta < d; ++beta)
      pair(idx(alpha, beta)) += phi.covector(alpha) * psi.covector(beta);
  return make_functional(G.algebra(), pair * G.delta().matrix);
}

StateFunctional haar_state(const QuantumSemigroup& G, double tol) {
  const int d = G.dim();
  const TensorIndexer& idx = G.indexer();
  const Mat& D = G.delta().matrix;
  const Vec u = unit(G.algebra()).coords;

  // Homogeneous bi-invariance system in the covector h:
  //   sum_a h_a D[(a,c), b] = h_b u_c   and   sum_a h_a D[(c,a), b] = h_b u_c.
  Mat M = Mat::Zero(2 * static_cast<Eigen::Index>(d) * d, d);
  Eigen::Index row = 0;
  for (int c = 0; c < d; ++c)
    for (int b = 0; b < d; ++b, row += 2)
      for (int a = 0; a < d; ++a) {
        M(row, a) = D(idx(a, c), b) - (a == b ? u(c) : Complex(0));
        M(row + 1, a) = D(idx(c, a), b) - (a == b ? u(c) : Complex(0));
      }

  const Mat null = nullspace(M, kRankTol);
  if (null.cols() == 0)
    throw NoSolution("bi-invariance system has no nonzero solution");
  if (null.cols() > 1)
    throw NonUnique("bi-invariance system has a " +
                    std::to_string(null.cols()) +
                    "-dimensional solution space");

  Vec h = null.col(0);
  const Complex at_unit = u.transpose() * h;
  if (std::abs(at_unit) < 1e-12)
    throw NoSolution("invariant functional vanishes on the unit");
  h /= at_unit;

  StateFunctional result = make_functional(G.algebra(), h.transpose(), tol);
  if (!result.positive) {
    const Verdict v = check_positive(result);
    throw NotPositive("invariant functional is not positive: " + v.witness);
  }
  return result;
}

Verdict check_qsg_morphism(const LinearMap& Phi, const QuantumSemigroup& G1,
                           const QuantumSemigroup& G2, double tol) {
  if (!same_algebra(*Phi.source, *G1.algebra()) ||
      !same_algebra(*Phi.target, *G2.algebra()))
    return Verdict::fail("map does not go between the two quantum semigroups");
  Verdict v = check_star_homomorphism(Phi, tol);
  if (!v) return v;
  const LinearMap lhs = compose(tensor_map(Phi, Phi), G1.delta());
  const LinearMap rhs = compose(G2.delta(), Phi);
  const double defect = rel_defect(lhs.matrix, rhs.matrix);
  if (defect > tol)
    return Verdict::fail("map does not intertwine the comultiplications",
                         defect);
  return v.merge(Verdict::ok(defect));
}

}  // namespace qbohr
