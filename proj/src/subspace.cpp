#include "qbohr/subspace.hpp"

#include <algorithm>

#include <Eigen/SVD>

#include "qbohr/kernels.hpp"

namespace qbohr {

bool Subspace::contains(const AlgebraElement& a, double tol) const {
  if (!same_algebra(*a.parent, *parent))
    throw ParentMismatch("membership query from a different algebra");
  return distance(a) <= tol * std::max(1.0, norm_inf(a));
}

double Subspace::distance(const AlgebraElement& a) const {
  Vec residual = a.coords;
  if (basis.cols() > 0) residual -= basis * (basis.adjoint() * a.coords);
  return max_abs(residual);
}

Subspace subspace_from_span(AlgebraPtr A, const Mat& vectors,
                            double rank_tol) {
  if (vectors.cols() > 0 && vectors.rows() != A->dim())
    throw InputError("span vectors have wrong length");
  Mat fixed = vectors.rows() == A->dim() ? vectors : Mat(A->dim(), 0);
  return {std::move(A), orth(fixed, rank_tol)};
}

namespace {

/// Orthonormalize F against Q (twice, for stability), append the genuinely
/// new directions to Q, and return them.
Mat absorb(Mat& Q, const Mat& F, double rank_tol) {
  if (F.cols() == 0) return Mat(F.rows(), 0);
  Mat R = F;
  if (Q.cols() > 0) {
    R -= Q * (Q.adjoint() * R);
    R -= Q * (Q.adjoint() * R);
  }
  Eigen::BDCSVD<Mat> svd(R, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rank_tol * std::max(1.0, s(0))) ++r;
  Mat fresh = svd.matrixU().leftCols(r);
  Mat grown(Q.rows(), Q.cols() + r);
  grown << Q, fresh;
  Q = std::move(grown);
  return fresh;
}

Mat hcat(const Mat& a, const Mat& b, const Mat& c) {
  Mat out(a.rows(), a.cols() + b.cols() + c.cols());
  out << a, b, c;
  return out;
}

}  // namespace

Subspace span_closure(const std::vector<AlgebraElement>& generators,
                      AlgebraPtr A, double rank_tol) {
  Mat seed(A->dim(), 1 + static_cast<Eigen::Index>(generators.size()));
  seed.col(0) = unit(A).coords;
  for (size_t i = 0; i < generators.size(); ++i) {
    if (!same_algebra(*generators[i].parent, *A))
      throw ParentMismatch("closure generator from a different algebra");
    seed.col(1 + static_cast<Eigen::Index>(i)) = generators[i].coords;
  }

  Mat Q(A->dim(), 0);
  Mat frontier = std::move(seed);
  while (Q.cols() < A->dim()) {
    const Mat fresh = absorb(Q, frontier, rank_tol);
    if (fresh.cols() == 0) break;
    // New products can only involve at least one fresh direction; fresh is
    // already inside Q, so fresh x Q and Q x fresh cover fresh x fresh too.
    frontier = hcat(kernels::pairwise_products(*A, fresh, Q),
                    kernels::pairwise_products(*A, Q, fresh),
                    kernels::star_batch(*A, fresh));
  }
  return {std::move(A), std::move(Q)};
}

}  // namespace qbohr
