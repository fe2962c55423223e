#include "qbohr/linmap.hpp"

#include <string>
#include <utility>

#include "qbohr/kernels.hpp"

namespace qbohr {

AlgebraElement LinearMap::apply(const AlgebraElement& a) const {
  if (!same_algebra(*a.parent, *source))
    throw ParentMismatch("map applied to an element of the wrong algebra");
  return {target, matrix * a.coords};
}

LinearMap make_map(AlgebraPtr source, AlgebraPtr target, Mat matrix) {
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw InputError("map matrix shape does not match source/target");
  return {std::move(source), std::move(target), std::move(matrix)};
}

LinearMap identity_map(AlgebraPtr A) {
  Mat id = Mat::Identity(A->dim(), A->dim());
  return {A, A, std::move(id)};
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (!same_algebra(*f.source, *g.target))
    throw ParentMismatch("compose: inner algebras do not match");
  return {g.source, f.target, f.matrix * g.matrix};
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  const TensorIndexer in(f.source, g.source);
  const TensorIndexer out(f.target, g.target);
  Mat M = Mat::Zero(out.tensor()->dim(), in.tensor()->dim());
  for (int alpha = 0; alpha < f.source->dim(); ++alpha)
    for (int gamma = 0; gamma < f.target->dim(); ++gamma) {
      const Complex fc = f.matrix(gamma, alpha);
      if (fc == 0.0) continue;
      for (int beta = 0; beta < g.source->dim(); ++beta)
        for (int delta = 0; delta < g.target->dim(); ++delta)
          M(out(gamma, delta), in(alpha, beta)) += fc * g.matrix(delta, beta);
    }
  return {in.tensor(), out.tensor(), std::move(M)};
}

LinearMap multiplication_map(const AlgebraPtr& A) {
  const TensorIndexer idx(A, A);
  Mat M = Mat::Zero(A->dim(), idx.tensor()->dim());
  for (int alpha = 0; alpha < A->dim(); ++alpha) {
    const auto [i, r, s] = A->decode(alpha);
    for (int beta = 0; beta < A->dim(); ++beta) {
      const auto [j, p, q] = A->decode(beta);
      if (i == j && s == p) M(A->index_of(i, r, q), idx(alpha, beta)) = 1.0;
    }
  }
  return {idx.tensor(), A, std::move(M)};
}

Verdict check_star_homomorphism(const LinearMap& f, double tol) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  double worst = 0.0;
  std::string witness;
  auto record = [&](double defect, const std::string& where) {
    if (defect > worst) {
      worst = defect;
      witness = where;
    }
  };

  // Unitality.
  record(rel_defect(f.apply(unit(f.source)).coords, unit(f.target).coords),
         "unit");

  // Image of every basis element, then all pairwise products downstairs.
  const Mat& F = f.matrix;
  const Mat products = kernels::pairwise_products(T, F, F);
  for (int alpha = 0; alpha < S.dim(); ++alpha) {
    const auto [i, r, s] = S.decode(alpha);
    for (int beta = 0; beta < S.dim(); ++beta) {
      const auto [j, p, q] = S.decode(beta);
      Vec upstairs = Vec::Zero(T.dim());
      if (i == j && s == p) upstairs = F.col(S.index_of(i, r, q));
      const double defect = rel_defect(
          upstairs, products.col(static_cast<Eigen::Index>(alpha) * S.dim() +
                                 beta));
      record(defect, "product of basis pair (" + std::to_string(alpha) + ", " +
                         std::to_string(beta) + ")");
    }
  }

  // Star compatibility on the basis.
  const Mat starred_images = kernels::star_batch(T, F);
  for (int alpha = 0; alpha < S.dim(); ++alpha) {
    const auto [i, r, s] = S.decode(alpha);
    record(rel_defect(Mat(F.col(S.index_of(i, s, r))),
                      Mat(starred_images.col(alpha))),
           "star of basis element " + std::to_string(alpha));
  }

  if (worst <= tol) return Verdict::ok(worst);
  return Verdict::fail("not a unital *-homomorphism at " + witness, worst);
}

}  // namespace qbohr
