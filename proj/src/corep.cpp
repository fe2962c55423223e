#include "qbohr/corep.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qbohr/bohr.hpp"

namespace qbohr {

AlgebraElement RepMatrix::entry(int k, int l) const {
  return element(parent, entries.row(k * size + l).transpose());
}

void RepMatrix::set_entry(int k, int l, const AlgebraElement& a) {
  if (!same_algebra(*a.parent, *parent))
    throw ParentMismatch("representation entry from a different algebra");
  entries.row(k * size + l) = a.coords.transpose();
}

RepMatrix make_rep(AlgebraPtr A, int size) {
  if (size < 1) throw InputError("representation size must be positive");
  Mat entries = Mat::Zero(static_cast<Eigen::Index>(size) * size, A->dim());
  return {std::move(A), size, std::move(entries)};
}

RepMatrix make_rep(AlgebraPtr A, int size, Mat entries) {
  if (size < 1) throw InputError("representation size must be positive");
  if (entries.rows() != static_cast<Eigen::Index>(size) * size ||
      entries.cols() != A->dim())
    throw InputError("representation entry matrix has wrong shape");
  return {std::move(A), size, std::move(entries)};
}

RepMatrix trivial_rep(AlgebraPtr A) {
  RepMatrix T = make_rep(A, 1);
  T.set_entry(0, 0, unit(T.parent));
  return T;
}

std::vector<Mat> inflate(const RepMatrix& T) {
  std::vector<Mat> thetas;
  thetas.reserve(T.parent->block_count());
  for (int i = 0; i < T.parent->block_count(); ++i) {
    const int ni = T.parent->block_size(i);
    Mat theta(T.size * ni, T.size * ni);
    for (int k = 0; k < T.size; ++k)
      for (int l = 0; l < T.size; ++l)
        theta.block(k * ni, l * ni, ni, ni) = get_block(T.entry(k, l), i);
    thetas.push_back(std::move(theta));
  }
  return thetas;
}

Verdict is_corep(const RepMatrix& T, const QuantumSemigroup& G, double tol) {
  if (!same_algebra(*T.parent, *G.algebra()))
    return Verdict::fail("representation lives on a different algebra");
  const TensorIndexer& idx = G.indexer();
  double worst = 0.0;
  std::string witness;
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l) {
      const Vec lhs = G.delta().apply(T.entry(k, l)).coords;
      Vec rhs = Vec::Zero(G.tensor()->dim());
      for (int p = 0; p < T.size; ++p)
        rhs += tensor_elem(idx, T.entry(k, p), T.entry(p, l)).coords;
      const double defect = rel_defect(lhs, rhs);
      if (defect > worst) {
        worst = defect;
        witness = "entry (" + std::to_string(k) + ", " + std::to_string(l) +
                  ") breaks the corepresentation identity";
      }
    }
  if (worst <= tol) return Verdict::ok(worst);
  return Verdict::fail(witness, worst);
}

Verdict is_invertible(const RepMatrix& T, double cond_limit) {
  const auto thetas = inflate(T);
  for (size_t i = 0; i < thetas.size(); ++i) {
    Eigen::JacobiSVD<Mat> svd(thetas[i]);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (smin <= 0.0 || s(0) > cond_limit * smin)
      return Verdict::fail("inflation over block " + std::to_string(i) +
                               " is singular or ill-conditioned",
                           smin > 0.0 ? s(0) / smin : 0.0);
  }
  return Verdict::ok();
}

Verdict is_bounded_representation(const RepMatrix& T, const QuantumSemigroup& G,
                                  double tol, double cond_limit) {
  Verdict v = is_corep(T, G, tol);
  return v.merge(is_invertible(T, cond_limit));
}

RepMatrix transpose_rep(const RepMatrix& T) {
  RepMatrix S = make_rep(T.parent, T.size);
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l) S.set_entry(k, l, T.entry(l, k));
  return S;
}

RepMatrix adjoint_rep(const RepMatrix& T) {
  RepMatrix S = make_rep(T.parent, T.size);
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l) S.set_entry(k, l, star(T.entry(l, k)));
  return S;
}

Verdict is_admissible(const RepMatrix& T, const QuantumSemigroup& G, double tol,
                      double cond_limit) {
  Verdict v = is_bounded_representation(T, G, tol, cond_limit);
  Verdict t = is_invertible(transpose_rep(T), cond_limit);
  if (!t) t.witness = "transpose not invertible: " + t.witness;
  return v.merge(t);
}

Verdict is_unitary_rep(const RepMatrix& T, double tol) {
  const auto thetas = inflate(T);
  double worst = 0.0;
  size_t where = 0;
  for (size_t i = 0; i < thetas.size(); ++i) {
    const Mat gram = thetas[i].adjoint() * thetas[i];
    const double defect =
        max_abs(gram - Mat::Identity(gram.rows(), gram.cols()));
    if (defect > worst) {
      worst = defect;
      where = i;
    }
  }
  if (worst <= tol) return Verdict::ok(worst);
  return Verdict::fail(
      "inflation over block " + std::to_string(where) + " is not unitary",
      worst);
}

RepMatrix direct_sum(const RepMatrix& S, const RepMatrix& T) {
  if (!same_algebra(*S.parent, *T.parent))
    throw ParentMismatch("direct sum of representations over different algebras");
  RepMatrix D = make_rep(S.parent, S.size + T.size);
  for (int k = 0; k < S.size; ++k)
    for (int l = 0; l < S.size; ++l) D.set_entry(k, l, S.entry(k, l));
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l)
      D.set_entry(S.size + k, S.size + l, T.entry(k, l));
  return D;
}

RepMatrix tensor_product(const RepMatrix& S, const RepMatrix& T) {
  if (!same_algebra(*S.parent, *T.parent))
    throw ParentMismatch(
        "tensor product of representations over different algebras");
  RepMatrix P = make_rep(S.parent, S.size * T.size);
  for (int k1 = 0; k1 < S.size; ++k1)
    for (int k2 = 0; k2 < T.size; ++k2)
      for (int l1 = 0; l1 < S.size; ++l1)
        for (int l2 = 0; l2 < T.size; ++l2)
          P.set_entry(k1 * T.size + k2, l1 * T.size + l2,
                      multiply(S.entry(k1, l1), T.entry(k2, l2)));
  return P;
}

RepMatrix conjugate(const RepMatrix& T, const QuantumSemigroup& G, double tol) {
  const Verdict c = is_corep(T, G, std::max(tol, 1e-8));
  if (!c) throw InputError("conjugate needs a corepresentation: " + c.witness);
  const Verdict u = is_unitary_rep(T, tol);
  if (!u) throw RequiresUnitary(u.witness);
  RepMatrix C = make_rep(T.parent, T.size);
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l) C.set_entry(k, l, star(T.entry(k, l)));
  return C;
}

Subspace matrix_elements(const RepMatrix& T, double rank_tol) {
  return subspace_from_span(T.parent, T.entries.transpose(), rank_tol);
}

RepMatrix invert_rep(const RepMatrix& T, double cond_limit) {
  RepMatrix R = make_rep(T.parent, T.size);
  const auto thetas = inflate(T);
  for (size_t i = 0; i < thetas.size(); ++i) {
    Eigen::JacobiSVD<Mat> svd(thetas[i],
                              Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) <= 0.0 || s(0) > cond_limit * s(s.size() - 1))
      throw SingularElement("representation is singular over block " +
                            std::to_string(i));
    const Vec sinv = s.cwiseInverse().cast<Complex>();
    const Mat inv = svd.matrixV() * sinv.asDiagonal() * svd.matrixU().adjoint();
    const int ni = T.parent->block_size(static_cast<int>(i));
    for (int k = 0; k < T.size; ++k)
      for (int l = 0; l < T.size; ++l) {
        AlgebraElement e = R.entry(k, l);
        set_block(e, static_cast<int>(i), inv.block(k * ni, l * ni, ni, ni));
        R.set_entry(k, l, e);
      }
  }
  return R;
}

RepMatrix similarity_transform(const RepMatrix& T, const Mat& P) {
  if (P.rows() != T.size || P.cols() != T.size)
    throw InputError("similarity matrix has wrong shape");
  Eigen::JacobiSVD<Mat> svd(P, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= 0.0 || s(0) > kCondLimit * s(s.size() - 1))
    throw SingularElement("similarity matrix is singular");
  const Vec sinv = s.cwiseInverse().cast<Complex>();
  const Mat Pinv = svd.matrixV() * sinv.asDiagonal() * svd.matrixU().adjoint();
  RepMatrix S = make_rep(T.parent, T.size);
  // (P (x) 1)^{-1} T (P (x) 1) entrywise.
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l) {
      Vec acc = Vec::Zero(T.parent->dim());
      for (int a = 0; a < T.size; ++a)
        for (int b = 0; b < T.size; ++b)
          acc += Pinv(k, a) * P(b, l) * T.entry(a, b).coords;
      S.entries.row(k * T.size + l) = acc.transpose();
    }
  return S;
}

RepMatrix regular_corep(const QuantumSemigroup& G) {
  const int d = G.dim();
  const TensorIndexer& idx = G.indexer();
  const Mat& D = G.delta().matrix;
  RepMatrix T = make_rep(G.algebra(), d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vec coords(d);
      for (int delta = 0; delta < d; ++delta) coords(delta) = D(idx(a, delta), b);
      T.entries.row(a * d + b) = coords.transpose();
    }
  return T;
}

namespace {

RepMatrix rep_matrix_product(const RepMatrix& S, const RepMatrix& T) {
  RepMatrix P = make_rep(S.parent, S.size);
  for (int k = 0; k < S.size; ++k)
    for (int l = 0; l < S.size; ++l) {
      AlgebraElement acc = zero_element(S.parent);
      for (int p = 0; p < S.size; ++p)
        acc = acc + multiply(S.entry(k, p), T.entry(p, l));
      P.set_entry(k, l, acc);
    }
  return P;
}

}  // namespace

UnitarizeResult unitarize(const RepMatrix& T, const QuantumSemigroup& G,
                          double tol) {
  const Verdict adm = is_admissible(T, G, tol);
  if (!adm) throw NotAdmissible(adm.witness);

  // Haar state of the compact quantum group generated by T, pulled back to
  // the ambient algebra through the inclusion.
  const SubQuantumGroup B = generate_BT(T, G, tol);
  const StateFunctional hB = haar_state(*B.presented);
  const RowVec ambient_cov = hB.covector * pinv(B.chi.matrix);
  const StateFunctional h = make_functional(G.algebra(), ambient_cov);

  // F = (id (x) h)(T* T), a scalar positive matrix.
  const RepMatrix TstarT = rep_matrix_product(adjoint_rep(T), T);
  Mat F(T.size, T.size);
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l) F(k, l) = apply(h, TstarT.entry(k, l));
  F = 0.5 * (F + Mat(F.adjoint()));

  Eigen::SelfAdjointEigenSolver<Mat> es(F);
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min <= 1e-10)
    throw NotPositive("averaged Gram matrix is not positive definite");
  const Vec dinv = es.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>();
  const Mat sqrt_inv =
      es.eigenvectors() * dinv.asDiagonal() * es.eigenvectors().adjoint();

  // U = (F^{1/2} (x) 1) T (F^{-1/2} (x) 1) = similarity by m = F^{-1/2}.
  RepMatrix U = similarity_transform(T, sqrt_inv);
  return {std::move(U), sqrt_inv, std::move(F)};
}

}  // namespace qbohr
