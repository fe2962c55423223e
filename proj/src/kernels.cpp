#include "qbohr/kernels.hpp"

namespace qbohr::kernels {

namespace {

// Per-column scalar kernels shared by the parallel and serial entry points,
// so the two produce bit-identical results.

void product_into(const MultiMatrixAlgebra& A, const Complex* x,
                  const Complex* y, Complex* out) {
  for (int i = 0; i < A.block_count(); ++i) {
    const int n = A.block_size(i);
    const int off = A.block_offset(i);
    Eigen::Map<const RowMat> X(x + off, n, n);
    Eigen::Map<const RowMat> Y(y + off, n, n);
    Eigen::Map<RowMat> O(out + off, n, n);
    O.noalias() = X * Y;
  }
}

void star_into(const MultiMatrixAlgebra& A, const Complex* x, Complex* out) {
  for (int i = 0; i < A.block_count(); ++i) {
    const int n = A.block_size(i);
    const int off = A.block_offset(i);
    Eigen::Map<const RowMat> X(x + off, n, n);
    Eigen::Map<RowMat> O(out + off, n, n);
    O = X.adjoint();
  }
}

void check_rows(const MultiMatrixAlgebra& A, const Mat& X) {
  if (X.rows() != A.dim())
    throw InputError("kernel operand row count does not match the algebra");
}

}  // namespace

Mat pairwise_products(const MultiMatrixAlgebra& A, const Mat& X, const Mat& Y) {
  check_rows(A, X);
  check_rows(A, Y);
  const Eigen::Index nx = X.cols(), ny = Y.cols();
  Mat R(A.dim(), nx * ny);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (Eigen::Index c = 0; c < nx * ny; ++c)
    product_into(A, X.col(c / ny).data(), Y.col(c % ny).data(), R.col(c).data());
  return R;
}

Mat columnwise_products(const MultiMatrixAlgebra& A, const Mat& X,
                        const Mat& Y) {
  check_rows(A, X);
  check_rows(A, Y);
  if (X.cols() != Y.cols())
    throw InputError("columnwise product needs matching column counts");
  Mat R(A.dim(), X.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (Eigen::Index c = 0; c < X.cols(); ++c)
    product_into(A, X.col(c).data(), Y.col(c).data(), R.col(c).data());
  return R;
}

Mat star_batch(const MultiMatrixAlgebra& A, const Mat& X) {
  check_rows(A, X);
  Mat R(A.dim(), X.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (Eigen::Index c = 0; c < X.cols(); ++c)
    star_into(A, X.col(c).data(), R.col(c).data());
  return R;
}

namespace serial {

Mat pairwise_products(const MultiMatrixAlgebra& A, const Mat& X, const Mat& Y) {
  check_rows(A, X);
  check_rows(A, Y);
  const Eigen::Index nx = X.cols(), ny = Y.cols();
  Mat R(A.dim(), nx * ny);
  for (Eigen::Index c = 0; c < nx * ny; ++c)
    product_into(A, X.col(c / ny).data(), Y.col(c % ny).data(), R.col(c).data());
  return R;
}

Mat columnwise_products(const MultiMatrixAlgebra& A, const Mat& X,
                        const Mat& Y) {
  check_rows(A, X);
  check_rows(A, Y);
  if (X.cols() != Y.cols())
    throw InputError("columnwise product needs matching column counts");
  Mat R(A.dim(), X.cols());
  for (Eigen::Index c = 0; c < X.cols(); ++c)
    product_into(A, X.col(c).data(), Y.col(c).data(), R.col(c).data());
  return R;
}

Mat star_batch(const MultiMatrixAlgebra& A, const Mat& X) {
  check_rows(A, X);
  Mat R(A.dim(), X.cols());
  for (Eigen::Index c = 0; c < X.cols(); ++c)
    star_into(A, X.col(c).data(), R.col(c).data());
  return R;
}

}  // namespace serial

}  // namespace qbohr::kernels
