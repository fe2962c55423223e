#include "qbohr/numeric.hpp"

#include <algorithm>
#include <limits>

#include <Eigen/SVD>

namespace qbohr {

namespace {

int rank_from_singular_values(const Eigen::VectorXd& s, double rank_tol) {
  if (s.size() == 0) return 0;
  const double cut = rank_tol * std::max(1.0, s(0));
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

}  // namespace

int numeric_rank(const Mat& M, double rank_tol) {
  if (M.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(M);
  return rank_from_singular_values(svd.singularValues(), rank_tol);
}

Mat orth(const Mat& M, double rank_tol) {
  if (M.size() == 0) return Mat(M.rows(), 0);
  Eigen::BDCSVD<Mat> svd(M, Eigen::ComputeThinU);
  const int r = rank_from_singular_values(svd.singularValues(), rank_tol);
  return svd.matrixU().leftCols(r);
}

Mat nullspace(const Mat& M, double rank_tol) {
  if (M.size() == 0) return Mat::Identity(M.cols(), M.cols());
  Eigen::BDCSVD<Mat> svd(M, Eigen::ComputeFullV);
  const int r = rank_from_singular_values(svd.singularValues(), rank_tol);
  return svd.matrixV().rightCols(M.cols() - r);
}

Mat pinv(const Mat& M, double rank_tol) {
  if (M.size() == 0) return Mat(M.cols(), M.rows());
  Eigen::BDCSVD<Mat> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const int r = rank_from_singular_values(s, rank_tol);
  Mat result = Mat::Zero(M.cols(), M.rows());
  for (int i = 0; i < r; ++i)
    result += (1.0 / s(i)) * svd.matrixV().col(i) * svd.matrixU().col(i).adjoint();
  return result;
}

double max_abs(const Mat& M) {
  if (M.size() == 0) return 0.0;
  return M.cwiseAbs().maxCoeff();
}

bool approx_equal(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max({1.0, max_abs(a), max_abs(b)});
  return max_abs(a - b) <= tol * scale;
}

double rel_defect(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  const double scale = std::max({1.0, max_abs(a), max_abs(b)});
  return max_abs(a - b) / scale;
}

}  // namespace qbohr
