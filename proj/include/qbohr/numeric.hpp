#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qbohr {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RowVec = Eigen::RowVectorXcd;
/// Row-major view type used to read a flat coordinate slice as a matrix
/// block (matrix units are ordered row-by-row within each block).
using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Default rank threshold factor: singular values below
/// rank_tol * max(1, sigma_max) are treated as zero.
inline constexpr double kRankTol = 1e-10;

/// Relative max-norm equality tolerance used throughout.
inline constexpr double kEqTol = 1e-9;

/// Condition-number cutoff separating invertible from singular.
inline constexpr double kCondLimit = 1e12;

/// Numerical rank with the engine's threshold convention.
int numeric_rank(const Mat& M, double rank_tol = kRankTol);

/// Orthonormal basis of the column space (dim x rank).
Mat orth(const Mat& M, double rank_tol = kRankTol);

/// Orthonormal basis of the kernel (cols x nullity).
Mat nullspace(const Mat& M, double rank_tol = kRankTol);

/// Moore-Penrose pseudo-inverse with the engine's rank threshold.
Mat pinv(const Mat& M, double rank_tol = kRankTol);

/// max-norm of a vector/matrix (largest absolute entry; 0 for empty).
double max_abs(const Mat& M);

/// Relative max-norm comparison: |a-b|_max <= tol * max(1, |a|_max, |b|_max).
bool approx_equal(const Mat& a, const Mat& b, double tol = kEqTol);

/// The relative defect |a-b|_max / max(1, |a|_max, |b|_max) backing
/// approx_equal; infinity on shape mismatch.
double rel_defect(const Mat& a, const Mat& b);

}  // namespace qbohr
