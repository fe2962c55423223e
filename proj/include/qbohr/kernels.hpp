#pragma once

#include "qbohr/algebra.hpp"

namespace qbohr::kernels {

/// Batched algebra products: columns of X and Y are element coordinate
/// vectors; the result has X.cols()*Y.cols() columns, with column
/// i*Y.cols()+j equal to the blockwise product of X.col(i) and Y.col(j).
/// Parallelized over output columns with OpenMP when available; output
/// columns are independent, so the result is bit-identical to the serial
/// reference below.
Mat pairwise_products(const MultiMatrixAlgebra& A, const Mat& X, const Mat& Y);

/// Columnwise blockwise product of matched columns (X.cols()==Y.cols()).
Mat columnwise_products(const MultiMatrixAlgebra& A, const Mat& X, const Mat& Y);

/// Columnwise star (blockwise conjugate transpose) of each column of X.
Mat star_batch(const MultiMatrixAlgebra& A, const Mat& X);

namespace serial {
/// Single-threaded reference implementations, kept for testing and for the
/// kernel benchmark.
Mat pairwise_products(const MultiMatrixAlgebra& A, const Mat& X, const Mat& Y);
Mat columnwise_products(const MultiMatrixAlgebra& A, const Mat& X, const Mat& Y);
Mat star_batch(const MultiMatrixAlgebra& A, const Mat& X);
}  // namespace serial

}  // namespace qbohr::kernels
