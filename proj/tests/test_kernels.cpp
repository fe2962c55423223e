#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qbohr/algebra.hpp"
#include "qbohr/kernels.hpp"

using namespace qbohr;

namespace {

Mat random_cols(int dim, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(dim, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

}  // namespace

TEST_CASE("parallel and serial pairwise products agree bitwise") {
  for (auto blocks : {std::vector<int>{3}, std::vector<int>{1, 2, 2},
                      std::vector<int>{1, 1, 1, 1, 2}}) {
    auto A = make_algebra(blocks);
    Mat X = random_cols(A->dim(), 7, 11);
    Mat Y = random_cols(A->dim(), 5, 23);

    Mat par = kernels::pairwise_products(*A, X, Y);
    Mat ser = kernels::serial::pairwise_products(*A, X, Y);
    CHECK(par.rows() == A->dim());
    CHECK(par.cols() == X.cols() * Y.cols());
    // identical per-column arithmetic, so the results must match exactly
    CHECK((par.array() == ser.array()).all());
  }
}

TEST_CASE("parallel and serial columnwise products and star agree bitwise") {
  auto A = make_algebra({2, 3});
  Mat X = random_cols(A->dim(), 9, 5);
  Mat Y = random_cols(A->dim(), 9, 6);

  Mat cp = kernels::columnwise_products(*A, X, Y);
  Mat cs = kernels::serial::columnwise_products(*A, X, Y);
  CHECK((cp.array() == cs.array()).all());

  Mat sp = kernels::star_batch(*A, X);
  Mat ss = kernels::serial::star_batch(*A, X);
  CHECK((sp.array() == ss.array()).all());
}

TEST_CASE("pairwise column ordering") {
  auto A = make_algebra({1, 1});
  Mat X = Mat::Zero(2, 2);
  X(0, 0) = 1.0;
  X(1, 1) = 1.0;
  Mat Y = Mat::Identity(2, 2);
  Mat P = kernels::pairwise_products(*A, X, Y);
  // column i*Y.cols()+j holds the product of X.col(i) and Y.col(j)
  CHECK(P(0, 0) == Complex(1.0));
  CHECK(max_abs(Mat(P.col(1))) == doctest::Approx(0.0));
  CHECK(P(1, 3) == Complex(1.0));
}

TEST_CASE("kernels match elementwise operations") {
  auto A = make_algebra({2});
  Mat X = random_cols(A->dim(), 4, 77);
  Mat Y = random_cols(A->dim(), 4, 78);
  Mat S = kernels::star_batch(*A, X);
  Mat C = kernels::columnwise_products(*A, X, Y);
  for (int j = 0; j < X.cols(); ++j) {
    AlgebraElement x = element(A, X.col(j));
    AlgebraElement y = element(A, Y.col(j));
    CHECK(max_abs(Mat(S.col(j) - star(x).coords)) == doctest::Approx(0.0));
    CHECK(max_abs(Mat(C.col(j) - multiply(x, y).coords)) == doctest::Approx(0.0));
  }
}

TEST_CASE("kernels reject mismatched shapes") {
  auto A = make_algebra({2});
  Mat bad = Mat::Zero(3, 1);
  Mat ok = Mat::Zero(4, 2);
  CHECK_THROWS_AS(kernels::star_batch(*A, bad), InputError);
  CHECK_THROWS_AS(kernels::pairwise_products(*A, bad, bad), InputError);
  CHECK_THROWS_AS(kernels::columnwise_products(*A, ok, Mat::Zero(4, 3)),
                  InputError);
}
