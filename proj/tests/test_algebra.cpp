#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbohr/algebra.hpp"
#include "qbohr/errors.hpp"

using namespace qbohr;

TEST_CASE("block layout and dimensions") {
  auto A = make_algebra({1, 1, 2});
  CHECK(A->dim() == 6);
  CHECK(make_algebra({1})->dim() == 1);
  CHECK(make_algebra({2, 3})->dim() == 13);

  // lex order of (block, row, col): the 2x2 block occupies flat 2..5
  auto idx = A->decode(3);
  CHECK(idx.block == 2);
  CHECK(idx.row == 0);
  CHECK(idx.col == 1);
  CHECK(A->index_of(2, 1, 1) == 5);
  CHECK(A->block_offset(2) == 2);

  CHECK_THROWS_AS(make_algebra({}), InputError);
  CHECK_THROWS_AS(make_algebra({1, 0}), InputError);
  CHECK_THROWS_AS(make_algebra({-2}), InputError);
}

TEST_CASE("matrix unit arithmetic") {
  auto A = make_algebra({2});
  // e_rs e_pq = delta_sp e_rq
  AlgebraElement e01 = basis_element(A, A->index_of(0, 0, 1));
  AlgebraElement e10 = basis_element(A, A->index_of(0, 1, 0));
  AlgebraElement e00 = basis_element(A, A->index_of(0, 0, 0));
  AlgebraElement e11 = basis_element(A, A->index_of(0, 1, 1));

  CHECK(approx_equal(multiply(e01, e10), e00));
  CHECK(approx_equal(multiply(e10, e01), e11));
  CHECK(norm_inf(multiply(e01, e01)) == doctest::Approx(0.0));

  // star is the conjugate transpose per block
  AlgebraElement x = Complex(0.0, 2.0) * e01;
  AlgebraElement xs = star(x);
  CHECK(xs.coords(A->index_of(0, 1, 0)) == Complex(0.0, -2.0));

  AlgebraElement u = unit(A);
  CHECK(approx_equal(multiply(u, x), x));
  CHECK(approx_equal(multiply(x, u), x));
}

TEST_CASE("multiplication respects the block diagonal structure") {
  auto A = make_algebra({1, 2});
  AlgebraElement scalar = basis_element(A, 0);
  AlgebraElement mat = basis_element(A, A->index_of(1, 0, 1));
  CHECK(norm_inf(multiply(scalar, mat)) == doctest::Approx(0.0));
}

TEST_CASE("invert") {
  auto A = make_algebra({2});
  Vec c = Vec::Zero(4);
  c(A->index_of(0, 0, 0)) = 2.0;
  c(A->index_of(0, 1, 1)) = Complex(0.0, 1.0);
  AlgebraElement x = element(A, c);
  AlgebraElement xi = invert(x);
  CHECK(norm_inf(multiply(x, xi) - unit(A)) < 1e-12);
  CHECK(norm_inf(multiply(xi, x) - unit(A)) < 1e-12);

  // a nilpotent element has no inverse
  AlgebraElement n = basis_element(A, A->index_of(0, 0, 1));
  CHECK_THROWS_AS(invert(n), SingularElement);
}

TEST_CASE("get_block round trip") {
  auto A = make_algebra({1, 2});
  Mat m(2, 2);
  m << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  AlgebraElement x = zero_element(A);
  set_block(x, 1, m);
  CHECK(max_abs(get_block(x, 1) - m) == doctest::Approx(0.0));
  CHECK(max_abs(get_block(x, 0)) == doctest::Approx(0.0));
}

TEST_CASE("tensor algebra and indexer") {
  auto A = make_algebra({1, 2});
  auto B = make_algebra({2});
  auto T = tensor_algebra(A, B);
  CHECK(T->blocks() == std::vector<int>{2, 4});
  CHECK(T->dim() == A->dim() * B->dim());

  TensorIndexer idx(A, B);
  // every basis pair lands on a distinct flat index
  std::vector<int> seen(T->dim(), 0);
  for (int a = 0; a < A->dim(); ++a)
    for (int b = 0; b < B->dim(); ++b) seen[idx(a, b)] += 1;
  for (int s : seen) CHECK(s == 1);

  // tensors of elements multiply factorwise
  AlgebraElement x = basis_element(A, A->index_of(1, 0, 1));
  AlgebraElement y = basis_element(B, B->index_of(0, 1, 0));
  AlgebraElement x2 = basis_element(A, A->index_of(1, 1, 1));
  AlgebraElement y2 = basis_element(B, B->index_of(0, 0, 0));
  AlgebraElement lhs = multiply(tensor_elem(idx, x, y), tensor_elem(idx, x2, y2));
  AlgebraElement rhs = tensor_elem(idx, multiply(x, x2), multiply(y, y2));
  CHECK(approx_equal(lhs, rhs));

  // the unit tensors to the unit
  CHECK(approx_equal(tensor_elem(idx, unit(A), unit(B)), unit(T)));

  // star acts factorwise
  CHECK(approx_equal(star(tensor_elem(idx, x, y)),
                     tensor_elem(idx, star(x), star(y))));
}

TEST_CASE("tensor index convention is associative") {
  // ((A (x) B) (x) C) and (A (x) (B (x) C)) must give the same flat index
  // for every basis triple, so nested tensor coordinates can be compared
  // literally.
  auto A = make_algebra({1, 2});
  auto B = make_algebra({2});
  auto C = make_algebra({1, 1});
  TensorIndexer iAB(A, B), iBC(B, C);
  TensorIndexer iL(iAB.tensor(), C), iR(A, iBC.tensor());
  CHECK(iL.tensor()->blocks() == iR.tensor()->blocks());
  for (int a = 0; a < A->dim(); ++a)
    for (int b = 0; b < B->dim(); ++b)
      for (int c = 0; c < C->dim(); ++c)
        CHECK(iL(iAB(a, b), c) == iR(a, iBC(b, c)));
}

TEST_CASE("parent mismatch is rejected") {
  auto A = make_algebra({2});
  auto B = make_algebra({3});
  CHECK_THROWS_AS(multiply(basis_element(A, 0), basis_element(B, 0)),
                  ParentMismatch);
  CHECK_THROWS_AS(element(A, Vec::Zero(3)), InputError);
}
