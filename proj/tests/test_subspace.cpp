#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbohr/catalog.hpp"
#include "qbohr/subspace.hpp"
#include "qbohr/wedderburn.hpp"

using namespace qbohr;

TEST_CASE("subspace_from_span orthonormalizes and drops dependent columns") {
  auto A = make_algebra({2});
  Mat span(4, 3);
  span.col(0) = basis_element(A, 0).coords;
  span.col(1) = basis_element(A, 0).coords * Complex(2.0);
  span.col(2) = basis_element(A, 3).coords;
  Subspace S = subspace_from_span(A, span);
  CHECK(S.rank() == 2);
  CHECK(max_abs(S.basis.adjoint() * S.basis - Mat::Identity(2, 2)) < 1e-12);
  CHECK(S.contains(basis_element(A, 0)));
  CHECK(!S.contains(basis_element(A, 1)));
  CHECK(S.distance(basis_element(A, 1)) == doctest::Approx(1.0));
}

TEST_CASE("span_closure generates the unital star subalgebra") {
  auto A = make_algebra({2});
  // a single off-diagonal matrix unit generates all of M_2:
  // e01, e01* = e10, products give e00 and e11
  Subspace S = span_closure({basis_element(A, A->index_of(0, 0, 1))}, A);
  CHECK(S.rank() == 4);

  // a diagonal projection only generates its own commutant corner
  Subspace D = span_closure({basis_element(A, A->index_of(0, 0, 0))}, A);
  CHECK(D.rank() == 2);  // span{e00, 1}
  CHECK(D.contains(unit(A)));

  // closure is idempotent: feeding the basis back changes nothing
  std::vector<AlgebraElement> gens;
  for (int c = 0; c < D.basis.cols(); ++c) gens.push_back(element(A, D.basis.col(c)));
  Subspace D2 = span_closure(gens, A);
  CHECK(D2.rank() == D.rank());
  CHECK(max_abs(D2.projector() - D.projector()) < 1e-10);
}

TEST_CASE("wedderburn decomposes the group algebra span of S3") {
  // span of the left regular permutation matrices inside M_6
  GroupTable t = symmetric_group_3();
  auto M6 = make_algebra({6});
  std::vector<AlgebraElement> perms;
  for (int x = 0; x < 6; ++x) {
    AlgebraElement p = zero_element(M6);
    Mat pm = Mat::Zero(6, 6);
    for (int g = 0; g < 6; ++g) pm(t.table[x][g], g) = 1.0;
    set_block(p, 0, pm);
    perms.push_back(p);
  }
  Subspace S = span_closure(perms, M6);
  CHECK(S.rank() == 6);

  WedderburnResult W = wedderburn_decompose(S);
  CHECK(W.algebra->blocks() == std::vector<int>{1, 1, 2});
  CHECK(W.iso.source->dim() == 6);
  // iso is a star-isomorphism onto the span
  Verdict v = check_star_homomorphism(W.iso);
  CHECK((bool)v);
  CHECK(v.defect < 1e-9);
  CHECK(numeric_rank(W.iso.matrix) == 6);
}

TEST_CASE("wedderburn rejects a non-subalgebra") {
  auto A = make_algebra({2});
  // span{e01} is not closed under star or products
  Mat span = basis_element(A, A->index_of(0, 0, 1)).coords;
  Subspace S = subspace_from_span(A, span);
  CHECK_THROWS_AS(wedderburn_decompose(S), NotASubalgebra);
}

TEST_CASE("wedderburn of a full matrix algebra is the identity shape") {
  auto A = make_algebra({1, 2});
  Subspace S = subspace_from_span(A, Mat::Identity(5, 5));
  WedderburnResult W = wedderburn_decompose(S);
  CHECK(W.algebra->blocks() == std::vector<int>{1, 2});
}
