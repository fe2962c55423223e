#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbohr/catalog.hpp"
#include "qbohr/qsg.hpp"

using namespace qbohr;

TEST_CASE("constructor validates the comultiplication") {
  auto A = make_algebra({1, 1});
  auto T = tensor_algebra(A, A);
  // garbage map: not a star homomorphism
  Mat bad = Mat::Zero(4, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(QuantumSemigroup(A, make_map(A, T, bad)), InvalidComultiplication);

  // flip of the group law of Z2 is fine (it is the same map), but a
  // coassociativity violation must be caught: use the Z3 law with one
  // column replaced by its square
  auto Z3 = catalog_find("c_z3")->qsg;
  Mat D = Z3->delta().matrix;
  Mat D2 = D;
  D2.col(1) = D.col(2);
  D2.col(2) = D.col(1);
  CHECK_THROWS_AS(
      QuantumSemigroup(Z3->algebra(), make_map(Z3->algebra(), Z3->tensor(), D2)),
      InvalidComultiplication);
}

TEST_CASE("cancellation separates groups from one-sided semigroups") {
  auto G = catalog_find("c_z2")->qsg;
  auto [left, right] = check_cancellation(*G);
  CHECK((bool)left);
  CHECK((bool)right);
  CHECK(is_compact_quantum_group(*G));

  // Delta(a) = a (x) 1 satisfies left but not right cancellation
  auto F = catalog_find("left_trivial_fixture")->qsg;
  auto [fl, fr] = check_cancellation(*F);
  CHECK((bool)fl);
  CHECK(!(bool)fr);
  CHECK(fr.witness.find("right") != std::string::npos);
  CHECK(!is_compact_quantum_group(*F));
}

TEST_CASE("haar state of cyclic function algebras is uniform") {
  for (int n : {2, 3, 4, 6}) {
    auto G = function_algebra(cyclic_group(n));
    StateFunctional h = haar_state(*G);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(h.covector(i) - Complex(1.0 / n)) < 1e-9);
    CHECK(h.positive);
    CHECK(h.tracial);
    CHECK(h.normalized);
  }
}

TEST_CASE("haar state of the S3 group algebra") {
  // in matrix-unit coordinates of C[1,1,2] the transported group trace
  // u_x -> delta_{x,e} becomes the weighted sum of normalized block traces
  auto G = catalog_find("cstar_s3")->qsg;
  StateFunctional h = haar_state(*G);
  Vec expect(6);
  expect << 1.0 / 6, 1.0 / 6, 1.0 / 3, 0.0, 0.0, 1.0 / 3;
  CHECK(max_abs(Mat(h.covector.transpose() - expect.transpose())) < 1e-8);
  CHECK(h.tracial);
}

TEST_CASE("haar state of the eight dimensional catalog entry") {
  auto G = catalog_find("kac_paljutkin")->qsg;
  StateFunctional h = haar_state(*G);
  Vec expect(8);
  expect << 0.125, 0.125, 0.125, 0.125, 0.25, 0.0, 0.0, 0.25;
  CHECK(max_abs(Mat(h.covector.transpose() - expect.transpose())) < 1e-9);
  CHECK(h.positive);
  CHECK(h.tracial);
}

TEST_CASE("haar fails without two sided invariance") {
  CHECK_THROWS_AS(haar_state(*catalog_find("left_trivial_fixture")->qsg),
                  NoSolution);
}

TEST_CASE("convolution") {
  auto G = catalog_find("c_z4")->qsg;
  // point evaluations convolve like the group law: ev_a * ev_b = ev_{a+b}
  auto ev = [&](int g) {
    RowVec c = RowVec::Zero(4);
    c(g) = 1.0;
    return make_functional(G->algebra(), c);
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      StateFunctional p = convolve(ev(a), ev(b), *G);
      CHECK(max_abs(Mat(p.covector - ev((a + b) % 4).covector)) < 1e-12);
    }

  // haar is idempotent and absorbing
  StateFunctional h = haar_state(*G);
  CHECK(max_abs(Mat(convolve(h, h, *G).covector - h.covector)) < 1e-12);
  CHECK(max_abs(Mat(convolve(ev(3), h, *G).covector - h.covector)) < 1e-12);
}

TEST_CASE("state functional flags") {
  auto A = make_algebra({2});
  // trace/2 is positive, tracial, normalized
  RowVec tr = RowVec::Zero(4);
  tr(A->index_of(0, 0, 0)) = 0.5;
  tr(A->index_of(0, 1, 1)) = 0.5;
  StateFunctional t = make_functional(A, tr);
  CHECK(t.positive);
  CHECK(t.tracial);
  CHECK(t.normalized);

  // a vector state <e0, . e0> is positive but not tracial on M_2
  RowVec v = RowVec::Zero(4);
  v(A->index_of(0, 0, 0)) = 1.0;
  StateFunctional s = make_functional(A, v);
  CHECK(s.positive);
  CHECK(!s.tracial);

  // e00 - e11 coefficient pattern is not positive
  RowVec w = RowVec::Zero(4);
  w(A->index_of(0, 0, 0)) = 1.0;
  w(A->index_of(0, 1, 1)) = -1.0;
  CHECK(!make_functional(A, w).positive);
}

TEST_CASE("qsg morphism checker") {
  auto Z2 = catalog_find("c_z2")->qsg;
  auto Z4 = catalog_find("c_z4")->qsg;
  // pullback of the surjection Z4 -> Z2, x -> x mod 2
  Mat M = Mat::Zero(4, 2);
  for (int x = 0; x < 4; ++x) M(x, x % 2) = 1.0;
  Verdict good = check_qsg_morphism(make_map(Z2->algebra(), Z4->algebra(), M), *Z2, *Z4);
  CHECK((bool)good);
  CHECK(good.defect < 1e-12);

  // a coordinate shuffle that is not dual to a homomorphism fails
  Mat B = Mat::Zero(4, 2);
  B(0, 0) = 1.0;
  B(1, 1) = 1.0;
  B(2, 0) = 1.0;
  B(3, 0) = 1.0;
  Verdict bad = check_qsg_morphism(make_map(Z2->algebra(), Z4->algebra(), B), *Z2, *Z4);
  CHECK(!(bool)bad);
  CHECK(!bad.witness.empty());
}

TEST_CASE("same_qsg") {
  auto G = catalog_find("c_z2")->qsg;
  auto H = function_algebra(cyclic_group(2));
  CHECK(same_qsg(*G, *H));
  CHECK(!same_qsg(*G, *catalog_find("c_z3")->qsg));
}
