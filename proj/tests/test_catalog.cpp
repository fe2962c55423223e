#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbohr/catalog.hpp"
#include "qbohr/qsg.hpp"

using namespace qbohr;

TEST_CASE("group tables") {
  for (int n : {1, 2, 5}) CHECK((bool)check_group(cyclic_group(n)));
  GroupTable s3 = symmetric_group_3();
  CHECK((bool)check_group(s3));
  CHECK(s3.order == 6);
  CHECK(s3.identity == 0);
  // non abelian witness
  bool abelian = true;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      if (s3.table[x][y] != s3.table[y][x]) abelian = false;
  CHECK(!abelian);

  GroupTable broken = cyclic_group(3);
  broken.table[1][1] = 1;  // kills cancellativity
  Verdict v = check_group(broken);
  CHECK(!(bool)v);
  CHECK(!v.witness.empty());
}

TEST_CASE("characters") {
  auto c2 = characters(cyclic_group(2));
  CHECK(c2.size() == 2);
  auto c4 = characters(cyclic_group(4));
  CHECK(c4.size() == 4);
  // characters multiply along the table
  GroupTable t = cyclic_group(4);
  for (const auto& ch : c4)
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        CHECK(std::abs(ch[x] * ch[y] - ch[t.table[x][y]]) < 1e-12);

  // S3 has exactly the trivial and the sign character
  auto cs3 = characters(symmetric_group_3());
  CHECK(cs3.size() == 2);
}

TEST_CASE("function algebra is a commutative compact quantum group") {
  auto G = function_algebra(symmetric_group_3());
  CHECK(G->algebra()->blocks() == std::vector<int>(6, 1));
  CHECK(is_compact_quantum_group(*G));
}

TEST_CASE("group algebra carries the diagonal comultiplication") {
  GroupAlgebra GA = group_algebra(symmetric_group_3());
  CHECK(GA.qsg->algebra()->blocks() == std::vector<int>{1, 1, 2});
  CHECK(GA.group_likes.size() == 6);
  // each transported basis element u_x is group like: D(u_x) = u_x (x) u_x
  TensorIndexer idx(GA.qsg->algebra(), GA.qsg->algebra());
  for (const auto& u : GA.group_likes) {
    AlgebraElement lhs = GA.qsg->delta().apply(u);
    AlgebraElement rhs = tensor_elem(idx, u, u);
    CHECK(norm_inf(lhs - rhs) < 1e-9);
  }
  // u_x are unitary and multiply along the group
  GroupTable t = symmetric_group_3();
  for (int x = 0; x < 6; ++x) {
    CHECK(norm_inf(multiply(GA.group_likes[x], star(GA.group_likes[x])) -
                   unit(GA.qsg->algebra())) < 1e-9);
    for (int y = 0; y < 6; ++y)
      CHECK(norm_inf(multiply(GA.group_likes[x], GA.group_likes[y]) -
                     GA.group_likes[t.table[x][y]]) < 1e-9);
  }
  CHECK(is_compact_quantum_group(*GA.qsg));
}

TEST_CASE("the eight dimensional entry is neither commutative nor cocommutative") {
  auto KP = catalog_find("kac_paljutkin")->qsg;
  auto A = KP->algebra();
  CHECK(A->blocks() == std::vector<int>{1, 1, 1, 1, 2});

  // noncommutative: the 2x2 corner units do not commute
  AlgebraElement a12 = basis_element(A, A->index_of(4, 0, 1));
  AlgebraElement a21 = basis_element(A, A->index_of(4, 1, 0));
  CHECK(norm_inf(multiply(a12, a21) - multiply(a21, a12)) > 0.5);

  // noncocommutative: flipping the legs changes the comultiplication
  TensorIndexer idx(A, A);
  double flip_defect = 0.0;
  for (int c = 0; c < A->dim(); ++c) {
    Vec d = KP->delta().matrix.col(c);
    Vec flipped = Vec::Zero(d.size());
    for (int a = 0; a < A->dim(); ++a)
      for (int b = 0; b < A->dim(); ++b) flipped(idx(b, a)) = d(idx(a, b));
    flip_defect = std::max(flip_defect, max_abs(Mat(d - flipped)));
  }
  CHECK(flip_defect > 0.5);

  CHECK(is_compact_quantum_group(*KP));
}

TEST_CASE("catalog enumeration") {
  auto& entries = catalog();
  CHECK(entries.size() == 8);
  CHECK(catalog_find("c_z2") != nullptr);
  CHECK(catalog_find("no_such_entry") == nullptr);
  for (const auto& e : entries) {
    CHECK(!e.description.empty());
    CHECK(e.qsg != nullptr);
    CHECK(e.quantum_group == (bool)is_compact_quantum_group(*e.qsg));
  }
}

TEST_CASE("the left trivial fixture is the advertised counterexample") {
  auto F = catalog_find("left_trivial_fixture")->qsg;
  TensorIndexer idx(F->algebra(), F->algebra());
  // Delta(e_a) = e_a (x) 1
  for (int a = 0; a < 2; ++a) {
    AlgebraElement lhs = F->delta().apply(basis_element(F->algebra(), a));
    AlgebraElement rhs =
        tensor_elem(idx, basis_element(F->algebra(), a), unit(F->algebra()));
    CHECK(norm_inf(lhs - rhs) < 1e-12);
  }
}
