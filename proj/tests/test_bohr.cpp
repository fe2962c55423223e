#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbohr/bohr.hpp"
#include "qbohr/catalog.hpp"

using namespace qbohr;

namespace {

RepMatrix sign_rep(const QsgPtr& CfS3) {
  auto chars = characters(symmetric_group_3());
  for (const auto& ch : chars) {
    bool trivial = true;
    for (auto v : ch)
      if (std::abs(v - Complex(1.0)) > 1e-9) trivial = false;
    if (!trivial) {
      Vec c(6);
      for (int i = 0; i < 6; ++i) c(i) = ch[i];
      return one_dim_rep(element(CfS3->algebra(), c));
    }
  }
  throw Error("sign character not found");
}

// pullback of the sign homomorphism S3 -> Z2 as a map C(Z2) -> C(S3)
LinearMap sign_pullback(const QsgPtr& Z2, const QsgPtr& CfS3) {
  RepMatrix s = sign_rep(CfS3);
  Mat M = Mat::Zero(6, 2);
  const Vec& sgn = s.entry(0, 0).coords;
  for (int p = 0; p < 6; ++p) {
    int parity = std::abs(sgn(p) - Complex(1.0)) < 1e-9 ? 0 : 1;
    M(p, parity) = 1.0;
  }
  return make_map(Z2->algebra(), CfS3->algebra(), M);
}

}  // namespace

TEST_CASE("present_subalgebra on a closed carrier") {
  auto CfS3 = catalog_find("c_s3")->qsg;
  RepMatrix s = sign_rep(CfS3);
  Subspace S = span_closure({unit(CfS3->algebra()), s.entry(0, 0)}, CfS3->algebra());
  REQUIRE(S.rank() == 2);
  SubQuantumGroup B = present_subalgebra(*CfS3, S);
  CHECK(B.presented->algebra()->blocks() == std::vector<int>{1, 1});
  // chi is a unital star homomorphism landing exactly on the carrier
  CHECK((bool)check_star_homomorphism(B.chi));
  for (int c = 0; c < 2; ++c)
    CHECK(S.contains(element(CfS3->algebra(), B.chi.matrix.col(c))));
  // and intertwines the comultiplications
  CHECK((bool)check_qsg_morphism(B.chi, *B.presented, *CfS3));
}

TEST_CASE("carrier must be closed under the comultiplication") {
  auto G = catalog_find("cstar_s3")->qsg;
  // the unital subalgebra spanned by 1 and a central projection of the
  // 2x2 block is closed under products but its delta leaves the span
  auto A = G->algebra();
  AlgebraElement p = zero_element(A);
  set_block(p, 2, Mat::Identity(2, 2));
  Subspace S = span_closure({p}, A);
  REQUIRE(S.rank() == 2);
  CHECK_THROWS_AS(present_subalgebra(*G, S), ClosureEscapesDelta);
}

TEST_CASE("bohr of the sign character is the two point group") {
  auto CfS3 = catalog_find("c_s3")->qsg;
  SubQuantumGroup B = bohr_from_reps(*CfS3, {sign_rep(CfS3)});
  CHECK(B.carrier.rank() == 2);
  CHECK(B.presented->dim() == 2);
  CHECK(is_compact_quantum_group(*B.presented));
  // generators: the pushed unitarized seed and its conjugate
  CHECK(B.generators.size() == 2);
  for (const auto& g : B.generators) {
    CHECK((bool)is_corep(g, *B.presented));
    CHECK((bool)is_unitary_rep(g));
  }
}

TEST_CASE("full seed recovers the whole compact quantum group") {
  for (const char* name : {"kac_paljutkin", "cstar_s3"}) {
    auto G = catalog_find(name)->qsg;
    SubQuantumGroup B = bohr_from_reps(*G, {regular_corep(*G)});
    CHECK(B.carrier.rank() == G->dim());
    CHECK(B.presented->algebra()->blocks() == G->algebra()->blocks());
    // chi is then a bijective morphism of quantum semigroups
    CHECK(numeric_rank(B.chi.matrix) == G->dim());
    CHECK((bool)check_qsg_morphism(B.chi, *B.presented, *G));
  }
}

TEST_CASE("empty seed gives the trivial group") {
  auto G = catalog_find("cstar_s3")->qsg;
  SubQuantumGroup B = bohr_from_reps(*G, {});
  CHECK(B.carrier.rank() == 1);
  CHECK(B.presented->dim() == 1);
  HopfStructure h = hopf_structure(B);
  CHECK((bool)h.verified);
}

TEST_CASE("bohr is monotone and idempotent in the seed") {
  auto CfS3 = catalog_find("c_s3")->qsg;
  RepMatrix s = sign_rep(CfS3);
  SubQuantumGroup B1 = bohr_from_reps(*CfS3, {s});
  SubQuantumGroup B2 = bohr_from_reps(*CfS3, {s, regular_corep(*CfS3)});
  for (int c = 0; c < B1.carrier.basis.cols(); ++c)
    CHECK(B2.carrier.contains(element(CfS3->algebra(), B1.carrier.basis.col(c))));
  CHECK(B2.carrier.rank() == 6);

  // re-seeding with the generators of B1 reproduces the same carrier
  std::vector<RepMatrix> up;
  for (const auto& g : B1.generators) {
    RepMatrix r = make_rep(CfS3->algebra(), g.size);
    for (int k = 0; k < g.size; ++k)
      for (int l = 0; l < g.size; ++l) r.set_entry(k, l, B1.chi.apply(g.entry(k, l)));
    up.push_back(r);
  }
  SubQuantumGroup B1r = bohr_from_reps(*CfS3, up);
  CHECK(max_abs(B1r.carrier.projector() - B1.carrier.projector()) < 1e-9);
}

TEST_CASE("non admissible seeds are rejected") {
  auto Z2 = catalog_find("c_z2")->qsg;
  auto A = Z2->algebra();
  RepMatrix Z = make_rep(A, 1);
  Z.set_entry(0, 0, zero_element(A));
  CHECK_THROWS_AS(bohr_from_reps(*Z2, {Z}), NonAdmissibleSeed);
}

TEST_CASE("hopf structure on compactified outputs") {
  auto CfS3 = catalog_find("c_s3")->qsg;
  SubQuantumGroup B = bohr_from_reps(*CfS3, {sign_rep(CfS3)});
  HopfStructure H = hopf_structure(B);
  CHECK((bool)H.verified);
  CHECK(H.verified.defect < 1e-8);
  // antipode is involutive here (the group is abelian)
  CHECK(max_abs(H.antipode.matrix * H.antipode.matrix - Mat::Identity(2, 2)) < 1e-9);
  // counit is a character: e(xy) = e(x)e(y) on basis products
  auto P = B.presented->algebra();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Complex lhs = apply(H.counit, multiply(basis_element(P, a), basis_element(P, b)));
      Complex rhs = H.counit.covector(a) * H.counit.covector(b);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("hopf structure of the full eight dimensional entry") {
  auto KP = catalog_find("kac_paljutkin")->qsg;
  SubQuantumGroup B = bohr_from_reps(*KP, {regular_corep(*KP)});
  CHECK(B.carrier.rank() == 8);
  HopfStructure H = hopf_structure(B);
  CHECK((bool)H.verified);
  CHECK(H.verified.defect < 1e-8);
  CHECK(max_abs(H.antipode.matrix * H.antipode.matrix - Mat::Identity(8, 8)) < 1e-8);
}

TEST_CASE("universal factorization through the bohr quotient") {
  auto CfS3 = catalog_find("c_s3")->qsg;
  auto Z2 = catalog_find("c_z2")->qsg;
  LinearMap phi = sign_pullback(Z2, CfS3);
  REQUIRE((bool)check_qsg_morphism(phi, *Z2, *CfS3));

  SubQuantumGroup B = bohr_from_reps(*CfS3, {sign_rep(CfS3)});
  LinearMap bphi = factor_through_bohr(phi, *Z2, B);
  CHECK(rel_defect(B.chi.matrix * bphi.matrix, phi.matrix) < 1e-9);
  CHECK((bool)check_qsg_morphism(bphi, *Z2, *B.presented));
  // chi has full column rank, so the factorization is unique
  CHECK(numeric_rank(B.chi.matrix) == B.chi.matrix.cols());

  // a compact target whose image escapes the carrier cannot factor
  SubQuantumGroup Btriv = bohr_from_reps(*CfS3, {});
  CHECK_THROWS_AS(factor_through_bohr(phi, *Z2, Btriv), RangeEscapesCarrier);
}

TEST_CASE("compactification is functorial") {
  auto CfS3 = catalog_find("c_s3")->qsg;
  auto Z2 = catalog_find("c_z2")->qsg;
  LinearMap phi = sign_pullback(Z2, CfS3);
  SubQuantumGroup B = bohr_from_reps(*CfS3, {sign_rep(CfS3)});

  // identity law
  LinearMap bid = compactify_morphism(identity_map(CfS3->algebra()), B, B);
  CHECK(rel_defect(bid.matrix, Mat::Identity(2, 2)) < 1e-9);

  // composition law against conjugation by a transposition
  GroupTable s3 = symmetric_group_3();
  int t = 2;
  Mat M = Mat::Zero(6, 6);
  for (int h = 0; h < 6; ++h) M(s3.table[t][s3.table[h][t]], h) = 1.0;
  LinearMap psi = make_map(CfS3->algebra(), CfS3->algebra(), M);
  REQUIRE((bool)check_qsg_morphism(psi, *CfS3, *CfS3));

  SubQuantumGroup BZ2 = bohr_from_reps(*Z2, {regular_corep(*Z2)});
  LinearMap b1 = compactify_morphism(phi, BZ2, B);
  LinearMap b2 = compactify_morphism(psi, B, B);
  LinearMap bc = compactify_morphism(compose(psi, phi), BZ2, B);
  CHECK(rel_defect(bc.matrix, b2.matrix * b1.matrix) < 1e-9);
}
