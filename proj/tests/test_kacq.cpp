#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbohr/catalog.hpp"
#include "qbohr/kacq.hpp"

using namespace qbohr;

TEST_CASE("tracial state families") {
  auto A = make_algebra({1, 2});
  StateFamily F = tracial_state_family(A);
  // extreme traces: one per block
  CHECK(F.members.size() == 2);
  for (const auto& t : F.members) {
    CHECK(t.positive);
    CHECK(t.tracial);
    CHECK(t.normalized);
  }

  // restricted families reject non traces
  RowVec v = RowVec::Zero(5);
  v(A->index_of(1, 0, 0)) = 1.0;  // vector state on the 2x2 block
  CHECK_THROWS_AS(tracial_state_family(A, {make_functional(A, v)}), NotTracial);
}

TEST_CASE("null ideal of the full family is zero") {
  for (const auto& entry : catalog()) {
    auto A = entry.qsg->algebra();
    Subspace J = null_ideal(A, tracial_state_family(A));
    CHECK(J.rank() == 0);
  }
}

TEST_CASE("null ideal of a point evaluation on C(Z2)") {
  auto G = catalog_find("c_z2")->qsg;
  RowVec ev = RowVec::Zero(2);
  ev(0) = 1.0;  // evaluation at the identity
  StateFamily F = tracial_state_family(G->algebra(), {make_functional(G->algebra(), ev)});
  Subspace J = null_ideal(G->algebra(), F);
  CHECK(J.rank() == 1);
  CHECK(J.contains(basis_element(G->algebra(), 1)));
}

TEST_CASE("full family quotient is the identity on every catalog entry") {
  for (const auto& entry : catalog()) {
    QuotientResult R = kac_quotient(*entry.qsg, tracial_state_family(entry.qsg->algebra()));
    CHECK(R.ideal.rank() == 0);
    CHECK(R.quotient_algebra->blocks() == entry.qsg->algebra()->blocks());
    CHECK((bool)R.descends);
    CHECK(numeric_rank(R.projection.matrix) == entry.qsg->dim());
    // quotient comultiplication is carried over unchanged
    CHECK(max_abs(R.quotient->delta().matrix - entry.qsg->delta().matrix) < 1e-10);
    if (entry.quantum_group) {
      CHECK((bool)R.cqg);
      CHECK((bool)R.kac);
    }
  }
}

TEST_CASE("quotient by the identity evaluation descends to a point") {
  auto G = catalog_find("c_z2")->qsg;
  RowVec ev = RowVec::Zero(2);
  ev(0) = 1.0;
  StateFamily F = tracial_state_family(G->algebra(), {make_functional(G->algebra(), ev)});
  QuotientResult R = kac_quotient(*G, F);
  CHECK(R.ideal.rank() == 1);
  CHECK(R.quotient_algebra->dim() == 1);
  CHECK((bool)R.descends);
  // one dimensional target: not a compact quantum group quotient claim,
  // but the projection must be a unital star homomorphism
  CHECK((bool)check_star_homomorphism(R.projection));
}

TEST_CASE("quotient that does not intertwine the comultiplication") {
  auto G = catalog_find("c_z2")->qsg;
  RowVec ev = RowVec::Zero(2);
  ev(1) = 1.0;  // evaluation at the non identity point
  StateFamily F = tracial_state_family(G->algebra(), {make_functional(G->algebra(), ev)});
  QuotientResult R = kac_quotient(*G, F);
  CHECK(R.ideal.rank() == 1);
  CHECK(!(bool)R.descends);
  CHECK(!R.descends.witness.empty());
}

TEST_CASE("restricted family on the eight dimensional entry") {
  // the haar state alone is faithful there, so the quotient is everything
  auto KP = catalog_find("kac_paljutkin")->qsg;
  StateFunctional h = haar_state(*KP);
  StateFamily F = tracial_state_family(KP->algebra(), {h});
  QuotientResult R = kac_quotient(*KP, F);
  CHECK(R.ideal.rank() == 0);
  CHECK((bool)R.descends);
  CHECK((bool)R.kac);
}

TEST_CASE("convolution of tracial states is tracial") {
  auto G = catalog_find("cstar_s3")->qsg;
  StateFamily F = tracial_state_family(G->algebra());
  for (const auto& a : F.members)
    for (const auto& b : F.members) {
      StateFunctional c = convolve(a, b, *G);
      CHECK(c.tracial);
      CHECK(c.positive);
    }
}

TEST_CASE("is_kac_type on catalog groups") {
  for (const char* n : {"c_z2", "c_z3", "c_s3", "cstar_s3", "kac_paljutkin"}) {
    Verdict v = is_kac_type(*catalog_find(n)->qsg);
    CHECK((bool)v);
  }
}
