#pragma once

#include <string>
#include <vector>

#include "qbohr/corep.hpp"

namespace qbohr {

/// A finite group given by its multiplication table: table[x][y] is the
/// index of x*y, identity is the index of the neutral element.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group_3();

/// Full group-axiom check (closure, associativity, identity, inverses).
Verdict check_group(const GroupTable& t);

/// All homomorphisms G -> C^x, each returned as its value vector indexed
/// by group element. Brute force over roots of unity of order dividing
/// |G| — fine at catalog scale.
std::vector<std::vector<Complex>> characters(const GroupTable& t);

/// The function algebra C(G): blocks all 1, Delta dualizing the group
/// multiplication, Delta(d_g) = sum_{xy=g} d_x (x) d_y. Throws NotAGroup.
QsgPtr function_algebra(const GroupTable& t);

/// The group *-algebra C*(G) in block form, found numerically from the
/// regular representation, together with the group-like images U_x
/// (Delta(U_x) = U_x (x) U_x).
struct GroupAlgebra {
  QsgPtr qsg;
  std::vector<AlgebraElement> group_likes;  // U_x, indexed by group element
};

GroupAlgebra group_algebra(const GroupTable& t, unsigned seed = 0);

/// The 8-dimensional Kac-Paljutkin quantum group: blocks [1,1,1,1,2],
/// neither commutative nor cocommutative. Structure constants are
/// hard-coded; constructor validation is the correctness gate.
QsgPtr kac_paljutkin();

/// Counterexample fixture: Delta(a) = a (x) 1 on C^2. A valid quantum
/// semigroup that fails right cancellation (not a compact quantum group).
QsgPtr left_trivial_fixture();

/// The 1 x 1 representation [g] of a (candidate) group-like element.
RepMatrix one_dim_rep(const AlgebraElement& g);

struct CatalogEntry {
  std::string name;
  std::string description;
  QsgPtr qsg;
  bool quantum_group;  // expected is_compact_quantum_group verdict
};

/// Built-in examples: c_z2, c_z3, c_z4, c_z6, c_s3, cstar_s3,
/// kac_paljutkin, left_trivial_fixture. Built once, cached.
const std::vector<CatalogEntry>& catalog();

/// Lookup by name; nullptr when absent.
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace qbohr
