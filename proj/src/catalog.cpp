#include "qbohr/catalog.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "qbohr/subspace.hpp"
#include "qbohr/wedderburn.hpp"

namespace qbohr {

GroupTable cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  GroupTable t;
  t.order = n;
  t.identity = 0;
  t.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.table[x][y] = (x + y) % n;
  return t;
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order; composition
  // (p*q)(x) = p(q(x)).
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                    {0, 2, 1},
                                                    {1, 0, 2},
                                                    {1, 2, 0},
                                                    {2, 0, 1},
                                                    {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    throw Error("permutation lookup failed");
  };
  GroupTable t;
  t.order = 6;
  t.identity = 0;
  t.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      t.table[a][b] = index_of(comp);
    }
  return t;
}

Verdict check_group(const GroupTable& t) {
  const int n = t.order;
  if (n < 1 || static_cast<int>(t.table.size()) != n)
    return Verdict::fail("multiplication table has wrong shape");
  for (const auto& row : t.table) {
    if (static_cast<int>(row.size()) != n)
      return Verdict::fail("multiplication table has wrong shape");
    for (int v : row)
      if (v < 0 || v >= n)
        return Verdict::fail("multiplication table entry out of range");
  }
  if (t.identity < 0 || t.identity >= n)
    return Verdict::fail("identity index out of range");
  for (int x = 0; x < n; ++x)
    if (t.table[t.identity][x] != x || t.table[x][t.identity] != x)
      return Verdict::fail("designated identity is not neutral");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.table[t.table[x][y]][z] != t.table[x][t.table[y][z]])
          return Verdict::fail("multiplication is not associative");
  for (int x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < n; ++y)
      if (t.table[x][y] == t.identity && t.table[y][x] == t.identity)
        has_inverse = true;
    if (!has_inverse)
      return Verdict::fail("element " + std::to_string(x) + " has no inverse");
  }
  return Verdict::ok();
}

std::vector<std::vector<Complex>> characters(const GroupTable& t) {
  const int n = t.order;
  // A homomorphism into the circle takes values in the n-th roots of unity;
  // search exponent tuples k with k[xy] = k[x] + k[y] (mod n).
  std::vector<std::vector<int>> hits;
  std::vector<int> k(n, 0);
  auto consistent = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((k[x] + k[y]) % n != k[t.table[x][y]]) return false;
    return true;
  };
  // Depth-first over non-identity elements with full verification at leaves
  // (catalog groups are tiny).
  std::vector<int> slots;
  for (int g = 0; g < n; ++g)
    if (g != t.identity) slots.push_back(g);
  auto rec = [&](auto&& self, size_t at) -> void {
    if (at == slots.size()) {
      if (consistent()) hits.push_back(k);
      return;
    }
    for (int v = 0; v < n; ++v) {
      k[slots[at]] = v;
      self(self, at + 1);
    }
  };
  rec(rec, 0);

  std::vector<std::vector<Complex>> out;
  out.reserve(hits.size());
  for (const auto& expo : hits) {
    std::vector<Complex> values(n);
    for (int g = 0; g < n; ++g)
      values[g] = std::polar(1.0, 2.0 * std::numbers::pi * expo[g] / n);
    out.push_back(std::move(values));
  }
  return out;
}

QsgPtr function_algebra(const GroupTable& t) {
  const Verdict grp = check_group(t);
  if (!grp) throw NotAGroup(grp.witness);
  const int n = t.order;
  AlgebraPtr A = make_algebra(std::vector<int>(n, 1));
  const TensorIndexer idx(A, A);
  Mat D = Mat::Zero(idx.tensor()->dim(), n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) D(idx(x, y), t.table[x][y]) = 1.0;
  return make_qsg(A, make_map(A, idx.tensor(), std::move(D)));
}

GroupAlgebra group_algebra(const GroupTable& t, unsigned seed) {
  const Verdict grp = check_group(t);
  if (!grp) throw NotAGroup(grp.witness);
  const int n = t.order;

  // Left regular representation inside M_n, then block-diagonalize.
  AlgebraPtr ambient = make_algebra({n});
  std::vector<AlgebraElement> lambdas;
  lambdas.reserve(n);
  for (int x = 0; x < n; ++x) {
    AlgebraElement u = zero_element(ambient);
    Mat P = Mat::Zero(n, n);
    for (int g = 0; g < n; ++g) P(t.table[x][g], g) = 1.0;
    set_block(u, 0, P);
    lambdas.push_back(std::move(u));
  }
  const Subspace S = span_closure(lambdas, ambient);
  if (S.rank() != n) throw Error("regular representation span has wrong rank");
  const WedderburnResult wd = wedderburn_decompose(S, 1e-8, seed);

  // Group elements in block coordinates.
  const Mat lift = pinv(wd.iso.matrix);
  std::vector<AlgebraElement> group_likes;
  Mat ucols(n, n);
  for (int x = 0; x < n; ++x) {
    Vec coords = lift * lambdas[x].coords;
    ucols.col(x) = coords;
    group_likes.push_back(element(wd.algebra, std::move(coords)));
  }

  // Delta is fixed by Delta(U_x) = U_x (x) U_x on the spanning set.
  const TensorIndexer idx(wd.algebra, wd.algebra);
  Mat tensor_cols(idx.tensor()->dim(), n);
  for (int x = 0; x < n; ++x)
    tensor_cols.col(x) =
        tensor_elem(idx, group_likes[x], group_likes[x]).coords;
  Mat D = tensor_cols * pinv(ucols);
  QsgPtr qsg =
      make_qsg(wd.algebra, make_map(wd.algebra, idx.tensor(), std::move(D)));
  return {std::move(qsg), std::move(group_likes)};
}

QsgPtr kac_paljutkin() {
  // Basis: four one-dimensional blocks e_1..e_4 (flat 0..3), then the
  // 2 x 2 block with matrix units a_11, a_12, a_21, a_22 (flat 4..7).
  AlgebraPtr A = make_algebra({1, 1, 1, 1, 2});
  const TensorIndexer idx(A, A);
  struct Term {
    int col, left, right;
    double re, im;
  };
  static constexpr double H = 0.5;
  static const Term terms[] = {
      // Delta(e_1)
      {0, 0, 0, 1, 0}, {0, 1, 1, 1, 0}, {0, 2, 2, 1, 0}, {0, 3, 3, 1, 0},
      {0, 4, 4, H, 0}, {0, 5, 5, H, 0}, {0, 6, 6, H, 0}, {0, 7, 7, H, 0},
      // Delta(e_2)
      {1, 0, 1, 1, 0}, {1, 1, 0, 1, 0}, {1, 2, 3, 1, 0}, {1, 3, 2, 1, 0},
      {1, 4, 4, H, 0}, {1, 5, 5, -H, 0}, {1, 6, 6, -H, 0}, {1, 7, 7, H, 0},
      // Delta(e_3)
      {2, 0, 2, 1, 0}, {2, 1, 3, 1, 0}, {2, 2, 0, 1, 0}, {2, 3, 1, 1, 0},
      {2, 4, 7, H, 0}, {2, 5, 6, 0, -H}, {2, 6, 5, 0, H}, {2, 7, 4, H, 0},
      // Delta(e_4)
      {3, 0, 3, 1, 0}, {3, 1, 2, 1, 0}, {3, 2, 1, 1, 0}, {3, 3, 0, 1, 0},
      {3, 4, 7, H, 0}, {3, 5, 6, 0, H}, {3, 6, 5, 0, -H}, {3, 7, 4, H, 0},
      // Delta(a_11)
      {4, 0, 4, 1, 0}, {4, 1, 4, 1, 0}, {4, 2, 7, 1, 0}, {4, 3, 7, 1, 0},
      {4, 4, 0, 1, 0}, {4, 4, 1, 1, 0}, {4, 7, 2, 1, 0}, {4, 7, 3, 1, 0},
      // Delta(a_12)
      {5, 0, 5, 1, 0}, {5, 1, 5, -1, 0}, {5, 2, 6, 0, 1}, {5, 3, 6, 0, -1},
      {5, 5, 0, 1, 0}, {5, 5, 1, -1, 0}, {5, 6, 2, 0, -1}, {5, 6, 3, 0, 1},
      // Delta(a_21)
      {6, 0, 6, 1, 0}, {6, 1, 6, -1, 0}, {6, 2, 5, 0, -1}, {6, 3, 5, 0, 1},
      {6, 6, 0, 1, 0}, {6, 6, 1, -1, 0}, {6, 5, 2, 0, 1}, {6, 5, 3, 0, -1},
      // Delta(a_22)
      {7, 0, 7, 1, 0}, {7, 1, 7, 1, 0}, {7, 2, 4, 1, 0}, {7, 3, 4, 1, 0},
      {7, 7, 0, 1, 0}, {7, 7, 1, 1, 0}, {7, 4, 2, 1, 0}, {7, 4, 3, 1, 0},
  };
  Mat D = Mat::Zero(idx.tensor()->dim(), A->dim());
  for (const Term& t : terms)
    D(idx(t.left, t.right), t.col) = Complex(t.re, t.im);
  // Constructor validation (unital *-homomorphism + coassociativity) is the
  // correctness gate for the hard-coded table.
  return make_qsg(A, make_map(A, idx.tensor(), std::move(D)));
}

QsgPtr left_trivial_fixture() {
  AlgebraPtr A = make_algebra({1, 1});
  const TensorIndexer idx(A, A);
  Mat D = Mat::Zero(idx.tensor()->dim(), 2);
  for (int a = 0; a < 2; ++a)
    for (int g = 0; g < 2; ++g) D(idx(a, g), a) = 1.0;  // a -> a (x) 1
  return make_qsg(A, make_map(A, idx.tensor(), std::move(D)));
}

RepMatrix one_dim_rep(const AlgebraElement& g) {
  RepMatrix T = make_rep(g.parent, 1);
  T.set_entry(0, 0, g);
  return T;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> list;
    for (int n : {2, 3, 4, 6})
      list.push_back({"c_z" + std::to_string(n),
                      "function algebra of the cyclic group of order " +
                          std::to_string(n),
                      function_algebra(cyclic_group(n)), true});
    list.push_back({"c_s3",
                    "function algebra of the symmetric group on 3 letters",
                    function_algebra(symmetric_group_3()), true});
    list.push_back({"cstar_s3",
                    "group algebra of the symmetric group on 3 letters",
                    group_algebra(symmetric_group_3()).qsg, true});
    list.push_back({"kac_paljutkin",
                    "the 8-dimensional Kac-Paljutkin quantum group",
                    kac_paljutkin(), true});
    list.push_back({"left_trivial_fixture",
                    "counterexample with Delta(a) = a (x) 1; fails right "
                    "cancellation",
                    left_trivial_fixture(), false});
    return list;
  }();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace qbohr
