#include "qbohr/bohr.hpp"

#include <string>
#include <utility>
#include <vector>

#include "qbohr/kernels.hpp"
#include "qbohr/wedderburn.hpp"

namespace qbohr {

namespace {

QsgPtr freeze(const QuantumSemigroup& G) {
  return std::make_shared<const QuantumSemigroup>(G);
}

/// Wedderburn-present S and lift the comultiplication through chi (x) chi.
SubQuantumGroup present_core(const QuantumSemigroup& G, const Subspace& S,
                             double tol, unsigned seed) {
  WedderburnResult wd = wedderburn_decompose(S, tol, seed);
  const LinearMap& chi = wd.iso;
  const LinearMap chi2 = tensor_map(chi, chi);
  const Mat pushed = G.delta().matrix * chi.matrix;
  Mat lifted = pinv(chi2.matrix) * pushed;
  const double defect = rel_defect(chi2.matrix * lifted, pushed);
  if (defect > tol)
    throw ClosureEscapesDelta(
        "comultiplication does not map the subalgebra into its tensor square");
  const TensorIndexer bidx(wd.algebra, wd.algebra);
  QsgPtr presented = make_qsg(
      wd.algebra, make_map(wd.algebra, bidx.tensor(), std::move(lifted)), tol);
  return {freeze(G), S, std::move(presented), chi, {}};
}

/// Push a representation over the ambient algebra down to the presented
/// coordinates through the pseudo-inverse of chi.
RepMatrix push_to_presented(const RepMatrix& T, const SubQuantumGroup& B,
                            double tol) {
  const Mat lift = pinv(B.chi.matrix);
  Mat entries = T.entries * lift.transpose();
  const double defect = rel_defect(entries * B.chi.matrix.transpose(), T.entries);
  if (defect > tol)
    throw ClosureEscapesDelta("representation entries escape the carrier");
  return make_rep(B.presented->algebra(), T.size, std::move(entries));
}

/// A unitary version of T over the quantum group H (identity when T is
/// already unitary).
RepMatrix ensure_unitary(const RepMatrix& T, const QuantumSemigroup& H,
                         double tol) {
  if (is_unitary_rep(T)) return T;
  return unitarize(T, H, tol).rep;
}

}  // namespace

SubQuantumGroup present_subalgebra(const QuantumSemigroup& G, const Subspace& S,
                                   double tol, unsigned seed) {
  if (!same_algebra(*S.parent, *G.algebra()))
    throw ParentMismatch("subspace lives in a different algebra");
  return present_core(G, S, tol, seed);
}

SubQuantumGroup generate_BT(const RepMatrix& T, const QuantumSemigroup& G,
                            double tol) {
  const Verdict adm = is_admissible(T, G, tol);
  if (!adm) throw NotAdmissible(adm.witness);

  std::vector<AlgebraElement> gens;
  gens.reserve(static_cast<size_t>(T.size) * T.size);
  for (int k = 0; k < T.size; ++k)
    for (int l = 0; l < T.size; ++l) gens.push_back(T.entry(k, l));
  const Subspace S = span_closure(gens, G.algebra());

  SubQuantumGroup B = present_core(G, S, tol, 0);
  const Verdict cqg = is_compact_quantum_group(*B.presented);
  if (!cqg)
    throw ClosureEscapesDelta(
        "generated quantum semigroup fails cancellation: " + cqg.witness);
  B.generators.push_back(push_to_presented(T, B, tol));
  return B;
}

SubQuantumGroup bohr_from_reps(const QuantumSemigroup& G,
                               const std::vector<RepMatrix>& seeds, double tol,
                               unsigned seed) {
  std::vector<AlgebraElement> gens;
  for (size_t i = 0; i < seeds.size(); ++i) {
    const Verdict adm = is_admissible(seeds[i], G, tol);
    if (!adm)
      throw NonAdmissibleSeed("seed " + std::to_string(i) + ": " + adm.witness);
    for (int k = 0; k < seeds[i].size; ++k)
      for (int l = 0; l < seeds[i].size; ++l)
        gens.push_back(seeds[i].entry(k, l));
  }

  // Matrix elements of the unitarized direct sum, its conjugate, and all
  // tensor powers are linear combinations, stars, and products of the seed
  // entries, so the multiplicative *-closure of the entries is exactly the
  // carrier.
  const Subspace S = span_closure(gens, G.algebra());
  SubQuantumGroup B = present_core(G, S, tol, seed);
  const Verdict cqg = is_compact_quantum_group(*B.presented);
  if (!cqg)
    throw ClosureEscapesDelta(
        "compactification fails cancellation: " + cqg.witness);

  if (seeds.empty()) {
    B.generators.push_back(trivial_rep(B.presented->algebra()));
  } else {
    for (const RepMatrix& T : seeds) {
      const RepMatrix down = push_to_presented(T, B, tol);
      const RepMatrix u = ensure_unitary(down, *B.presented, tol);
      B.generators.push_back(u);
      B.generators.push_back(conjugate(u, *B.presented));
    }
  }
  return B;
}

namespace {

/// Word bookkeeping for the counit/antipode extension: each word carries
/// its element, its counit value, and its antipode image.
struct WordTable {
  std::vector<Vec> elems;
  std::vector<Complex> counit;
  std::vector<Vec> antipode;

  void add(Vec x, Complex e, Vec k) {
    elems.push_back(std::move(x));
    counit.push_back(e);
    antipode.push_back(std::move(k));
  }
  size_t size() const { return elems.size(); }
};

}  // namespace

HopfStructure hopf_structure(const SubQuantumGroup& B, double tol) {
  const QuantumSemigroup& H = *B.presented;
  const AlgebraPtr& A = H.algebra();
  const int d = A->dim();

  // Unitary generating set; fall back to the (unitarized) regular
  // corepresentation when no generators were stored. Conjugates are added
  // so that the words reach the stars of all matrix elements.
  std::vector<RepMatrix> gens;
  if (B.generators.empty()) {
    const RepMatrix r = ensure_unitary(regular_corep(H), H, tol);
    gens.push_back(r);
    gens.push_back(conjugate(r, H));
  } else {
    for (const RepMatrix& g : B.generators) {
      const RepMatrix u = ensure_unitary(g, H, tol);
      gens.push_back(u);
      gens.push_back(conjugate(u, H));
    }
  }

  // Seed words: the unit and every generator entry with its delta-pattern
  // counit and flip-star antipode.
  WordTable words;
  words.add(unit(A).coords, 1.0, unit(A).coords);
  for (const RepMatrix& U : gens)
    for (int k = 0; k < U.size; ++k)
      for (int l = 0; l < U.size; ++l)
        words.add(U.entry(k, l).coords, k == l ? 1.0 : 0.0,
                  star(U.entry(l, k)).coords);

  // Multiplicative closure, collecting every product as a redundant row of
  // the extension system while only fresh span directions drive the loop.
  Mat Q(d, 0);
  std::vector<size_t> frontier;
  auto try_accept = [&](size_t w) {
    Vec residual = words.elems[w];
    if (Q.cols() > 0) {
      residual -= Q * (Q.adjoint() * residual);
      residual -= Q * (Q.adjoint() * residual);
    }
    if (residual.norm() > 1e-8 * std::max(1.0, words.elems[w].norm())) {
      Q.conservativeResize(Eigen::NoChange, Q.cols() + 1);
      Q.col(Q.cols() - 1) = residual.normalized();
      frontier.push_back(w);
    }
  };
  const size_t seeded = words.size();
  for (size_t w = 0; w < seeded; ++w) try_accept(w);

  std::vector<size_t> accepted(frontier);
  while (!frontier.empty() && Q.cols() < d) {
    std::vector<size_t> fresh = std::move(frontier);
    frontier.clear();
    const size_t before = words.size();
    for (size_t f : fresh)
      for (size_t a : accepted) {
        const AlgebraElement fa = element(A, words.elems[f]);
        const AlgebraElement ae = element(A, words.elems[a]);
        // f*a and a*f; antipode reverses the factors.
        words.add(multiply(fa, ae).coords, words.counit[f] * words.counit[a],
                  multiply(element(A, words.antipode[a]),
                           element(A, words.antipode[f]))
                      .coords);
        words.add(multiply(ae, fa).coords, words.counit[a] * words.counit[f],
                  multiply(element(A, words.antipode[f]),
                           element(A, words.antipode[a]))
                      .coords);
      }
    for (size_t w = before; w < words.size(); ++w) try_accept(w);
    for (size_t f : frontier) accepted.push_back(f);
  }

  if (Q.cols() < d)
    throw ExtensionInconsistent(
        "generator matrix elements do not generate the algebra");

  // Solve the (overdetermined) extension systems and check consistency.
  Mat W(d, static_cast<Eigen::Index>(words.size()));
  RowVec E(words.size());
  Mat K(d, static_cast<Eigen::Index>(words.size()));
  for (size_t w = 0; w < words.size(); ++w) {
    W.col(static_cast<Eigen::Index>(w)) = words.elems[w];
    E(static_cast<Eigen::Index>(w)) = words.counit[w];
    K.col(static_cast<Eigen::Index>(w)) = words.antipode[w];
  }
  const Mat Wp = pinv(W);
  const RowVec counit_cov = E * Wp;
  const Mat kappa = K * Wp;
  if (rel_defect(counit_cov * W, E) > tol)
    throw ExtensionInconsistent("counit values are inconsistent on products");
  if (rel_defect(kappa * W, K) > tol)
    throw ExtensionInconsistent("antipode values are inconsistent on products");

  HopfStructure hopf{make_functional(A, counit_cov),
                     make_map(A, A, kappa), Verdict::ok()};

  // Axioms.
  Verdict v = Verdict::ok();
  const Mat& D = H.delta().matrix;
  const TensorIndexer& idx = H.indexer();
  Mat left_counit = Mat::Zero(d, d);
  Mat right_counit = Mat::Zero(d, d);
  for (int b = 0; b < d; ++b)
    for (int al = 0; al < d; ++al)
      for (int ga = 0; ga < d; ++ga) {
        left_counit(ga, b) += counit_cov(al) * D(idx(al, ga), b);
        right_counit(al, b) += counit_cov(ga) * D(idx(al, ga), b);
      }
  const Mat id_mat = Mat::Identity(d, d);
  double defect = rel_defect(left_counit, id_mat);
  if (defect > tol)
    v.merge(Verdict::fail("(counit (x) id) o Delta is not the identity",
                          defect));
  else
    v.merge(Verdict::ok(defect));
  defect = rel_defect(right_counit, id_mat);
  if (defect > tol)
    v.merge(Verdict::fail("(id (x) counit) o Delta is not the identity",
                          defect));
  else
    v.merge(Verdict::ok(defect));

  const LinearMap mult = multiplication_map(A);
  const LinearMap idm = identity_map(A);
  const Mat antipode_left =
      mult.matrix * tensor_map(hopf.antipode, idm).matrix * D;
  const Mat antipode_right =
      mult.matrix * tensor_map(idm, hopf.antipode).matrix * D;
  const Mat target = unit(A).coords * counit_cov;  // column x row
  defect = rel_defect(antipode_left, target);
  if (defect > tol)
    v.merge(Verdict::fail("antipode axiom fails on the left leg", defect));
  else
    v.merge(Verdict::ok(defect));
  defect = rel_defect(antipode_right, target);
  if (defect > tol)
    v.merge(Verdict::fail("antipode axiom fails on the right leg", defect));
  else
    v.merge(Verdict::ok(defect));

  // Anti-multiplicativity and kappa(1) = 1 on the basis.
  double anti_worst = 0.0;
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be) {
      const AlgebraElement ea = basis_element(A, al);
      const AlgebraElement eb = basis_element(A, be);
      const Vec lhs = kappa * multiply(ea, eb).coords;
      const Vec rhs =
          multiply(element(A, Vec(kappa * eb.coords)),
                   element(A, Vec(kappa * ea.coords)))
              .coords;
      anti_worst = std::max(anti_worst, rel_defect(lhs, rhs));
    }
  if (anti_worst > tol)
    v.merge(Verdict::fail("antipode is not anti-multiplicative", anti_worst));
  else
    v.merge(Verdict::ok(anti_worst));
  defect = rel_defect(kappa * unit(A).coords, unit(A).coords);
  if (defect > tol)
    v.merge(Verdict::fail("antipode does not fix the unit", defect));
  else
    v.merge(Verdict::ok(defect));

  if (!v) throw ExtensionInconsistent(v.witness);
  hopf.verified = v;
  return hopf;
}

LinearMap factor_through_bohr(const LinearMap& Phi, const QuantumSemigroup& K,
                              const SubQuantumGroup& B, double tol) {
  const Verdict kcqg = is_compact_quantum_group(K);
  if (!kcqg)
    throw InputError("source is not a compact quantum group: " + kcqg.witness);
  const Verdict morph = check_qsg_morphism(Phi, K, *B.ambient, tol);
  if (!morph)
    throw InputError("map is not a quantum semigroup morphism: " +
                     morph.witness);

  // The image of every basis element must lie in the carrier.
  for (int b = 0; b < K.dim(); ++b) {
    const AlgebraElement image =
        element(B.ambient->algebra(), Phi.matrix.col(b));
    if (!B.carrier.contains(image, tol))
      throw RangeEscapesCarrier(
          "image of basis element " + std::to_string(b) +
          " lies outside the carrier (seed family too small)");
  }

  Mat lifted = pinv(B.chi.matrix) * Phi.matrix;
  if (rel_defect(B.chi.matrix * lifted, Phi.matrix) > tol)
    throw RangeEscapesCarrier("factorization through the inclusion failed");
  LinearMap bPhi = make_map(Phi.source, B.presented->algebra(),
                            std::move(lifted));
  const Verdict down = check_qsg_morphism(bPhi, K, *B.presented, tol);
  if (!down)
    throw Error("factored map is not a morphism: " + down.witness);
  return bPhi;
}

LinearMap compactify_morphism(const LinearMap& Psi, const SubQuantumGroup& B1,
                              const SubQuantumGroup& B2, double tol) {
  const Verdict morph = check_qsg_morphism(Psi, *B1.ambient, *B2.ambient, tol);
  if (!morph)
    throw InputError("map is not a quantum semigroup morphism: " +
                     morph.witness);
  const LinearMap through = compose(Psi, B1.chi);
  return factor_through_bohr(through, *B1.presented, B2, tol);
}

}  // namespace qbohr
