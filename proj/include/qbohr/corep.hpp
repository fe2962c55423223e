#pragma once

#include <vector>

#include "qbohr/qsg.hpp"
#include "qbohr/subspace.hpp"

namespace qbohr {

struct SubQuantumGroup;  // defined in bohr.hpp

/// A matrix over A: an n x n array of algebra elements, encoded as an
/// (n^2) x dim coordinate matrix whose row k*n + l holds the coordinates of
/// the (k, l) entry. A corepresentation of G is such a matrix satisfying
/// Delta(t_{kl}) = sum_p t_{kp} (x) t_{pl}.
struct RepMatrix {
  AlgebraPtr parent;
  int size = 0;       // n
  Mat entries;        // (n*n) x dim, row k*size + l = coords of entry (k, l)

  AlgebraElement entry(int k, int l) const;
  void set_entry(int k, int l, const AlgebraElement& a);
};

RepMatrix make_rep(AlgebraPtr A, int size);
RepMatrix make_rep(AlgebraPtr A, int size, Mat entries);

/// The trivial 1 x 1 representation [1].
RepMatrix trivial_rep(AlgebraPtr A);

/// For each block i of A, the inflation of T to an ordinary matrix
/// Theta_i(T) in M_{n * n_i}: entry (k, l) of T contributes its i-th block
/// at tile (k, l). Multiplicativity of T corresponds to matrix products of
/// the Theta_i.
std::vector<Mat> inflate(const RepMatrix& T);

/// Corepresentation identity Delta(t_{kl}) = sum_p t_{kp} (x) t_{pl}.
Verdict is_corep(const RepMatrix& T, const QuantumSemigroup& G,
                 double tol = 1e-8);

/// Invertibility of T as a matrix over A: every inflation Theta_i(T) has
/// condition number below cond_limit.
Verdict is_invertible(const RepMatrix& T, double cond_limit = kCondLimit);

/// Bounded representation = corepresentation identity + invertibility.
Verdict is_bounded_representation(const RepMatrix& T, const QuantumSemigroup& G,
                                  double tol = 1e-8,
                                  double cond_limit = kCondLimit);

/// Entry transpose: (T^t)_{kl} = t_{lk}. (No star.)
RepMatrix transpose_rep(const RepMatrix& T);

/// Entrywise adjoint-transpose: (T*)_{kl} = star(t_{lk}). Satisfies
/// Theta_i(T*) = Theta_i(T)^dagger.
RepMatrix adjoint_rep(const RepMatrix& T);

/// Admissible: the transpose T^t is also invertible.
Verdict is_admissible(const RepMatrix& T, const QuantumSemigroup& G,
                      double tol = 1e-8, double cond_limit = kCondLimit);

/// Unitary: every inflation Theta_i(T) is unitary (to tol).
Verdict is_unitary_rep(const RepMatrix& T, double tol = 1e-7);

RepMatrix direct_sum(const RepMatrix& S, const RepMatrix& T);
/// Kronecker product of matrices over A with multiplied entries:
/// (S (x) T)_{(k1,k2),(l1,l2)} = s_{k1 l1} t_{k2 l2}, index (k1*n2 + k2).
RepMatrix tensor_product(const RepMatrix& S, const RepMatrix& T);

/// Entrywise star without transpose: (conj T)_{kl} = star(t_{kl}).
/// Restricted to unitary input (throws RequiresUnitary otherwise), where it
/// is again a corepresentation.
RepMatrix conjugate(const RepMatrix& T, const QuantumSemigroup& G,
                    double tol = 1e-7);

/// The span of the entries of T as a subspace of A.
Subspace matrix_elements(const RepMatrix& T, double rank_tol = kRankTol);

/// The inverse of T as a matrix over A, computed blockwise through the
/// inflations. Throws SingularElement when T is not invertible. Serves as
/// the explicit certificate behind is_invertible / is_admissible.
RepMatrix invert_rep(const RepMatrix& T, double cond_limit = kCondLimit);

/// T' = (P (x) 1)^{-1} T (P (x) 1) for an invertible scalar matrix P.
RepMatrix similarity_transform(const RepMatrix& T, const Mat& P);

/// The regular corepresentation: the dim x dim matrix with entries
/// t_{ab} = (e^a (x) id) Delta(e_b). Its entries span A and it is a
/// corepresentation for any quantum semigroup.
RepMatrix regular_corep(const QuantumSemigroup& G);

/// Result of unitarization: the unitary corep U, the positive invertible
/// scalar matrix m with U = (m (x) 1)^{-1} T (m (x) 1) wrong-way-round
/// normalizer, and F = m^{-2} = (id (x) h)(T* T).
struct UnitarizeResult {
  RepMatrix rep;  // the unitary corepresentation U
  Mat m;          // positive invertible n x n scalar matrix, m = F^{-1/2}
  Mat F;          // F = (id (x) h)(T* T), positive definite
};

/// Unitarize an admissible corepresentation: compute
/// F = (id (x) h_T)(T* T) where h_T is the Haar state of the compact
/// quantum group generated by T, then U = (F^{1/2} (x) 1) T (F^{-1/2} (x) 1).
/// Throws NotAdmissible when T is not admissible, NotPositive when F fails
/// to be positive definite.
UnitarizeResult unitarize(const RepMatrix& T, const QuantumSemigroup& G,
                          double tol = 1e-8);

/// The compact quantum group generated by a bounded representation T:
/// carrier C = span-closure of the entries of T, presented as a
/// multi-matrix algebra in its own right, with the restricted
/// comultiplication. Declared here, defined with SubQuantumGroup in
/// bohr.hpp.
SubQuantumGroup generate_BT(const RepMatrix& T, const QuantumSemigroup& G,
                            double tol = 1e-8);

}  // namespace qbohr
