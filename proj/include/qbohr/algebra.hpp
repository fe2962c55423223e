#pragma once

#include <memory>
#include <vector>

#include "qbohr/errors.hpp"
#include "qbohr/numeric.hpp"

namespace qbohr {

/// A finite-dimensional C*-algebra presented as a direct sum of full matrix
/// blocks M_{n_1} (+) ... (+) M_{n_k}.
///
/// The canonical basis consists of the matrix units E^{(i)}_{rs}, ordered
/// lexicographically by (i, r, s): block by block, and row-major within each
/// block. Elements are flat complex coordinate vectors of length
/// dim = sum n_i^2 with respect to this basis.
class MultiMatrixAlgebra {
 public:
  explicit MultiMatrixAlgebra(std::vector<int> blocks);

  const std::vector<int>& blocks() const { return blocks_; }
  int dim() const { return dim_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_size(int i) const { return blocks_[i]; }
  /// Offset of block i's first coordinate in the flat vector.
  int block_offset(int i) const { return offsets_[i]; }

  struct BasisIndex {
    int block, row, col;
  };
  /// Decode a flat basis index into (block, row, col).
  BasisIndex decode(int flat) const;
  /// Flat index of E^{(block)}_{row,col}.
  int index_of(int block, int row, int col) const;

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int dim_;
};

using AlgebraPtr = std::shared_ptr<const MultiMatrixAlgebra>;

/// Build the algebra with the given block sizes. Throws InputError on an
/// empty list or a non-positive size.
AlgebraPtr make_algebra(std::vector<int> blocks);

/// Algebra identity is structural: equal block lists.
bool same_algebra(const MultiMatrixAlgebra& a, const MultiMatrixAlgebra& b);

/// An element of a multi-matrix algebra: parent + flat coordinates.
struct AlgebraElement {
  AlgebraPtr parent;
  Vec coords;
};

/// Read block i of an element as an n_i x n_i matrix (copies the slice).
Mat get_block(const AlgebraElement& a, int i);
/// Overwrite block i of an element.
void set_block(AlgebraElement& a, int i, const Mat& m);

AlgebraElement zero_element(AlgebraPtr A);
AlgebraElement basis_element(AlgebraPtr A, int flat);
AlgebraElement unit(AlgebraPtr A);
/// Element from explicit coordinates (length-checked).
AlgebraElement element(AlgebraPtr A, Vec coords);

/// Blockwise product. Throws ParentMismatch on different parents.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
/// Blockwise conjugate transpose.
AlgebraElement star(const AlgebraElement& a);
/// Blockwise two-sided inverse. Throws SingularElement when any block's
/// condition number exceeds cond_limit.
AlgebraElement invert(const AlgebraElement& a, double cond_limit = kCondLimit);

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(Complex c, const AlgebraElement& a);

double norm_inf(const AlgebraElement& a);
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b,
                  double tol = kEqTol);

/// Tensor product algebra: blocks n_i * m_j in lexicographic (i, j) order.
AlgebraPtr tensor_algebra(const AlgebraPtr& A, const AlgebraPtr& B);

/// Coordinate bookkeeping for A (x) B. The flat index of
/// E^{(i)}_{rs} (x) E^{(j)}_{pq} inside block (i,j) of the tensor algebra is
/// (r*m_j + p) * (n_i*m_j) + (s*m_j + q) — the Kronecker-product convention,
/// which makes nested tensor coordinates associate bit-exactly.
class TensorIndexer {
 public:
  TensorIndexer(AlgebraPtr A, AlgebraPtr B);

  const AlgebraPtr& left() const { return a_; }
  const AlgebraPtr& right() const { return b_; }
  const AlgebraPtr& tensor() const { return ab_; }

  /// Flat index in tensor() of e_alpha (x) e_beta.
  int operator()(int alpha, int beta) const {
    return table_[static_cast<size_t>(alpha) * b_->dim() + beta];
  }

 private:
  AlgebraPtr a_, b_, ab_;
  std::vector<int> table_;
};

/// Elementary tensor a (x) b as an element of tensor_algebra.
AlgebraElement tensor_elem(const TensorIndexer& idx, const AlgebraElement& a,
                           const AlgebraElement& b);
AlgebraElement tensor_elem(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace qbohr
