#include "qbohr/algebra.hpp"

#include <utility>

#include <Eigen/SVD>

namespace qbohr {

namespace {

void require_same_parent(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.parent || !b.parent || !same_algebra(*a.parent, *b.parent))
    throw ParentMismatch("elements live in different algebras");
}

}  // namespace

MultiMatrixAlgebra::MultiMatrixAlgebra(std::vector<int> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InputError("algebra needs at least one block");
  dim_ = 0;
  offsets_.reserve(blocks_.size());
  for (int n : blocks_) {
    if (n < 1) throw InputError("block sizes must be positive");
    offsets_.push_back(dim_);
    dim_ += n * n;
  }
}

MultiMatrixAlgebra::BasisIndex MultiMatrixAlgebra::decode(int flat) const {
  for (int i = 0; i < block_count(); ++i) {
    const int n = blocks_[i];
    if (flat < offsets_[i] + n * n) {
      const int local = flat - offsets_[i];
      return {i, local / n, local % n};
    }
  }
  throw InputError("basis index out of range");
}

int MultiMatrixAlgebra::index_of(int block, int row, int col) const {
  return offsets_[block] + row * blocks_[block] + col;
}

AlgebraPtr make_algebra(std::vector<int> blocks) {
  return std::make_shared<const MultiMatrixAlgebra>(std::move(blocks));
}

bool same_algebra(const MultiMatrixAlgebra& a, const MultiMatrixAlgebra& b) {
  return a.blocks() == b.blocks();
}

Mat get_block(const AlgebraElement& a, int i) {
  const int n = a.parent->block_size(i);
  return Eigen::Map<const RowMat>(a.coords.data() + a.parent->block_offset(i),
                                  n, n);
}

void set_block(AlgebraElement& a, int i, const Mat& m) {
  const int n = a.parent->block_size(i);
  Eigen::Map<RowMat>(a.coords.data() + a.parent->block_offset(i), n, n) = m;
}

AlgebraElement zero_element(AlgebraPtr A) {
  Vec c = Vec::Zero(A->dim());
  return {std::move(A), std::move(c)};
}

AlgebraElement basis_element(AlgebraPtr A, int flat) {
  AlgebraElement e = zero_element(std::move(A));
  e.coords(flat) = 1.0;
  return e;
}

AlgebraElement unit(AlgebraPtr A) {
  AlgebraElement e = zero_element(A);
  for (int i = 0; i < A->block_count(); ++i)
    for (int r = 0; r < A->block_size(i); ++r)
      e.coords(A->index_of(i, r, r)) = 1.0;
  return e;
}

AlgebraElement element(AlgebraPtr A, Vec coords) {
  if (coords.size() != A->dim())
    throw InputError("coordinate vector has wrong length");
  return {std::move(A), std::move(coords)};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  AlgebraElement c = zero_element(a.parent);
  for (int i = 0; i < a.parent->block_count(); ++i)
    set_block(c, i, get_block(a, i) * get_block(b, i));
  return c;
}

AlgebraElement star(const AlgebraElement& a) {
  AlgebraElement c = zero_element(a.parent);
  for (int i = 0; i < a.parent->block_count(); ++i)
    set_block(c, i, get_block(a, i).adjoint());
  return c;
}

AlgebraElement invert(const AlgebraElement& a, double cond_limit) {
  AlgebraElement c = zero_element(a.parent);
  for (int i = 0; i < a.parent->block_count(); ++i) {
    const Mat block = get_block(a, i);
    Eigen::JacobiSVD<Mat> svd(block,
                              Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (smin <= 0.0 || s(0) > cond_limit * smin)
      throw SingularElement("block " + std::to_string(i) +
                            " is singular or too ill-conditioned");
    const Vec sinv = s.cwiseInverse().cast<Complex>();
    Mat inv = svd.matrixV() * sinv.asDiagonal() * svd.matrixU().adjoint();
    set_block(c, i, inv);
  }
  return c;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  return {a.parent, a.coords + b.coords};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  return {a.parent, a.coords - b.coords};
}

AlgebraElement operator*(Complex c, const AlgebraElement& a) {
  return {a.parent, c * a.coords};
}

double norm_inf(const AlgebraElement& a) { return max_abs(a.coords); }

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b,
                  double tol) {
  require_same_parent(a, b);
  return approx_equal(Mat(a.coords), Mat(b.coords), tol);
}

AlgebraPtr tensor_algebra(const AlgebraPtr& A, const AlgebraPtr& B) {
  std::vector<int> blocks;
  blocks.reserve(static_cast<size_t>(A->block_count()) * B->block_count());
  for (int i = 0; i < A->block_count(); ++i)
    for (int j = 0; j < B->block_count(); ++j)
      blocks.push_back(A->block_size(i) * B->block_size(j));
  return make_algebra(std::move(blocks));
}

TensorIndexer::TensorIndexer(AlgebraPtr A, AlgebraPtr B)
    : a_(std::move(A)), b_(std::move(B)), ab_(tensor_algebra(a_, b_)) {
  table_.resize(static_cast<size_t>(a_->dim()) * b_->dim());
  for (int alpha = 0; alpha < a_->dim(); ++alpha) {
    const auto [i, r, s] = a_->decode(alpha);
    for (int beta = 0; beta < b_->dim(); ++beta) {
      const auto [j, p, q] = b_->decode(beta);
      const int m = b_->block_size(j);
      const int nm = a_->block_size(i) * m;
      const int tensor_block = i * b_->block_count() + j;
      table_[static_cast<size_t>(alpha) * b_->dim() + beta] =
          ab_->block_offset(tensor_block) + (r * m + p) * nm + (s * m + q);
    }
  }
}

AlgebraElement tensor_elem(const TensorIndexer& idx, const AlgebraElement& a,
                           const AlgebraElement& b) {
  if (!same_algebra(*a.parent, *idx.left()) ||
      !same_algebra(*b.parent, *idx.right()))
    throw ParentMismatch("tensor_elem: operands do not match the indexer");
  AlgebraElement t = zero_element(idx.tensor());
  for (int alpha = 0; alpha < a.coords.size(); ++alpha) {
    const Complex ca = a.coords(alpha);
    if (ca == 0.0) continue;
    for (int beta = 0; beta < b.coords.size(); ++beta)
      t.coords(idx(alpha, beta)) += ca * b.coords(beta);
  }
  return t;
}

AlgebraElement tensor_elem(const AlgebraElement& a, const AlgebraElement& b) {
  return tensor_elem(TensorIndexer(a.parent, b.parent), a, b);
}

}  // namespace qbohr
