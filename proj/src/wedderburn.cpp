#include "qbohr/wedderburn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qbohr/kernels.hpp"

namespace qbohr {

namespace {

struct EigPair {
  int block;
  double value;
  Vec vector;  // eigenvector within that ambient block
};

/// Blockwise eigendecomposition of a (numerically) self-adjoint element.
std::vector<EigPair> hermitian_eigs(const AlgebraElement& h) {
  std::vector<EigPair> out;
  for (int i = 0; i < h.parent->block_count(); ++i) {
    Mat H = get_block(h, i);
    H = 0.5 * (H + Mat(H.adjoint()));
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      out.push_back({i, es.eigenvalues()(k), es.eigenvectors().col(k)});
  }
  return out;
}

/// Group eigenpairs whose values lie within `width` of each other
/// (single-linkage on the sorted values). Returns groups of indices.
std::vector<std::vector<size_t>> cluster_by_value(
    const std::vector<EigPair>& eigs, double width) {
  std::vector<size_t> order(eigs.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return eigs[a].value < eigs[b].value;
  });
  std::vector<std::vector<size_t>> groups;
  for (size_t idx : order) {
    if (groups.empty() ||
        eigs[idx].value - eigs[groups.back().back()].value > width)
      groups.push_back({});
    groups.back().push_back(idx);
  }
  return groups;
}

/// Sum of the spectral projectors of one cluster, as an algebra element.
AlgebraElement spectral_projector(const AlgebraPtr& A,
                                  const std::vector<EigPair>& eigs,
                                  const std::vector<size_t>& group) {
  AlgebraElement p = zero_element(A);
  for (size_t idx : group) {
    const EigPair& e = eigs[idx];
    Mat block = get_block(p, e.block);
    block += e.vector * e.vector.adjoint();
    set_block(p, e.block, block);
  }
  return p;
}

/// Random self-adjoint combination of the columns of `basis`.
AlgebraElement random_hermitian(const AlgebraPtr& A, const Mat& basis,
                                std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec c(basis.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i)
    c(i) = Complex(gauss(rng), gauss(rng));
  AlgebraElement z = element(A, basis * c);
  return {A, 0.5 * (z.coords + star(z).coords)};
}

/// Random (not necessarily self-adjoint) combination.
AlgebraElement random_element(const AlgebraPtr& A, const Mat& basis,
                              std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec c(basis.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i)
    c(i) = Complex(gauss(rng), gauss(rng));
  return element(A, basis * c);
}

Complex frobenius(const AlgebraElement& a, const AlgebraElement& b) {
  return a.coords.dot(b.coords);  // conjugates the left argument
}

struct Factor {
  int size = 0;                       // m
  std::vector<AlgebraElement> units;  // f_{jl}, row-major, m*m of them
};

/// One attempt at splitting the subalgebra spanned by W into factors.
/// Returns factors on success, empty vector when a generic choice failed.
std::vector<Factor> attempt_split(const AlgebraPtr& A, const Mat& W,
                                  int center_dim, const Mat& center_basis,
                                  std::mt19937& rng) {
  const double cluster_width = 1e-6;

  // Minimal central projections: spectral clusters of a generic
  // self-adjoint central element.
  AlgebraElement h = random_hermitian(A, W * center_basis, rng);
  auto eigs = hermitian_eigs(h);
  double scale = 0.0;
  for (const auto& e : eigs) scale = std::max(scale, std::abs(e.value));
  auto groups = cluster_by_value(eigs, cluster_width * std::max(1.0, scale));
  if (static_cast<int>(groups.size()) != center_dim) return {};

  std::vector<Factor> factors;
  for (const auto& group : groups) {
    AlgebraElement p = spectral_projector(A, eigs, group);

    // Corner pSp: orthonormal basis of the span of p W_j p.
    Mat left = kernels::pairwise_products(*A, Mat(p.coords), W);
    Mat corner_span = kernels::pairwise_products(*A, left, Mat(p.coords));
    Mat corner = orth(corner_span, kRankTol);
    const int m2 = static_cast<int>(corner.cols());
    const int m = static_cast<int>(std::lround(std::sqrt(double(m2))));
    if (m * m != m2) return {};

    // Minimal projections inside the factor: spectral clusters of a generic
    // self-adjoint corner element, ignoring the near-zero spectrum living
    // on the complement of p.
    AlgebraElement y = random_hermitian(A, corner, rng);
    auto yeigs = hermitian_eigs(y);
    double yscale = 0.0;
    for (const auto& e : yeigs) yscale = std::max(yscale, std::abs(e.value));
    if (yscale == 0.0) return {};
    std::vector<EigPair> nonzero;
    for (auto& e : yeigs)
      if (std::abs(e.value) > 1e-6 * yscale) nonzero.push_back(std::move(e));
    auto ygroups =
        cluster_by_value(nonzero, cluster_width * std::max(1.0, yscale));
    if (static_cast<int>(ygroups.size()) != m) return {};

    std::vector<AlgebraElement> minimal;
    minimal.reserve(m);
    for (const auto& g : ygroups)
      minimal.push_back(spectral_projector(A, nonzero, g));

    // Partial isometries v_j with v_j* v_j = e_j, v_j v_j* = e_1, via a
    // generic corner element z: v_j ~ e_1 z e_j.
    AlgebraElement z = random_element(A, corner, rng);
    std::vector<AlgebraElement> v;
    v.reserve(m);
    for (int j = 0; j < m; ++j) {
      AlgebraElement w = multiply(multiply(minimal[0], z), minimal[j]);
      AlgebraElement wsw = multiply(star(w), w);
      const double c =
          std::real(frobenius(minimal[j], wsw)) / minimal[j].coords.squaredNorm();
      if (!(c > 1e-12)) return {};
      v.push_back(Complex(1.0 / std::sqrt(c)) * w);
    }

    Factor f;
    f.size = m;
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l)
        f.units.push_back(multiply(star(v[j]), v[l]));
    factors.push_back(std::move(f));
  }
  return factors;
}

}  // namespace

WedderburnResult wedderburn_decompose(const Subspace& S, double tol,
                                      unsigned seed) {
  const AlgebraPtr& A = S.parent;
  const Mat& W = S.basis;
  const int r = S.rank();
  if (r == 0) throw NotASubalgebra("empty subspace");

  // Closure checks: unit, products, stars all stay inside S.
  if (!S.contains(unit(A), tol))
    throw NotASubalgebra("subspace does not contain the unit");
  const Mat P = S.projector();
  const Mat products = kernels::pairwise_products(*A, W, W);
  if (max_abs(products - P * products) > tol)
    throw NotASubalgebra("subspace is not closed under multiplication");
  const Mat stars = kernels::star_batch(*A, W);
  if (max_abs(stars - P * stars) > tol)
    throw NotASubalgebra("subspace is not closed under star");

  // Center: combinations z = W c commuting with every basis element.
  Mat commutant(static_cast<Eigen::Index>(A->dim()) * r, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      commutant.block(static_cast<Eigen::Index>(j) * A->dim(), k, A->dim(), 1) =
          products.col(static_cast<Eigen::Index>(k) * r + j) -
          products.col(static_cast<Eigen::Index>(j) * r + k);
  const Mat center_basis = nullspace(commutant, kRankTol);
  const int center_dim = static_cast<int>(center_basis.cols());

  for (unsigned attempt = 0; attempt < 16; ++attempt) {
    std::mt19937 rng(0x9e3779b9u + seed * 1000003u + attempt);
    auto factors = attempt_split(A, W, center_dim, center_basis, rng);
    if (factors.empty()) continue;

    std::stable_sort(factors.begin(), factors.end(),
                     [](const Factor& a, const Factor& b) {
                       return a.size < b.size;
                     });

    std::vector<int> blocks;
    blocks.reserve(factors.size());
    int total = 0;
    for (const auto& f : factors) {
      blocks.push_back(f.size);
      total += f.size * f.size;
    }
    if (total != r) continue;

    AlgebraPtr abstract = make_algebra(blocks);
    Mat iso(A->dim(), r);
    int col = 0;
    for (const auto& f : factors)
      for (const auto& u : f.units) iso.col(col++) = u.coords;

    LinearMap chi = make_map(abstract, A, iso);
    if (!check_star_homomorphism(chi, tol)) continue;
    // Image must be all of S, not a proper subalgebra.
    if (numeric_rank(iso, kRankTol) != r) continue;
    if (max_abs(iso - P * iso) > tol) continue;

    return {std::move(abstract), std::move(chi)};
  }
  throw Error("wedderburn_decompose: generic splitting failed repeatedly");
}

}  // namespace qbohr
