#include "krein/riccati.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "krein/linalg.hpp"
#include "krein/tolerances.hpp"

namespace krein {

namespace {

struct EigenSystem {
  Vector values;
  Matrix vectors;  // unit columns
};

EigenSystem real_eigensystem(const BlockInstance& inst) {
  const Matrix l = inst.assemble();
  Eigen::ComplexEigenSolver<Matrix> es(l);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NoDefiniteInvariantSubspace, "eigendecomposition failed");
  EigenSystem sys{es.eigenvalues(), es.eigenvectors()};
  const double tol = tolerances().real_spectrum;
  for (Index i = 0; i < sys.values.size(); ++i) {
    if (std::abs(sys.values(i).imag()) > tol * (1.0 + std::abs(sys.values(i))))
      throw Error(ErrorCode::NonRealSpectrum, "L has nonreal eigenvalues");
  }
  return sys;
}

double subset_margin(const EigenSystem& sys, const std::vector<Index>& idx,
                     const KreinSignature& sig) {
  Matrix cols(sys.vectors.rows(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) cols.col(static_cast<Index>(j)) = sys.vectors.col(idx[j]);
  return definiteness_margin(span_subspace(cols), sig);
}

// Assigns each eigenvalue to the nearer of the two reference sets; empty
// result when the counts do not come out as (n0, n1).
std::optional<std::vector<Index>> group_by_reference(const EigenSystem& sys, const RealVector& ref0,
                                                     const RealVector& ref1, Index n0, Index n1) {
  std::vector<Index> selected;
  Index count1 = 0;
  for (Index i = 0; i < sys.values.size(); ++i) {
    const RealVector point = RealVector::Constant(1, sys.values(i).real());
    if (set_distance(point, ref0) <= set_distance(point, ref1)) {
      selected.push_back(i);
    } else {
      ++count1;
    }
  }
  if (static_cast<Index>(selected.size()) != n0 || count1 != n1) return std::nullopt;
  return selected;
}

std::optional<std::vector<Index>> group_exhaustive(const EigenSystem& sys,
                                                   const KreinSignature& sig) {
  const Index n = sys.values.size();
  const Index n0 = sig.n0;
  // Greedy first: the n0 eigenvectors with the largest normalized Krein form.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<double> form(n);
  for (Index i = 0; i < n; ++i) {
    const Vector v = sys.vectors.col(i);
    form[i] = krein_inner(v, v, sig).real() / v.squaredNorm();
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return form[a] > form[b]; });
  std::vector<Index> greedy(order.begin(), order.begin() + n0);
  std::sort(greedy.begin(), greedy.end());
  if (subset_margin(sys, greedy, sig) > 0.0) return greedy;

  if (n > 12) return std::nullopt;

  std::optional<std::vector<Index>> best;
  double best_margin = 0.0;
  std::vector<Index> subset(n0);
  // Enumerate size-n0 subsets of {0, ..., n-1} via bitmasks.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<Index>(__builtin_popcount(mask)) != n0) continue;
    Index pos = 0;
    for (Index i = 0; i < n; ++i)
      if (mask & (1u << i)) subset[pos++] = i;
    const double margin = subset_margin(sys, subset, sig);
    if (margin > best_margin) {
      best_margin = margin;
      best = subset;
    }
  }
  return best;
}

RiccatiSolution solve_grouped(const BlockInstance& inst, const EigenSystem& sys,
                              const std::vector<Index>& selected) {
  const Index n0 = inst.n0;
  const Index n1 = inst.n1;

  Matrix basis(inst.dim(), n0);
  RealVector sigma0(n0), sigma1(n1);
  {
    std::vector<bool> in_group(sys.values.size(), false);
    for (std::size_t j = 0; j < selected.size(); ++j) {
      basis.col(static_cast<Index>(j)) = sys.vectors.col(selected[j]);
      sigma0(static_cast<Index>(j)) = sys.values(selected[j]).real();
      in_group[selected[j]] = true;
    }
    Index pos = 0;
    for (Index i = 0; i < sys.values.size(); ++i)
      if (!in_group[i]) sigma1(pos++) = sys.values(i).real();
  }
  std::sort(sigma0.data(), sigma0.data() + sigma0.size());
  std::sort(sigma1.data(), sigma1.data() + sigma1.size());

  const Matrix x0 = basis.topRows(n0);
  const Matrix x1 = basis.bottomRows(n1);
  if (condition_number(x0) > tolerances().graph_condition)
    throw Error(ErrorCode::NotAGraph, "invariant subspace is not a graph over the positive component");

  RiccatiSolution sol;
  sol.k = x1 * x0.inverse();
  sol.norm_k = spectral_norm(sol.k);
  if (sol.norm_k >= 1.0 - tolerances().contraction_margin)
    throw Error(ErrorCode::NotContractive, "angular operator is not a uniform contraction");

  sol.residual = riccati_residual(sol.k, inst);
  sol.z0 = inst.a0 + inst.b * sol.k;
  sol.z1 = inst.a1 - inst.b.adjoint() * sol.k.adjoint();
  sol.sigma0_prime = sigma0;
  sol.sigma1_prime = sigma1;

  const double floor = tolerances().sqrt_floor;
  const Matrix s0 = Matrix::Identity(n0, n0) - sol.k.adjoint() * sol.k;
  const Matrix s1 = Matrix::Identity(n1, n1) - sol.k * sol.k.adjoint();
  const Matrix s0_half = hermitian_sqrt(s0, floor);
  const Matrix s0_inv_half = hermitian_inv_sqrt(s0, floor);
  const Matrix s1_half = hermitian_sqrt(s1, floor);
  const Matrix s1_inv_half = hermitian_inv_sqrt(s1, floor);

  sol.lambda0 = s0_half * sol.z0 * s0_inv_half;
  sol.lambda1 = s1_half * sol.z1 * s1_inv_half;

  sol.t = Matrix(inst.dim(), inst.dim());
  sol.t.topLeftCorner(n0, n0) = s0_inv_half;
  sol.t.topRightCorner(n0, n1) = sol.k.adjoint() * s1_inv_half;
  sol.t.bottomLeftCorner(n1, n0) = sol.k * s0_inv_half;
  sol.t.bottomRightCorner(n1, n1) = s1_inv_half;
  sol.t_inv = sol.t.partialPivLu().inverse();
  return sol;
}

RiccatiSolution trivial_solution(const BlockInstance& inst) {
  RiccatiSolution sol;
  sol.k = Matrix::Zero(inst.n1, inst.n0);
  sol.norm_k = 0.0;
  sol.residual = 0.0;
  sol.z0 = inst.a0;
  sol.z1 = inst.a1;
  sol.t = Matrix::Identity(inst.dim(), inst.dim());
  sol.t_inv = sol.t;
  sol.lambda0 = inst.a0;
  sol.lambda1 = inst.a1;
  sol.sigma0_prime = hermitian_eigenvalues(inst.a0);
  sol.sigma1_prime = hermitian_eigenvalues(inst.a1);
  return sol;
}

void require_j_mode(const BlockInstance& inst) {
  if (inst.mode != Mode::JSelfAdjoint)
    throw Error(ErrorCode::HypothesesNotMet, "Riccati solve requires a j_self_adjoint instance");
}

} // namespace

RiccatiSolution solve_riccati_contractive(const BlockInstance& inst) {
  require_j_mode(inst);
  if (inst.b.norm() == 0.0) return trivial_solution(inst);

  const EigenSystem sys = real_eigensystem(inst);
  const KreinSignature sig = KreinSignature::of(inst);

  std::optional<std::vector<Index>> selected;
  const RealVector spec0 = hermitian_eigenvalues(inst.a0);
  const RealVector spec1 = hermitian_eigenvalues(inst.a1);
  const double d = set_distance(spec0, spec1);
  const double norm_v = spectral_norm(inst.b);
  if (d > 0.0 && norm_v < d / 2.0) {
    // Enclosure regime: each perturbed eigenvalue sits within r_V of exactly
    // one unperturbed component, so nearest-component grouping is exact.
    selected = group_by_reference(sys, spec0, spec1, inst.n0, inst.n1);
    if (selected && subset_margin(sys, *selected, sig) <= 0.0) selected.reset();
  }
  if (!selected) selected = group_exhaustive(sys, sig);
  if (!selected)
    throw Error(ErrorCode::NoDefiniteInvariantSubspace,
                "no uniformly positive invariant subspace found among eigenvector groupings");
  return solve_grouped(inst, sys, *selected);
}

RiccatiSolution solve_riccati_with_partition(const BlockInstance& inst, const RealVector& ref0,
                                             const RealVector& ref1) {
  require_j_mode(inst);
  if (inst.b.norm() == 0.0) return trivial_solution(inst);
  const EigenSystem sys = real_eigensystem(inst);
  auto selected = group_by_reference(sys, ref0, ref1, inst.n0, inst.n1);
  if (!selected)
    throw Error(ErrorCode::NoDefiniteInvariantSubspace,
                "reference partition does not split the spectrum into (n0, n1)");
  return solve_grouped(inst, sys, *selected);
}

double riccati_residual(const Matrix& k, const BlockInstance& inst) {
  return (k * inst.a0 - inst.a1 * k + k * inst.b * k + inst.b.adjoint()).norm();
}

Matrix dual_solution(const Matrix& k) {
  return k.adjoint();
}

double dual_riccati_residual(const Matrix& k_prime, const BlockInstance& inst) {
  return (k_prime * inst.a1 - inst.a0 * k_prime - k_prime * inst.b.adjoint() * k_prime - inst.b)
      .norm();
}

double transformed_riccati_residual(const RiccatiSolution& sol, const BlockInstance& inst) {
  const Index n0 = inst.n0;
  const Index n1 = inst.n1;
  const double floor = tolerances().sqrt_floor;
  const Matrix s0_half =
      hermitian_sqrt(Matrix::Identity(n0, n0) - sol.k.adjoint() * sol.k, floor);
  const Matrix s1_half =
      hermitian_sqrt(Matrix::Identity(n1, n1) - sol.k * sol.k.adjoint(), floor);
  return (sol.k * sol.lambda0 - sol.lambda1 * sol.k + s1_half * inst.b.adjoint() * s0_half).norm();
}

} // namespace krein
