#include "krein/core.hpp"

#include <algorithm>
#include <cmath>

#include "krein/linalg.hpp"
#include "krein/tolerances.hpp"

namespace krein {

Matrix BlockInstance::assemble() const {
  Matrix l = Matrix::Zero(dim(), dim());
  l.topLeftCorner(n0, n0) = a0;
  l.bottomRightCorner(n1, n1) = a1;
  l.topRightCorner(n0, n1) = b;
  l.bottomLeftCorner(n1, n0) = c;
  return l;
}

Matrix BlockInstance::v_block() const {
  Matrix v = Matrix::Zero(dim(), dim());
  v.topRightCorner(n0, n1) = b;
  v.bottomLeftCorner(n1, n0) = c;
  return v;
}

double BlockInstance::norm_v() const {
  return spectral_norm(v_block());
}

BlockInstance build_instance(const Matrix& a0, const Matrix& a1, const Matrix& b,
                             const std::optional<Matrix>& c_opt, Mode mode) {
  const Index n0 = a0.rows();
  const Index n1 = a1.rows();
  if (n0 < 1 || n1 < 1) throw Error(ErrorCode::DimensionMismatch, "n0 and n1 must be >= 1");
  if (a0.cols() != n0 || a1.cols() != n1)
    throw Error(ErrorCode::DimensionMismatch, "diagonal blocks must be square");
  if (b.rows() != n0 || b.cols() != n1)
    throw Error(ErrorCode::DimensionMismatch, "b must be n0 x n1");

  BlockInstance inst;
  inst.n0 = n0;
  inst.n1 = n1;
  inst.a0 = a0;
  inst.a1 = a1;
  inst.b = b;
  inst.mode = mode;

  if (mode == Mode::JSelfAdjoint) {
    if (c_opt.has_value())
      throw Error(ErrorCode::InvalidInput, "c must be absent in j_self_adjoint mode (c := -b*)");
    const double tol = tolerances().hermitian;
    if (!is_hermitian(a0, tol))
      throw Error(ErrorCode::NotHermitian, "a0 is not Hermitian");
    if (!is_hermitian(a1, tol))
      throw Error(ErrorCode::NotHermitian, "a1 is not Hermitian");
    inst.c = -b.adjoint();
  } else {
    if (!c_opt.has_value())
      throw Error(ErrorCode::InvalidInput, "general mode requires an explicit c block");
    if (c_opt->rows() != n1 || c_opt->cols() != n0)
      throw Error(ErrorCode::DimensionMismatch, "c must be n1 x n0");
    inst.c = *c_opt;
  }
  return inst;
}

Vector KreinSignature::apply(const Vector& x) const {
  Vector jx = x;
  jx.tail(n1) = -jx.tail(n1);
  return jx;
}

Matrix KreinSignature::matrix() const {
  Matrix j = Matrix::Identity(dim(), dim());
  j.bottomRightCorner(n1, n1) = -Matrix::Identity(n1, n1);
  return j;
}

Complex krein_inner(const Vector& x, const Vector& y, const KreinSignature& sig) {
  if (x.size() != sig.dim() || y.size() != sig.dim())
    throw Error(ErrorCode::DimensionMismatch, "krein_inner: vectors must have ambient dimension");
  // (J x, y) with (u, v) = sum_i u_i conj(v_i); Eigen's dot conjugates its
  // first factor, so (u, v) = y.dot(u).
  return y.dot(sig.apply(x));
}

Subspace make_subspace(const Matrix& orthonormal_basis) {
  const Matrix& x = orthonormal_basis;
  const Matrix gram = x.adjoint() * x;
  const double defect = (gram - Matrix::Identity(x.cols(), x.cols())).norm();
  if (defect > tolerances().orthonormal * (1.0 + std::sqrt(double(x.cols()))))
    throw Error(ErrorCode::DimensionMismatch, "basis columns are not orthonormal");
  return Subspace{x.rows(), x};
}

double definiteness_margin(const Subspace& sub, const KreinSignature& sig) {
  return definite_extremes(sub, sig).first;
}

std::pair<double, double> definite_extremes(const Subspace& sub, const KreinSignature& sig) {
  if (sub.ambient != sig.dim())
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension mismatch");
  const Matrix compressed = sub.basis.adjoint() * sig.matrix() * sub.basis;
  const RealVector vals = hermitian_eigenvalues(compressed);
  return {vals(0), vals(vals.size() - 1)};
}

namespace {

Matrix orthonormalize_columns(const Matrix& m) {
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  return q;
}

} // namespace

Subspace span_subspace(const Matrix& columns) {
  return Subspace{columns.rows(), orthonormalize_columns(columns)};
}

Subspace graph_subspace(const Matrix& k, const KreinSignature& sig, GraphOver over) {
  const Index n0 = sig.n0;
  const Index n1 = sig.n1;
  Matrix stacked(sig.dim(), over == GraphOver::First ? n0 : n1);
  if (over == GraphOver::First) {
    if (k.rows() != n1 || k.cols() != n0)
      throw Error(ErrorCode::DimensionMismatch, "graph over the first component needs n1 x n0");
    stacked.topRows(n0) = Matrix::Identity(n0, n0);
    stacked.bottomRows(n1) = k;
  } else {
    if (k.rows() != n0 || k.cols() != n1)
      throw Error(ErrorCode::DimensionMismatch, "graph over the second component needs n0 x n1");
    stacked.topRows(n0) = k;
    stacked.bottomRows(n1) = Matrix::Identity(n1, n1);
  }
  return Subspace{sig.dim(), orthonormalize_columns(stacked)};
}

Subspace graph_subspace(const Matrix& k, const KreinSignature& sig) {
  if (k.rows() == sig.n1 && k.cols() == sig.n0)
    return graph_subspace(k, sig, GraphOver::First);
  if (k.rows() == sig.n0 && k.cols() == sig.n1)
    return graph_subspace(k, sig, GraphOver::Second);
  throw Error(ErrorCode::DimensionMismatch, "graph operator must be n1 x n0 or n0 x n1");
}

Subspace j_orthogonal_complement(const Subspace& sub, const KreinSignature& sig) {
  if (definiteness_margin(sub, sig) <= 0.0)
    throw Error(ErrorCode::NotUniformlyDefinite, "input subspace is not uniformly positive");
  // Recover the angular operator of the graph over the first component.
  const Matrix x0 = sub.basis.topRows(sig.n0);
  const Matrix x1 = sub.basis.bottomRows(sig.n1);
  if (sub.dim() != sig.n0 || condition_number(x0) > tolerances().graph_condition)
    throw Error(ErrorCode::NotAGraph, "subspace is not a graph over the positive component");
  const Matrix k = x1 * x0.inverse();
  return graph_subspace(Matrix(k.adjoint()), sig, GraphOver::Second);
}

namespace {

struct LabeledPoint {
  double value;
  int label; // 0 or 1
};

double same_point_tol(double x, double y) {
  return tolerances().same_point * (1.0 + std::max(std::abs(x), std::abs(y)));
}

std::vector<LabeledPoint> merge_sorted(const RealVector& set0, const RealVector& set1) {
  if (set0.size() == 0 || set1.size() == 0)
    throw Error(ErrorCode::InvalidInput, "spectral sets must be nonempty");
  std::vector<LabeledPoint> pts;
  pts.reserve(set0.size() + set1.size());
  for (Index i = 0; i < set0.size(); ++i) pts.push_back({set0(i), 0});
  for (Index i = 0; i < set1.size(); ++i) pts.push_back({set1(i), 1});
  std::sort(pts.begin(), pts.end(),
            [](const LabeledPoint& a, const LabeledPoint& b) { return a.value < b.value; });
  return pts;
}

} // namespace

Disposition classify_disposition(const RealVector& set0, const RealVector& set1) {
  if (set0.size() == 0 || set1.size() == 0)
    throw Error(ErrorCode::InvalidInput, "spectral sets must be nonempty");

  double d = std::numeric_limits<double>::infinity();
  double at_min = 0.0;
  for (Index i = 0; i < set0.size(); ++i) {
    for (Index j = 0; j < set1.size(); ++j) {
      const double dist = std::abs(set0(i) - set1(j));
      if (dist < d) {
        d = dist;
        at_min = std::max(std::abs(set0(i)), std::abs(set1(j)));
      }
    }
  }
  if (d <= tolerances().same_point * (1.0 + at_min))
    throw Error(ErrorCode::SetsIntersect, "spectral sets intersect within tolerance");

  const double min0 = set0.minCoeff(), max0 = set0.maxCoeff();
  const double min1 = set1.minCoeff(), max1 = set1.maxCoeff();

  const bool gap0 = std::none_of(set1.data(), set1.data() + set1.size(),
                                 [&](double y) { return y >= min0 && y <= max0; });
  const bool gap1 = std::none_of(set0.data(), set0.data() + set0.size(),
                                 [&](double x) { return x >= min1 && x <= max1; });
  const bool subord = (max0 < min1) || (max1 < min0);

  Disposition disp;
  disp.d = d;
  if (subord) {
    disp.kind = Disposition::Kind::Subordinated;
  } else if (gap0 || gap1) {
    disp.kind = Disposition::Kind::GapOf;
    disp.which_inner = gap0 ? 0 : 1;
  } else {
    disp.kind = Disposition::Kind::Generic;
  }
  return disp;
}

std::vector<std::pair<double, double>> enumerate_separating_gaps(const RealVector& set0,
                                                                 const RealVector& set1) {
  auto pts = merge_sorted(set0, set1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1].label != pts[i].label &&
        pts[i + 1].value - pts[i].value <= same_point_tol(pts[i].value, pts[i + 1].value))
      throw Error(ErrorCode::SetsIntersect, "spectral sets intersect within tolerance");
  }
  std::vector<std::pair<double, double>> gaps;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i].value;
    const double hi = pts[i + 1].value;
    if (hi - lo <= same_point_tol(lo, hi)) continue;  // coincident points of one set
    if (pts[i].label != pts[i + 1].label) gaps.emplace_back(lo, hi);
  }
  return gaps;
}

} // namespace krein
