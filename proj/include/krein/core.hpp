#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "krein/errors.hpp"
#include "krein/types.hpp"

namespace krein {

enum class Mode { JSelfAdjoint, General };

/// 2x2 block matrix L = A + V over C^{n0+n1}: diagonal blocks a0, a1 and
/// off-diagonal perturbation blocks b (upper right) and c (lower left).
/// In JSelfAdjoint mode c is constructed as -b* and a0, a1 are Hermitian,
/// so that J L is Hermitian for J = diag(+I_{n0}, -I_{n1}).
struct BlockInstance {
  Index n0 = 0;
  Index n1 = 0;
  Matrix a0, a1, b, c;
  Mode mode = Mode::JSelfAdjoint;

  Index dim() const { return n0 + n1; }
  Matrix assemble() const;   // dense (n0+n1) x (n0+n1) matrix of L
  Matrix v_block() const;    // dense matrix of V (off-diagonal part)
  double norm_v() const;     // spectral norm of V
};

/// Validates dimensions and, in JSelfAdjoint mode, Hermitian diagonal blocks;
/// there c_opt must be absent and c := -b*. Throws DimensionMismatch or
/// NotHermitian.
BlockInstance build_instance(const Matrix& a0, const Matrix& a1, const Matrix& b,
                             const std::optional<Matrix>& c_opt, Mode mode);

/// The involution J = diag(+I_{n0}, -I_{n1}) acting on C^{n0+n1}.
struct KreinSignature {
  Index n0 = 0;
  Index n1 = 0;

  Index dim() const { return n0 + n1; }
  Vector apply(const Vector& x) const;  // J x
  Matrix matrix() const;

  static KreinSignature of(const BlockInstance& inst) { return {inst.n0, inst.n1}; }
};

/// Indefinite inner product [x, y] = (J x, y), linear in the first argument
/// and conjugate-linear in the second. [x, x] is always real.
Complex krein_inner(const Vector& x, const Vector& y, const KreinSignature& sig);

/// Subspace of C^ambient given by an orthonormal column basis.
struct Subspace {
  Index ambient = 0;
  Matrix basis;  // ambient x dim, orthonormal columns

  Index dim() const { return basis.cols(); }
};

/// Wraps a basis as a Subspace, checking orthonormality. Throws
/// DimensionMismatch on a basis that is not orthonormal to tolerance.
Subspace make_subspace(const Matrix& orthonormal_basis);

/// Orthonormalizes the given (full-rank) columns by column-pivoted QR.
Subspace span_subspace(const Matrix& columns);

/// gamma = smallest eigenvalue of X* J X for the orthonormal basis X of sub.
/// gamma > 0 certifies the subspace uniformly positive; a largest eigenvalue
/// < 0 certifies uniformly negative (see definite_extremes).
double definiteness_margin(const Subspace& sub, const KreinSignature& sig);

/// (smallest, largest) eigenvalue of X* J X.
std::pair<double, double> definite_extremes(const Subspace& sub, const KreinSignature& sig);

/// Which coordinate component a graph operator maps out of.
enum class GraphOver { First, Second };

/// Orthonormal basis (column-pivoted QR) of the graph {(x, Kx)} for
/// k : n1 x n0 over the first component, or {(Ky, y)} for k : n0 x n1 over
/// the second.
Subspace graph_subspace(const Matrix& k, const KreinSignature& sig, GraphOver over);

/// Shape-inferred overload; a square k is read as a graph over the first
/// component.
Subspace graph_subspace(const Matrix& k, const KreinSignature& sig);

/// J-orthogonal complement of a uniformly positive graph subspace G(K);
/// returns G(K*). Throws NotUniformlyDefinite when the input margin is <= 0
/// and NotAGraph when the input is not a graph over the first component.
Subspace j_orthogonal_complement(const Subspace& sub, const KreinSignature& sig);

/// Mutual geometry of two disjoint real spectral sets.
///  - Subordinated: the convex hulls are disjoint (one set entirely to one
///    side of the other); implies both gap conditions.
///  - GapOf: conv(set_i) contains no point of set_{1-i} for exactly one i
///    (set_i lies in a finite or infinite gap of set_{1-i}).
///  - Generic: merely disjoint.
struct Disposition {
  enum class Kind { Generic, GapOf, Subordinated };

  Kind kind = Kind::Generic;
  double d = 0.0;       // min pairwise distance
  int which_inner = -1; // i for GapOf; -1 otherwise

  bool gap_any() const { return kind != Kind::Generic; }
  bool subordinated() const { return kind == Kind::Subordinated; }
  // True when set_i lies in a (finite or infinite) gap of set_{1-i}.
  bool has_gap(int i) const {
    if (kind == Kind::Subordinated) return true;
    return kind == Kind::GapOf && which_inner == i;
  }
};

/// Classifies two nonempty eigenvalue lists; reports the strongest applicable
/// kind. Throws SetsIntersect when the sets share a point within the
/// same-point tolerance.
Disposition classify_disposition(const RealVector& set0, const RealVector& set1);

/// Maximal open intervals disjoint from set0 and set1 whose two endpoints
/// belong to different sets, sorted. Throws SetsIntersect.
std::vector<std::pair<double, double>> enumerate_separating_gaps(const RealVector& set0,
                                                                 const RealVector& set1);

} // namespace krein
