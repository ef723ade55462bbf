#pragma once

// The shearing isomorphism between the slice spectral sequences over
// C_{2^{N-k}} and C_{2^N}: bidegree and length transforms, and the
// correspondence of named classes.

#include <utility>
#include <vector>

#include "sliceshear/classes.hpp"
#include "sliceshear/rep.hpp"

namespace sliceshear {

class ShearContext {
 public:
  /// `target` is C_{2^N}; the source group is C_{2^{N-k}}. 0 <= k <= N - 1.
  /// `grading` lives over the target group.
  ShearContext(CyclicGroup target, int k, VirtualRep grading);
  /// Zero grading.
  ShearContext(CyclicGroup target, int k);

  CyclicGroup source_group() const noexcept { return source_; }
  CyclicGroup target_group() const noexcept { return target_; }
  int k() const noexcept { return k_; }
  const VirtualRep& grading() const noexcept { return grading_; }
  /// V^{C_{2^k}}, the grading of the source page.
  VirtualRep source_grading() const { return fixed_points(grading_, k_); }
  /// C_{V,k}; zero when k = 0.
  Rational threshold() const;

 private:
  CyclicGroup source_;
  CyclicGroup target_;
  int k_;
  VirtualRep grading_;
};

/// 2^k r - (2^k - 1). Requires r >= 2 and k >= 0.
Int shear_length(Int r, int k);
/// Inverse of shear_length. Throws DomainError when r' is not in the image.
Int unshear_length(Int r_prime, int k);

struct ShearedDegree {
  Int t = 0;
  Int s = 0;
  friend bool operator==(const ShearedDegree&, const ShearedDegree&) = default;
};

ShearedDegree shear_degree(const ShearContext& ctx, Int t, Int s);

/// prod_{m=j}^{k+j-1} a_{lambda_m}^{2^{m-1} p} over C_{2^N} at level k + j.
ClassMonomial euler_ratio(CyclicGroup ambient, int k, int j, Int power);

/// Image of a class over the source group under the correspondence.
ClassMonomial correspond_class(const ClassMonomial& m, const ShearContext& ctx);

struct TowerEntry {
  int k = 0;
  Line line;
  Rational threshold;
  CyclicGroup group;
  Int height = 0;
};

/// One entry per 1 <= k <= n for the tower over C_{2^{n+1}} at height 2^n m.
std::vector<TowerEntry> tower_report(int n, Int m, const VirtualRep& v);

}  // namespace sliceshear
