#pragma once

// Vanishing lines N_k, the positive-cone boundary and necessary conditions on
// differentials in the slice spectral sequence of a height-h theory over
// C_{2^{n+1}}.

#include <optional>
#include <string>
#include <vector>

#include "sliceshear/differentials.hpp"
#include "sliceshear/rep.hpp"

namespace sliceshear {

class VanishingProfile {
 public:
  /// Requires n >= 0, h >= 1, 2^n | h and v over C_{2^{n+1}}.
  VanishingProfile(int n, Int h, VirtualRep v);
  VanishingProfile(int n, Int h);

  int n() const noexcept { return n_; }
  Int height() const noexcept { return h_; }
  const VirtualRep& grading() const noexcept { return v_; }
  CyclicGroup group() const noexcept { return v_.group(); }

 private:
  int n_;
  Int h_;
  VirtualRep v_;
};

/// 2^{h/2^k + n + 1} - 2^{n+1} + 2^k.
Int N_constant(Int h, int n, int k);
/// Longest differential allowed from on/above L_k: N_k - (2^k - 1).
Int max_length(Int h, int n, int k);

Line vanishing_line(const VirtualRep& v, Int h, int n, int k);
Line boundary_line(const VirtualRep& v, int n);

struct AdmissibilityViolation {
  int k = 0;
  char clause = 'a';
  std::string message;
};

struct AdmissibilityReport {
  std::vector<AdmissibilityViolation> violations;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks, for every 0 <= k <= n:
///  (a) source on/above L_k: r <= N_k - (2^k - 1) and r = 1 mod 2^k;
///  (b) source below L_k: target strictly below the k-th vanishing line;
///  (c) source on/above L_n: target on or below the boundary line.
/// Points with t - s < 0 are skipped.
AdmissibilityReport admissible(const Differential& d, const VanishingProfile& profile);

/// Largest k with (x, s) on/above L_k, or nullopt below L_0. Requires x >= 0.
std::optional<int> region_classify(Int x, Int s, const VirtualRep& v, int n);

}  // namespace sliceshear
