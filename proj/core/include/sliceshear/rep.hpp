#pragma once

// Cyclic 2-groups C_{2^n} and their 2-local real representation rings.
//
// RO(C_{2^n}) is carried in the basis {1, sigma, lambda_1, ..., lambda_{n-1}}:
// sigma is the sign representation and lambda_i is the plane rotating by
// pi / 2^i under the generator. The coefficient vector therefore always has
// exactly n + 1 entries:
//
//   index 0      trivial summand
//   index 1      sigma          (present for n >= 1)
//   index 1 + i  lambda_i       (1 <= i <= n - 1)

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "sliceshear/rational.hpp"

namespace sliceshear {

/// The cyclic group of order 2^exponent.
class CyclicGroup {
 public:
  /// Largest supported exponent. Keeps every 2^j * dimension product in Int.
  static constexpr int max_exponent = 30;

  constexpr CyclicGroup() noexcept = default;
  explicit CyclicGroup(int exponent);

  int exponent() const noexcept { return exponent_; }
  Int order() const noexcept { return Int{1} << exponent_; }
  /// "C1", "C2", "C4", ...
  std::string name() const;

  friend auto operator<=>(const CyclicGroup&, const CyclicGroup&) = default;

 private:
  int exponent_ = 0;
};

/// Parses "C<2^n>" (e.g. "C8") into a group. Throws DomainError for orders
/// that are not powers of two.
CyclicGroup parse_group_name(const std::string& text);

class VirtualRep {
 public:
  /// The zero element of RO(g).
  explicit VirtualRep(CyclicGroup g);
  /// Coefficients in the basis order above; size must be exponent + 1.
  VirtualRep(CyclicGroup g, std::vector<Int> coefficients);

  static VirtualRep trivial(CyclicGroup g, Int multiplicity = 1);
  static VirtualRep sigma(CyclicGroup g, Int multiplicity = 1);
  static VirtualRep lambda(CyclicGroup g, int i, Int multiplicity = 1);

  CyclicGroup group() const noexcept { return group_; }
  Int triv() const noexcept { return coeffs_[0]; }
  /// Zero for the trivial group.
  Int sigma() const noexcept { return coeffs_.size() > 1 ? coeffs_[1] : 0; }
  /// Zero when lambda_i is not a basis element of this group.
  Int lambda(int i) const noexcept;
  std::span<const Int> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  /// True when every coefficient is non-negative (an actual representation).
  bool is_actual() const noexcept;

  VirtualRep operator-() const;
  friend VirtualRep operator+(const VirtualRep& a, const VirtualRep& b);
  friend VirtualRep operator-(const VirtualRep& a, const VirtualRep& b);
  friend VirtualRep operator*(Int scalar, const VirtualRep& v);
  VirtualRep& operator+=(const VirtualRep& o) { return *this = *this + o; }
  VirtualRep& operator-=(const VirtualRep& o) { return *this = *this - o; }

  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

  /// Canonical ASCII literal: trivial part, then lambdas from the highest
  /// index down, then sigma. E.g. "10-4l1-2s", "0".
  std::string str() const;
  /// Same ordering with Greek letters: "10 − 4λ₁ − 2σ".
  std::string pretty() const;

 private:
  CyclicGroup group_;
  std::vector<Int> coeffs_;
};

/// Virtual real dimension.
Int dimension(const VirtualRep& v);

/// Fixed points under the subgroup C_{2^k}, as an element of
/// RO(C_{2^n} / C_{2^k}) = RO(C_{2^{n-k}}). Requires 0 <= k <= n.
VirtualRep fixed_points(const VirtualRep& v, int k);

/// Name-preserving pullback along C_{2^n} -> C_{2^m} for a target group of
/// exponent n >= m.
VirtualRep pullback(const VirtualRep& v, CyclicGroup to);

/// Restriction to the subgroup C_{2^m}. Requires 0 <= m <= n.
VirtualRep restrict(const VirtualRep& v, int m);

/// The regular representation rho_{2^n}.
VirtualRep regular_rep(CyclicGroup g);

/// rho-bar_{2^{n+1} / 2^k} as an element of RO(C_{2^{n+1}}), where
/// `n_plus_1` is the group exponent. k = 0 gives the reduced regular
/// representation. Requires n_plus_1 >= 1 and 0 <= k <= n_plus_1 - 1.
VirtualRep rho_bar(int n_plus_1, int k);

/// tau_V(F_{<= 2^k}) = max_{0 <= j <= k} (|V^{C_{2^j}}| 2^j - |V|).
Int tau(const VirtualRep& v, int k);

/// A chart line s = slope * x + intercept with x = t - s.
struct Line {
  Int slope = 0;
  Rational intercept;
  VirtualRep grading{CyclicGroup{}};

  Rational value_at(const Rational& x) const { return Rational(slope) * x + intercept; }
  bool on_or_above(Int x, Int s) const { return Rational(s) >= value_at(Rational(x)); }
  bool on(Int x, Int s) const { return Rational(s) == value_at(Rational(x)); }

  /// "s = 3(t-s) + 2" style description.
  std::string str() const;

  friend bool operator==(const Line&, const Line&) = default;
};

/// The stratification line of slope 2^k - 1 with intercept tau(v, k).
/// Requires 0 <= k <= exponent of v's group.
Line line_L(const VirtualRep& v, int k);

/// The horizontal threshold on the lower-group side of the k-th shear.
/// Requires 1 <= k <= exponent - 1.
Rational constant_C(const VirtualRep& v, int k);

}  // namespace sliceshear
