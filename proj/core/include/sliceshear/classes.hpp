#pragma once

// Named classes of the slice spectral sequence: products of Euler classes
// a_V, orientation classes u_V and normed t-bar generators, with an integer
// coefficient, at a fixed level C_{2^l} of an ambient group C_{2^n}.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sliceshear/rep.hpp"

namespace sliceshear {

/// N_{C_2}^{C_{2^j}}(tbar_i).
struct NormKey {
  int i = 1;
  int j = 1;

  /// Canonical order is by j, then i.
  friend auto operator<=>(const NormKey& a, const NormKey& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  friend bool operator==(const NormKey&, const NormKey&) = default;
};

class ClassMonomial {
 public:
  /// The unit class at the given level.
  ClassMonomial(CyclicGroup group, int level);
  /// The unit class at the top level.
  explicit ClassMonomial(CyclicGroup group) : ClassMonomial(group, group.exponent()) {}

  static ClassMonomial constant(CyclicGroup group, int level, Int coeff);
  static ClassMonomial a_sigma(CyclicGroup group, int level, Int exponent = 1);
  static ClassMonomial a_lambda(CyclicGroup group, int level, int i, Int exponent = 1);
  static ClassMonomial u_2sigma(CyclicGroup group, int level, Int exponent = 1);
  static ClassMonomial u_lambda(CyclicGroup group, int level, int i, Int exponent = 1);
  static ClassMonomial norm_t(CyclicGroup group, int level, int i, int j, Int exponent = 1);

  CyclicGroup group() const noexcept { return group_; }
  int level() const noexcept { return level_; }
  Int coeff() const noexcept { return coeff_; }
  const std::map<NormKey, Int>& norms() const noexcept { return norms_; }

  /// Exponents over {sigma, lambda_1, ..., lambda_{l-1}} (index 0 is sigma).
  std::span<const Int> a_exponents() const noexcept { return a_exp_; }
  /// Exponents over {2 sigma, lambda_1, ..., lambda_{l-1}} (index 0 is 2 sigma).
  std::span<const Int> u_exponents() const noexcept { return u_exp_; }

  bool is_zero() const noexcept { return coeff_ == 0; }
  bool is_unit() const noexcept;
  /// True when the class is a product of u's with coefficient 1.
  bool is_pure_orientation() const noexcept;

  ClassMonomial with_coeff(Int c) const;
  /// The same class with every norm factor dropped.
  ClassMonomial without_norms() const;
  /// Same names over a larger group and/or a higher level (name-preserving).
  ClassMonomial pulled_back(CyclicGroup group, int level) const;

  friend ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b);
  friend bool operator==(const ClassMonomial&, const ClassMonomial&) = default;

  /// Canonical ASCII form, e.g. "Nt[1,2]*aL1*aS^2", "3*u2S", "1", "0".
  std::string str() const;
  /// Display form with Greek letters.
  std::string pretty() const;

  /// Smallest torsion order forced by the Euler classes present, or 0.
  Int torsion_modulus() const noexcept;

 private:
  void normalize();
  void add_exponent(std::vector<Int>& exps, std::size_t index, Int e);

  CyclicGroup group_;
  int level_ = 0;
  Int coeff_ = 1;
  std::map<NormKey, Int> norms_;
  std::vector<Int> a_exp_;
  std::vector<Int> u_exp_;
};

/// Requires the same group and level. Coefficients multiply, exponents add.
ClassMonomial multiply(const ClassMonomial& a, const ClassMonomial& b);
/// m^e for e >= 0.
ClassMonomial power(const ClassMonomial& m, Int e);

/// RO(C_{2^l})-degree. Throws DomainError for the zero class.
VirtualRep degree(const ClassMonomial& m);

struct Bidegree {
  Int stem = 0;        ///< t - s = |degree|
  Int filtration = 0;  ///< s
  Int slice_dim = 0;   ///< t

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

Bidegree bidegree(const ClassMonomial& m);

/// a_V for an actual representation V with no trivial summand, at the top
/// level of V's group.
ClassMonomial expand_euler(const VirtualRep& v);

/// The orientation representation V of a pure u-monomial u_V.
VirtualRep orientation_rep(const ClassMonomial& m);

/// prod_{k=1}^{n} N_{C_2}^{C_{2^n}}(tbar_{2^{n-k} m}) over C_{2^n}.
ClassMonomial build_D(int n, Int m);
/// build_D without the k = 1 factor.
ClassMonomial build_Dbar(int n, Int m);

}  // namespace sliceshear
