#pragma once

// Reference computations that share no code with the engine. They work from
// characters, closed forms and raw exponent vectors.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "sliceshear/classes.hpp"
#include "sliceshear/differentials.hpp"
#include "sliceshear/rep.hpp"

namespace oracle {

using sliceshear::Int;

// Character of an irreducible of C_{2^n} at gamma^a.
//   basis 0: trivial, 1: sigma, 1 + i: lambda_i (rotation by pi / 2^i).
inline double character(int basis, Int a) {
  if (basis == 0) return 1.0;
  if (basis == 1) return (a % 2 == 0) ? 1.0 : -1.0;
  const int i = basis - 1;
  return 2.0 * std::cos(std::numbers::pi * static_cast<double>(a) / std::ldexp(1.0, i));
}

inline Int round_exact(double x) {
  const double r = std::round(x);
  if (std::fabs(r - x) > 1e-6) throw std::logic_error("character average is not integral");
  return static_cast<Int>(r);
}

// dim of the C_{2^k}-fixed subspace of an irreducible of C_{2^n}, by averaging
// its character over the subgroup generated by gamma^{2^{n-k}}.
inline Int fixed_dim_by_average(int n, int basis, int k) {
  const Int order = Int{1} << k;
  const Int step = Int{1} << (n - k);
  double total = 0;
  for (Int b = 0; b < order; ++b) total += character(basis, b * step);
  return round_exact(total / static_cast<double>(order));
}

// Character of a virtual rep at gamma^a.
inline double rep_character(const sliceshear::VirtualRep& v, Int a) {
  double total = 0;
  const auto c = v.coefficients();
  for (std::size_t b = 0; b < c.size(); ++b) total += static_cast<double>(c[b]) * character(static_cast<int>(b), a);
  return total;
}

// Bidegree straight from exponent vectors.
struct RawBidegree {
  Int stem;
  Int filtration;
  Int slice_dim;
};

inline RawBidegree raw_bidegree(const sliceshear::ClassMonomial& m) {
  Int t = 0;
  for (const auto& [key, e] : m.norms()) t += e * ((Int{1} << key.i) - 1) * (Int{1} << key.j);
  Int s = 0;
  const auto a = m.a_exponents();
  for (std::size_t i = 0; i < a.size(); ++i) s += (i == 0 ? 1 : 2) * a[i];
  return {t - s, s, t};
}

// Closed-form exponent data of the differential family over C_{2^{n+1}}.
struct FamilyShape {
  Int page;
  Int u2s;
  Int a_sigma;
  std::vector<Int> a_lambda;  // index m - 1 for lambda_m, 1 <= m <= n
  int norm_i;
  int norm_j;
};

inline FamilyShape family_shape(int n, int i) {
  FamilyShape f;
  const Int e = (Int{1} << i) - 1;
  f.page = (Int{1} << (n + 1)) * e + 1;
  f.u2s = Int{1} << (i - 1);
  f.a_sigma = (Int{1} << (i + 1)) - 1;
  for (int m = 1; m <= n; ++m) f.a_lambda.push_back((Int{1} << (m - 1)) * e);
  f.norm_i = i;
  f.norm_j = n + 1;
  return f;
}

inline bool matches_shape(const sliceshear::Differential& d, int n, int i) {
  const FamilyShape f = family_shape(n, i);
  if (d.group.exponent() != n + 1 || d.page != f.page) return false;
  if (d.source.level() != n + 1 || d.target.level() != n + 1) return false;
  if (d.source.coeff() != 1 || d.target.coeff() != 1) return false;
  if (!d.source.norms().empty()) return false;
  const auto su = d.source.u_exponents();
  const auto sa = d.source.a_exponents();
  for (std::size_t k = 0; k < su.size(); ++k) {
    if (su[k] != (k == 0 ? f.u2s : 0)) return false;
    if (sa[k] != 0) return false;
  }
  if (d.target.norms().size() != 1) return false;
  const auto& [key, e] = *d.target.norms().begin();
  if (key.i != f.norm_i || key.j != f.norm_j || e != 1) return false;
  const auto ta = d.target.a_exponents();
  const auto tu = d.target.u_exponents();
  if (ta[0] != f.a_sigma) return false;
  for (int m = 1; m <= n; ++m) {
    if (ta[static_cast<std::size_t>(m)] != f.a_lambda[static_cast<std::size_t>(m - 1)]) return false;
  }
  for (Int x : tu) {
    if (x != 0) return false;
  }
  return true;
}

// N_k by repeated doubling.
inline Int n_k(Int h, int n, int k) {
  Int p = 1;
  for (Int step = 0; step < h / (Int{1} << k) + n + 1; ++step) p *= 2;
  return p - (Int{1} << (n + 1)) + (Int{1} << k);
}

// Random actual or virtual representation over C_{2^n}.
inline sliceshear::VirtualRep random_rep(std::mt19937_64& rng, int n, Int lo, Int hi) {
  std::uniform_int_distribution<Int> coef(lo, hi);
  std::vector<Int> c(static_cast<std::size_t>(n) + 1);
  for (auto& x : c) x = coef(rng);
  return sliceshear::VirtualRep(sliceshear::CyclicGroup(n), c);
}

// Random coefficient-one monomial over C_{2^n} at the given level.
inline sliceshear::ClassMonomial random_monomial(std::mt19937_64& rng, int n, int level, Int max_exp = 4,
                                                 int max_norms = 2) {
  using sliceshear::ClassMonomial;
  using sliceshear::CyclicGroup;
  const CyclicGroup g(n);
  std::uniform_int_distribution<Int> ex(0, max_exp);
  std::uniform_int_distribution<int> nn(0, max_norms);
  ClassMonomial m(g, level);
  if (level >= 1) {
    m = m * ClassMonomial::a_sigma(g, level, ex(rng)) * ClassMonomial::u_2sigma(g, level, ex(rng));
    for (int i = 1; i < level; ++i) {
      m = m * ClassMonomial::a_lambda(g, level, i, ex(rng)) * ClassMonomial::u_lambda(g, level, i, ex(rng));
    }
    const int count = nn(rng);
    std::uniform_int_distribution<int> ii(1, 5);
    std::uniform_int_distribution<int> jj(1, level);
    std::uniform_int_distribution<Int> ee(1, 3);
    for (int c = 0; c < count; ++c) m = m * ClassMonomial::norm_t(g, level, ii(rng), jj(rng), ee(rng));
  }
  return m;
}

}  // namespace oracle
