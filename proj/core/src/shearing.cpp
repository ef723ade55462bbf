#include "sliceshear/shearing.hpp"

#include "sliceshear/error.hpp"

namespace sliceshear {

namespace {

int checked_source_exponent(CyclicGroup target, int k) {
  if (k < 0 || k > target.exponent() - 1) {
    throw DomainError("shear index k=" + std::to_string(k) + " outside [0, " +
                      std::to_string(target.exponent() - 1) + "] for " + target.name());
  }
  return target.exponent() - k;
}

}  // namespace

ShearContext::ShearContext(CyclicGroup target, int k, VirtualRep grading)
    : source_(checked_source_exponent(target, k)), target_(target), k_(k), grading_(std::move(grading)) {
  if (grading_.group() != target_) {
    throw DomainError("shear grading lives over " + grading_.group().name() + ", expected " + target_.name());
  }
}

ShearContext::ShearContext(CyclicGroup target, int k) : ShearContext(target, k, VirtualRep(target)) {}

Rational ShearContext::threshold() const {
  if (k_ == 0) return Rational(0);
  return constant_C(grading_, k_);
}

Int shear_length(Int r, int k) {
  if (k < 0) throw DomainError("shear index must be non-negative");
  if (r < 2) throw DomainError("differential length " + std::to_string(r) + " is below 2");
  const Int p = pow2(k);
  return checked_sub(checked_mul(p, r), p - 1);
}

Int unshear_length(Int r_prime, int k) {
  if (k < 0) throw DomainError("shear index must be non-negative");
  if (k == 0) {
    if (r_prime < 2) throw DomainError("differential length " + std::to_string(r_prime) + " is below 2");
    return r_prime;
  }
  if (r_prime < 3) throw DomainError("length " + std::to_string(r_prime) + " is not a sheared length");
  const Int p = pow2(k);
  if (mod_floor(r_prime, p) != 1) {
    throw DomainError("length " + std::to_string(r_prime) + " is not 1 mod " + std::to_string(p) +
                      "; no differential of this length in the sheared region");
  }
  return (r_prime + p - 1) / p;
}

ShearedDegree shear_degree(const ShearContext& ctx, Int t, Int s) {
  const Int p = pow2(ctx.k());
  const Int c = checked_sub(checked_mul(dimension(ctx.source_grading()), p), dimension(ctx.grading()));
  ShearedDegree out;
  out.t = checked_add(c, checked_mul(p, t));
  out.s = checked_add(checked_add(c, checked_mul(p - 1, checked_sub(t, s))), checked_mul(p, s));
  return out;
}

ClassMonomial euler_ratio(CyclicGroup ambient, int k, int j, Int power) {
  if (k < 1 || j < 1) throw DomainError("euler_ratio needs k >= 1 and j >= 1");
  ClassMonomial out(ambient, k + j);
  for (int m = j; m <= k + j - 1; ++m) {
    out = out * ClassMonomial::a_lambda(ambient, k + j, m, checked_mul(pow2(m - 1), power));
  }
  return out;
}

ClassMonomial correspond_class(const ClassMonomial& m, const ShearContext& ctx) {
  if (m.group() != ctx.source_group()) {
    throw DomainError("class lives over " + m.group().name() + ", shear source is " + ctx.source_group().name());
  }
  const int k = ctx.k();
  const CyclicGroup g = ctx.target_group();
  const int level = m.level() + k;
  if (k == 0) return m;

  ClassMonomial out = m.without_norms().pulled_back(g, level);
  for (const auto& [key, e] : m.norms()) {
    if (key.j < 1 || key.j > m.level()) {
      throw DomainError("norm level " + std::to_string(key.j) + " outside the class level");
    }
    const Int power = checked_mul(checked_sub(pow2(key.i), 1), e);
    out = out * ClassMonomial::norm_t(g, level, key.i, k + key.j, e);
    out = out * euler_ratio(g, k, key.j, power).pulled_back(g, level);
  }
  return out;
}

std::vector<TowerEntry> tower_report(int n, Int m, const VirtualRep& v) {
  if (n < 1) throw DomainError("tower needs n >= 1");
  if (m < 1) throw DomainError("tower needs m >= 1");
  if (v.group().exponent() != n + 1) {
    throw DomainError("tower grading must live over C" + std::to_string(pow2(n + 1)));
  }
  const Int h = checked_mul(pow2(n), m);
  std::vector<TowerEntry> out;
  for (int k = 1; k <= n; ++k) {
    out.push_back(TowerEntry{k, line_L(v, k), constant_C(v, k), CyclicGroup(n - k + 1), h / pow2(k)});
  }
  return out;
}

}  // namespace sliceshear
