#include "sliceshear/classes.hpp"

#include <algorithm>

#include "sliceshear/error.hpp"

namespace sliceshear {

namespace {

void check_level(CyclicGroup group, int level) {
  if (level < 0 || level > group.exponent()) {
    throw DomainError("level C" + std::to_string(Int{1} << std::clamp(level, 0, 30)) + " is not a subgroup of " +
                      group.name());
  }
}

std::size_t basis_index_for_lambda(int level, int i) {
  if (i < 1 || i > level - 1) {
    throw DomainError("lambda_" + std::to_string(i) + " is not a basis element at level C" +
                      std::to_string(Int{1} << level));
  }
  return static_cast<std::size_t>(i);
}

void require_sigma(int level) {
  if (level < 1) throw DomainError("sigma classes need a nontrivial level");
}

}  // namespace

ClassMonomial::ClassMonomial(CyclicGroup group, int level)
    : group_(group), level_(level) {
  check_level(group, level);
  a_exp_.assign(static_cast<std::size_t>(level), 0);
  u_exp_.assign(static_cast<std::size_t>(level), 0);
}

ClassMonomial ClassMonomial::constant(CyclicGroup group, int level, Int coeff) {
  ClassMonomial m(group, level);
  m.coeff_ = coeff;
  m.normalize();
  return m;
}

void ClassMonomial::add_exponent(std::vector<Int>& exps, std::size_t index, Int e) {
  if (e < 0) throw DomainError("negative exponents are not representable");
  exps[index] = checked_add(exps[index], e);
}

ClassMonomial ClassMonomial::a_sigma(CyclicGroup group, int level, Int exponent) {
  ClassMonomial m(group, level);
  require_sigma(level);
  m.add_exponent(m.a_exp_, 0, exponent);
  m.normalize();
  return m;
}

ClassMonomial ClassMonomial::a_lambda(CyclicGroup group, int level, int i, Int exponent) {
  ClassMonomial m(group, level);
  m.add_exponent(m.a_exp_, basis_index_for_lambda(level, i), exponent);
  m.normalize();
  return m;
}

ClassMonomial ClassMonomial::u_2sigma(CyclicGroup group, int level, Int exponent) {
  ClassMonomial m(group, level);
  require_sigma(level);
  m.add_exponent(m.u_exp_, 0, exponent);
  m.normalize();
  return m;
}

ClassMonomial ClassMonomial::u_lambda(CyclicGroup group, int level, int i, Int exponent) {
  ClassMonomial m(group, level);
  m.add_exponent(m.u_exp_, basis_index_for_lambda(level, i), exponent);
  m.normalize();
  return m;
}

ClassMonomial ClassMonomial::norm_t(CyclicGroup group, int level, int i, int j, Int exponent) {
  ClassMonomial m(group, level);
  if (i < 1) throw DomainError("tbar_i needs i >= 1");
  if (j < 1 || j > level) {
    throw DomainError("norm N_{C2}^{C" + std::to_string(Int{1} << std::clamp(j, 0, 30)) +
                      "} does not land at level C" + std::to_string(Int{1} << level));
  }
  if (exponent < 0) throw DomainError("negative exponents are not representable");
  if (exponent > 0) m.norms_[NormKey{i, j}] = exponent;
  m.normalize();
  return m;
}

bool ClassMonomial::is_unit() const noexcept {
  return coeff_ == 1 && norms_.empty() &&
         std::all_of(a_exp_.begin(), a_exp_.end(), [](Int e) { return e == 0; }) &&
         std::all_of(u_exp_.begin(), u_exp_.end(), [](Int e) { return e == 0; });
}

bool ClassMonomial::is_pure_orientation() const noexcept {
  return coeff_ == 1 && norms_.empty() && std::all_of(a_exp_.begin(), a_exp_.end(), [](Int e) { return e == 0; });
}

Int ClassMonomial::torsion_modulus() const noexcept {
  if (!a_exp_.empty() && a_exp_[0] > 0) return 2;
  for (std::size_t i = 1; i < a_exp_.size(); ++i) {
    if (a_exp_[i] > 0) return Int{1} << (i + 1);
  }
  return 0;
}

void ClassMonomial::normalize() {
  for (auto it = norms_.begin(); it != norms_.end();) {
    it = it->second == 0 ? norms_.erase(it) : std::next(it);
  }
  if (Int mod = torsion_modulus(); mod != 0) coeff_ = mod_floor(coeff_, mod);
  if (coeff_ == 0) {
    norms_.clear();
    std::fill(a_exp_.begin(), a_exp_.end(), 0);
    std::fill(u_exp_.begin(), u_exp_.end(), 0);
  }
}

ClassMonomial ClassMonomial::with_coeff(Int c) const {
  ClassMonomial m = *this;
  m.coeff_ = c;
  m.normalize();
  return m;
}

ClassMonomial ClassMonomial::without_norms() const {
  ClassMonomial m = *this;
  m.norms_.clear();
  m.normalize();
  return m;
}

ClassMonomial ClassMonomial::pulled_back(CyclicGroup group, int level) const {
  if (group.exponent() < group_.exponent() || level < level_) {
    throw DomainError("pullback must go to a larger group and level");
  }
  ClassMonomial m(group, level);
  m.coeff_ = coeff_;
  m.norms_ = norms_;
  std::copy(a_exp_.begin(), a_exp_.end(), m.a_exp_.begin());
  std::copy(u_exp_.begin(), u_exp_.end(), m.u_exp_.begin());
  m.normalize();
  return m;
}

ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b) {
  if (a.group_ != b.group_) {
    throw DomainError("cannot multiply classes over " + a.group_.name() + " and " + b.group_.name());
  }
  if (a.level_ != b.level_) throw DomainError("cannot multiply classes at different levels");
  ClassMonomial m = a;
  m.coeff_ = checked_mul(a.coeff_, b.coeff_);
  for (const auto& [key, e] : b.norms_) m.norms_[key] = checked_add(m.norms_[key], e);
  for (std::size_t i = 0; i < m.a_exp_.size(); ++i) m.a_exp_[i] = checked_add(m.a_exp_[i], b.a_exp_[i]);
  for (std::size_t i = 0; i < m.u_exp_.size(); ++i) m.u_exp_[i] = checked_add(m.u_exp_[i], b.u_exp_[i]);
  m.normalize();
  return m;
}

ClassMonomial multiply(const ClassMonomial& a, const ClassMonomial& b) { return a * b; }

ClassMonomial power(const ClassMonomial& m, Int e) {
  if (e < 0) throw DomainError("negative powers are not representable");
  ClassMonomial out(m.group(), m.level());
  ClassMonomial base = m;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

namespace {

std::string exp_suffix(Int e) { return e == 1 ? std::string() : "^" + std::to_string(e); }

std::string render(const ClassMonomial& m, bool unicode) {
  if (m.is_zero()) return "0";
  std::vector<std::string> factors;
  for (const auto& [key, e] : m.norms()) {
    if (unicode) {
      factors.push_back("N_{C2}^{C" + std::to_string(Int{1} << key.j) + "}(t̄" + std::to_string(key.i) + ")" +
                        exp_suffix(e));
    } else {
      factors.push_back("Nt[" + std::to_string(key.i) + "," + std::to_string(key.j) + "]" + exp_suffix(e));
    }
  }
  auto emit = [&](std::span<const Int> exps, const char* lam, const char* lam_u, const char* sig, const char* sig_u) {
    for (std::size_t i = exps.size(); i-- > 1;) {
      if (exps[i] == 0) continue;
      factors.push_back(std::string(unicode ? lam_u : lam) + std::to_string(i) + exp_suffix(exps[i]));
    }
    if (!exps.empty() && exps[0] != 0) factors.push_back(std::string(unicode ? sig_u : sig) + exp_suffix(exps[0]));
  };
  emit(m.a_exponents(), "aL", "a_λ", "aS", "a_σ");
  emit(m.u_exponents(), "uL", "u_λ", "u2S", "u_2σ");

  std::string out;
  if (factors.empty()) return std::to_string(m.coeff());
  if (m.coeff() != 1) out = std::to_string(m.coeff()) + (unicode ? "·" : "*");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += unicode ? "·" : "*";
    out += factors[i];
  }
  return out;
}

}  // namespace

std::string ClassMonomial::str() const { return render(*this, false); }
std::string ClassMonomial::pretty() const { return render(*this, true); }

// ---------------------------------------------------------------------------

VirtualRep degree(const ClassMonomial& m) {
  if (m.is_zero()) throw DomainError("the zero class has no degree");
  const CyclicGroup at(m.level());
  VirtualRep deg(at);
  for (const auto& [key, e] : m.norms()) {
    VirtualRep rho = pullback(regular_rep(CyclicGroup(key.j)), at);
    deg += checked_mul(e, checked_sub(pow2(key.i), 1)) * rho;
  }
  const auto a = m.a_exponents();
  const auto u = m.u_exponents();
  if (!a.empty()) {
    deg -= VirtualRep::sigma(at, a[0]);
    // u_{2 sigma}: |2 sigma| - 2 sigma
    deg += VirtualRep::trivial(at, checked_mul(2, u[0])) - VirtualRep::sigma(at, checked_mul(2, u[0]));
  }
  for (int i = 1; i < m.level(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    deg -= VirtualRep::lambda(at, i, a[idx]);
    deg += VirtualRep::trivial(at, checked_mul(2, u[idx])) - VirtualRep::lambda(at, i, u[idx]);
  }
  return deg;
}

Bidegree bidegree(const ClassMonomial& m) {
  if (m.is_zero()) throw DomainError("the zero class has no bidegree");
  Bidegree b;
  for (const auto& [key, e] : m.norms()) {
    b.slice_dim = checked_add(b.slice_dim, checked_mul(checked_mul(e, checked_sub(pow2(key.i), 1)), pow2(key.j)));
  }
  const auto a = m.a_exponents();
  if (!a.empty()) b.filtration = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) b.filtration = checked_add(b.filtration, checked_mul(2, a[i]));
  b.stem = checked_sub(b.slice_dim, b.filtration);
  return b;
}

ClassMonomial expand_euler(const VirtualRep& v) {
  if (!v.is_actual()) throw DomainError("a_V needs an actual representation, got " + v.str());
  if (v.triv() != 0) throw DomainError("a_V is trivial-free only; " + v.str() + " has a trivial summand");
  const CyclicGroup g = v.group();
  ClassMonomial m(g);
  if (g.exponent() >= 1 && v.sigma() > 0) m = m * ClassMonomial::a_sigma(g, g.exponent(), v.sigma());
  for (int i = 1; i <= g.exponent() - 1; ++i) {
    if (v.lambda(i) > 0) m = m * ClassMonomial::a_lambda(g, g.exponent(), i, v.lambda(i));
  }
  return m;
}

VirtualRep orientation_rep(const ClassMonomial& m) {
  if (!m.is_pure_orientation()) throw DomainError(m.str() + " is not a pure orientation class");
  const CyclicGroup at(m.level());
  VirtualRep v(at);
  const auto u = m.u_exponents();
  if (!u.empty()) v += VirtualRep::sigma(at, checked_mul(2, u[0]));
  for (int i = 1; i < m.level(); ++i) v += VirtualRep::lambda(at, i, u[static_cast<std::size_t>(i)]);
  return v;
}

ClassMonomial build_D(int n, Int m) {
  ClassMonomial d = build_Dbar(n, m);
  return d * ClassMonomial::norm_t(d.group(), n, static_cast<int>(checked_mul(pow2(n - 1), m)), n);
}

ClassMonomial build_Dbar(int n, Int m) {
  if (n < 1) throw DomainError("D_{C_{2^n}, m} needs n >= 1");
  if (m < 1) throw DomainError("D_{C_{2^n}, m} needs m >= 1");
  const CyclicGroup g(n);
  ClassMonomial d(g);
  for (int k = 2; k <= n; ++k) {
    Int i = checked_mul(pow2(n - k), m);
    if (i > 62) throw DomainError("tbar index " + std::to_string(i) + " is out of the supported range");
    d = d * ClassMonomial::norm_t(g, n, static_cast<int>(i), n);
  }
  return d;
}

}  // namespace sliceshear
