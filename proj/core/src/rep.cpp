#include "sliceshear/rep.hpp"

#include <algorithm>
#include <cctype>

#include "sliceshear/error.hpp"

namespace sliceshear {

CyclicGroup::CyclicGroup(int exponent) : exponent_(exponent) {
  if (exponent < 0 || exponent > max_exponent) {
    throw DomainError("group exponent " + std::to_string(exponent) + " outside [0, " +
                      std::to_string(max_exponent) + "]");
  }
}

std::string CyclicGroup::name() const { return "C" + std::to_string(order()); }

CyclicGroup parse_group_name(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'C' && text[0] != 'c') ||
      !std::all_of(text.begin() + 1, text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw DomainError("expected a group name C<2^n>, got '" + text + "'");
  }
  if (text.size() > 12) throw DomainError("group order too large: " + text);
  Int order = std::stoll(text.substr(1));
  for (int e = 0; e <= CyclicGroup::max_exponent; ++e) {
    if (order == (Int{1} << e)) return CyclicGroup(e);
  }
  throw DomainError("group order " + text.substr(1) + " is not a supported power of two");
}

// ---------------------------------------------------------------------------

VirtualRep::VirtualRep(CyclicGroup g)
    : group_(g), coeffs_(static_cast<std::size_t>(g.exponent()) + 1, 0) {}

VirtualRep::VirtualRep(CyclicGroup g, std::vector<Int> coefficients)
    : group_(g), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != static_cast<std::size_t>(g.exponent()) + 1) {
    throw DomainError("RO(" + g.name() + ") needs " + std::to_string(g.exponent() + 1) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

VirtualRep VirtualRep::trivial(CyclicGroup g, Int multiplicity) {
  VirtualRep v(g);
  v.coeffs_[0] = multiplicity;
  return v;
}

VirtualRep VirtualRep::sigma(CyclicGroup g, Int multiplicity) {
  if (g.exponent() < 1) throw DomainError("sigma is not defined for the trivial group");
  VirtualRep v(g);
  v.coeffs_[1] = multiplicity;
  return v;
}

VirtualRep VirtualRep::lambda(CyclicGroup g, int i, Int multiplicity) {
  if (i < 1 || i > g.exponent() - 1) {
    throw DomainError("lambda_" + std::to_string(i) + " is not a basis element of RO(" + g.name() + ")");
  }
  VirtualRep v(g);
  v.coeffs_[static_cast<std::size_t>(i) + 1] = multiplicity;
  return v;
}

Int VirtualRep::lambda(int i) const noexcept {
  if (i < 1 || static_cast<std::size_t>(i) + 1 >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(i) + 1];
}

bool VirtualRep::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

bool VirtualRep::is_actual() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c >= 0; });
}

VirtualRep VirtualRep::operator-() const { return Int{-1} * *this; }

namespace {

void require_same_group(const VirtualRep& a, const VirtualRep& b) {
  if (a.group() != b.group()) {
    throw DomainError("representations live over different groups (" + a.group().name() + " vs " +
                      b.group().name() + ")");
  }
}

}  // namespace

VirtualRep operator+(const VirtualRep& a, const VirtualRep& b) {
  require_same_group(a, b);
  VirtualRep out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = checked_add(out.coeffs_[i], b.coeffs_[i]);
  return out;
}

VirtualRep operator-(const VirtualRep& a, const VirtualRep& b) {
  require_same_group(a, b);
  VirtualRep out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = checked_sub(out.coeffs_[i], b.coeffs_[i]);
  return out;
}

VirtualRep operator*(Int scalar, const VirtualRep& v) {
  VirtualRep out = v;
  for (auto& c : out.coeffs_) c = checked_mul(scalar, c);
  return out;
}

namespace {

struct Term {
  Int coeff;
  std::string basis;  // empty for the trivial summand
};

std::vector<Term> ordered_terms(const VirtualRep& v, bool unicode) {
  std::vector<Term> terms;
  if (v.triv() != 0) terms.push_back({v.triv(), ""});
  for (int i = v.group().exponent() - 1; i >= 1; --i) {
    if (v.lambda(i) == 0) continue;
    terms.push_back({v.lambda(i), unicode ? "λ" + std::to_string(i) : "l" + std::to_string(i)});
  }
  if (v.sigma() != 0) terms.push_back({v.sigma(), unicode ? "σ" : "s"});
  return terms;
}

std::string render(const VirtualRep& v, bool unicode) {
  auto terms = ordered_terms(v, unicode);
  if (terms.empty()) return "0";
  std::string out;
  const std::string plus = unicode ? " + " : "+";
  const std::string minus = unicode ? " − " : "-";
  for (std::size_t idx = 0; idx < terms.size(); ++idx) {
    const auto& [c, basis] = terms[idx];
    Int mag = c < 0 ? -c : c;
    if (idx == 0) {
      if (c < 0) out += unicode ? "−" : "-";
    } else {
      out += c < 0 ? minus : plus;
    }
    if (basis.empty() || mag != 1) out += std::to_string(mag);
    out += basis;
  }
  return out;
}

}  // namespace

std::string VirtualRep::str() const { return render(*this, false); }
std::string VirtualRep::pretty() const { return render(*this, true); }

// ---------------------------------------------------------------------------

Int dimension(const VirtualRep& v) {
  Int d = checked_add(v.triv(), v.sigma());
  for (int i = 1; i <= v.group().exponent() - 1; ++i) d = checked_add(d, checked_mul(2, v.lambda(i)));
  return d;
}

VirtualRep fixed_points(const VirtualRep& v, int k) {
  const int n = v.group().exponent();
  if (k < 0 || k > n) {
    throw DomainError("fixed points: subgroup index k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
  std::vector<Int> c(static_cast<std::size_t>(n - k) + 1, 0);
  c[0] = v.triv();
  // sigma has kernel C_{2^{n-1}}; lambda_i has kernel C_{2^{n-i-1}}.
  if (k <= n - 1) c[1] = v.sigma();
  for (int i = 1; i <= n - 1; ++i) {
    if (k <= n - 1 - i) c[static_cast<std::size_t>(i) + 1] = v.lambda(i);
  }
  return VirtualRep(CyclicGroup(n - k), std::move(c));
}

VirtualRep pullback(const VirtualRep& v, CyclicGroup to) {
  if (to.exponent() < v.group().exponent()) {
    throw DomainError("pullback target " + to.name() + " is smaller than source " + v.group().name());
  }
  std::vector<Int> c(static_cast<std::size_t>(to.exponent()) + 1, 0);
  std::copy(v.coefficients().begin(), v.coefficients().end(), c.begin());
  return VirtualRep(to, std::move(c));
}

VirtualRep restrict(const VirtualRep& v, int m) {
  const int n = v.group().exponent();
  if (m < 0 || m > n) {
    throw DomainError("restriction: subgroup index m=" + std::to_string(m) + " outside [0, " + std::to_string(n) + "]");
  }
  const CyclicGroup sub(m);
  VirtualRep out = VirtualRep::trivial(sub, v.triv());
  if (v.sigma() != 0) {
    out += (m == n) ? VirtualRep::sigma(sub, v.sigma()) : VirtualRep::trivial(sub, v.sigma());
  }
  const int shift = n - m;
  for (int i = 1; i <= n - 1; ++i) {
    Int c = v.lambda(i);
    if (c == 0) continue;
    if (i > shift) {
      out += VirtualRep::lambda(sub, i - shift, c);
    } else if (i == shift) {
      out += VirtualRep::sigma(sub, checked_mul(2, c));
    } else {
      out += VirtualRep::trivial(sub, checked_mul(2, c));
    }
  }
  return out;
}

VirtualRep regular_rep(CyclicGroup g) {
  const int n = g.exponent();
  VirtualRep v = VirtualRep::trivial(g);
  if (n >= 1) v += VirtualRep::sigma(g);
  for (int i = 1; i <= n - 1; ++i) v += VirtualRep::lambda(g, i, pow2(i - 1));
  return v;
}

VirtualRep rho_bar(int n_plus_1, int k) {
  if (n_plus_1 < 1) throw DomainError("rho_bar needs a nontrivial group");
  if (k < 0 || k > n_plus_1 - 1) {
    throw DomainError("rho_bar: quotient index k=" + std::to_string(k) + " outside [0, " +
                      std::to_string(n_plus_1 - 1) + "]");
  }
  const CyclicGroup g(n_plus_1);
  const int n = n_plus_1 - 1;
  VirtualRep v = VirtualRep::sigma(g);
  for (int m = 1; m <= n - k; ++m) v += VirtualRep::lambda(g, m, pow2(m - 1));
  return v;
}

Int tau(const VirtualRep& v, int k) {
  const int n = v.group().exponent();
  if (k < 0 || k > n) {
    throw DomainError("tau: family index k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
  const Int dim = dimension(v);
  Int best = 0;  // j = 0 contributes |V| - |V| = 0
  for (int j = 1; j <= k; ++j) {
    best = std::max(best, checked_sub(checked_mul(dimension(fixed_points(v, j)), pow2(j)), dim));
  }
  return best;
}

Line line_L(const VirtualRep& v, int k) {
  return Line{checked_sub(pow2(k), 1), Rational(tau(v, k)), v};
}

Rational constant_C(const VirtualRep& v, int k) {
  const int top = v.group().exponent();
  if (k < 1 || k > top - 1) {
    throw DomainError("constant C: k=" + std::to_string(k) + " outside [1, " + std::to_string(top - 1) + "]");
  }
  const Int shift = checked_sub(checked_mul(dimension(fixed_points(v, k)), pow2(k)), dimension(v));
  return Rational(checked_sub(tau(v, k), shift), pow2(k));
}

std::string Line::str() const {
  std::string out = "s = ";
  bool has_x = slope != 0;
  if (has_x) out += (slope == 1 ? std::string() : std::to_string(slope)) + "(t-s)";
  if (!has_x) return out + intercept.str();
  if (intercept.num() > 0) out += " + " + intercept.str();
  if (intercept.num() < 0) out += " - " + (-intercept).str();
  return out;
}

}  // namespace sliceshear
