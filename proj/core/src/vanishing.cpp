#include "sliceshear/vanishing.hpp"

#include "sliceshear/error.hpp"

namespace sliceshear {

namespace {

void check_nk(Int h, int n, int k) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (h < 1) throw DomainError("height must be positive");
  if (k < 0 || k > n) {
    throw DomainError("k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
  if (h % pow2(k) != 0) {
    throw DomainError("height " + std::to_string(h) + " is not divisible by 2^" + std::to_string(k));
  }
}

}  // namespace

VanishingProfile::VanishingProfile(int n, Int h, VirtualRep v) : n_(n), h_(h), v_(std::move(v)) {
  check_nk(h, n, n);
  if (v_.group().exponent() != n + 1) {
    throw DomainError("grading lives over " + v_.group().name() + ", expected C" + std::to_string(pow2(n + 1)));
  }
}

VanishingProfile::VanishingProfile(int n, Int h) : VanishingProfile(n, h, VirtualRep(CyclicGroup(n + 1))) {}

Int N_constant(Int h, int n, int k) {
  check_nk(h, n, k);
  const Int e = checked_add(h / pow2(k), n + 1);
  return checked_add(checked_sub(pow2(e), pow2(n + 1)), pow2(k));
}

Int max_length(Int h, int n, int k) { return checked_sub(N_constant(h, n, k), pow2(k) - 1); }

Line vanishing_line(const VirtualRep& v, Int h, int n, int k) {
  Line l = line_L(v, k);
  l.intercept += Rational(N_constant(h, n, k));
  return l;
}

Line boundary_line(const VirtualRep& v, int n) {
  if (v.group().exponent() != n + 1) {
    throw DomainError("grading lives over " + v.group().name() + ", expected C" + std::to_string(pow2(n + 1)));
  }
  Int best = dimension(fixed_points(v, 0));
  for (int j = 1; j <= n + 1; ++j) best = std::max(best, dimension(fixed_points(v, j)));
  const Int g = pow2(n + 1);
  return Line{g - 1, Rational(checked_add(-dimension(v), checked_mul(g, best))), v};
}

AdmissibilityReport admissible(const Differential& d, const VanishingProfile& profile) {
  if (d.group != profile.group()) {
    throw DomainError("differential lives over " + d.group.name() + ", profile over " + profile.group().name());
  }
  AdmissibilityReport report;
  const Bidegree src = bidegree(d.source);
  const Bidegree tgt = bidegree(d.target);
  const VirtualRep& v = profile.grading();
  const int n = profile.n();
  const Int r = d.page;
  if (src.stem < 0) report.warnings.push_back("source lies in the negative cone; no checks apply");

  for (int k = 0; k <= n; ++k) {
    const Line lk = line_L(v, k);
    if (src.stem < 0) continue;
    const bool above = lk.on_or_above(src.stem, src.filtration);
    if (above) {
      if (k > 0 && lk.on(src.stem, src.filtration)) {
        report.warnings.push_back("fringe: source lies on L" + std::to_string(k));
      }
      const Int bound = max_length(profile.height(), n, k);
      if (r > bound) {
        report.violations.push_back({k, 'a', "length " + std::to_string(r) + " exceeds " + std::to_string(bound)});
      }
      if (k > 0 && mod_floor(r, pow2(k)) != 1) {
        report.violations.push_back(
            {k, 'a', "length " + std::to_string(r) + " is not 1 mod " + std::to_string(pow2(k))});
      }
    } else if (tgt.stem >= 0) {
      const Line vk = vanishing_line(v, profile.height(), n, k);
      if (vk.on_or_above(tgt.stem, tgt.filtration)) {
        report.violations.push_back({k, 'b', "target is not strictly below " + vk.str()});
      }
    }
  }

  if (src.stem >= 0 && tgt.stem >= 0 && line_L(v, n).on_or_above(src.stem, src.filtration)) {
    const Line b = boundary_line(v, n);
    if (Rational(tgt.filtration) > b.value_at(Rational(tgt.stem))) {
      report.violations.push_back({n, 'c', "target lies above the boundary " + b.str()});
    }
  }
  return report;
}

std::optional<int> region_classify(Int x, Int s, const VirtualRep& v, int n) {
  if (x < 0) throw DomainError("region classification needs t - s >= 0");
  if (v.group().exponent() != n + 1) {
    throw DomainError("grading lives over " + v.group().name() + ", expected C" + std::to_string(pow2(n + 1)));
  }
  std::optional<int> out;
  for (int k = 0; k <= n; ++k) {
    if (line_L(v, k).on_or_above(x, s)) out = k;
  }
  return out;
}

}  // namespace sliceshear
