#include "sliceshear/differentials.hpp"

#include "sliceshear/error.hpp"

namespace sliceshear {

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::seed:
      return "seed";
    case Provenance::transported:
      return "transported";
    case Provenance::generated:
      return "generated";
    case Provenance::user:
      return "user";
  }
  return "user";
}

Provenance parse_provenance(const std::string& name) {
  for (auto p : {Provenance::seed, Provenance::transported, Provenance::generated, Provenance::user}) {
    if (name == to_string(p)) return p;
  }
  throw DomainError("unknown provenance '" + name + "'");
}

bool same_arrow(const Differential& a, const Differential& b) {
  return a.group == b.group && a.page == b.page && a.source == b.source && a.target == b.target;
}

std::optional<Violation> validate(const Differential& d) {
  if (d.source.group() != d.group || d.target.group() != d.group) {
    return Violation{"group", "endpoints must live over " + d.group.name()};
  }
  if (d.source.level() != d.target.level()) {
    return Violation{"level", "source and target live at different levels"};
  }
  if (d.page < 2) return Violation{"page", "page " + std::to_string(d.page) + " is below 2"};
  if (d.source.is_zero() || d.target.is_zero()) {
    return Violation{"zero", "a differential cannot start or end at the zero class"};
  }
  const Bidegree src = bidegree(d.source);
  const Bidegree tgt = bidegree(d.target);
  if (tgt.stem != src.stem - 1) {
    return Violation{"stem", "target stem " + std::to_string(tgt.stem) + " != source stem " +
                                 std::to_string(src.stem) + " - 1"};
  }
  if (tgt.filtration != src.filtration + d.page) {
    return Violation{"filtration", "target filtration " + std::to_string(tgt.filtration) + " != " +
                                       std::to_string(src.filtration) + " + " + std::to_string(d.page)};
  }
  const VirtualRep expected = degree(d.source) - VirtualRep::trivial(CyclicGroup(d.source.level()));
  const VirtualRep actual = degree(d.target);
  if (actual != expected) {
    return Violation{"degree", "target degree " + actual.str() + " != source degree minus 1 = " + expected.str()};
  }
  return std::nullopt;
}

void require_valid(const Differential& d) {
  if (auto v = validate(d)) throw SemanticError(v->rule, v->message);
}

Differential hu_kriz_seed(int i) {
  if (i < 1) throw DomainError("the seed family needs i >= 1");
  const CyclicGroup c2(1);
  Differential d{c2, checked_sub(pow2(i + 1), 1), ClassMonomial::u_2sigma(c2, 1, pow2(i - 1)),
                 ClassMonomial::norm_t(c2, 1, i, 1) * ClassMonomial::a_sigma(c2, 1, checked_sub(pow2(i + 1), 1)),
                 Provenance::seed};
  return d;
}

Differential hhr_family(int n, int i) {
  if (n < 0) throw DomainError("hhr family needs n >= 0");
  if (i < 1) throw DomainError("hhr family needs i >= 1");
  const CyclicGroup g(n + 1);
  const Int e = checked_sub(pow2(i), 1);
  const ClassMonomial target = ClassMonomial::norm_t(g, n + 1, i, n + 1) *
                               power(expand_euler(rho_bar(n + 1, 0)), e) *
                               ClassMonomial::a_sigma(g, n + 1, pow2(i));
  return Differential{g, checked_add(checked_mul(pow2(n + 1), e), 1), ClassMonomial::u_2sigma(g, n + 1, pow2(i - 1)),
                      target, Provenance::generated};
}

VirtualRep default_transport_grading(const Differential& d, CyclicGroup target) {
  const VirtualRep deg = degree(d.source);
  const VirtualRep flat = deg - VirtualRep::trivial(deg.group(), dimension(deg));
  return pullback(flat, target);
}

TransportResult transport(const Differential& d, const ShearContext& ctx) {
  if (d.group != ctx.source_group()) {
    throw DomainError("differential lives over " + d.group.name() + ", shear source is " +
                      ctx.source_group().name());
  }
  require_valid(d);
  TransportResult out{d, {}};
  if (ctx.k() == 0) return out;

  const Bidegree src = bidegree(d.source);
  const Rational c = ctx.threshold();
  if (src.stem < 0) {
    out.warnings.push_back("source stem " + std::to_string(src.stem) + " is in the negative cone");
  }
  if (Rational(src.filtration) < c) {
    out.warnings.push_back("source filtration " + std::to_string(src.filtration) + " is below C = " + c.str());
  } else if (Rational(src.filtration) == c) {
    out.warnings.push_back("fringe: source filtration equals C = " + c.str());
  }

  out.differential = Differential{ctx.target_group(), shear_length(d.page, ctx.k()),
                                  correspond_class(d.source, ctx), correspond_class(d.target, ctx),
                                  Provenance::transported};
  require_valid(out.differential);
  return out;
}

std::optional<Differential> leibniz(const Differential& d, const ClassMonomial& p) {
  if (p.group() != d.group || p.level() != d.source.level()) {
    throw DomainError("multiplier " + p.str() + " does not live with the differential");
  }
  Differential out{d.group, d.page, d.source * p, d.target * p, d.provenance};
  if (out.target.is_zero() || out.source.is_zero()) return std::nullopt;
  require_valid(out);
  return out;
}

std::vector<PermanentCycleFact> permanent_cycle_seeds(int max_m) {
  std::vector<PermanentCycleFact> out;
  const CyclicGroup c2(1);
  for (int m = 1; m <= max_m; ++m) {
    out.push_back({c2, "BP_R<" + std::to_string(m) + ">", ClassMonomial::u_2sigma(c2, 1, pow2(m)),
                   "u_{2^{m+1} sigma}"});
  }
  const CyclicGroup c4(2);
  auto u = [&](Int sigma2, Int l1) {
    ClassMonomial m(c4);
    if (sigma2 > 0) m = m * ClassMonomial::u_2sigma(c4, 2, sigma2);
    if (l1 > 0) m = m * ClassMonomial::u_lambda(c4, 2, 1, l1);
    return m;
  };
  out.push_back({c4, "BP((C4))<1>", u(2, 0), "u_{4 sigma}"});
  out.push_back({c4, "BP((C4))<1>", u(0, 8), "u_{8 lambda_1}"});
  out.push_back({c4, "BP((C4))<1>", u(1, 4), "u_{4 lambda_1 + 2 sigma}"});
  out.push_back({c4, "BP((C4))<2>", u(4, 0), "u_{8 sigma}"});
  out.push_back({c4, "BP((C4))<2>", u(0, 32), "u_{32 lambda_1}"});
  out.push_back({c4, "BP((C4))<2>", u(2, 16), "u_{16 lambda_1 + 4 sigma}"});
  return out;
}

PermanentCycleFact transport_permanent(const PermanentCycleFact& f, int k) {
  if (k < 0) throw DomainError("transport index must be non-negative");
  if (!f.cls.is_pure_orientation()) throw DomainError(f.cls.str() + " is not a u-class");
  const CyclicGroup g(f.group.exponent() + k);
  return {g, f.theory, f.cls.pulled_back(g, f.cls.level() + k), f.citation};
}

VirtualRep periodicity_element(const VirtualRep& v) {
  return VirtualRep::trivial(v.group(), dimension(v)) - v;
}

}  // namespace sliceshear
