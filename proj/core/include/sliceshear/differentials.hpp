#pragma once

// Differential records, the C_2 seed family, transport along shearing and
// the permanent-cycle facts used for periodicity.

#include <optional>
#include <string>
#include <vector>

#include "sliceshear/classes.hpp"
#include "sliceshear/shearing.hpp"

namespace sliceshear {

enum class Provenance { seed, transported, generated, user };

const char* to_string(Provenance p) noexcept;
/// Throws DomainError for unknown names.
Provenance parse_provenance(const std::string& name);

struct Differential {
  CyclicGroup group;
  Int page = 2;
  ClassMonomial source;
  ClassMonomial target;
  Provenance provenance = Provenance::user;

  friend bool operator==(const Differential&, const Differential&) = default;
};

/// Equality ignoring provenance.
bool same_arrow(const Differential& a, const Differential& b);

struct Violation {
  std::string rule;
  std::string message;
};

/// First violated bidegree rule, or nullopt when d is consistent.
std::optional<Violation> validate(const Differential& d);
/// Throws SemanticError carrying the rule name when validate fails.
void require_valid(const Differential& d);

/// d_{2^{i+1}-1}(u_{2 sigma}^{2^{i-1}}) = tbar_i a_sigma^{2^{i+1}-1} over C_2.
Differential hu_kriz_seed(int i);

/// The closed form over C_{2^{n+1}} of the C_2 seed family sheared n times.
Differential hhr_family(int n, int i);

struct TransportResult {
  Differential differential;
  std::vector<std::string> warnings;
};

/// Shears a differential over the source group of ctx into the target group.
TransportResult transport(const Differential& d, const ShearContext& ctx);

/// The default grading for transporting d over C_{2^N}: the non-trivial part
/// of the source degree with its dimension moved into the trivial summand, so
/// that |V| = 0.
VirtualRep default_transport_grading(const Differential& d, CyclicGroup target);

/// d(x p) = d(x) p for a permanent cycle p. nullopt when the product target
/// vanishes under the torsion rules.
std::optional<Differential> leibniz(const Differential& d, const ClassMonomial& p);

struct PermanentCycleFact {
  CyclicGroup group;
  std::string theory;
  ClassMonomial cls;
  std::string citation;
};

/// Built-in facts. The C_2 family is listed for 1 <= m <= max_m.
std::vector<PermanentCycleFact> permanent_cycle_seeds(int max_m = 2);

/// The same u_V over C_{2^{n+k}}.
PermanentCycleFact transport_permanent(const PermanentCycleFact& f, int k);

/// |V| - V.
VirtualRep periodicity_element(const VirtualRep& v);

}  // namespace sliceshear
