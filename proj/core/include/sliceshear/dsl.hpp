#pragma once

// Line-oriented chart language.
//
//   group C4
//   grading 2-2s
//   window -2 12 12
//   class x = Nt[1,2]*aL1*aS^2
//   class y = u2S @C2
//   diff 5: u2S -> x prov=transported
//   guide L1
//   guide vanish h=2 k=1
//   guide boundary
//
// `group` must come first. Declared names may be used inside diff lines.

#include <optional>
#include <string>
#include <vector>

#include "sliceshear/classes.hpp"
#include "sliceshear/differentials.hpp"
#include "sliceshear/rep.hpp"

namespace sliceshear {

struct Window {
  Int x_min = 0;
  Int x_max = 0;
  Int s_max = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

struct Guide {
  enum class Kind { line, vanish, boundary };
  Kind kind = Kind::line;
  int k = 0;
  Int h = 0;  ///< vanish only
  friend bool operator==(const Guide&, const Guide&) = default;
};

struct DeclaredClass {
  std::string name;
  ClassMonomial cls;
  friend bool operator==(const DeclaredClass&, const DeclaredClass&) = default;
};

struct ChartDocument {
  CyclicGroup group;
  VirtualRep grading{CyclicGroup{}};
  std::optional<Window> window;
  std::vector<DeclaredClass> classes;
  std::vector<Differential> differentials;
  std::vector<Guide> guides;

  friend bool operator==(const ChartDocument&, const ChartDocument&) = default;
};

/// Representation literal such as "10-4l1-2s", "l0", "rot3".
VirtualRep parse_rep(const std::string& text, CyclicGroup g);
/// Class expression at the given level (top level when omitted).
ClassMonomial parse_class(const std::string& text, CyclicGroup g, std::optional<int> level = std::nullopt);
/// "<r>: <src> -> <tgt> [@C<2^l>] [prov=<p>]". Validated; provenance user
/// unless given.
Differential parse_differential(const std::string& text, CyclicGroup g);
/// Throws ParseError with a line:column position, or SemanticError.
ChartDocument parse_document(const std::string& text);

std::string print_canonical(const ClassMonomial& m);
/// "diff 7: u2S^2 -> Nt[2,1]*aS^7"
std::string print_canonical(const Differential& d);
std::string print_canonical(const ChartDocument& doc);

}  // namespace sliceshear
