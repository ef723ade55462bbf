// sliceshear: command-line front end.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sliceshear/differentials.hpp"
#include "sliceshear/dsl.hpp"
#include "sliceshear/error.hpp"
#include "sliceshear/json_io.hpp"
#include "sliceshear/shearing.hpp"
#include "sliceshear/svg.hpp"
#include "sliceshear/vanishing.hpp"

namespace ss = sliceshear;
using Json = nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  bool unicode = false;
  bool color = false;
};

Globals globals;

int exit_code(ss::ErrorKind kind) {
  switch (kind) {
    case ss::ErrorKind::usage:
      return 1;
    case ss::ErrorKind::parse:
      return 2;
    case ss::ErrorKind::semantic:
      return 3;
  }
  return 1;
}

std::string paint(const std::string& text, const char* code) {
  if (!globals.color) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string show(const ss::ClassMonomial& m) { return globals.unicode ? m.pretty() : m.str(); }
std::string show(const ss::VirtualRep& v) { return globals.unicode ? v.pretty() : v.str(); }
std::string show(const ss::Differential& d) {
  if (!globals.unicode) return ss::print_canonical(d);
  return "d_" + std::to_string(d.page) + "(" + d.source.pretty() + ") = " + d.target.pretty();
}

Json as_json(const ss::ClassMonomial& m) { return Json::parse(ss::to_json(m)); }
Json as_json(const ss::Differential& d) { return Json::parse(ss::to_json(d)); }

Json line_json(const ss::Line& l) {
  return Json{{"slope", l.slope}, {"intercept", l.intercept.str()}, {"equation", l.str()}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

ss::CyclicGroup group_for_n(int n) {
  if (n < 0) throw ss::Error(ss::ErrorKind::usage, "--n must be non-negative");
  return ss::CyclicGroup(n + 1);
}

ss::VirtualRep rep_or_zero(const std::string& text, ss::CyclicGroup g) {
  return text.empty() ? ss::VirtualRep(g) : ss::parse_rep(text, g);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ss::Error(ss::ErrorKind::usage, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------

struct RepArgs {
  std::string op;
  std::string group = "C2";
  std::string v;
  int k = 0;
  int m = 0;
};

void run_rep(const RepArgs& a) {
  const ss::CyclicGroup g = ss::parse_group_name(a.group);
  const ss::VirtualRep v = rep_or_zero(a.v, g);
  Json j{{"op", a.op}, {"group", g.name()}, {"V", v.str()}};
  if (a.op == "dim") {
    const ss::Int d = ss::dimension(v);
    j["result"] = d;
    if (!globals.json) std::cout << d << "\n";
  } else if (a.op == "fixed") {
    const ss::VirtualRep f = ss::fixed_points(v, a.k);
    j["k"] = a.k;
    j["group_out"] = f.group().name();
    j["result"] = f.str();
    if (!globals.json) std::cout << show(f) << "  over " << f.group().name() << "\n";
  } else if (a.op == "restrict") {
    const ss::VirtualRep r = ss::restrict(v, a.m);
    j["m"] = a.m;
    j["group_out"] = r.group().name();
    j["result"] = r.str();
    if (!globals.json) std::cout << show(r) << "  over " << r.group().name() << "\n";
  } else if (a.op == "tau") {
    const ss::Int t = ss::tau(v, a.k);
    j["k"] = a.k;
    j["result"] = t;
    if (!globals.json) std::cout << t << "\n";
  } else if (a.op == "lines") {
    j["lines"] = Json::array();
    for (int k = 0; k <= g.exponent(); ++k) {
      const ss::Line l = ss::line_L(v, k);
      Json e = line_json(l);
      e["k"] = k;
      e["tau"] = ss::tau(v, k);
      if (k >= 1 && k <= g.exponent() - 1) e["C"] = ss::constant_C(v, k).str();
      j["lines"].push_back(e);
      if (!globals.json) {
        std::cout << "L" << k << ": " << l.str();
        if (k >= 1 && k <= g.exponent() - 1) std::cout << "   C = " << ss::constant_C(v, k).str();
        std::cout << "\n";
      }
    }
  } else {
    throw ss::Error(ss::ErrorKind::usage, "unknown rep operation '" + a.op + "'");
  }
  if (globals.json) emit(j);
}

struct ShearArgs {
  int n = 1;
  int k = 1;
  std::string v;
  ss::Int t = 0;
  ss::Int s = 0;
};

void run_shear(const ShearArgs& a) {
  const ss::CyclicGroup g = group_for_n(a.n);
  const ss::ShearContext ctx(g, a.k, rep_or_zero(a.v, g));
  const ss::ShearedDegree out = ss::shear_degree(ctx, a.t, a.s);
  if (globals.json) {
    emit(Json{{"group", g.name()}, {"k", a.k}, {"V", ctx.grading().str()}, {"t", a.t}, {"s", a.s},
              {"t_prime", out.t}, {"s_prime", out.s}});
    return;
  }
  std::cout << "(t, s) = (" << a.t << ", " << a.s << ") over " << ctx.source_group().name() << "  ->  (t', s') = ("
            << out.t << ", " << out.s << ") over " << g.name() << "\n";
}

struct CorrespondArgs {
  int k = 1;
  std::string from = "C2";
  std::string expr;
};

void run_correspond(const CorrespondArgs& a) {
  const ss::CyclicGroup src = ss::parse_group_name(a.from);
  if (a.k < 0) throw ss::Error(ss::ErrorKind::usage, "--k must be non-negative");
  const ss::CyclicGroup tgt(src.exponent() + a.k);
  const ss::ClassMonomial m = ss::parse_class(a.expr, src);
  const ss::ClassMonomial image = ss::correspond_class(m, ss::ShearContext(tgt, a.k));
  if (globals.json) {
    emit(Json{{"k", a.k}, {"source", as_json(m)}, {"target", as_json(image)}});
    return;
  }
  std::cout << show(m) << " over " << src.name() << "  <->  " << show(image) << " over " << tgt.name() << "\n";
}

struct TowerArgs {
  int n = 1;
  ss::Int m = 1;
  std::string v;
};

void run_tower(const TowerArgs& a) {
  const ss::CyclicGroup g = group_for_n(a.n);
  const ss::VirtualRep v = rep_or_zero(a.v, g);
  const auto entries = ss::tower_report(a.n, a.m, v);
  Json j = Json::array();
  for (const auto& e : entries) {
    Json row{{"k", e.k}, {"line", line_json(e.line)}, {"C", e.threshold.str()}, {"group", e.group.name()},
             {"height", e.height}};
    j.push_back(row);
    if (!globals.json) {
      std::cout << "k=" << e.k << "  " << e.line.str() << "  C=" << e.threshold.str() << "  " << e.group.name()
                << "  height " << e.height << "\n";
    }
  }
  if (globals.json) emit(j);
}

struct HhrArgs {
  int n = 0;
  int i = 1;
};

void run_hhr(const HhrArgs& a) {
  const ss::Differential d = ss::hhr_family(a.n, a.i);
  if (globals.json) {
    emit(as_json(d));
    return;
  }
  std::cout << show(d) << "\n";
}

struct TransportArgs {
  int k = 1;
  std::string from = "C2";
  std::string diff;
  std::string v;
};

void run_transport(const TransportArgs& a) {
  const ss::CyclicGroup src = ss::parse_group_name(a.from);
  if (a.k < 0) throw ss::Error(ss::ErrorKind::usage, "--k must be non-negative");
  const ss::CyclicGroup tgt(src.exponent() + a.k);
  ss::Differential d = ss::parse_differential(a.diff, src);
  const ss::VirtualRep v = a.v.empty() ? ss::default_transport_grading(d, tgt) : ss::parse_rep(a.v, tgt);
  const ss::TransportResult r = ss::transport(d, ss::ShearContext(tgt, a.k, v));
  if (globals.json) {
    emit(Json{{"differential", as_json(r.differential)}, {"grading", v.str()}, {"warnings", r.warnings}});
    return;
  }
  for (const auto& w : r.warnings) std::cerr << paint("warning", "33") << ": " << w << "\n";
  std::cout << show(r.differential) << "\n";
}

struct VanishingArgs {
  ss::Int h = 1;
  int n = 0;
  std::string v;
};

void run_vanishing(const VanishingArgs& a) {
  const ss::CyclicGroup g = group_for_n(a.n);
  const ss::VanishingProfile profile(a.n, a.h, rep_or_zero(a.v, g));
  Json rows = Json::array();
  if (!globals.json) std::cout << "k  slope  tau  N_k  max_length\n";
  for (int k = 0; k <= a.n; ++k) {
    const ss::Int slope = ss::pow2(k) - 1;
    const ss::Int t = ss::tau(profile.grading(), k);
    const ss::Int nk = ss::N_constant(a.h, a.n, k);
    const ss::Int len = ss::max_length(a.h, a.n, k);
    rows.push_back(Json{{"k", k}, {"slope", slope}, {"tau", t}, {"N_k", nk}, {"max_length", len},
                        {"vanishing_line", line_json(ss::vanishing_line(profile.grading(), a.h, a.n, k))}});
    if (!globals.json) std::cout << k << "  " << slope << "  " << t << "  " << nk << "  " << len << "\n";
  }
  const ss::Line b = ss::boundary_line(profile.grading(), a.n);
  if (globals.json) {
    emit(Json{{"group", g.name()}, {"h", a.h}, {"V", profile.grading().str()}, {"rows", rows},
              {"boundary", line_json(b)}});
    return;
  }
  std::cout << "boundary: " << b.str() << "\n";
}

struct CheckArgs {
  ss::Int h = 1;
  int n = 0;
  std::string diff;
  std::string v;
};

int run_check(const CheckArgs& a) {
  const ss::CyclicGroup g = group_for_n(a.n);
  const ss::VanishingProfile profile(a.n, a.h, rep_or_zero(a.v, g));
  const ss::Differential d = ss::parse_differential(a.diff, g);
  const ss::AdmissibilityReport r = ss::admissible(d, profile);
  if (globals.json) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(Json{{"k", x.k}, {"clause", std::string(1, x.clause)}, {"message", x.message}});
    emit(Json{{"differential", as_json(d)}, {"admissible", r.ok()}, {"violations", v}, {"warnings", r.warnings}});
  } else {
    std::cout << show(d) << "\n";
    for (const auto& w : r.warnings) std::cout << "  " << paint("warning", "33") << ": " << w << "\n";
    for (const auto& x : r.violations) {
      std::cout << "  " << paint("violation", "31") << " k=" << x.k << " (" << x.clause << "): " << x.message << "\n";
    }
    std::cout << (r.ok() ? paint("admissible", "32") : paint("not admissible", "31")) << "\n";
  }
  return r.ok() ? 0 : 3;
}

struct ChartArgs {
  std::string input;
  std::string output;
  bool canonical = false;
};

void run_chart(const ChartArgs& a) {
  const ss::ChartDocument doc = ss::parse_document(read_file(a.input));
  if (a.canonical) {
    std::cout << ss::print_canonical(doc);
    if (a.output.empty()) return;
  }
  const std::string svg = ss::emit_svg(doc);
  if (a.output.empty()) {
    std::cout << svg;
    return;
  }
  std::ofstream out(a.output, std::ios::binary);
  if (!out) throw ss::Error(ss::ErrorKind::usage, "cannot write '" + a.output + "'");
  out << svg;
  if (globals.json) {
    emit(Json{{"output", a.output}, {"classes", doc.classes.size()}, {"differentials", doc.differentials.size()},
              {"guides", doc.guides.size()}});
  }
}

void report(const std::string& kind, const std::string& message, int line = 0, int column = 0) {
  if (globals.json) {
    Json e{{"kind", kind}, {"message", message}};
    if (line > 0) {
      e["line"] = line;
      e["column"] = column;
    }
    std::cout << Json{{"error", e}}.dump(2) << "\n";
    return;
  }
  std::cerr << paint("error[" + kind + "]", "31") << ": " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* c = std::getenv("SLICESHEAR_COLOR")) {
    globals.color = std::string(c) == "1";
  } else {
    globals.color = isatty(STDERR_FILENO) != 0 && isatty(STDOUT_FILENO) != 0;
  }

  CLI::App app{"sliceshear: exact shearing and vanishing-line computations for C_{2^n} slice charts"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", globals.json, "machine-readable output");
  app.add_flag("--unicode", globals.unicode, "Greek letters in class and representation output");

  RepArgs rep;
  auto* rep_cmd = app.add_subcommand("rep", "representation arithmetic");
  rep_cmd->add_option("op", rep.op, "dim | fixed | restrict | tau | lines")
      ->required()
      ->check(CLI::IsMember({"dim", "fixed", "restrict", "tau", "lines"}));
  rep_cmd->add_option("--group", rep.group, "group C<2^n>");
  rep_cmd->add_option("--V", rep.v, "representation, e.g. 2-2s");
  rep_cmd->add_option("--k", rep.k, "subgroup index for fixed / tau");
  rep_cmd->add_option("--m", rep.m, "subgroup index for restrict");

  ShearArgs shear;
  auto* shear_cmd = app.add_subcommand("shear", "shear a bidegree from C_{2^{n-k+1}} to C_{2^{n+1}}");
  shear_cmd->add_option("--n", shear.n)->required();
  shear_cmd->add_option("--k", shear.k)->required();
  shear_cmd->add_option("--V", shear.v, "grading over C_{2^{n+1}}");
  shear_cmd->add_option("--t", shear.t)->required();
  shear_cmd->add_option("--s", shear.s)->required();

  CorrespondArgs corr;
  auto* corr_cmd = app.add_subcommand("correspond", "image of a class under the correspondence");
  corr_cmd->add_option("--k", corr.k)->required();
  corr_cmd->add_option("--from", corr.from, "source group (default C2)");
  corr_cmd->add_option("class", corr.expr, "class expression")->required();

  TowerArgs tower;
  auto* tower_cmd = app.add_subcommand("tower", "transchromatic tower over C_{2^{n+1}} at height 2^n m");
  tower_cmd->add_option("--n", tower.n)->required();
  tower_cmd->add_option("--m", tower.m)->required();
  tower_cmd->add_option("--V", tower.v);

  HhrArgs hhr;
  auto* hhr_cmd = app.add_subcommand("hhr", "closed-form differential family over C_{2^{n+1}}");
  hhr_cmd->add_option("--n", hhr.n)->required();
  hhr_cmd->add_option("--i", hhr.i)->required();

  TransportArgs tr;
  auto* tr_cmd = app.add_subcommand("transport", "shear a differential up k levels");
  tr_cmd->add_option("--k", tr.k)->required();
  tr_cmd->add_option("--from", tr.from, "source group (default C2)");
  tr_cmd->add_option("--diff", tr.diff, "'<r>: <src> -> <tgt>'")->required();
  tr_cmd->add_option("--V", tr.v, "grading over the target group");

  VanishingArgs van;
  auto* van_cmd = app.add_subcommand("vanishing", "vanishing-line table");
  van_cmd->set_help_flag("--help", "Print this help message and exit");
  van_cmd->add_option("--h", van.h)->required();
  van_cmd->add_option("--n", van.n)->required();
  van_cmd->add_option("--V", van.v);

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "admissibility of a differential");
  chk_cmd->set_help_flag("--help", "Print this help message and exit");
  chk_cmd->add_option("--h", chk.h)->required();
  chk_cmd->add_option("--n", chk.n)->required();
  chk_cmd->add_option("--diff", chk.diff)->required();
  chk_cmd->add_option("--V", chk.v);

  ChartArgs chart;
  auto* chart_cmd = app.add_subcommand("chart", "render a chart document to SVG");
  chart_cmd->add_option("input", chart.input)->required();
  chart_cmd->add_option("-o,--output", chart.output, "SVG path (stdout when omitted)");
  chart_cmd->add_flag("--canonical", chart.canonical, "print the canonical document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage", e.what());
    return 1;
  }

  try {
    if (*rep_cmd) run_rep(rep);
    if (*shear_cmd) run_shear(shear);
    if (*corr_cmd) run_correspond(corr);
    if (*tower_cmd) run_tower(tower);
    if (*hhr_cmd) run_hhr(hhr);
    if (*tr_cmd) run_transport(tr);
    if (*van_cmd) run_vanishing(van);
    if (*chk_cmd) return run_check(chk);
    if (*chart_cmd) run_chart(chart);
  } catch (const ss::ParseError& e) {
    report("parse", e.what(), e.line(), e.column());
    return 2;
  } catch (const ss::SemanticError& e) {
    report("semantic", e.what());
    return 3;
  } catch (const ss::Error& e) {
    report(ss::to_string(e.kind()), e.what());
    return exit_code(e.kind());
  }
  return 0;
}
