#include "sliceshear/svg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "sliceshear/vanishing.hpp"

namespace sliceshear {

namespace {

// Fixed-point rendering of an exact rational, rounded half up to 2 places.
std::string fixed(const Rational& v) {
  if (v.is_integer()) return std::to_string(v.num());
  const Rational scaled = v * Rational(100) + Rational(1, 2);
  const Int hundredths = scaled.floor();
  const bool negative = hundredths < 0;
  const Int mag = negative ? -hundredths : hundredths;
  std::string frac = std::to_string(mag % 100);
  if (frac.size() < 2) frac.insert(frac.begin(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative ? "-" : "") + std::to_string(mag / 100);
  if (!frac.empty()) out += "." + frac;
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

const char* colour(Provenance p) {
  switch (p) {
    case Provenance::seed:
      return "#1f77b4";
    case Provenance::transported:
      return "#d62728";
    case Provenance::generated:
      return "#2ca02c";
    case Provenance::user:
      return "#555555";
  }
  return "#555555";
}

struct Point {
  Int x;
  Int s;
};

Point where(const ClassMonomial& m) {
  const Bidegree b = bidegree(m);
  return {b.stem, b.filtration};
}

Window fit(const ChartDocument& doc) {
  std::vector<Point> pts;
  for (const auto& c : doc.classes) {
    if (!c.cls.is_zero()) pts.push_back(where(c.cls));
  }
  for (const auto& d : doc.differentials) {
    pts.push_back(where(d.source));
    pts.push_back(where(d.target));
  }
  Window w{0, 1, 1};
  for (const auto& p : pts) {
    w.x_min = std::min(w.x_min, p.x);
    w.x_max = std::max(w.x_max, p.x);
    w.s_max = std::max(w.s_max, p.s);
  }
  return w;
}

Int tick_step(Int span) {
  for (Int step : {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000}) {
    if (span / step <= 24) return step;
  }
  return span / 24 + 1;
}

struct Frame {
  Window w;
  SvgOptions o;

  Rational px(const Rational& x) const { return Rational(o.margin) + (x - Rational(w.x_min)) * Rational(o.cell); }
  Rational py(const Rational& s) const { return Rational(o.margin) + (Rational(w.s_max) - s) * Rational(o.cell); }
  bool contains(Point p) const { return p.x >= w.x_min && p.x <= w.x_max && p.s >= 0 && p.s <= w.s_max; }
};

// Segment of s = slope * x + c inside the window, if any.
std::optional<std::pair<Rational, Rational>> clip(const Line& l, const Window& w) {
  Rational lo(w.x_min);
  Rational hi(w.x_max);
  if (l.slope == 0) {
    if (l.intercept < Rational(0) || l.intercept > Rational(w.s_max)) return std::nullopt;
    return std::make_pair(lo, hi);
  }
  const Rational a(l.slope);
  lo = std::max(lo, (Rational(0) - l.intercept) / a);
  hi = std::min(hi, (Rational(w.s_max) - l.intercept) / a);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace

std::string emit_svg(const ChartDocument& doc, const SvgOptions& options) {
  const Frame f{doc.window.value_or(fit(doc)), options};
  const Window& w = f.w;
  const Int width = 2 * options.margin + (w.x_max - w.x_min) * options.cell;
  const Int height = 2 * options.margin + w.s_max * options.cell;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<defs>\n";
  for (auto p : {Provenance::seed, Provenance::transported, Provenance::generated, Provenance::user}) {
    out << "<marker id=\"head-" << to_string(p)
        << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
        << "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << colour(p) << "\"/></marker>\n";
  }
  out << "</defs>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  out << "<text x=\"" << options.margin << "\" y=\"" << options.margin / 2 << "\" font-size=\"13\">"
      << escape(doc.group.name()) << " slice chart, V = " << escape(doc.grading.str()) << "</text>\n";

  // grid and axes
  out << "<g class=\"grid\" stroke=\"#e6e6e6\" stroke-width=\"1\">\n";
  for (Int x = w.x_min; x <= w.x_max; ++x) {
    out << "<line x1=\"" << fixed(f.px(x)) << "\" y1=\"" << fixed(f.py(w.s_max)) << "\" x2=\"" << fixed(f.px(x))
        << "\" y2=\"" << fixed(f.py(0)) << "\"/>\n";
  }
  for (Int s = 0; s <= w.s_max; ++s) {
    out << "<line x1=\"" << fixed(f.px(w.x_min)) << "\" y1=\"" << fixed(f.py(s)) << "\" x2=\"" << fixed(f.px(w.x_max))
        << "\" y2=\"" << fixed(f.py(s)) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
  out << "<line x1=\"" << fixed(f.px(w.x_min)) << "\" y1=\"" << fixed(f.py(0)) << "\" x2=\"" << fixed(f.px(w.x_max))
      << "\" y2=\"" << fixed(f.py(0)) << "\"/>\n";
  if (w.x_min <= 0 && 0 <= w.x_max) {
    out << "<line x1=\"" << fixed(f.px(0)) << "\" y1=\"" << fixed(f.py(0)) << "\" x2=\"" << fixed(f.px(0))
        << "\" y2=\"" << fixed(f.py(w.s_max)) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g class=\"labels\" fill=\"#000000\" text-anchor=\"middle\">\n";
  const Int xstep = tick_step(w.x_max - w.x_min);
  for (Int x = w.x_min; x <= w.x_max; ++x) {
    if (mod_floor(x, xstep) != 0) continue;
    out << "<text x=\"" << fixed(f.px(x)) << "\" y=\"" << fixed(f.py(0) + Rational(16)) << "\">" << x << "</text>\n";
  }
  const Int sstep = tick_step(w.s_max);
  for (Int s = 0; s <= w.s_max; s += sstep) {
    out << "<text x=\"" << fixed(f.px(w.x_min) - Rational(12)) << "\" y=\"" << fixed(f.py(s) + Rational(4)) << "\">"
        << s << "</text>\n";
  }
  out << "<text x=\"" << fixed(f.px(w.x_max) + Rational(20)) << "\" y=\"" << fixed(f.py(0) + Rational(4))
      << "\">t-s</text>\n";
  out << "<text x=\"" << fixed(f.px(w.x_min) - Rational(12)) << "\" y=\"" << fixed(f.py(w.s_max) - Rational(16))
      << "\">s</text>\n";
  out << "</g>\n";

  // guides
  const int top = doc.group.exponent();
  out << "<g class=\"guides\" fill=\"none\" stroke-width=\"1.2\">\n";
  for (const auto& g : doc.guides) {
    Line line;
    std::string label;
    const char* stroke = "#7f7f7f";
    const char* dash = "6 4";
    switch (g.kind) {
      case Guide::Kind::line:
        line = line_L(doc.grading, g.k);
        label = "L" + std::to_string(g.k);
        break;
      case Guide::Kind::vanish:
        line = vanishing_line(doc.grading, g.h, top - 1, g.k);
        label = "N" + std::to_string(g.k);
        stroke = "#9467bd";
        dash = "2 3";
        break;
      case Guide::Kind::boundary:
        line = boundary_line(doc.grading, top - 1);
        label = "boundary";
        stroke = "#8c564b";
        dash = "8 3 2 3";
        break;
    }
    const auto seg = clip(line, w);
    if (!seg) continue;
    const Rational y1 = line.value_at(seg->first);
    const Rational y2 = line.value_at(seg->second);
    out << "<line x1=\"" << fixed(f.px(seg->first)) << "\" y1=\"" << fixed(f.py(y1)) << "\" x2=\""
        << fixed(f.px(seg->second)) << "\" y2=\"" << fixed(f.py(y2)) << "\" stroke=\"" << stroke
        << "\" stroke-dasharray=\"" << dash << "\"><title>" << escape(label + ": " + line.str()) << "</title></line>\n";
    out << "<text x=\"" << fixed(f.px(seg->second) + Rational(4)) << "\" y=\"" << fixed(f.py(y2) - Rational(4))
        << "\" fill=\"" << stroke << "\" stroke=\"none\">" << escape(label) << "</text>\n";
  }
  out << "</g>\n";

  std::size_t outside = 0;

  // class markers, stacked sideways when they share a bidegree
  struct Marker {
    const DeclaredClass* decl;
    Rational cx;
    Rational cy;
  };
  std::vector<Marker> markers;
  std::map<std::pair<Int, Int>, int> stacked;
  for (const auto& c : doc.classes) {
    if (c.cls.is_zero()) continue;
    const Point p = where(c.cls);
    if (!f.contains(p)) {
      ++outside;
      continue;
    }
    const int slot = stacked[{p.x, p.s}]++;
    markers.push_back({&c, f.px(p.x) + Rational(6 * slot), f.py(p.s)});
  }
  auto anchor = [&](const ClassMonomial& m, const Point& p) -> std::pair<Rational, Rational> {
    for (const auto& mk : markers) {
      if (mk.decl->cls == m) return {mk.cx, mk.cy};
    }
    return {f.px(p.x), f.py(p.s)};
  };

  // differentials
  out << "<g class=\"differentials\" stroke-width=\"1.5\">\n";
  for (const auto& d : doc.differentials) {
    const Point a = where(d.source);
    const Point b = where(d.target);
    if (!f.contains(a) || !f.contains(b)) {
      ++outside;
      continue;
    }
    const auto [ax, ay] = anchor(d.source, a);
    const auto [bx, by] = anchor(d.target, b);
    out << "<line x1=\"" << fixed(ax) << "\" y1=\"" << fixed(ay) << "\" x2=\"" << fixed(bx) << "\" y2=\"" << fixed(by)
        << "\" stroke=\"" << colour(d.provenance) << "\" marker-end=\"url(#head-" << to_string(d.provenance)
        << ")\"><title>" << escape(print_canonical(d)) << "</title></line>\n";
  }
  out << "</g>\n";

  out << "<g class=\"classes\" fill=\"#000000\">\n";
  for (const auto& mk : markers) {
    out << "<circle cx=\"" << fixed(mk.cx) << "\" cy=\"" << fixed(mk.cy) << "\" r=\"4\"><title>"
        << escape(mk.decl->name + " = " + mk.decl->cls.str()) << "</title></circle>\n";
  }
  out << "</g>\n";

  if (outside > 0) {
    out << "<text class=\"warning\" x=\"" << options.margin << "\" y=\"" << height - options.margin / 4
        << "\" fill=\"#d62728\">warning: " << outside << (outside == 1 ? " item lies" : " items lie")
        << " outside the window</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sliceshear
