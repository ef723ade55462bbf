#include "sliceshear/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string_view>

#include "sliceshear/error.hpp"
#include "sliceshear/vanishing.hpp"

namespace sliceshear {

namespace {

struct Token {
  enum class Kind { ident, integer, punct, end };
  Kind kind = Kind::end;
  std::string text;
  int col = 0;
  Int value = 0;
};

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::Kind::ident, std::string(line.substr(i, j - i)), col, 0});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      Int v = 0;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) {
        if (__builtin_mul_overflow(v, Int{10}, &v) || __builtin_add_overflow(v, Int{line[j] - '0'}, &v)) {
          throw ParseError("integer literal too large", line_no, col);
        }
        ++j;
      }
      out.push_back({Token::Kind::integer, std::string(line.substr(i, j - i)), col, v});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::punct, "->", col, 0});
      i += 2;
      continue;
    }
    if (std::string_view("[]^*,:=@+-").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::punct, std::string(1, c), col, 0});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_no, col);
  }
  out.push_back({Token::Kind::end, "", static_cast<int>(line.size()) + 1, 0});
  return out;
}

class Cursor {
 public:
  Cursor(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool is_punct(const char* p) const { return peek().kind == Token::Kind::punct && peek().text == p; }
  bool is_ident(const char* p) const { return peek().kind == Token::Kind::ident && peek().text == p; }
  bool accept(const char* p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  void expect(const char* p) {
    if (!accept(p)) fail(std::string("expected '") + p + "'");
  }
  Int expect_int(const std::string& what) {
    if (peek().kind != Token::Kind::integer) fail("expected " + what);
    return next().value;
  }
  Int expect_signed_int(const std::string& what) {
    const bool neg = accept("-");
    const Int v = expect_int(what);
    return neg ? -v : v;
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Token::Kind::ident) fail("expected " + what);
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, peek().col); }
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
    throw ParseError(message, line_, t.col);
  }
  int line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

bool indexed_ident(const std::string& text, const std::string& prefix, int& index) {
  if (text.size() <= prefix.size() || text.compare(0, prefix.size(), prefix) != 0) return false;
  const std::string digits = text.substr(prefix.size());
  if (digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return false;
  }
  index = std::stoi(digits);
  return true;
}

int to_int(Int v, const Cursor& cur, const Token& at) {
  if (v > 1'000'000) cur.fail_at(at, "index " + std::to_string(v) + " is too large");
  return static_cast<int>(v);
}

// rot<j>: the plane rotating by 2 pi j / 2^n, collapsed 2-locally.
VirtualRep rotation(CyclicGroup g, Int j, Int mult) {
  const int n = g.exponent();
  const Int r = mod_floor(j, g.order());
  if (r == 0) return VirtualRep::trivial(g, checked_mul(2, mult));
  int a = 0;
  while (((r >> a) & 1) == 0) ++a;
  const int i = n - a - 1;
  if (i == 0) return VirtualRep::sigma(g, checked_mul(2, mult));
  return VirtualRep::lambda(g, i, mult);
}

VirtualRep rep_basis(const std::string& name, CyclicGroup g, Int mult, const Cursor& cur, const Token& at) {
  int idx = 0;
  if (name == "s") return VirtualRep::sigma(g, mult);
  if (name == "l0") return VirtualRep::sigma(g, checked_mul(2, mult));
  if (indexed_ident(name, "rot", idx)) return rotation(g, idx, mult);
  if (indexed_ident(name, "l", idx)) return VirtualRep::lambda(g, idx, mult);
  cur.fail_at(at, "unknown representation basis '" + name + "'");
}

bool rep_term_start(const Cursor& cur) {
  return cur.peek().kind == Token::Kind::integer || cur.peek().kind == Token::Kind::ident;
}

VirtualRep parse_rep_tokens(Cursor& cur, CyclicGroup g) {
  VirtualRep out(g);
  bool first = true;
  while (true) {
    Int sign = 1;
    if (cur.accept("-")) {
      sign = -1;
    } else if (!first && !cur.accept("+")) {
      break;
    } else if (first) {
      cur.accept("+");
    }
    if (!rep_term_start(cur)) cur.fail("expected a representation term");
    Int mult = 1;
    bool has_int = false;
    if (cur.peek().kind == Token::Kind::integer) {
      mult = cur.next().value;
      has_int = true;
      cur.accept("*");
    }
    if (cur.peek().kind == Token::Kind::ident) {
      const Token t = cur.next();
      out += rep_basis(t.text, g, checked_mul(sign, mult), cur, t);
    } else if (has_int) {
      out += VirtualRep::trivial(g, checked_mul(sign, mult));
    } else {
      cur.fail("expected a representation term");
    }
    first = false;
    if (cur.at_end()) break;
  }
  return out;
}

bool reserved_name(const std::string& name) {
  int idx = 0;
  return name == "aS" || name == "u2S" || name == "Nt" || name == "D" || name == "Dbar" || name == "prov" ||
         indexed_ident(name, "aL", idx) || indexed_ident(name, "uL", idx);
}

using NameTable = std::map<std::string, ClassMonomial>;

ClassMonomial parse_atom(Cursor& cur, CyclicGroup g, int level, const NameTable* names) {
  const Token t = cur.next();
  if (t.kind == Token::Kind::integer) return ClassMonomial::constant(g, level, t.value);
  if (t.kind != Token::Kind::ident) cur.fail_at(t, "expected a class factor");
  int idx = 0;
  if (t.text == "aS") return ClassMonomial::a_sigma(g, level);
  if (t.text == "u2S") return ClassMonomial::u_2sigma(g, level);
  if (indexed_ident(t.text, "aL", idx)) return ClassMonomial::a_lambda(g, level, idx);
  if (indexed_ident(t.text, "uL", idx)) return ClassMonomial::u_lambda(g, level, idx);
  if (t.text == "Nt" || t.text == "D" || t.text == "Dbar") {
    cur.expect("[");
    const Token a_tok = cur.peek();
    const Int a = cur.expect_int("an index");
    cur.expect(",");
    const Token b_tok = cur.peek();
    const Int b = cur.expect_int("an index");
    cur.expect("]");
    if (t.text == "Nt") return ClassMonomial::norm_t(g, level, to_int(a, cur, a_tok), to_int(b, cur, b_tok));
    const int n = to_int(a, cur, a_tok);
    if (n > g.exponent()) throw DomainError(t.text + "[" + std::to_string(n) + ",...] needs C" + std::to_string(pow2(n)));
    const ClassMonomial d = t.text == "D" ? build_D(n, b) : build_Dbar(n, b);
    return d.pulled_back(g, level);
  }
  if (names != nullptr) {
    if (auto it = names->find(t.text); it != names->end()) {
      if (it->second.level() != level) {
        throw SemanticError("level", "class '" + t.text + "' lives at level C" + std::to_string(pow2(it->second.level())));
      }
      return it->second;
    }
  }
  cur.fail_at(t, "unknown class token '" + t.text + "'");
}

ClassMonomial parse_product(Cursor& cur, CyclicGroup g, int level, const NameTable* names) {
  const bool negative = cur.accept("-");
  ClassMonomial out(g, level);
  while (true) {
    ClassMonomial f = parse_atom(cur, g, level, names);
    if (cur.accept("^")) f = power(f, cur.expect_int("an exponent"));
    out = out * f;
    if (!cur.accept("*")) break;
  }
  if (negative) out = out.with_coeff(checked_sub(0, out.coeff()));
  return out;
}

int parse_level_suffix(Cursor& cur, CyclicGroup g) {
  const Token t = cur.peek();
  const std::string name = cur.expect_ident("a subgroup C<2^l>");
  CyclicGroup sub;
  try {
    sub = parse_group_name(name);
  } catch (const DomainError& e) {
    cur.fail_at(t, e.what());
  }
  if (sub.exponent() > g.exponent()) {
    throw SemanticError("level", name + " is not a subgroup of " + g.name());
  }
  return sub.exponent();
}

// Looks ahead for an '@' suffix so endpoints can be built at the right level.
int scan_level(const Cursor& cur, CyclicGroup g) {
  for (std::size_t k = 0;; ++k) {
    const Token& t = cur.peek(k);
    if (t.kind == Token::Kind::end) return g.exponent();
    if (t.kind == Token::Kind::punct && t.text == "@") {
      Cursor probe = cur;
      for (std::size_t skip = 0; skip <= k; ++skip) probe.next();
      return parse_level_suffix(probe, g);
    }
  }
}

Differential parse_diff_tokens(Cursor& cur, CyclicGroup g, const NameTable* names) {
  const int level = scan_level(cur, g);
  const Int page = cur.expect_int("a page number");
  cur.expect(":");
  ClassMonomial src = parse_product(cur, g, level, names);
  cur.expect("->");
  ClassMonomial tgt = parse_product(cur, g, level, names);
  if (cur.accept("@")) parse_level_suffix(cur, g);
  Provenance prov = Provenance::user;
  if (cur.is_ident("prov")) {
    cur.next();
    cur.expect("=");
    const Token t = cur.peek();
    const std::string name = cur.expect_ident("a provenance");
    try {
      prov = parse_provenance(name);
    } catch (const DomainError& e) {
      cur.fail_at(t, e.what());
    }
  }
  cur.expect_end();
  Differential d{g, page, std::move(src), std::move(tgt), prov};
  require_valid(d);
  return d;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur)) {
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    out.push_back(cur);
  }
  return out;
}

std::string level_suffix(const ClassMonomial& m) {
  if (m.level() == m.group().exponent()) return "";
  return " @C" + std::to_string(pow2(m.level()));
}

}  // namespace

VirtualRep parse_rep(const std::string& text, CyclicGroup g) {
  Cursor cur(tokenize(text, 1), 1);
  VirtualRep v = parse_rep_tokens(cur, g);
  cur.expect_end();
  return v;
}

ClassMonomial parse_class(const std::string& text, CyclicGroup g, std::optional<int> level) {
  Cursor cur(tokenize(text, 1), 1);
  int l = level.value_or(g.exponent());
  if (!level) l = scan_level(cur, g);
  ClassMonomial m = parse_product(cur, g, l, nullptr);
  if (cur.accept("@")) parse_level_suffix(cur, g);
  cur.expect_end();
  return m;
}

Differential parse_differential(const std::string& text, CyclicGroup g) {
  Cursor cur(tokenize(text, 1), 1);
  return parse_diff_tokens(cur, g, nullptr);
}

ChartDocument parse_document(const std::string& text) {
  ChartDocument doc;
  bool have_group = false;
  bool have_grading = false;
  NameTable names;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    Cursor cur(tokenize(lines[idx], line_no), line_no);
    if (cur.at_end()) continue;
    const Token head = cur.peek();
    const std::string kw = cur.expect_ident("a command");
    try {
      if (!have_group && kw != "group") cur.fail_at(head, "the first command must be 'group'");
      if (kw == "group") {
        if (have_group) throw SemanticError("duplicate", "group declared twice");
        const Token t = cur.peek();
        const std::string name = cur.expect_ident("a group name");
        try {
          doc.group = parse_group_name(name);
        } catch (const DomainError& e) {
          cur.fail_at(t, e.what());
        }
        cur.expect_end();
        doc.grading = VirtualRep(doc.group);
        have_group = true;
      } else if (kw == "grading") {
        if (have_grading) throw SemanticError("duplicate", "grading declared twice");
        doc.grading = parse_rep_tokens(cur, doc.group);
        cur.expect_end();
        have_grading = true;
      } else if (kw == "window") {
        if (doc.window) throw SemanticError("duplicate", "window declared twice");
        Window w;
        w.x_min = cur.expect_signed_int("x_min");
        w.x_max = cur.expect_signed_int("x_max");
        w.s_max = cur.expect_signed_int("s_max");
        cur.expect_end();
        if (w.x_min > w.x_max) throw SemanticError("window", "x_min exceeds x_max");
        if (w.s_max < 0) throw SemanticError("window", "s_max is negative");
        doc.window = w;
      } else if (kw == "class") {
        const Token t = cur.peek();
        const std::string name = cur.expect_ident("a class name");
        if (reserved_name(name)) cur.fail_at(t, "'" + name + "' is a reserved class token");
        if (names.count(name) != 0) throw SemanticError("duplicate", "class '" + name + "' declared twice");
        cur.expect("=");
        const int level = scan_level(cur, doc.group);
        ClassMonomial m = parse_product(cur, doc.group, level, nullptr);
        if (cur.accept("@")) parse_level_suffix(cur, doc.group);
        cur.expect_end();
        names.emplace(name, m);
        doc.classes.push_back({name, std::move(m)});
      } else if (kw == "diff") {
        doc.differentials.push_back(parse_diff_tokens(cur, doc.group, &names));
      } else if (kw == "guide") {
        Guide gd;
        const Token t = cur.peek();
        const std::string what = cur.expect_ident("L<k>, vanish or boundary");
        int k = 0;
        if (what == "boundary") {
          gd.kind = Guide::Kind::boundary;
          if (doc.group.exponent() < 1) throw SemanticError("guide", "boundary needs a nontrivial group");
        } else if (what == "vanish") {
          gd.kind = Guide::Kind::vanish;
          if (cur.expect_ident("h") != "h") cur.fail("expected h=<h>");
          cur.expect("=");
          gd.h = cur.expect_int("a height");
          if (cur.expect_ident("k") != "k") cur.fail("expected k=<k>");
          cur.expect("=");
          const Token kt = cur.peek();
          gd.k = to_int(cur.expect_int("k"), cur, kt);
          if (doc.group.exponent() < 1) throw SemanticError("guide", "vanishing lines need a nontrivial group");
          N_constant(gd.h, doc.group.exponent() - 1, gd.k);
        } else if (indexed_ident(what, "L", k)) {
          gd.kind = Guide::Kind::line;
          gd.k = k;
          if (k > doc.group.exponent()) {
            throw SemanticError("guide", "L" + std::to_string(k) + " needs k <= " + std::to_string(doc.group.exponent()));
          }
        } else {
          cur.fail_at(t, "unknown guide '" + what + "'");
        }
        cur.expect_end();
        doc.guides.push_back(gd);
      } else {
        cur.fail_at(head, "unknown command '" + kw + "'");
      }
    } catch (const SemanticError& e) {
      throw SemanticError(e.rule(), "line " + std::to_string(line_no) + ": " +
                                        std::string(e.what()).substr(e.rule().size() + 2));
    } catch (const DomainError& e) {
      throw SemanticError("domain", "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_group) throw ParseError("missing 'group' command", 1, 1);
  return doc;
}

std::string print_canonical(const ClassMonomial& m) { return m.str(); }

std::string print_canonical(const Differential& d) {
  return "diff " + std::to_string(d.page) + ": " + d.source.str() + " -> " + d.target.str() + level_suffix(d.source);
}

std::string print_canonical(const ChartDocument& doc) {
  std::ostringstream out;
  out << "group " << doc.group.name() << "\n";
  if (!doc.grading.is_zero()) out << "grading " << doc.grading.str() << "\n";
  if (doc.window) out << "window " << doc.window->x_min << " " << doc.window->x_max << " " << doc.window->s_max << "\n";
  for (const auto& c : doc.classes) out << "class " << c.name << " = " << c.cls.str() << level_suffix(c.cls) << "\n";
  for (const auto& d : doc.differentials) {
    out << print_canonical(d);
    if (d.provenance != Provenance::user) out << " prov=" << to_string(d.provenance);
    out << "\n";
  }
  for (const auto& g : doc.guides) {
    switch (g.kind) {
      case Guide::Kind::line:
        out << "guide L" << g.k << "\n";
        break;
      case Guide::Kind::vanish:
        out << "guide vanish h=" << g.h << " k=" << g.k << "\n";
        break;
      case Guide::Kind::boundary:
        out << "guide boundary\n";
        break;
    }
  }
  return out.str();
}

}  // namespace sliceshear
