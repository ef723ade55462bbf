#include "sliceshear/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

#include "sliceshear/error.hpp"

namespace sliceshear {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message, 0, 0);
}

Json monomial_json(const ClassMonomial& m) {
  Json out;
  out["group"] = m.group().name();
  out["level"] = m.level();
  out["coeff"] = m.coeff();
  Json norms = Json::array();
  for (const auto& [key, e] : m.norms()) norms.push_back(Json::array({key.i, key.j, e}));
  out["norms"] = norms;
  Json a = Json::object();
  Json u = Json::object();
  const auto ae = m.a_exponents();
  const auto ue = m.u_exponents();
  if (!ae.empty() && ae[0] != 0) a["S"] = ae[0];
  if (!ue.empty() && ue[0] != 0) u["2S"] = ue[0];
  for (std::size_t i = 1; i < ae.size(); ++i) {
    if (ae[i] != 0) a["L" + std::to_string(i)] = ae[i];
  }
  for (std::size_t i = 1; i < ue.size(); ++i) {
    if (ue[i] != 0) u["L" + std::to_string(i)] = ue[i];
  }
  out["a"] = a;
  out["u"] = u;
  return out;
}

Json differential_json(const Differential& d) {
  Json out;
  out["group"] = d.group.name();
  out["page"] = d.page;
  out["source"] = monomial_json(d.source);
  out["target"] = monomial_json(d.target);
  out["provenance"] = to_string(d.provenance);
  return out;
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

Int integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<Int>();
}

CyclicGroup group_of(const Json& v, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected a group name");
  try {
    return parse_group_name(v.get<std::string>());
  } catch (const DomainError& e) {
    schema_error(path, e.what());
  }
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (const char* want : keys) known = known || k == want;
    if (!known) schema_error(path, "unknown field '" + k + "'");
  }
}

int small_index(Int v, const std::string& path) {
  if (v < 0 || v > 1'000'000) schema_error(path, "index out of range");
  return static_cast<int>(v);
}

ClassMonomial monomial_from(const Json& j, const std::string& path) {
  const CyclicGroup g = group_of(field(j, path, "group"), path + ".group");
  const Int level_raw = integer(field(j, path, "level"), path + ".level");
  if (level_raw < 0 || level_raw > g.exponent()) schema_error(path + ".level", "level outside [0, " + std::to_string(g.exponent()) + "]");
  const int level = static_cast<int>(level_raw);
  const Int coeff = integer(field(j, path, "coeff"), path + ".coeff");
  const Json& norms = field(j, path, "norms");
  const Json& a = field(j, path, "a");
  const Json& u = field(j, path, "u");
  check_keys(j, path, {"group", "level", "coeff", "norms", "a", "u"});

  ClassMonomial m(g, level);
  try {
    if (!norms.is_array()) schema_error(path + ".norms", "expected an array");
    for (std::size_t idx = 0; idx < norms.size(); ++idx) {
      const std::string p = path + ".norms[" + std::to_string(idx) + "]";
      const Json& n = norms[idx];
      if (!n.is_array() || n.size() != 3) schema_error(p, "expected [i, j, e]");
      const int i = small_index(integer(n[0], p + "[0]"), p + "[0]");
      const int jj = small_index(integer(n[1], p + "[1]"), p + "[1]");
      const Int e = integer(n[2], p + "[2]");
      if (e < 1) schema_error(p + "[2]", "exponent must be positive");
      m = m * ClassMonomial::norm_t(g, level, i, jj, e);
    }
    auto read_exps = [&](const Json& obj, const std::string& p, const char* sigma_key, bool is_a) {
      if (!obj.is_object()) schema_error(p, "expected an object");
      for (const auto& [k, v] : obj.items()) {
        const std::string kp = p + "." + k;
        const Int e = integer(v, kp);
        if (e < 1) schema_error(kp, "exponent must be positive");
        if (k == sigma_key) {
          m = m * (is_a ? ClassMonomial::a_sigma(g, level, e) : ClassMonomial::u_2sigma(g, level, e));
        } else if (k.size() > 1 && k[0] == 'L' &&
                   std::all_of(k.begin() + 1, k.end(), [](unsigned char c) { return std::isdigit(c); }) &&
                   k.size() < 8) {
          const int i = std::stoi(k.substr(1));
          m = m * (is_a ? ClassMonomial::a_lambda(g, level, i, e) : ClassMonomial::u_lambda(g, level, i, e));
        } else {
          schema_error(kp, "unknown basis key");
        }
      }
    };
    read_exps(a, path + ".a", "S", true);
    read_exps(u, path + ".u", "2S", false);
  } catch (const DomainError& e) {
    schema_error(path, e.what());
  }
  const ClassMonomial out = m.with_coeff(checked_mul(m.coeff(), coeff));
  if (out.coeff() != coeff) schema_error(path + ".coeff", "coefficient is not reduced");
  return out;
}

Differential differential_from(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const Int page = integer(field(j, path, "page"), path + ".page");
  if (page < 2) schema_error(path + ".page", "page " + std::to_string(page) + " is below 2");
  const CyclicGroup g = group_of(field(j, path, "group"), path + ".group");
  ClassMonomial src = monomial_from(field(j, path, "source"), path + ".source");
  ClassMonomial tgt = monomial_from(field(j, path, "target"), path + ".target");
  const Json& pv = field(j, path, "provenance");
  check_keys(j, path, {"group", "page", "source", "target", "provenance"});
  if (!pv.is_string()) schema_error(path + ".provenance", "expected a string");
  Provenance prov = Provenance::user;
  try {
    prov = parse_provenance(pv.get<std::string>());
  } catch (const DomainError& e) {
    schema_error(path + ".provenance", e.what());
  }
  Differential d{g, page, std::move(src), std::move(tgt), prov};
  require_valid(d);
  return d;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error("$", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const ClassMonomial& m, int indent) { return monomial_json(m).dump(indent); }
std::string to_json(const Differential& d, int indent) { return differential_json(d).dump(indent); }

ClassMonomial class_from_json(const std::string& text) { return monomial_from(parse_text(text), "$"); }
Differential differential_from_json(const std::string& text) { return differential_from(parse_text(text), "$"); }

std::string export_json(const std::vector<Differential>& items, int indent) {
  Json out = Json::array();
  for (const auto& d : items) out.push_back(differential_json(d));
  return out.dump(indent);
}

std::vector<Differential> import_json(const std::string& text) {
  const Json j = parse_text(text);
  if (!j.is_array()) schema_error("$", "expected an array");
  std::vector<Differential> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(differential_from(j[i], "$[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace sliceshear
