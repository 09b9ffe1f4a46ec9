#include "segalkit/json_io.hpp"

#include <fstream>

namespace segal {

namespace {

std::string table_key(int n, int i) {
  return std::to_string(n) + "," + std::to_string(i);
}

std::pair<int, int> parse_table_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    throw ValidationError("malformed operator key: " + key);
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ValidationError("malformed operator key: " + key);
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ValidationError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<std::string> string_list(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw ValidationError(std::string(name) + " must be a list");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string())
      throw ValidationError(std::string(name) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Table string_table(const json& j) {
  if (!j.is_object()) throw ValidationError("operator table must be an object");
  Table out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ValidationError("operator table must hold strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

json sset_to_json(const TruncSSet& S) {
  json j;
  j["trunc_level"] = S.trunc_level;
  j["levels"] = S.levels;
  json face = json::object();
  for (const auto& [k, t] : S.face) face[table_key(k.first, k.second)] = t;
  j["face"] = face;
  json degen = json::object();
  for (const auto& [k, t] : S.degen) degen[table_key(k.first, k.second)] = t;
  j["degen"] = degen;
  return j;
}

TruncSSet sset_from_json(const json& j) {
  TruncSSet S;
  const json& tl = field(j, "trunc_level");
  if (!tl.is_number_integer()) throw ValidationError("trunc_level must be an integer");
  S.trunc_level = tl.get<int>();
  const json& levels = field(j, "levels");
  if (!levels.is_array()) throw ValidationError("levels must be a list of lists");
  for (const auto& lv : levels) {
    std::vector<std::string> ids;
    if (!lv.is_array()) throw ValidationError("levels must be a list of lists");
    for (const auto& e : lv) {
      if (!e.is_string()) throw ValidationError("simplex ids must be strings");
      ids.push_back(e.get<std::string>());
    }
    S.levels.push_back(std::move(ids));
  }
  for (const auto& [k, t] : field(j, "face").items())
    S.face[parse_table_key(k)] = string_table(t);
  for (const auto& [k, t] : field(j, "degen").items())
    S.degen[parse_table_key(k)] = string_table(t);
  S.canonicalize();
  S.validate_structure();
  return S;
}

json fincat_to_json(const FinCat& C) {
  json j;
  j["objects"] = C.objects;
  json arrows = json::array();
  for (const auto& a : C.arrows)
    arrows.push_back({{"id", a}, {"dom", C.dom.at(a)}, {"cod", C.cod.at(a)}});
  j["arrows"] = arrows;
  j["ident"] = C.ident;
  json comp = json::array();
  for (const auto& [k, gf] : C.comp)
    comp.push_back(json::array({k.first, k.second, gf}));
  j["comp"] = comp;
  return j;
}

FinCat fincat_from_json(const json& j) {
  FinCat C;
  C.objects = string_list(j, "objects");
  const json& arrows = field(j, "arrows");
  if (!arrows.is_array()) throw ValidationError("arrows must be a list");
  for (const auto& a : arrows) {
    std::string id = field(a, "id").get<std::string>();
    C.arrows.push_back(id);
    C.dom[id] = field(a, "dom").get<std::string>();
    C.cod[id] = field(a, "cod").get<std::string>();
  }
  for (const auto& [x, e] : field(j, "ident").items()) {
    if (!e.is_string()) throw ValidationError("ident must map to arrow ids");
    C.ident[x] = e.get<std::string>();
  }
  const json& comp = field(j, "comp");
  if (!comp.is_array()) throw ValidationError("comp must be a list of triples");
  for (const auto& t : comp) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
        !t[2].is_string())
      throw ValidationError("comp entries must be triples of arrow ids");
    C.comp[{t[0].get<std::string>(), t[1].get<std::string>()}] =
        t[2].get<std::string>();
  }
  C.canonicalize();
  C.validate();
  return C;
}

json opcat_to_json(const UnaryOpCat& O) {
  json j = fincat_to_json(O.cat);
  j["chosen"] = O.chosen;
  j["phi0"] = O.phi0;
  json phi1 = json::array();
  for (const auto& [k, v] : O.phi1)
    phi1.push_back(json::array({k.first, k.second, v}));
  j["phi1"] = phi1;
  return j;
}

UnaryOpCat opcat_from_json(const json& j) {
  UnaryOpCat O;
  O.cat = fincat_from_json(j);
  for (const auto& x : string_list(j, "chosen")) O.chosen.insert(x);
  for (const auto& [a, v] : field(j, "phi0").items()) {
    if (!v.is_string()) throw ValidationError("phi0 must map to object ids");
    O.phi0[a] = v.get<std::string>();
  }
  const json& phi1 = field(j, "phi1");
  if (!phi1.is_array()) throw ValidationError("phi1 must be a list of triples");
  for (const auto& t : phi1) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
        !t[2].is_string())
      throw ValidationError("phi1 entries must be triples of arrow ids");
    O.phi1[{t[0].get<std::string>(), t[1].get<std::string>()}] =
        t[2].get<std::string>();
  }
  O.validate_structure();
  return O;
}

std::string dump_canonical(const json& j) {
  json sorted = j;  // nlohmann objects already iterate in key order
  return sorted.dump(2) + "\n";
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  out << dump_canonical(j);
  if (!out) throw ValidationError("failed writing " + path.string());
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ValidationError("malformed JSON in " + path.string());
  return j;
}

}  // namespace segal
