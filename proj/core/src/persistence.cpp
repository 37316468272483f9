#include "nullguard/persistence.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nullguard {

namespace {

using json = nlohmann::ordered_json;

std::string kind_name(ValueDomain::Kind kind) {
  switch (kind) {
    case ValueDomain::Kind::naturals_with_max: return "naturals-with-max";
    case ValueDomain::Kind::text_with_maxlen: return "text-with-maxlen";
    case ValueDomain::Kind::integer_range: return "integer-range";
    case ValueDomain::Kind::real_range: return "real-range";
    case ValueDomain::Kind::boolean_value: return "boolean";
  }
  return "?";
}

std::string kind_name(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::atomic: return "atomic";
    case FunctionKind::product: return "product";
    case FunctionKind::composite: return "composite";
  }
  return "?";
}

json value_domain_to_json(const ValueDomain& vd) {
  json j;
  j["kind"] = kind_name(vd.kind);
  switch (vd.kind) {
    case ValueDomain::Kind::naturals_with_max: j["max"] = vd.nat_max; break;
    case ValueDomain::Kind::text_with_maxlen: j["maxlen"] = vd.max_len; break;
    case ValueDomain::Kind::integer_range:
      j["lower"] = vd.int_lower;
      j["upper"] = vd.int_upper;
      break;
    case ValueDomain::Kind::real_range:
      j["lower"] = vd.real_lower;
      j["upper"] = vd.real_upper;
      break;
    case ValueDomain::Kind::boolean_value: break;
  }
  return j;
}

ValueDomain value_domain_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "naturals-with-max") return ValueDomain::naturals(j.at("max").get<long long>());
  if (kind == "text-with-maxlen") return ValueDomain::text(j.at("maxlen").get<long long>());
  if (kind == "integer-range")
    return ValueDomain::integer_range(j.at("lower").get<long long>(),
                                      j.at("upper").get<long long>());
  if (kind == "real-range")
    return ValueDomain::real_range(j.at("lower").get<double>(), j.at("upper").get<double>());
  if (kind == "boolean") return ValueDomain::boolean();
  throw PersistError("unknown value domain kind: " + kind);
}

json function_to_json(const FunctionDef& f) {
  json j;
  j["func_id"] = f.func_id;
  j["name"] = f.name;
  j["kind"] = kind_name(f.kind);
  j["domain"] = f.domain;
  if (f.kind == FunctionKind::atomic) {
    if (f.codomain.kind == Codomain::Kind::set)
      j["codomain"] = json{{"set", f.codomain.set}};
    else
      j["codomain"] = json{{"value_domain", f.codomain.domain_index}};
    j["total"] = f.total;
  } else {
    j["members"] = f.members;
  }
  return j;
}

FunctionDef function_from_json(const json& j) {
  FunctionDef f;
  f.func_id = j.at("func_id").get<FuncId>();
  f.name = j.at("name").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  f.domain = j.at("domain").get<SetId>();
  if (kind == "atomic") {
    f.kind = FunctionKind::atomic;
    const json& codomain = j.at("codomain");
    if (codomain.contains("set"))
      f.codomain = Codomain::of_set(codomain.at("set").get<SetId>());
    else
      f.codomain = Codomain::of_domain(codomain.at("value_domain").get<int>());
    f.total = j.at("total").get<bool>();
  } else if (kind == "product" || kind == "composite") {
    f.kind = kind == "product" ? FunctionKind::product : FunctionKind::composite;
    f.members = j.at("members").get<std::vector<FuncId>>();
  } else {
    throw PersistError("unknown function kind: " + kind);
  }
  return f;
}

}  // namespace

std::string schema_to_string(const Catalog& catalog, const Registry& registry) {
  json doc;
  doc["sets"] = json::array();
  for (const SetDef& s : catalog.sets())
    doc["sets"].push_back(json{{"set_id", s.set_id}, {"name", s.name}});
  doc["value_domains"] = json::array();
  for (const ValueDomain& vd : catalog.value_domains())
    doc["value_domains"].push_back(value_domain_to_json(vd));
  doc["functions"] = json::array();
  for (const FunctionDef& f : catalog.functions()) doc["functions"].push_back(function_to_json(f));
  doc["constraints"] = json::array();
  for (const ExistenceConstraint& c : registry.constraints()) {
    json j;
    j["name"] = c.name;
    j["inexist"] = c.inexist;
    j["negation"] = c.negation;
    j["left"] = c.left ? json(*c.left) : json(nullptr);
    j["right"] = c.right;
    doc["constraints"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

void save_schema(const Catalog& catalog, const Registry& registry, std::ostream& out) {
  out << schema_to_string(catalog, registry);
}

void save_schema_file(const Catalog& catalog, const Registry& registry,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw PersistError("cannot write " + path.string());
  save_schema(catalog, registry, out);
}

std::unique_ptr<Schema> load_schema(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw PersistError(std::string("bad catalog file: ") + e.what());
  }
  auto schema = std::make_unique<Schema>();
  try {
    for (const json& j : doc.value("sets", json::array())) {
      SetDef def;
      def.set_id = j.at("set_id").get<SetId>();
      def.name = j.at("name").get<std::string>();
      schema->catalog.restore_set(std::move(def));
    }
    for (const json& j : doc.value("value_domains", json::array()))
      schema->catalog.define_value_domain(value_domain_from_json(j));
    for (const json& j : doc.value("functions", json::array()))
      schema->catalog.restore_function(function_from_json(j));
    for (const json& j : doc.value("constraints", json::array())) {
      ExistenceConstraint c;
      c.name = j.at("name").get<std::string>();
      c.inexist = j.at("inexist").get<bool>();
      c.negation = j.at("negation").get<bool>();
      if (!j.at("left").is_null()) c.left = j.at("left").get<FuncId>();
      c.right = j.at("right").get<FuncId>();
      schema->registry.restore_constraint(std::move(c));
    }
  } catch (const json::exception& e) {
    throw PersistError(std::string("bad catalog file: ") + e.what());
  } catch (const CatalogError& e) {
    throw PersistError(std::string("bad catalog file: ") + e.what());
  }
  return schema;
}

std::unique_ptr<Schema> load_schema_string(const std::string& text) {
  std::istringstream in(text);
  return load_schema(in);
}

std::unique_ptr<Schema> load_schema_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PersistError("cannot read " + path.string());
  return load_schema(in);
}

}  // namespace nullguard
