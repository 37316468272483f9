#include "nullguard/catalog.hpp"

#include <algorithm>
#include <set>

namespace nullguard {

ValueDomain ValueDomain::naturals(long long max) {
  if (max < 0) throw CatalogError("naturals-with-max: max must be >= 0");
  ValueDomain vd;
  vd.kind = Kind::naturals_with_max;
  vd.nat_max = max;
  return vd;
}

ValueDomain ValueDomain::text(long long maxlen) {
  if (maxlen < 0) throw CatalogError("text-with-maxlen: maxlen must be >= 0");
  ValueDomain vd;
  vd.kind = Kind::text_with_maxlen;
  vd.max_len = maxlen;
  return vd;
}

ValueDomain ValueDomain::integer_range(long long lower, long long upper) {
  if (lower > upper) throw CatalogError("integer-range: lower must be <= upper");
  ValueDomain vd;
  vd.kind = Kind::integer_range;
  vd.int_lower = lower;
  vd.int_upper = upper;
  return vd;
}

ValueDomain ValueDomain::real_range(double lower, double upper) {
  if (lower > upper) throw CatalogError("real-range: lower must be <= upper");
  ValueDomain vd;
  vd.kind = Kind::real_range;
  vd.real_lower = lower;
  vd.real_upper = upper;
  return vd;
}

ValueDomain ValueDomain::boolean() {
  ValueDomain vd;
  vd.kind = Kind::boolean_value;
  return vd;
}

SetId Catalog::define_set(std::string name) {
  if (name.empty()) throw CatalogError("set name must not be empty");
  if (set_names_.count(name)) throw CatalogError("duplicate set name: " + name);
  SetDef def;
  def.set_id = next_set_id_++;
  def.name = std::move(name);
  set_names_.emplace(def.name, def.set_id);
  sets_.push_back(def);
  return def.set_id;
}

int Catalog::define_value_domain(ValueDomain vd) {
  value_domains_.push_back(vd);
  return static_cast<int>(value_domains_.size()) - 1;
}

void Catalog::check_function_name(const std::string& name) const {
  if (name.empty()) throw CatalogError("function name must not be empty");
  if (function_names_.count(name)) throw CatalogError("duplicate function name: " + name);
}

FuncId Catalog::define_function(std::string name, SetId domain, Codomain codomain, bool total) {
  check_function_name(name);
  set(domain);  // throws on unknown domain
  if (codomain.kind == Codomain::Kind::set) {
    set(codomain.set);
  } else {
    value_domain(codomain.domain_index);
  }
  FunctionDef def;
  def.func_id = next_func_id_++;
  def.name = std::move(name);
  def.kind = FunctionKind::atomic;
  def.domain = domain;
  def.codomain = codomain;
  def.total = total;
  function_names_.emplace(def.name, def.func_id);
  functions_.push_back(std::move(def));
  return functions_.back().func_id;
}

void Catalog::validate_product(const FunctionDef& def) const {
  if (def.members.size() < 2) throw CatalogError("function product needs at least 2 members");
  std::set<FuncId> seen;
  for (FuncId m : def.members) {
    const FunctionDef& mf = function(m);
    if (mf.kind == FunctionKind::product)
      throw CatalogError("product member may not itself be a product: " + mf.name);
    if (mf.domain != def.domain)
      throw CatalogError("product members must share one domain set; " + mf.name + " does not");
    if (!seen.insert(m).second)
      throw CatalogError("duplicate member in function product: " + mf.name);
  }
}

FuncId Catalog::define_product(std::string name, std::vector<FuncId> members) {
  check_function_name(name);
  if (members.empty()) throw CatalogError("function product needs at least 2 members");
  FunctionDef def;
  def.func_id = next_func_id_;
  def.name = std::move(name);
  def.kind = FunctionKind::product;
  def.domain = function(members.front()).domain;
  def.members = std::move(members);
  validate_product(def);
  next_func_id_++;
  function_names_.emplace(def.name, def.func_id);
  functions_.push_back(std::move(def));
  return functions_.back().func_id;
}

void Catalog::validate_composite(const FunctionDef& def) const {
  if (def.members.size() < 2) throw CatalogError("composite needs at least 2 chain links");
  for (std::size_t i = 0; i < def.members.size(); ++i) {
    const FunctionDef& link = function(def.members[i]);
    if (link.kind != FunctionKind::atomic)
      throw CatalogError("composite chain link must be atomic: " + link.name);
    if (i + 1 < def.members.size()) {
      const FunctionDef& next = function(def.members[i + 1]);
      if (link.codomain.kind != Codomain::Kind::set || link.codomain.set != next.domain)
        throw CatalogError("broken composite chain: codomain of " + link.name +
                           " is not the domain of " + next.name);
    }
  }
}

FuncId Catalog::define_composite(std::string name, std::vector<FuncId> chain) {
  check_function_name(name);
  if (chain.empty()) throw CatalogError("composite needs at least 2 chain links");
  FunctionDef def;
  def.func_id = next_func_id_;
  def.name = std::move(name);
  def.kind = FunctionKind::composite;
  def.domain = function(chain.front()).domain;
  def.members = std::move(chain);
  validate_composite(def);
  next_func_id_++;
  function_names_.emplace(def.name, def.func_id);
  functions_.push_back(std::move(def));
  return functions_.back().func_id;
}

FuncId Catalog::ensure_product(const std::vector<FuncId>& members) {
  for (const FunctionDef& f : functions_) {
    if (f.kind == FunctionKind::product && f.members == members) return f.func_id;
  }
  std::string name;
  for (FuncId m : members) {
    if (!name.empty()) name += '*';
    name += function(m).name;
  }
  std::string candidate = name;
  for (int suffix = 2; function_names_.count(candidate); ++suffix)
    candidate = name + "_" + std::to_string(suffix);
  return define_product(candidate, members);
}

FuncId Catalog::ensure_composite(const std::vector<FuncId>& chain) {
  for (const FunctionDef& f : functions_) {
    if (f.kind == FunctionKind::composite && f.members == chain) return f.func_id;
  }
  std::string name;
  for (FuncId m : chain) {
    if (!name.empty()) name += '.';
    name += function(m).name;
  }
  std::string candidate = name;
  for (int suffix = 2; function_names_.count(candidate); ++suffix)
    candidate = name + "_" + std::to_string(suffix);
  return define_composite(candidate, chain);
}

bool Catalog::is_total(FuncId f) const {
  const FunctionDef& def = function(f);
  if (def.kind == FunctionKind::atomic) return def.total;
  return std::all_of(def.members.begin(), def.members.end(),
                     [this](FuncId m) { return is_total(m); });
}

std::vector<FuncId> Catalog::members_of(FuncId f) const {
  const FunctionDef& def = function(f);
  switch (def.kind) {
    case FunctionKind::atomic:
      return {f};
    case FunctionKind::composite:
      return def.members;
    case FunctionKind::product: {
      std::vector<FuncId> out;
      for (FuncId m : def.members) {
        auto sub = members_of(m);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
  }
  return {};
}

std::vector<FuncId> Catalog::top_members(FuncId f) const {
  const FunctionDef& def = function(f);
  if (def.kind == FunctionKind::product) return def.members;
  return {f};
}

const SetDef& Catalog::set(SetId id) const {
  for (const SetDef& s : sets_)
    if (s.set_id == id) return s;
  throw CatalogError("unknown set id: " + std::to_string(id));
}

const FunctionDef& Catalog::function(FuncId id) const {
  for (const FunctionDef& f : functions_)
    if (f.func_id == id) return f;
  throw CatalogError("unknown function id: " + std::to_string(id));
}

const ValueDomain& Catalog::value_domain(int index) const {
  if (index < 0 || index >= static_cast<int>(value_domains_.size()))
    throw CatalogError("unknown value domain index: " + std::to_string(index));
  return value_domains_[static_cast<std::size_t>(index)];
}

const SetDef* Catalog::find_set(const std::string& name) const {
  auto it = set_names_.find(name);
  if (it == set_names_.end()) return nullptr;
  return &set(it->second);
}

const FunctionDef* Catalog::find_function(const std::string& name) const {
  auto it = function_names_.find(name);
  if (it == function_names_.end()) return nullptr;
  return &function(it->second);
}

std::vector<FuncId> Catalog::columns_of(SetId set) const {
  std::vector<FuncId> out;
  for (const FunctionDef& f : functions_)
    if (f.kind == FunctionKind::atomic && f.domain == set) out.push_back(f.func_id);
  return out;
}

void Catalog::remove_function(FuncId id) {
  auto it = std::find_if(functions_.begin(), functions_.end(),
                         [id](const FunctionDef& f) { return f.func_id == id; });
  if (it == functions_.end()) throw CatalogError("unknown function id: " + std::to_string(id));
  function_names_.erase(it->name);
  functions_.erase(it);
}

void Catalog::restore_set(SetDef def) {
  if (def.set_id <= 0) throw CatalogError("set id must be positive");
  if (set_names_.count(def.name)) throw CatalogError("duplicate set name: " + def.name);
  next_set_id_ = std::max(next_set_id_, def.set_id + 1);
  set_names_.emplace(def.name, def.set_id);
  sets_.push_back(std::move(def));
}

void Catalog::restore_function(FunctionDef def) {
  if (def.func_id <= 0) throw CatalogError("function id must be positive");
  check_function_name(def.name);
  set(def.domain);
  switch (def.kind) {
    case FunctionKind::atomic:
      if (def.codomain.kind == Codomain::Kind::set)
        set(def.codomain.set);
      else
        value_domain(def.codomain.domain_index);
      break;
    case FunctionKind::product:
      validate_product(def);
      break;
    case FunctionKind::composite:
      validate_composite(def);
      break;
  }
  next_func_id_ = std::max(next_func_id_, def.func_id + 1);
  function_names_.emplace(def.name, def.func_id);
  functions_.push_back(std::move(def));
}

std::vector<std::string> Catalog::audit() const {
  std::vector<std::string> findings;
  for (const FunctionDef& f : functions_) {
    try {
      if (f.kind == FunctionKind::product) validate_product(f);
      if (f.kind == FunctionKind::composite) validate_composite(f);
      set(f.domain);
    } catch (const CatalogError& e) {
      findings.push_back("function " + f.name + ": " + e.what());
    }
  }
  return findings;
}

}  // namespace nullguard
