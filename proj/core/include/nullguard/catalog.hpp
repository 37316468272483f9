#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nullguard {

using SetId = std::int32_t;
using FuncId = std::int32_t;

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SetDef {
  SetId set_id = 0;
  std::string name;
};

/// Descriptive codomain metadata. Bounds are never enforced on data; they
/// document what an atomic column is supposed to hold.
struct ValueDomain {
  enum class Kind { naturals_with_max, text_with_maxlen, integer_range, real_range, boolean_value };

  Kind kind = Kind::boolean_value;
  long long nat_max = 0;     // naturals-with-max
  long long max_len = 0;     // text-with-maxlen
  long long int_lower = 0;   // integer-range
  long long int_upper = 0;
  double real_lower = 0.0;   // real-range
  double real_upper = 0.0;

  static ValueDomain naturals(long long max);
  static ValueDomain text(long long maxlen);
  static ValueDomain integer_range(long long lower, long long upper);
  static ValueDomain real_range(double lower, double upper);
  static ValueDomain boolean();

  bool operator==(const ValueDomain&) const = default;
};

/// Codomain of an atomic function: either another managed set (the column is
/// a reference) or a value domain (the column is scalar data).
struct Codomain {
  enum class Kind { set, domain };
  Kind kind = Kind::domain;
  SetId set = 0;          // kind == set
  int domain_index = -1;  // kind == domain, index into Catalog::value_domains()

  static Codomain of_set(SetId s) { return {Kind::set, s, -1}; }
  static Codomain of_domain(int idx) { return {Kind::domain, 0, idx}; }
  bool operator==(const Codomain&) const = default;
};

enum class FunctionKind { atomic, product, composite };

struct FunctionDef {
  FuncId func_id = 0;
  std::string name;
  FunctionKind kind = FunctionKind::atomic;
  SetId domain = 0;
  Codomain codomain;                // atomic only
  bool total = false;               // atomic only; derived for the other kinds
  std::vector<FuncId> members;      // product members / composite chain

  int arity() const { return kind == FunctionKind::product ? static_cast<int>(members.size()) : 1; }
};

/// Registry of sets, value domains and functions. Ids are dense positive
/// integers assigned in definition order and survive persistence round-trips.
class Catalog {
 public:
  SetId define_set(std::string name);
  int define_value_domain(ValueDomain vd);
  FuncId define_function(std::string name, SetId domain, Codomain codomain, bool total);
  FuncId define_product(std::string name, std::vector<FuncId> members);
  FuncId define_composite(std::string name, std::vector<FuncId> chain);

  /// Finds a product with exactly these ordered members, or defines one named
  /// after them ("f*g"). Used when a consolidated constraint needs a product
  /// the schema designer never declared explicitly.
  FuncId ensure_product(const std::vector<FuncId>& members);
  FuncId ensure_composite(const std::vector<FuncId>& chain);

  bool is_total(FuncId f) const;

  /// Flattened atomic constituents: the function itself for atomics, the
  /// chain links for composites, and the per-member expansion for products.
  std::vector<FuncId> members_of(FuncId f) const;

  /// Arity-view members: a composite counts as one unit here. For atomics and
  /// composites this is the function itself, for products the member list.
  std::vector<FuncId> top_members(FuncId f) const;

  const SetDef& set(SetId id) const;
  const FunctionDef& function(FuncId id) const;
  const ValueDomain& value_domain(int index) const;
  const SetDef* find_set(const std::string& name) const;
  const FunctionDef* find_function(const std::string& name) const;

  const std::vector<SetDef>& sets() const { return sets_; }
  const std::vector<ValueDomain>& value_domains() const { return value_domains_; }
  const std::vector<FunctionDef>& functions() const { return functions_; }

  /// Atomic functions whose domain is `set`, in definition order. These are
  /// the columns of the corresponding table.
  std::vector<FuncId> columns_of(SetId set) const;

  /// Drops a function definition (id is retired, not recycled). The caller is
  /// responsible for making sure nothing references it anymore.
  void remove_function(FuncId id);

  /// Load-path primitives: re-register definitions with their persisted ids.
  void restore_set(SetDef def);
  void restore_function(FunctionDef def);

  std::vector<std::string> audit() const;

 private:
  void check_function_name(const std::string& name) const;
  void validate_product(const FunctionDef& def) const;
  void validate_composite(const FunctionDef& def) const;

  std::vector<SetDef> sets_;
  std::vector<ValueDomain> value_domains_;
  std::vector<FunctionDef> functions_;
  std::unordered_map<std::string, SetId> set_names_;
  std::unordered_map<std::string, FuncId> function_names_;
  SetId next_set_id_ = 1;
  FuncId next_func_id_ = 1;
};

}  // namespace nullguard
