#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nullguard/constraints.hpp"
#include "nullguard/enforcement.hpp"

namespace nullguard {

class Registry;

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Null {
  bool operator==(const Null&) const = default;
};

/// Reference cell: the surrogate key of a row in the column's codomain table.
struct Ref {
  int x = 0;
  bool operator==(const Ref&) const = default;
};

/// A cell is null, a scalar, or a reference. Null is distinct from the empty
/// string and from zero.
using Value = std::variant<Null, std::string, long long, double, bool, Ref>;

inline bool is_null(const Value& v) { return std::holds_alternative<Null>(v); }

struct Row {
  int x = 0;
  std::vector<Value> cells;  // parallel to TableInstance::columns()
};

/// Rows of one set, with the set's atomic functions as columns. Surrogate
/// keys are assigned in strictly increasing order and never reused.
class TableInstance {
 public:
  TableInstance() = default;
  TableInstance(SetId set, std::vector<FuncId> columns);

  SetId set() const { return set_; }
  const std::vector<FuncId>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::optional<std::size_t> column_index(FuncId column) const;
  const Row* find_row(int x) const;

  /// Appends a committed row, bypassing enforcement (bulk-load path).
  /// With explicit_x > 0 the given key is kept; it must exceed every
  /// existing key.
  int append_row(std::vector<Value> cells, int explicit_x = 0);
  void replace_cells(int x, std::vector<Value> cells);
  void erase_row(int x);

 private:
  SetId set_ = 0;
  std::vector<FuncId> columns_;
  std::vector<Row> rows_;
  int next_x_ = 1;
};

using CellValues = std::map<FuncId, Value>;

/// All table instances of one catalog, keyed by set. Mutations must be
/// serialized by the caller; reads are const and safe once a mutation has
/// completed.
class InstanceStore {
 public:
  TableInstance& ensure_table(SetId set, const Catalog& catalog);
  const TableInstance* find_table(SetId set) const;
  TableInstance* find_table(SetId set);
  const std::map<SetId, TableInstance>& tables() const { return tables_; }

  /// Gated insert: runs the table's hooks (taken from `registry`, when
  /// given) and commits only on a clean verdict.
  std::variant<int, Verdict> insert_row(SetId set, const CellValues& cells, const Catalog& catalog,
                                        const Registry* registry = nullptr);

  /// Gated update of the named cells. Constraints untouched by the change
  /// are skipped. Returns nullopt on success.
  std::optional<Verdict> update_row(SetId set, int x, const CellValues& changed,
                                    const Catalog& catalog, const Registry* registry = nullptr);

  /// Unconditional removal; dropping a row can never introduce a violation.
  void delete_row(SetId set, int x);

  /// f(x) as a tuple: one slot per top member, composites dereferenced
  /// across tables with null short-circuit.
  std::vector<Value> eval_function(const TableInstance& table, const Row& row, FuncId f,
                                   const Catalog& catalog) const;

  NullPattern null_pattern(const TableInstance& table, const Row& row,
                           const ExistenceConstraint& ec, const Catalog& catalog) const;

 private:
  std::vector<Value> cells_from(const TableInstance& table, const CellValues& cells,
                                const Row* base) const;

  std::map<SetId, TableInstance> tables_;
};

/// Surrogate keys (ascending) of every row violating the constraint. The
/// per-row predicate is exactly the enforcement verdict.
std::vector<int> scan_violations(const ExistenceConstraint& ec, const InstanceStore& store,
                                 const Catalog& catalog);

/// Same scan for a constraint shape that may not be registered yet: an
/// optional left side plus the right-side top members.
std::vector<int> scan_violations_shape(Subtype family, const std::optional<FuncId>& left,
                                       const std::vector<FuncId>& right_members,
                                       const InstanceStore& store, const Catalog& catalog);

// CSV: RFC-4180 quoting; an empty unquoted field is null, a quoted empty
// string "" is empty text. Exports carry a leading x column; imports accept
// it (keys preserved) or synthesize fresh keys without it.
void export_csv(const TableInstance& table, const Catalog& catalog, std::ostream& out);
std::size_t import_csv(TableInstance& table, const Catalog& catalog, std::istream& in);

/// One <SetName>.csv per table in the store.
void save_data_dir(const InstanceStore& store, const Catalog& catalog,
                   const std::filesystem::path& dir);
/// Loads every <SetName>.csv present; missing files mean empty tables.
std::size_t load_data_dir(InstanceStore& store, const Catalog& catalog,
                          const std::filesystem::path& dir);

}  // namespace nullguard
