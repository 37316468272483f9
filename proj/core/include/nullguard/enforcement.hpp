#pragma once

#include <span>
#include <vector>

#include "nullguard/constraints.hpp"

namespace nullguard {

class InstanceStore;
class TableInstance;
struct Row;

struct Verdict {
  bool violated = false;
  std::string constraint;
  std::string message;  // set iff violated

  static Verdict ok() { return {}; }
};

/// Instrumentation for the complexity bounds: `steps` counts the fixed
/// bookkeeping of one call, `member_evals` every null-mask slot inspected.
struct EnforceCounters {
  int steps = 0;
  int member_evals = 0;
};

/// The violation predicate itself, shared verbatim by the enforce_* verdicts
/// and the whole-instance scans. Returns true iff the pattern violates the
/// subtype's semantics.
bool violation_flag(Subtype s, const NullPattern& pattern, EnforceCounters* counters = nullptr);

Verdict enforce_existence(const ExistenceConstraint& ec, const Catalog& catalog,
                          const NullPattern& pattern, EnforceCounters* counters = nullptr);
Verdict enforce_non_existence(const ExistenceConstraint& ec, const Catalog& catalog,
                              const NullPattern& pattern, EnforceCounters* counters = nullptr);
Verdict enforce_inexist(const ExistenceConstraint& ec, const Catalog& catalog,
                        const NullPattern& pattern, EnforceCounters* counters = nullptr);
Verdict enforce_anti_exist(const ExistenceConstraint& ec, const Catalog& catalog,
                           const NullPattern& pattern, EnforceCounters* counters = nullptr);

/// Dispatches on the constraint family.
Verdict enforce(const ExistenceConstraint& ec, const Catalog& catalog, const NullPattern& pattern,
                EnforceCounters* counters = nullptr);

/// Columns of the constraint's table whose change can affect the verdict.
/// A composite member contributes its first link (the local reference
/// column); everything downstream lives in other tables.
std::vector<FuncId> participating_columns(const ExistenceConstraint& ec, const Catalog& catalog);

/// Row-save gate: runs every hooked constraint in registration order and
/// stops at the first violation. On updates, constraints none of whose
/// participating columns changed are skipped.
Verdict before_update(const InstanceStore& store, const TableInstance& table, const Row& pending,
                      bool is_insert, const std::vector<FuncId>& changed_columns,
                      std::span<const ExistenceConstraint* const> hooks, const Catalog& catalog);

}  // namespace nullguard
