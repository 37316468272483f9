#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nullguard/constraints.hpp"

namespace nullguard {

class InstanceStore;

enum class Outcome { accepted, accepted_with_replacement, rejected, deleted, deletion_cancelled };

enum class ReasonCode {
  ok,
  duplicate_name,
  semantic_duplicate,
  missing_right_side,
  right_side_not_product,
  incompatible_domains,
  left_side_mandatory,
  negation_mandatory,
  totality_violation,
  identical_sides,
  overlapping_sides,
  incoherent,
  unsatisfiable,
  implied_by_existing,
  unknown_constraint,
};

const char* outcome_name(Outcome o);
const char* reason_name(ReasonCode r);

/// Outcome of one admission or deletion request. A rejected request leaves
/// the registry untouched; a replacement lists every constraint that made
/// way for the new one.
struct Decision {
  Outcome outcome = Outcome::rejected;
  ReasonCode reason = ReasonCode::ok;
  std::vector<std::string> messages;
  std::vector<std::string> replaced;

  bool accepted() const {
    return outcome == Outcome::accepted || outcome == Outcome::accepted_with_replacement;
  }
};

/// Enforcement registration: one per constraint, on the constraint's set,
/// in admission order.
struct Hook {
  std::string constraint;
  Subtype kind;
};

/// Instrumentation mirroring the complexity argument for the admission
/// algorithm: `pipeline` counts the top-level gates, `gates` the steps spent
/// inside the check functions.
struct StepCounts {
  int pipeline = 0;
  int gates = 0;
  int total() const { return pipeline + gates; }
};

/// Candidate or stored constraint reduced to what coherence and minimality
/// reasoning needs. `right` stays empty while a consolidated form waits for
/// its product to be materialized; `members` always carries the right-side
/// top members.
struct ConstraintShape {
  bool inexist = false;
  bool negation = false;
  std::optional<FuncId> left;
  std::optional<FuncId> right;
  std::vector<FuncId> members;
  Subtype subtype = Subtype::existence;

  bool consolidated() const { return !left.has_value(); }
};

ConstraintShape shape_of(const ExistenceConstraint& ec, const Catalog& catalog);
std::string render_shape(const ConstraintShape& shape, const Catalog& catalog);

/// Two constraints talk about the same body when they are singles with
/// identical sides, consolidated forms over the same member multiset, or an
/// atomic-sided single against a consolidated form over exactly that pair.
bool bodies_match(const ConstraintShape& a, const ConstraintShape& b, const Catalog& catalog);

struct TotalityCheck {
  bool ok = true;
  std::vector<std::string> offenders;
};

struct DisjointCheck {
  bool ok = true;
  bool identical_sides = false;
  std::string offender;
};

struct CoherenceCheck {
  bool ok = true;
  std::string conflicting;
};

struct RedundancyCheck {
  enum class Action { none, reject_implied, replace, fuse };
  Action action = Action::none;
  std::string implied_by;
  bool implies_wording = false;       // "cn' implies cn" instead of "implied by cn'"
  std::vector<std::string> replaced;  // replace / fuse targets, registration order
};

/// Collects every totally defined member function on either side, except
/// links of a partially defined composite.
TotalityCheck check_totality(const std::optional<FuncId>& left, FuncId right,
                             const Catalog& catalog, StepCounts* steps = nullptr);

/// Fails when the sides are the same function or share an atomic member.
DisjointCheck check_disjoint(FuncId left, FuncId right, const Catalog& catalog,
                             StepCounts* steps = nullptr);

/// Fails when some stored constraint over the same body forms a mutually
/// exclusive pair with the candidate (the conjunction of their formulas
/// degenerates).
CoherenceCheck check_coherence(const ConstraintShape& candidate,
                               std::span<const ExistenceConstraint> stored, const Catalog& catalog,
                               StepCounts* steps = nullptr);

/// Minimality rules over the same body: equivalent forms are rejected as
/// implied or replace their weaker counterparts, and an existence plus
/// anti-existence pair fuses into the consolidated anti-existence form.
RedundancyCheck check_redundancies(const ConstraintShape& candidate,
                                   std::span<const ExistenceConstraint> stored,
                                   const Catalog& catalog, StepCounts* steps = nullptr);

/// The constraint-set manager: admission runs the full gate pipeline (name
/// and semantic uniqueness, well-formedness, totality, disjointness,
/// canonicalization, coherence, satisfiability, minimality) and only then
/// registers the constraint and its enforcement hook.
class Registry {
 public:
  explicit Registry(Catalog& catalog) : catalog_(&catalog) {}

  Decision add_constraint(const std::string& name, bool inexist, std::optional<FuncId> left,
                          bool negation, std::optional<FuncId> right,
                          const InstanceStore* data = nullptr);

  /// `confirm` receives the prompt text and decides; deletion is skipped
  /// entirely when it declines.
  Decision delete_constraint(const std::string& name,
                             const std::function<bool(const std::string&)>& confirm);

  const ExistenceConstraint* find(const std::string& name) const;
  const std::vector<ExistenceConstraint>& constraints() const { return constraints_; }
  const std::map<SetId, std::vector<Hook>>& all_hooks() const { return hooks_; }
  std::span<const Hook> hooks(SetId set) const;
  std::vector<const ExistenceConstraint*> hook_constraints(SetId set) const;

  const StepCounts& last_step_counts() const { return last_steps_; }

  /// Verifies every stored invariant (the metamodel constraints plus
  /// pairwise coherence/minimality and hook bookkeeping). Empty = clean.
  std::vector<std::string> audit() const;

  /// Load-path primitive: registers a persisted constraint without running
  /// the admission gates.
  void restore_constraint(ExistenceConstraint ec);

  Catalog& catalog() { return *catalog_; }
  const Catalog& catalog() const { return *catalog_; }

 private:
  Decision apply_registration(const std::string& name, const ConstraintShape& shape,
                              const RedundancyCheck& red, Decision decision);

  Catalog* catalog_;
  std::vector<ExistenceConstraint> constraints_;
  std::map<SetId, std::vector<Hook>> hooks_;
  StepCounts last_steps_;
};

}  // namespace nullguard
