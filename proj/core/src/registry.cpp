#include "nullguard/registry.hpp"

#include <algorithm>
#include <set>

#include "nullguard/instance.hpp"
#include "nullguard/messages.hpp"
#include "nullguard/oracle.hpp"

namespace nullguard {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::accepted: return "Accepted";
    case Outcome::accepted_with_replacement: return "Accepted (with replacement)";
    case Outcome::rejected: return "Rejected";
    case Outcome::deleted: return "Deleted";
    case Outcome::deletion_cancelled: return "Deletion cancelled";
  }
  return "?";
}

const char* reason_name(ReasonCode r) {
  switch (r) {
    case ReasonCode::ok: return "ok";
    case ReasonCode::duplicate_name: return "duplicate-name";
    case ReasonCode::semantic_duplicate: return "semantic-duplicate";
    case ReasonCode::missing_right_side: return "missing-right-side";
    case ReasonCode::right_side_not_product: return "right-side-not-product";
    case ReasonCode::incompatible_domains: return "incompatible-domains";
    case ReasonCode::left_side_mandatory: return "left-side-mandatory";
    case ReasonCode::negation_mandatory: return "negation-mandatory";
    case ReasonCode::totality_violation: return "totality-violation";
    case ReasonCode::identical_sides: return "identical-sides";
    case ReasonCode::overlapping_sides: return "overlapping-sides";
    case ReasonCode::incoherent: return "incoherent";
    case ReasonCode::unsatisfiable: return "unsatisfiable";
    case ReasonCode::implied_by_existing: return "implied-by-existing";
    case ReasonCode::unknown_constraint: return "unknown-constraint";
  }
  return "?";
}

namespace {

void gate_step(StepCounts* steps, int count = 1) {
  if (steps) steps->gates += count;
}

std::vector<FuncId> sorted(std::vector<FuncId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool both_sides_atomic(const ConstraintShape& s, const Catalog& catalog) {
  return s.left && s.right &&
         catalog.function(*s.left).kind == FunctionKind::atomic &&
         catalog.function(*s.right).kind == FunctionKind::atomic;
}

}  // namespace

ConstraintShape shape_of(const ExistenceConstraint& ec, const Catalog& catalog) {
  ConstraintShape shape;
  shape.inexist = ec.inexist;
  shape.negation = ec.negation;
  shape.left = ec.left;
  shape.right = ec.right;
  shape.members = catalog.top_members(ec.right);
  shape.subtype = ec.subtype();
  return shape;
}

std::string render_shape(const ConstraintShape& shape, const Catalog& catalog) {
  if (shape.right && shape.left) {
    ExistenceConstraint ec;
    ec.inexist = shape.inexist;
    ec.negation = shape.negation;
    ec.left = shape.left;
    ec.right = *shape.right;
    return render_syntax(ec, catalog);
  }
  std::string arrow;
  switch (shape.subtype) {
    case Subtype::cons_non_existence: arrow = "!|- "; break;
    case Subtype::cons_inexistence: arrow = "|- "; break;
    default: arrow = "!!|- "; break;
  }
  std::string body;
  for (FuncId m : shape.members) {
    if (!body.empty()) body += '*';
    body += render_side(m, catalog);
  }
  return arrow + body;
}

bool bodies_match(const ConstraintShape& a, const ConstraintShape& b, const Catalog& catalog) {
  if (!a.consolidated() && !b.consolidated())
    return a.left == b.left && a.right == b.right;
  if (a.consolidated() && b.consolidated())
    return sorted(a.members) == sorted(b.members);
  const ConstraintShape& single = a.consolidated() ? b : a;
  const ConstraintShape& cons = a.consolidated() ? a : b;
  // Cross-form identification is only defined for atomic pairs.
  if (cons.members.size() != 2 || !both_sides_atomic(single, catalog)) return false;
  return sorted(cons.members) == sorted(std::vector<FuncId>{*single.left, *single.right});
}

TotalityCheck check_totality(const std::optional<FuncId>& left, FuncId right,
                             const Catalog& catalog, StepCounts* steps) {
  TotalityCheck result;
  auto collect = [&](FuncId side) {
    for (FuncId member : catalog.top_members(side)) {
      const FunctionDef& def = catalog.function(member);
      if (def.kind == FunctionKind::atomic) {
        if (def.total) result.offenders.push_back(def.name);
      } else if (def.kind == FunctionKind::composite) {
        // Links of a partially defined composite are allowed to be total;
        // a totally defined composite exposes all of its links.
        if (catalog.is_total(member))
          for (FuncId link : def.members) result.offenders.push_back(catalog.function(link).name);
      }
    }
  };
  gate_step(steps);
  if (left) collect(*left);
  gate_step(steps);
  collect(right);
  gate_step(steps);  // DISTINCT
  std::vector<std::string> unique;
  for (std::string& name : result.offenders)
    if (std::find(unique.begin(), unique.end(), name) == unique.end())
      unique.push_back(std::move(name));
  result.offenders = std::move(unique);
  gate_step(steps);
  result.ok = result.offenders.empty();
  return result;
}

DisjointCheck check_disjoint(FuncId left, FuncId right, const Catalog& catalog,
                             StepCounts* steps) {
  DisjointCheck result;
  gate_step(steps);
  if (left == right) {
    result.ok = false;
    result.identical_sides = true;
    result.offender = catalog.function(left).name;
    return result;
  }
  gate_step(steps);
  const std::vector<FuncId> left_atoms = catalog.members_of(left);
  const std::vector<FuncId> right_atoms = catalog.members_of(right);
  gate_step(steps);
  for (FuncId a : left_atoms) {
    if (std::find(right_atoms.begin(), right_atoms.end(), a) != right_atoms.end()) {
      result.ok = false;
      result.offender = catalog.function(a).name;
      return result;
    }
  }
  return result;
}

CoherenceCheck check_coherence(const ConstraintShape& candidate,
                               std::span<const ExistenceConstraint> stored, const Catalog& catalog,
                               StepCounts* steps) {
  CoherenceCheck result;
  gate_step(steps);
  for (const ExistenceConstraint& c : stored) {
    const ConstraintShape s = shape_of(c, catalog);
    if (!bodies_match(candidate, s, catalog)) continue;
    const auto conj = conjunction_class(family_representative(candidate.subtype),
                                        family_representative(s.subtype));
    if (is_degenerate(conj.cls)) {
      result.ok = false;
      result.conflicting = c.name;
      break;
    }
  }
  gate_step(steps);
  return result;
}

RedundancyCheck check_redundancies(const ConstraintShape& candidate,
                                   std::span<const ExistenceConstraint> stored,
                                   const Catalog& catalog, StepCounts* steps) {
  RedundancyCheck result;
  const Subtype cand_family = family_representative(candidate.subtype);
  gate_step(steps);  // collect bodies
  std::vector<const ExistenceConstraint*> matches;
  for (const ExistenceConstraint& c : stored)
    if (bodies_match(candidate, shape_of(c, catalog), catalog)) matches.push_back(&c);

  gate_step(steps);  // equivalent-form probes
  for (const ExistenceConstraint* c : matches) {
    const ConstraintShape s = shape_of(*c, catalog);
    if (family_representative(s.subtype) != cand_family) continue;
    if (candidate.consolidated() == s.consolidated()) {
      // Same family, same form, same body: the stored constraint already
      // says everything the candidate would.
      result.action = RedundancyCheck::Action::reject_implied;
      result.implied_by = c->name;
      return result;
    }
    if (candidate.consolidated()) {
      // The consolidated form is explicitly richer than its single twin.
      result.action = RedundancyCheck::Action::replace;
      result.replaced.push_back(c->name);
      return result;
    }
    result.action = RedundancyCheck::Action::reject_implied;
    result.implied_by = c->name;
    return result;
  }

  gate_step(steps);  // consolidated anti-existence absorption
  for (const ExistenceConstraint* c : matches) {
    const Subtype stored_family = family_representative(shape_of(*c, catalog).subtype);
    if (stored_family == cand_family) continue;
    const auto conj = conjunction_class(cand_family, stored_family);
    if (conj.cls != ConjunctionClass::equiv_x) continue;
    if (cand_family == Subtype::cons_anti_existence) {
      result.action = RedundancyCheck::Action::replace;
      result.replaced.push_back(c->name);
    } else if (stored_family == Subtype::cons_anti_existence) {
      result.action = RedundancyCheck::Action::reject_implied;
      result.implied_by = c->name;
      result.implies_wording = true;
      return result;
    }
  }
  if (result.action == RedundancyCheck::Action::replace) return result;

  gate_step(steps);  // existence + anti-existence fusion
  if ((cand_family == Subtype::existence || cand_family == Subtype::anti_existence) &&
      both_sides_atomic(candidate, catalog)) {
    const Subtype other =
        cand_family == Subtype::existence ? Subtype::anti_existence : Subtype::existence;
    for (const ExistenceConstraint* c : matches) {
      if (family_representative(shape_of(*c, catalog).subtype) != other) continue;
      result.action = RedundancyCheck::Action::fuse;
      result.replaced.push_back(c->name);
      break;
    }
  }
  gate_step(steps);
  return result;
}

const ExistenceConstraint* Registry::find(const std::string& name) const {
  for (const ExistenceConstraint& c : constraints_)
    if (c.name == name) return &c;
  return nullptr;
}

std::span<const Hook> Registry::hooks(SetId set) const {
  auto it = hooks_.find(set);
  if (it == hooks_.end()) return {};
  return it->second;
}

std::vector<const ExistenceConstraint*> Registry::hook_constraints(SetId set) const {
  std::vector<const ExistenceConstraint*> out;
  for (const Hook& hook : hooks(set)) {
    const ExistenceConstraint* c = find(hook.constraint);
    if (c) out.push_back(c);
  }
  return out;
}

namespace {

ExistenceConstraint materialize(const std::string& name, const ConstraintShape& shape,
                                Catalog& catalog) {
  ExistenceConstraint ec;
  ec.name = name;
  switch (shape.subtype) {
    case Subtype::cons_non_existence:
      ec.inexist = false;
      ec.negation = true;
      break;
    case Subtype::cons_inexistence:
      ec.inexist = true;
      ec.negation = false;
      break;
    case Subtype::cons_anti_existence:
      ec.inexist = true;
      ec.negation = true;
      break;
    default:
      ec.inexist = shape.inexist;
      ec.negation = shape.negation;
      ec.left = shape.left;
      break;
  }
  ec.right = shape.right ? *shape.right : catalog.ensure_product(shape.members);
  ec.set = catalog.function(ec.right).domain;
  return ec;
}

}  // namespace

Decision Registry::apply_registration(const std::string& name, const ConstraintShape& shape,
                                      const RedundancyCheck& red, Decision decision) {
  ExistenceConstraint stored = materialize(name, shape, *catalog_);
  const Subtype kind = stored.subtype();

  if (red.replaced.empty()) {
    constraints_.push_back(std::move(stored));
    hooks_[constraints_.back().set].push_back({name, kind});
    decision.outcome = Outcome::accepted;
    return decision;
  }

  // Replacement keeps the newcomer's name and the earliest replaced slot,
  // both in the constraint list and in the enforcement hook order.
  std::size_t slot = constraints_.size();
  for (auto it = constraints_.begin(); it != constraints_.end();) {
    if (std::find(red.replaced.begin(), red.replaced.end(), it->name) != red.replaced.end()) {
      slot = std::min(slot, static_cast<std::size_t>(it - constraints_.begin()));
      it = constraints_.erase(it);
    } else {
      ++it;
    }
  }
  constraints_.insert(constraints_.begin() + static_cast<std::ptrdiff_t>(slot), stored);

  std::vector<Hook>& set_hooks = hooks_[stored.set];
  std::size_t hook_slot = set_hooks.size();
  for (auto it = set_hooks.begin(); it != set_hooks.end();) {
    if (std::find(red.replaced.begin(), red.replaced.end(), it->constraint) !=
        red.replaced.end()) {
      hook_slot = std::min(hook_slot, static_cast<std::size_t>(it - set_hooks.begin()));
      it = set_hooks.erase(it);
    } else {
      ++it;
    }
  }
  set_hooks.insert(set_hooks.begin() + static_cast<std::ptrdiff_t>(hook_slot), {name, kind});

  decision.outcome = Outcome::accepted_with_replacement;
  decision.replaced = red.replaced;
  return decision;
}

Decision Registry::add_constraint(const std::string& name, bool inexist,
                                  std::optional<FuncId> left, bool negation,
                                  std::optional<FuncId> right, const InstanceStore* data) {
  last_steps_ = {};
  StepCounts& steps = last_steps_;
  Decision decision;

  auto reject = [&](ReasonCode reason, std::string message) {
    decision.outcome = Outcome::rejected;
    decision.reason = reason;
    decision.messages.push_back(std::move(message));
    return decision;
  };

  // 1. Unique constraint name.
  ++steps.pipeline;
  if (find(name)) return reject(ReasonCode::duplicate_name, msg::duplicate_name(name));

  // 2. Semantic key: right, left, Inexist?, Negation?.
  ++steps.pipeline;
  if (right) {
    for (const ExistenceConstraint& c : constraints_)
      if (c.left == left && c.right == *right && c.inexist == inexist && c.negation == negation)
        return reject(ReasonCode::semantic_duplicate, msg::already_stored(c.name));
  }

  // 3. A right side is never optional.
  ++steps.pipeline;
  const int m = right ? static_cast<int>(catalog_->top_members(*right).size()) : 0;
  if (m == 0) return reject(ReasonCode::missing_right_side, msg::missing_right_side());

  // 4. Consolidated forms need a product on the right.
  ++steps.pipeline;
  const int n = left ? static_cast<int>(catalog_->top_members(*left).size()) : 0;
  if (n == 0 && m < 2)
    return reject(ReasonCode::right_side_not_product, msg::right_side_must_be_product());

  // 5. Both sides over one domain set.
  ++steps.pipeline;
  if (left && catalog_->function(*left).domain != catalog_->function(*right).domain)
    return reject(ReasonCode::incompatible_domains,
                  msg::incompatible_domains(render_side(*left, *catalog_),
                                            render_side(*right, *catalog_)));

  // 6. No totally defined member functions.
  ++steps.pipeline;
  const TotalityCheck totality = check_totality(left, *right, *catalog_, &steps);
  if (!totality.ok)
    return reject(ReasonCode::totality_violation, msg::totally_defined(totality.offenders));

  // 7. Flag well-formedness. A non-negated non-inexistence constraint is an
  // existence one, so its left side is mandatory; the negation gate below is
  // subsumed by it but kept to mirror the well-formedness rules one-to-one.
  ++steps.pipeline;
  if (!inexist && !negation && n == 0)
    return reject(ReasonCode::left_side_mandatory, msg::left_side_mandatory());
  ++steps.pipeline;
  if (!inexist && n == 0 && !negation)
    return reject(ReasonCode::negation_mandatory, msg::negation_mandatory());

  // 8. Sides must not overlap.
  ++steps.pipeline;
  if (n > 0) {
    const DisjointCheck disjoint = check_disjoint(*left, *right, *catalog_, &steps);
    if (!disjoint.ok) {
      if (disjoint.identical_sides)
        return reject(ReasonCode::identical_sides,
                      msg::identical_sides(render_side(*left, *catalog_),
                                           render_side(*right, *catalog_)));
      return reject(ReasonCode::overlapping_sides,
                    msg::member_of_both(disjoint.offender, render_side(*left, *catalog_),
                                        render_side(*right, *catalog_)));
    }
  }

  ConstraintShape candidate;
  candidate.inexist = inexist;
  candidate.negation = negation;
  candidate.left = left;
  candidate.right = right;
  candidate.members = catalog_->top_members(*right);
  candidate.subtype = *classify(inexist, negation, left.has_value());

  // 9. Canonicalization: an atomic-sided single non-existence or inexistence
  // constraint is stored as its consolidated (explicitly richer) form. The
  // product is materialized only if the candidate makes it through.
  ++steps.pipeline;
  if ((candidate.subtype == Subtype::non_existence ||
       candidate.subtype == Subtype::inexistence) &&
      both_sides_atomic(candidate, *catalog_)) {
    candidate.members = {*left, *right};
    candidate.left = std::nullopt;
    candidate.right = std::nullopt;
    candidate.subtype = candidate.subtype == Subtype::non_existence
                            ? Subtype::cons_non_existence
                            : Subtype::cons_inexistence;
    decision.messages.push_back(msg::canonicalized(name, render_shape(candidate, *catalog_)));
  }

  // 10. Coherence against the stored set.
  ++steps.pipeline;
  const CoherenceCheck coherence = check_coherence(candidate, constraints_, *catalog_, &steps);
  if (!coherence.ok) return reject(ReasonCode::incoherent, msg::incoherent());

  // 11. Satisfiability on the current instance, when one is given. The
  // smallest violating surrogate key is reported.
  ++steps.pipeline;
  if (data) {
    gate_step(&steps, 2);
    const std::vector<int> violations =
        scan_violations_shape(candidate.subtype, candidate.left, candidate.members, *data,
                              *catalog_);
    gate_step(&steps);
    if (!violations.empty())
      return reject(ReasonCode::unsatisfiable, msg::violates(violations.front(), name));
  }

  // 12. Minimality.
  ++steps.pipeline;
  RedundancyCheck redundancy = check_redundancies(candidate, constraints_, *catalog_, &steps);
  switch (redundancy.action) {
    case RedundancyCheck::Action::reject_implied:
      return reject(ReasonCode::implied_by_existing,
                    redundancy.implies_wording ? msg::implies(redundancy.implied_by, name)
                                               : msg::implied_by(redundancy.implied_by));
    case RedundancyCheck::Action::replace: {
      if (redundancy.replaced.size() == 1) {
        const ExistenceConstraint* old = find(redundancy.replaced.front());
        decision.messages.push_back(
            msg::replaced_for_minimality(old->name, render_syntax(*old, *catalog_), name));
      } else {
        const ExistenceConstraint* first = find(redundancy.replaced[0]);
        const ExistenceConstraint* second = find(redundancy.replaced[1]);
        decision.messages.push_back(msg::replaced_two_for_minimality(
            first->name, render_syntax(*first, *catalog_), second->name,
            render_syntax(*second, *catalog_), name));
      }
      break;
    }
    case RedundancyCheck::Action::fuse: {
      // The candidate and its dual collapse into the consolidated
      // anti-existence constraint, under the candidate's name.
      candidate.members = {*candidate.left, *candidate.right};
      candidate.left = std::nullopt;
      candidate.right = std::nullopt;
      candidate.subtype = Subtype::cons_anti_existence;
      decision.messages.push_back(msg::fused_for_minimality(name, redundancy.replaced.front(),
                                                            render_shape(candidate, *catalog_)));
      break;
    }
    case RedundancyCheck::Action::none:
      break;
  }

  // 13.–15. Register the constraint and its enforcement hook.
  ++steps.pipeline;
  decision = apply_registration(name, candidate, redundancy, std::move(decision));
  ++steps.pipeline;
  return decision;
}

Decision Registry::delete_constraint(const std::string& name,
                                     const std::function<bool(const std::string&)>& confirm) {
  last_steps_ = {};
  Decision decision;
  ++last_steps_.pipeline;
  const ExistenceConstraint* c = find(name);
  if (!c) {
    decision.outcome = Outcome::rejected;
    decision.reason = ReasonCode::unknown_constraint;
    decision.messages.push_back(msg::unknown_constraint(name));
    return decision;
  }
  ++last_steps_.pipeline;
  if (!confirm(msg::delete_prompt(name, render_syntax(*c, *catalog_)))) {
    decision.outcome = Outcome::deletion_cancelled;
    return decision;
  }
  const SetId set = c->set;
  ++last_steps_.pipeline;
  constraints_.erase(std::find_if(constraints_.begin(), constraints_.end(),
                                  [&](const ExistenceConstraint& e) { return e.name == name; }));
  ++last_steps_.pipeline;
  std::vector<Hook>& set_hooks = hooks_[set];
  set_hooks.erase(std::remove_if(set_hooks.begin(), set_hooks.end(),
                                 [&](const Hook& h) { return h.constraint == name; }),
                  set_hooks.end());
  if (set_hooks.empty()) hooks_.erase(set);
  decision.outcome = Outcome::deleted;
  decision.messages.push_back(msg::deleted(name));
  return decision;
}

void Registry::restore_constraint(ExistenceConstraint ec) {
  if (find(ec.name)) throw CatalogError("duplicate constraint name: " + ec.name);
  catalog_->function(ec.right);
  if (ec.left) catalog_->function(*ec.left);
  if (ec.set == 0) ec.set = catalog_->function(ec.right).domain;
  Subtype kind = Subtype::existence;
  if (auto s = classify(ec.inexist, ec.negation, ec.left.has_value())) kind = *s;
  hooks_[ec.set].push_back({ec.name, kind});
  constraints_.push_back(std::move(ec));
}

std::vector<std::string> Registry::audit() const {
  std::vector<std::string> findings;
  auto flag = [&](const std::string& text) { findings.push_back(text); };

  for (const std::string& finding : catalog_->audit()) flag(finding);

  for (const ExistenceConstraint& c : constraints_) {
    // C2/C3: the flag combinations of the seven subtypes.
    if (!classify(c.inexist, c.negation, c.left.has_value())) {
      flag("C2/C3: " + c.name + " has ill-formed flags (no left side, not negated, not inexist)");
      continue;
    }
    const int m = static_cast<int>(catalog_->top_members(c.right).size());
    if (c.left) {
      const int n = static_cast<int>(catalog_->top_members(*c.left).size());
      // C0: distinct sides.
      if (*c.left == c.right) flag("C0: " + c.name + " has identical sides");
      // C4: shared domain, equal to the constraint's set.
      if (catalog_->function(*c.left).domain != catalog_->function(c.right).domain ||
          catalog_->function(c.right).domain != c.set)
        flag("C4: " + c.name + " sides are not over the constraint's set");
      // C7/C8: no totally defined left side or left members.
      if (catalog_->is_total(*c.left)) flag("C7: " + c.name + " left side is totally defined");
      if (n > 1)
        for (FuncId member : catalog_->top_members(*c.left))
          if (catalog_->is_total(member))
            flag("C8: " + c.name + " left member " + catalog_->function(member).name +
                 " is totally defined");
      // C10/C11: side overlap.
      const auto left_atoms = catalog_->members_of(*c.left);
      const auto right_atoms = catalog_->members_of(c.right);
      for (FuncId a : left_atoms)
        if (std::find(right_atoms.begin(), right_atoms.end(), a) != right_atoms.end())
          flag("C10/C11: " + c.name + " member " + catalog_->function(a).name +
               " appears on both sides");
    } else {
      // C5: the constraint hangs off its right side's set.
      if (c.set != catalog_->function(c.right).domain)
        flag("C5: " + c.name + " is not associated with its right side's set");
      // C6: consolidated forms need a product.
      if (m < 2) flag("C6: " + c.name + " is consolidated but its right side is not a product");
    }
    // C7/C9: no totally defined right side or right members.
    if (catalog_->is_total(c.right)) flag("C7: " + c.name + " right side is totally defined");
    if (m > 1)
      for (FuncId member : catalog_->top_members(c.right))
        if (catalog_->is_total(member))
          flag("C9: " + c.name + " right member " + catalog_->function(member).name +
               " is totally defined");
  }

  // C1: the semantic key is unique.
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    for (std::size_t j = i + 1; j < constraints_.size(); ++j) {
      const ExistenceConstraint& a = constraints_[i];
      const ExistenceConstraint& b = constraints_[j];
      if (a.left == b.left && a.right == b.right && a.inexist == b.inexist &&
          a.negation == b.negation)
        flag("C1: " + a.name + " and " + b.name + " share the semantic key");
    }

  // Pairwise coherence and minimality over matching bodies: the only pair
  // allowed to coexist is inexistence with non-existence (their conjunction
  // is the exclusive-or).
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (!classify(constraints_[i].inexist, constraints_[i].negation,
                  constraints_[i].left.has_value()))
      continue;
    for (std::size_t j = i + 1; j < constraints_.size(); ++j) {
      if (!classify(constraints_[j].inexist, constraints_[j].negation,
                    constraints_[j].left.has_value()))
        continue;
      const ConstraintShape a = shape_of(constraints_[i], *catalog_);
      const ConstraintShape b = shape_of(constraints_[j], *catalog_);
      if (!bodies_match(a, b, *catalog_)) continue;
      const auto conj = conjunction_class(family_representative(a.subtype),
                                          family_representative(b.subtype));
      if (is_degenerate(conj.cls))
        flag("coherence: " + constraints_[i].name + " and " + constraints_[j].name +
             " are mutually exclusive");
      else if (conj.cls != ConjunctionClass::equiv_xor)
        flag("minimality: " + constraints_[i].name + " and " + constraints_[j].name +
             " overlap over one body");
    }
  }

  // Hook bookkeeping: exactly one hook per constraint, on its set.
  std::size_t hook_count = 0;
  for (const auto& [set, set_hooks] : hooks_) {
    hook_count += set_hooks.size();
    for (const Hook& hook : set_hooks) {
      const ExistenceConstraint* c = find(hook.constraint);
      if (!c)
        flag("hooks: dangling hook for " + hook.constraint);
      else if (c->set != set)
        flag("hooks: " + hook.constraint + " hooked on the wrong set");
    }
  }
  if (hook_count != constraints_.size()) flag("hooks: hook count differs from constraint count");

  return findings;
}

}  // namespace nullguard
