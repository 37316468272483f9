#include "nullguard/enforcement.hpp"

#include <algorithm>
#include <stdexcept>

#include "nullguard/instance.hpp"
#include "nullguard/messages.hpp"

namespace nullguard {

namespace {

void bump(EnforceCounters* c) {
  if (c) ++c->steps;
}

// One null-mask slot inspected; counts as a step too.
bool eval_slot(const std::vector<bool>& side, std::size_t i, EnforceCounters* c) {
  if (c) {
    ++c->member_evals;
    ++c->steps;
  }
  return side[i];
}

void check_shape(const ExistenceConstraint& ec, const Catalog& catalog,
                 const NullPattern& pattern) {
  const std::size_t m = catalog.top_members(ec.right).size();
  const std::size_t n = ec.left ? catalog.top_members(*ec.left).size() : 0;
  if (pattern.left_nulls.size() != n || pattern.right_nulls.size() != m)
    throw std::invalid_argument("null pattern does not match the arities of " + ec.name);
}

}  // namespace

bool violation_flag(Subtype s, const NullPattern& pattern, EnforceCounters* c) {
  const std::vector<bool>& f = pattern.left_nulls;
  const std::vector<bool>& g = pattern.right_nulls;
  bump(c);  // form branch
  switch (s) {
    case Subtype::existence: {
      bool some_left_known = false;
      for (std::size_t i = 0; i < f.size() && !some_left_known; ++i)
        some_left_known = !eval_slot(f, i, c);
      bump(c);
      if (!some_left_known) return false;
      bool some_right_null = false;
      for (std::size_t j = 0; j < g.size() && !some_right_null; ++j)
        some_right_null = eval_slot(g, j, c);
      bump(c);
      return some_right_null;
    }
    case Subtype::non_existence: {
      bool some_left_known = false;
      for (std::size_t i = 0; i < f.size() && !some_left_known; ++i)
        some_left_known = !eval_slot(f, i, c);
      bump(c);
      if (!some_left_known) return false;
      bool some_right_known = false;
      for (std::size_t j = 0; j < g.size() && !some_right_known; ++j)
        some_right_known = !eval_slot(g, j, c);
      bump(c);
      return some_right_known;
    }
    case Subtype::cons_non_existence: {
      int known = 0;
      for (std::size_t j = 0; j < g.size() && known < 2; ++j)
        if (!eval_slot(g, j, c)) ++known;
      bump(c);
      return known >= 2;
    }
    case Subtype::inexistence: {
      bool some_left_null = false;
      for (std::size_t i = 0; i < f.size() && !some_left_null; ++i)
        some_left_null = eval_slot(f, i, c);
      bump(c);
      if (!some_left_null) return false;
      bool some_right_null = false;
      for (std::size_t j = 0; j < g.size() && !some_right_null; ++j)
        some_right_null = eval_slot(g, j, c);
      bump(c);
      return some_right_null;
    }
    case Subtype::cons_inexistence: {
      bool some_known = false;
      for (std::size_t j = 0; j < g.size() && !some_known; ++j)
        some_known = !eval_slot(g, j, c);
      bump(c);
      return !some_known;
    }
    case Subtype::anti_existence: {
      bool all_left_null = true;
      for (std::size_t i = 0; i < f.size() && all_left_null; ++i)
        all_left_null = eval_slot(f, i, c);
      bump(c);
      if (!all_left_null) return false;
      bool some_right_known = false;
      for (std::size_t j = 0; j < g.size() && !some_right_known; ++j)
        some_right_known = !eval_slot(g, j, c);
      bump(c);
      return some_right_known;
    }
    case Subtype::cons_anti_existence: {
      const bool first_null = eval_slot(g, 0, c);
      bool uniform = true;
      for (std::size_t j = 1; j < g.size() && uniform; ++j)
        uniform = eval_slot(g, j, c) == first_null;
      bump(c);
      return !uniform;
    }
  }
  return false;
}

namespace {

Verdict verdict_for(const ExistenceConstraint& ec, const Catalog& catalog, Subtype s) {
  const std::string g = render_side(ec.right, catalog);
  switch (s) {
    case Subtype::existence: return {true, ec.name, msg::exist_single(ec.name, g)};
    case Subtype::non_existence: return {true, ec.name, msg::non_exist_single(ec.name, g)};
    case Subtype::cons_non_existence:
      return {true, ec.name, msg::non_exist_consolidated(ec.name, g)};
    case Subtype::inexistence: return {true, ec.name, msg::inexist_single(ec.name, g)};
    case Subtype::cons_inexistence: return {true, ec.name, msg::inexist_consolidated(ec.name, g)};
    case Subtype::anti_existence: return {true, ec.name, msg::anti_exist_single(ec.name, g)};
    case Subtype::cons_anti_existence:
      return {true, ec.name, msg::anti_exist_consolidated(ec.name, g)};
  }
  return Verdict::ok();
}

Verdict enforce_as(const ExistenceConstraint& ec, const Catalog& catalog,
                   const NullPattern& pattern, EnforceCounters* counters, Subtype expected_family) {
  check_shape(ec, catalog, pattern);
  const Subtype s = ec.subtype();
  if (family_representative(s) != expected_family)
    throw std::invalid_argument(ec.name + " does not belong to the requested constraint family");
  if (!violation_flag(s, pattern, counters)) return Verdict::ok();
  return verdict_for(ec, catalog, s);
}

}  // namespace

Verdict enforce_existence(const ExistenceConstraint& ec, const Catalog& catalog,
                          const NullPattern& pattern, EnforceCounters* counters) {
  return enforce_as(ec, catalog, pattern, counters, Subtype::existence);
}

Verdict enforce_non_existence(const ExistenceConstraint& ec, const Catalog& catalog,
                              const NullPattern& pattern, EnforceCounters* counters) {
  return enforce_as(ec, catalog, pattern, counters, Subtype::cons_non_existence);
}

Verdict enforce_inexist(const ExistenceConstraint& ec, const Catalog& catalog,
                        const NullPattern& pattern, EnforceCounters* counters) {
  return enforce_as(ec, catalog, pattern, counters, Subtype::cons_inexistence);
}

Verdict enforce_anti_exist(const ExistenceConstraint& ec, const Catalog& catalog,
                           const NullPattern& pattern, EnforceCounters* counters) {
  return enforce_as(ec, catalog, pattern, counters, Subtype::cons_anti_existence);
}

Verdict enforce(const ExistenceConstraint& ec, const Catalog& catalog, const NullPattern& pattern,
                EnforceCounters* counters) {
  bump(counters);  // family dispatch
  return enforce_as(ec, catalog, pattern, counters, family_representative(ec.subtype()));
}

std::vector<FuncId> participating_columns(const ExistenceConstraint& ec, const Catalog& catalog) {
  std::vector<FuncId> out;
  auto add_side = [&](FuncId side) {
    for (FuncId member : catalog.top_members(side)) {
      const FunctionDef& def = catalog.function(member);
      const FuncId column = def.kind == FunctionKind::composite ? def.members.front() : member;
      if (std::find(out.begin(), out.end(), column) == out.end()) out.push_back(column);
    }
  };
  if (ec.left) add_side(*ec.left);
  add_side(ec.right);
  return out;
}

Verdict before_update(const InstanceStore& store, const TableInstance& table, const Row& pending,
                      bool is_insert, const std::vector<FuncId>& changed_columns,
                      std::span<const ExistenceConstraint* const> hooks, const Catalog& catalog) {
  for (const ExistenceConstraint* ec : hooks) {
    if (!is_insert) {
      const std::vector<FuncId> involved = participating_columns(*ec, catalog);
      const bool touched = std::any_of(involved.begin(), involved.end(), [&](FuncId col) {
        return std::find(changed_columns.begin(), changed_columns.end(), col) !=
               changed_columns.end();
      });
      if (!touched) continue;
    }
    const NullPattern pattern = store.null_pattern(table, pending, *ec, catalog);
    Verdict verdict = enforce(*ec, catalog, pattern);
    if (verdict.violated) return verdict;
  }
  return Verdict::ok();
}

}  // namespace nullguard
