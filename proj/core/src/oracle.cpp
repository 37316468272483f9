#include "nullguard/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace nullguard {

const char* conjunction_class_name(ConjunctionClass c) {
  switch (c) {
    case ConjunctionClass::equiv_x: return "EquivX";
    case ConjunctionClass::equiv_xor: return "EquivXor";
    case ConjunctionClass::forces_f_always_null: return "ForcesFAlwaysNull";
    case ConjunctionClass::forces_g_always_null: return "ForcesGAlwaysNull";
    case ConjunctionClass::forces_f_never_null: return "ForcesFNeverNull";
    case ConjunctionClass::forces_g_never_null: return "ForcesGNeverNull";
    case ConjunctionClass::forces_both_always_null: return "ForcesBothAlwaysNull";
    case ConjunctionClass::forces_both_never_null: return "ForcesBothNeverNull";
    case ConjunctionClass::other: return "Other";
  }
  return "?";
}

bool is_degenerate(ConjunctionClass c) {
  switch (c) {
    case ConjunctionClass::forces_f_always_null:
    case ConjunctionClass::forces_g_always_null:
    case ConjunctionClass::forces_f_never_null:
    case ConjunctionClass::forces_g_never_null:
    case ConjunctionClass::forces_both_always_null:
    case ConjunctionClass::forces_both_never_null:
      return true;
    default:
      return false;
  }
}

ConjunctionResult conjunction_class(Subtype a, Subtype b) {
  const bool a_independent = std::find(std::begin(kIndependentSubtypes),
                                       std::end(kIndependentSubtypes),
                                       a) != std::end(kIndependentSubtypes);
  const bool b_independent = std::find(std::begin(kIndependentSubtypes),
                                       std::end(kIndependentSubtypes),
                                       b) != std::end(kIndependentSubtypes);
  if (!a_independent || !b_independent)
    throw std::invalid_argument("conjunction_class expects independent subtypes");

  ConjunctionResult result;
  // Rows in (f_null, g_null) order: (0,0), (0,1), (1,0), (1,1).
  const std::array<std::pair<bool, bool>, 4> rows{{{false, false}, {false, true}, {true, false}, {true, true}}};
  for (std::size_t i = 0; i < rows.size(); ++i)
    result.truth[i] = formula_eval(a, rows[i].first, rows[i].second) &&
                      formula_eval(b, rows[i].first, rows[i].second);

  const std::array<bool, 4>& t = result.truth;
  auto matches = [&](bool r00, bool r01, bool r10, bool r11) {
    return t[0] == r00 && t[1] == r01 && t[2] == r10 && t[3] == r11;
  };
  if (matches(true, false, false, true)) result.cls = ConjunctionClass::equiv_x;
  else if (matches(false, true, true, false)) result.cls = ConjunctionClass::equiv_xor;
  else if (matches(false, false, true, true)) result.cls = ConjunctionClass::forces_f_always_null;
  else if (matches(false, true, false, true)) result.cls = ConjunctionClass::forces_g_always_null;
  else if (matches(true, true, false, false)) result.cls = ConjunctionClass::forces_f_never_null;
  else if (matches(true, false, true, false)) result.cls = ConjunctionClass::forces_g_never_null;
  else if (matches(false, false, false, true)) result.cls = ConjunctionClass::forces_both_always_null;
  else if (matches(true, false, false, false)) result.cls = ConjunctionClass::forces_both_never_null;
  else result.cls = ConjunctionClass::other;
  return result;
}

namespace {

bool any_null(const std::vector<bool>& v) {
  return std::any_of(v.begin(), v.end(), [](bool b) { return b; });
}
bool any_known(const std::vector<bool>& v) {
  return std::any_of(v.begin(), v.end(), [](bool b) { return !b; });
}
bool all_null(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}
bool all_known(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return !b; });
}
int count_known(const std::vector<bool>& v) {
  return static_cast<int>(std::count(v.begin(), v.end(), false));
}

}  // namespace

bool oracle_decision(Subtype s, const NullPattern& pattern) {
  const std::vector<bool>& f = pattern.left_nulls;
  const std::vector<bool>& g = pattern.right_nulls;
  if (is_consolidated(s)) {
    if (!f.empty()) throw std::invalid_argument("consolidated forms take no left side");
    if (g.size() < 2) throw std::invalid_argument("consolidated forms need at least 2 members");
    switch (s) {
      case Subtype::cons_non_existence: return count_known(g) <= 1;
      case Subtype::cons_inexistence: return count_known(g) >= 1;
      case Subtype::cons_anti_existence: return all_null(g) || all_known(g);
      default: break;
    }
  }
  if (f.empty() || g.empty()) throw std::invalid_argument("single forms need both sides");
  switch (s) {
    case Subtype::existence: return !any_known(f) || all_known(g);
    case Subtype::non_existence: return !any_known(f) || all_null(g);
    case Subtype::inexistence: return !any_null(f) || all_known(g);
    case Subtype::anti_existence: return !all_null(f) || all_null(g);
    default: break;
  }
  throw std::invalid_argument("oracle_decision: unsupported subtype/pattern shape");
}

std::vector<NullPattern> enumerate_patterns(int n, int m) {
  if (n < 0 || m < 1) throw std::invalid_argument("enumerate_patterns: need n >= 0, m >= 1");
  if (n + m > 20) throw std::invalid_argument("enumerate_patterns: n + m must be <= 20");
  std::vector<NullPattern> out;
  const std::size_t total = std::size_t{1} << (n + m);
  out.reserve(total);
  for (std::size_t bits = 0; bits < total; ++bits) {
    NullPattern p;
    p.left_nulls.resize(static_cast<std::size_t>(n));
    p.right_nulls.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) p.left_nulls[static_cast<std::size_t>(i)] = (bits >> i) & 1;
    for (int j = 0; j < m; ++j) p.right_nulls[static_cast<std::size_t>(j)] = (bits >> (n + j)) & 1;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace nullguard
