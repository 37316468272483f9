#include "nullguard/constraints.hpp"

#include <array>
#include <stdexcept>

namespace nullguard {

const char* subtype_name(Subtype s) {
  switch (s) {
    case Subtype::existence: return "Existence";
    case Subtype::non_existence: return "NonExistence";
    case Subtype::cons_non_existence: return "ConsNonExistence";
    case Subtype::inexistence: return "Inexistence";
    case Subtype::cons_inexistence: return "ConsInexistence";
    case Subtype::anti_existence: return "AntiExistence";
    case Subtype::cons_anti_existence: return "ConsAntiExistence";
  }
  return "?";
}

bool is_consolidated(Subtype s) {
  return s == Subtype::cons_non_existence || s == Subtype::cons_inexistence ||
         s == Subtype::cons_anti_existence;
}

Subtype family_representative(Subtype s) {
  switch (s) {
    case Subtype::non_existence: return Subtype::cons_non_existence;
    case Subtype::inexistence: return Subtype::cons_inexistence;
    default: return s;
  }
}

std::optional<Subtype> classify(bool inexist, bool negation, bool has_left) noexcept {
  if (!inexist && !negation && !has_left) return std::nullopt;
  if (!inexist && !negation) return Subtype::existence;
  if (!inexist && negation) return has_left ? Subtype::non_existence : Subtype::cons_non_existence;
  if (inexist && !negation) return has_left ? Subtype::inexistence : Subtype::cons_inexistence;
  return has_left ? Subtype::anti_existence : Subtype::cons_anti_existence;
}

namespace {

struct FlagRow {
  bool inexist;
  bool has_left;
  bool negation;
};

FlagRow flags_of(Subtype s) {
  switch (s) {
    case Subtype::existence: return {false, true, false};
    case Subtype::non_existence: return {false, true, true};
    case Subtype::cons_non_existence: return {false, false, true};
    case Subtype::inexistence: return {true, true, false};
    case Subtype::cons_inexistence: return {true, false, false};
    case Subtype::anti_existence: return {true, true, true};
    case Subtype::cons_anti_existence: return {true, false, true};
  }
  return {};
}

std::string trim_leading_zeros(std::string s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return s.substr(i);
}

}  // namespace

SubtypeCodes subtype_codes(Subtype s) {
  const FlagRow row = flags_of(s);
  // Digit encoding: f = 1, g = 2, f*g = 3, absent = 0. Single forms have an
  // atomic-shaped left (1) and right (2); consolidated ones no left (0) and a
  // product right (3).
  const char left_digit = row.has_left ? '1' : '0';
  const char right_digit = row.has_left ? '2' : '3';
  SubtypeCodes codes;
  codes.value.push_back(row.inexist ? '1' : '0');
  codes.value.push_back(left_digit);
  codes.value.push_back(row.negation ? '1' : '0');
  codes.value.push_back(right_digit);
  std::string min;
  min.push_back(row.inexist ? '1' : '0');
  min.push_back(row.negation ? '1' : '0');
  min.push_back(right_digit);
  codes.min_value = trim_leading_zeros(min);
  return codes;
}

std::vector<std::pair<Subtype, Subtype>> colliding_pairs_without(CodeComponent dropped) {
  std::vector<std::pair<Subtype, Subtype>> out;
  auto reduced = [&](Subtype s) {
    const FlagRow row = flags_of(s);
    std::string code;
    if (dropped != CodeComponent::inexist_flag) code.push_back(row.inexist ? '1' : '0');
    if (dropped != CodeComponent::negation_flag) code.push_back(row.negation ? '1' : '0');
    if (dropped != CodeComponent::right_code) code.push_back(row.has_left ? '2' : '3');
    return code;
  };
  for (std::size_t i = 0; i < std::size(kAllSubtypes); ++i)
    for (std::size_t j = i + 1; j < std::size(kAllSubtypes); ++j)
      if (reduced(kAllSubtypes[i]) == reduced(kAllSubtypes[j]))
        out.emplace_back(kAllSubtypes[i], kAllSubtypes[j]);
  return out;
}

bool formula_eval(Subtype s, bool f, bool g) noexcept {
  switch (s) {
    case Subtype::existence: return f || !g;
    case Subtype::non_existence:
    case Subtype::cons_non_existence: return f || g;
    case Subtype::inexistence:
    case Subtype::cons_inexistence: return !f || !g;
    case Subtype::anti_existence: return !f || g;
    case Subtype::cons_anti_existence: return f == g;  // XNOR
  }
  return true;
}

Subtype ExistenceConstraint::subtype() const {
  auto s = classify(inexist, negation, left.has_value());
  if (!s) throw std::logic_error("ill-formed constraint flags: " + name);
  return *s;
}

std::string render_side(FuncId f, const Catalog& catalog) {
  const FunctionDef& def = catalog.function(f);
  switch (def.kind) {
    case FunctionKind::atomic:
      return def.name;
    case FunctionKind::composite: {
      std::string out;
      for (FuncId link : def.members) {
        if (!out.empty()) out += '.';
        out += catalog.function(link).name;
      }
      return out;
    }
    case FunctionKind::product: {
      std::string out;
      for (FuncId m : def.members) {
        if (!out.empty()) out += '*';
        out += render_side(m, catalog);
      }
      return out;
    }
  }
  return def.name;
}

std::string render_syntax(const ExistenceConstraint& c, const Catalog& catalog) {
  std::string out;
  if (c.consolidated()) {
    if (c.inexist && c.negation)
      out = "!!|- ";
    else if (c.inexist)
      out = "|- ";
    else
      out = "!|- ";
    return out + render_side(c.right, catalog);
  }
  if (c.inexist) out += '!';
  out += render_side(*c.left, catalog);
  out += c.negation ? " !|- " : " |- ";
  out += render_side(c.right, catalog);
  return out;
}

}  // namespace nullguard
