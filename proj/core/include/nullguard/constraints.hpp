#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullguard/catalog.hpp"

namespace nullguard {

/// The seven existence-constraint subtypes. The consolidated (coalesced)
/// forms have no left side; their members arrive through the right-side
/// product.
enum class Subtype {
  existence,             // f |- g
  non_existence,         // f !|- g
  cons_non_existence,    // !|- f*g
  inexistence,           // !f |- g
  cons_inexistence,      // |- f*g
  anti_existence,        // !f !|- g
  cons_anti_existence,   // !!|- f*g
};

inline constexpr Subtype kAllSubtypes[] = {
    Subtype::existence,        Subtype::non_existence,    Subtype::cons_non_existence,
    Subtype::inexistence,      Subtype::cons_inexistence, Subtype::anti_existence,
    Subtype::cons_anti_existence,
};

/// The five subtypes that are pairwise independent: the single and
/// consolidated non-existence forms are equivalent at atomic arity, and so
/// are the two inexistence forms.
inline constexpr Subtype kIndependentSubtypes[] = {
    Subtype::existence, Subtype::cons_non_existence, Subtype::cons_inexistence,
    Subtype::anti_existence, Subtype::cons_anti_existence,
};

const char* subtype_name(Subtype s);
bool is_consolidated(Subtype s);

/// Collapses the single/consolidated split: both non-existence forms map to
/// cons_non_existence and both inexistence forms to cons_inexistence. The
/// result is always one of kIndependentSubtypes.
Subtype family_representative(Subtype s);

/// Maps the (Inexist?, Negation?, left-side present?) flag triple to its
/// subtype. Exactly one of the eight combinations is ill-formed —
/// (false, false, false) would be an existence constraint without a left
/// side — and yields nullopt.
std::optional<Subtype> classify(bool inexist, bool negation, bool has_left) noexcept;

struct SubtypeCodes {
  std::string value;      // Inexist?, left, Negation?, right digits (f=1, g=2, f*g=3, absent=0)
  std::string min_value;  // same without the left digit, leading zeros trimmed
};

SubtypeCodes subtype_codes(Subtype s);

enum class CodeComponent { inexist_flag, negation_flag, right_code };

/// Which subtype pairs stop being distinguishable when one component is
/// removed from the (Inexist?, Negation?, right) code triple. Derived by
/// enumeration; the key uniqueness argument rests on every drop producing
/// at least one collision.
std::vector<std::pair<Subtype, Subtype>> colliding_pairs_without(CodeComponent dropped);

/// Evaluates the subtype's propositional formula, with f/g standing for
/// "the value is null". Returns true iff the constraint is satisfied.
bool formula_eval(Subtype s, bool f_null, bool g_null) noexcept;

/// One registered existence constraint. `set` is the common domain of both
/// sides, derived from the right side at admission time.
struct ExistenceConstraint {
  std::string name;
  bool inexist = false;
  bool negation = false;
  std::optional<FuncId> left;
  FuncId right = 0;
  SetId set = 0;

  bool consolidated() const { return !left.has_value(); }
  Subtype subtype() const;  // throws std::logic_error on ill-formed flags
};

/// Null mask of one row projected through a constraint's sides, in
/// top-member order (a composite is one slot).
struct NullPattern {
  std::vector<bool> left_nulls;
  std::vector<bool> right_nulls;
};

/// Canonical ASCII rendering, re-parseable by the constraint DSL:
/// "email |- FirstName*LastName", "!PassedAwayYear !|- KilledBy",
/// "|- email*PhoneNo", "!!|- f*g". Composites render as dotted chains.
std::string render_syntax(const ExistenceConstraint& c, const Catalog& catalog);
std::string render_side(FuncId f, const Catalog& catalog);

}  // namespace nullguard
