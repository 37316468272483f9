#pragma once

#include <array>
#include <vector>

#include "nullguard/constraints.hpp"

namespace nullguard {

/// What the conjunction of two subtypes' formulas amounts to, classified from
/// its 4-row truth table. The Forces* classes are degenerate: satisfying both
/// constraints pins a side to be always (or never) null, so the pair is
/// incoherent for real data.
enum class ConjunctionClass {
  equiv_x,                  // f XNOR g: the pair is the consolidated anti-existence
  equiv_xor,                // f XOR g: legitimate, exactly one side null
  forces_f_always_null,
  forces_g_always_null,
  forces_f_never_null,
  forces_g_never_null,
  forces_both_always_null,
  forces_both_never_null,
  other,
};

const char* conjunction_class_name(ConjunctionClass c);
bool is_degenerate(ConjunctionClass c);

struct ConjunctionResult {
  ConjunctionClass cls = ConjunctionClass::other;
  // Truth vector over (f_null, g_null) = (0,0), (0,1), (1,0), (1,1).
  std::array<bool, 4> truth{};
};

/// Truth table of formula_eval(a) AND formula_eval(b), classified.
/// a and b must be among the five independent subtypes.
ConjunctionResult conjunction_class(Subtype a, Subtype b);

/// Direct evaluation of the first-order constraint definitions over a null
/// pattern. Kept deliberately separate from the enforcement loops: this is
/// the reference the enforcement verdicts are checked against.
///
/// Singles quantify as: existence / non-existence / inexistence trigger on
/// "some left member known/null", anti-existence on "all left members null".
/// Consolidated forms read their members from the right side and mean:
/// at most one known (non-existence), at least one known (inexistence),
/// all uniform (anti-existence).
bool oracle_decision(Subtype s, const NullPattern& pattern);

/// All 2^(n+m) null patterns, deterministic order (left slots are the low
/// bits). n may be 0 for consolidated forms; n + m is capped at 20.
std::vector<NullPattern> enumerate_patterns(int n, int m);

}  // namespace nullguard
