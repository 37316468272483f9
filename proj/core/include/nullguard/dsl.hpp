#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nullguard/catalog.hpp"

namespace nullguard {

class DslError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ASCII constraint expressions:
///
///   constraint := [name ":"] ( ["!"] side arrow side | coalesced )
///   arrow      := "|-" | "!|-"
///   coalesced  := ("|-" | "!|-" | "!!|-") product
///   side       := atom | product
///   product    := atom ("*" atom)+
///   atom       := ident | ident ("." ident)+        (dot = composition)
///
/// A leading "!" on the left side sets Inexist?, the "!|-" arrow sets
/// Negation?. Coalesced "|-" is consolidated inexistence, "!|-" consolidated
/// non-existence, "!!|-" consolidated anti-existence.
struct DslAtom {
  std::vector<std::string> chain;  // one name, or a composition chain
};

struct DslSide {
  std::vector<DslAtom> atoms;  // two or more = function product
};

struct ParsedConstraint {
  std::optional<std::string> name;
  bool inexist = false;
  bool negation = false;
  std::optional<DslSide> left;
  DslSide right;
};

ParsedConstraint parse_constraint(std::string_view text);

struct ResolvedConstraint {
  std::optional<std::string> name;
  bool inexist = false;
  bool negation = false;
  std::optional<FuncId> left;
  FuncId right = 0;
};

/// Resolves identifiers against the catalog; composition chains and products
/// that do not exist yet are registered on the fly (named "a.b" / "a*b").
ResolvedConstraint resolve_constraint(const ParsedConstraint& parsed, Catalog& catalog);

}  // namespace nullguard
