#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nullguard/constraints.hpp"

namespace nullguard {

class CodegenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Null-test predicate over the atomic columns of one table. Singleton
/// conjunctions/disjunctions collapse, so the tree shape is canonical.
struct PredicateAst {
  enum class Op { is_null, negate, conj, disj };

  Op op = Op::is_null;
  std::string column;                  // is_null leaves
  std::vector<PredicateAst> children;  // negate: one; conj/disj: two or more

  static PredicateAst is_null(std::string column);
  static PredicateAst negate(PredicateAst inner);
  static PredicateAst conj(std::vector<PredicateAst> children);
  static PredicateAst disj(std::vector<PredicateAst> children);

  bool operator==(const PredicateAst&) const = default;
};

/// AST equivalent to the enforcement violation flag for this constraint.
/// Only atomic members are supported; composite members would need
/// cross-table joins.
PredicateAst violation_predicate(const ExistenceConstraint& ec, const Catalog& catalog);

/// Evaluates the AST over a column-name -> is-null assignment.
bool eval_predicate(const PredicateAst& ast, const std::map<std::string, bool>& null_columns);

/// Single-line SQL text: "i.email IS NULL AND i.PhoneNo IS NULL".
std::string render_predicate_sql(const PredicateAst& ast);

/// One-line violation hint embedded in the RAISERROR text.
std::string violation_hint(const ExistenceConstraint& ec, const Catalog& catalog);

/// T-SQL AFTER INSERT, UPDATE trigger validating every eligible constraint
/// of the table, in registration order. Throws when none is eligible.
std::string generate_trigger(SetId set, std::span<const ExistenceConstraint* const> constraints,
                             const Catalog& catalog);

}  // namespace nullguard
