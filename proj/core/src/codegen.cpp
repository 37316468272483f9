#include "nullguard/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nullguard {

PredicateAst PredicateAst::is_null(std::string column) {
  PredicateAst node;
  node.op = Op::is_null;
  node.column = std::move(column);
  return node;
}

PredicateAst PredicateAst::negate(PredicateAst inner) {
  PredicateAst node;
  node.op = Op::negate;
  node.children.push_back(std::move(inner));
  return node;
}

PredicateAst PredicateAst::conj(std::vector<PredicateAst> children) {
  if (children.size() == 1) return std::move(children.front());
  PredicateAst node;
  node.op = Op::conj;
  node.children = std::move(children);
  return node;
}

PredicateAst PredicateAst::disj(std::vector<PredicateAst> children) {
  if (children.size() == 1) return std::move(children.front());
  PredicateAst node;
  node.op = Op::disj;
  node.children = std::move(children);
  return node;
}

namespace {

std::vector<std::string> atomic_columns(FuncId side, const Catalog& catalog,
                                        const std::string& constraint) {
  std::vector<std::string> out;
  for (FuncId member : catalog.top_members(side)) {
    const FunctionDef& def = catalog.function(member);
    if (def.kind != FunctionKind::atomic)
      throw CodegenError("constraint " + constraint + ": member " + def.name +
                         " is not an atomic column, cannot generate trigger code");
    out.push_back(def.name);
  }
  return out;
}

std::vector<PredicateAst> null_tests(const std::vector<std::string>& columns, bool negated) {
  std::vector<PredicateAst> out;
  out.reserve(columns.size());
  for (const std::string& column : columns) {
    PredicateAst leaf = PredicateAst::is_null(column);
    out.push_back(negated ? PredicateAst::negate(std::move(leaf)) : std::move(leaf));
  }
  return out;
}

}  // namespace

PredicateAst violation_predicate(const ExistenceConstraint& ec, const Catalog& catalog) {
  const Subtype subtype = ec.subtype();
  const std::vector<std::string> right = atomic_columns(ec.right, catalog, ec.name);
  std::vector<std::string> left;
  if (ec.left) left = atomic_columns(*ec.left, catalog, ec.name);

  switch (subtype) {
    case Subtype::existence:
      // some left known AND some right null
      return PredicateAst::conj({PredicateAst::disj(null_tests(left, true)),
                                 PredicateAst::disj(null_tests(right, false))});
    case Subtype::non_existence:
      return PredicateAst::conj({PredicateAst::disj(null_tests(left, true)),
                                 PredicateAst::disj(null_tests(right, true))});
    case Subtype::cons_non_existence: {
      // at least two members known
      std::vector<PredicateAst> pairs;
      for (std::size_t i = 0; i < right.size(); ++i)
        for (std::size_t j = i + 1; j < right.size(); ++j)
          pairs.push_back(
              PredicateAst::conj({PredicateAst::negate(PredicateAst::is_null(right[i])),
                                  PredicateAst::negate(PredicateAst::is_null(right[j]))}));
      return PredicateAst::disj(std::move(pairs));
    }
    case Subtype::inexistence:
      return PredicateAst::conj({PredicateAst::disj(null_tests(left, false)),
                                 PredicateAst::disj(null_tests(right, false))});
    case Subtype::cons_inexistence:
      return PredicateAst::conj(null_tests(right, false));
    case Subtype::anti_existence:
      return PredicateAst::conj({PredicateAst::conj(null_tests(left, false)),
                                 PredicateAst::disj(null_tests(right, true))});
    case Subtype::cons_anti_existence: {
      // first member null and some other known, or first known and some other null
      std::vector<std::string> rest(right.begin() + 1, right.end());
      return PredicateAst::disj(
          {PredicateAst::conj({PredicateAst::is_null(right.front()),
                               PredicateAst::disj(null_tests(rest, true))}),
           PredicateAst::conj({PredicateAst::negate(PredicateAst::is_null(right.front())),
                               PredicateAst::disj(null_tests(rest, false))})});
    }
  }
  throw CodegenError("constraint " + ec.name + ": unsupported subtype");
}

bool eval_predicate(const PredicateAst& ast, const std::map<std::string, bool>& null_columns) {
  switch (ast.op) {
    case PredicateAst::Op::is_null: {
      auto it = null_columns.find(ast.column);
      if (it == null_columns.end()) throw CodegenError("no null flag for column " + ast.column);
      return it->second;
    }
    case PredicateAst::Op::negate:
      return !eval_predicate(ast.children.front(), null_columns);
    case PredicateAst::Op::conj:
      return std::all_of(ast.children.begin(), ast.children.end(),
                         [&](const PredicateAst& c) { return eval_predicate(c, null_columns); });
    case PredicateAst::Op::disj:
      return std::any_of(ast.children.begin(), ast.children.end(),
                         [&](const PredicateAst& c) { return eval_predicate(c, null_columns); });
  }
  return false;
}

namespace {

std::string render_node(const PredicateAst& ast, bool parenthesize_or) {
  switch (ast.op) {
    case PredicateAst::Op::is_null:
      return "i." + ast.column + " IS NULL";
    case PredicateAst::Op::negate: {
      const PredicateAst& inner = ast.children.front();
      if (inner.op == PredicateAst::Op::is_null) return "i." + inner.column + " IS NOT NULL";
      return "NOT (" + render_node(inner, false) + ")";
    }
    case PredicateAst::Op::conj: {
      std::string out;
      for (const PredicateAst& child : ast.children) {
        if (!out.empty()) out += " AND ";
        out += render_node(child, /*parenthesize_or=*/true);
      }
      return out;
    }
    case PredicateAst::Op::disj: {
      std::string out;
      for (const PredicateAst& child : ast.children) {
        if (!out.empty()) out += " OR ";
        out += render_node(child, false);
      }
      // AND binds tighter than OR in SQL, so only parenthesize when nested
      // under a conjunction.
      return parenthesize_or ? "(" + out + ")" : out;
    }
  }
  return "";
}

std::string title_case(const std::string& name) {
  std::string out = name;
  bool first = true;
  for (char& c : out) {
    c = first ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
              : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    first = false;
  }
  return out;
}

std::string escape_sql_string(const std::string& s) {
  std::string out;
  for (char c : s) {
    out.push_back(c);
    if (c == '\'') out.push_back('\'');
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

std::string render_predicate_sql(const PredicateAst& ast) { return render_node(ast, false); }

std::string violation_hint(const ExistenceConstraint& ec, const Catalog& catalog) {
  const std::string g = render_side(ec.right, catalog);
  const std::string f = ec.left ? render_side(*ec.left, catalog) : "";
  std::vector<std::string> member_names;
  for (FuncId member : catalog.top_members(ec.right))
    member_names.push_back(catalog.function(member).name);
  switch (ec.subtype()) {
    case Subtype::existence:
      return "All columns of " + g + " must be not null when any column of " + f +
             " is not null.";
    case Subtype::non_existence:
      return "All columns of " + g + " must be null when any column of " + f + " is not null.";
    case Subtype::cons_non_existence:
      return "At most one of " + join(member_names, ", ") + " may be not null.";
    case Subtype::inexistence:
      return "All columns of " + g + " must be not null when any column of " + f + " is null.";
    case Subtype::cons_inexistence:
      return "Either " + join(member_names, " or/and ") + " must be not null.";
    case Subtype::anti_existence:
      return "All columns of " + g + " must be null when all columns of " + f + " are null.";
    case Subtype::cons_anti_existence:
      return "Columns of " + g + " must be either all null or all not null.";
  }
  return "";
}

std::string generate_trigger(SetId set, std::span<const ExistenceConstraint* const> constraints,
                             const Catalog& catalog) {
  const std::string table = catalog.set(set).name;
  const std::string title = title_case(table);

  struct Block {
    const ExistenceConstraint* ec;
    PredicateAst predicate;
  };
  std::vector<Block> blocks;
  for (const ExistenceConstraint* ec : constraints) {
    if (!ec || ec->set != set) continue;
    bool eligible = true;
    for (FuncId member : catalog.top_members(ec->right))
      eligible = eligible && catalog.function(member).kind == FunctionKind::atomic;
    if (ec->left)
      for (FuncId member : catalog.top_members(*ec->left))
        eligible = eligible && catalog.function(member).kind == FunctionKind::atomic;
    if (!eligible) continue;
    blocks.push_back({ec, violation_predicate(*ec, catalog)});
  }
  if (blocks.empty())
    throw CodegenError("no eligible constraints for table " + table);

  std::ostringstream out;
  out << "USE [" << title << "DB]\n"
      << "GO\n\n"
      << "/***** Object: Trigger [dbo].[TR_" << title << "_Validate] *****/\n"
      << "SET ANSI_NULLS ON\n"
      << "GO\n\n"
      << "SET QUOTED_IDENTIFIER ON\n"
      << "GO\n\n"
      << "CREATE TRIGGER [dbo].[TR_" << title << "_Validate]\n"
      << "ON [dbo].[" << table << "]\n"
      << "AFTER INSERT, UPDATE\n"
      << "AS\n"
      << "BEGIN\n"
      << "    SET NOCOUNT ON;\n"
      << "    SET XACT_ABORT ON;\n\n"
      << "    -- =====\n"
      << "    -- PART 1 - " << table << " non-relational constraints\n"
      << "    -- =====\n";

  for (const Block& block : blocks) {
    const ExistenceConstraint& ec = *block.ec;
    out << "\n    -- -- Constraint " << ec.name << ": " << render_syntax(ec, catalog)
        << " -----\n"
        << "    IF EXISTS (\n"
        << "        SELECT 1 FROM inserted i\n";
    // Split a top-level conjunction or disjunction across lines, one
    // connective-prefixed term per line.
    const PredicateAst& p = block.predicate;
    if ((p.op == PredicateAst::Op::conj || p.op == PredicateAst::Op::disj) &&
        !p.children.empty()) {
      const char* connective = p.op == PredicateAst::Op::conj ? "AND " : "OR ";
      for (std::size_t i = 0; i < p.children.size(); ++i) {
        const std::string term =
            render_node(p.children[i], p.op == PredicateAst::Op::conj);
        if (i == 0)
          out << "        WHERE " << term << "\n";
        else
          out << "              " << connective << term << "\n";
      }
    } else {
      out << "        WHERE " << render_predicate_sql(p) << "\n";
    }
    out << "    )\n"
        << "    BEGIN\n"
        << "        RAISERROR('Constraint " << escape_sql_string(ec.name)
        << " violated: " << escape_sql_string(violation_hint(ec, catalog)) << "', 16, 1);\n"
        << "        ROLLBACK TRANSACTION; RETURN;\n"
        << "    END\n";
  }

  out << "END\n"
      << "GO\n";
  return out.str();
}

}  // namespace nullguard
