// nullguard CLI: catalog/constraint management, data validation, save
// simulation, trigger emission, and constraint-set explanation.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nullguard/codegen.hpp"
#include "nullguard/dsl.hpp"
#include "nullguard/enforcement.hpp"
#include "nullguard/instance.hpp"
#include "nullguard/oracle.hpp"
#include "nullguard/persistence.hpp"

namespace {

using namespace nullguard;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

int diagnose(const std::string& message) {
  std::cerr << "nullguard: " << message << "\n";
  return kUsage;
}

/// Rewrites the catalog under an advisory lock on the file itself.
void save_locked(const std::filesystem::path& path, const Catalog& catalog,
                 const Registry& registry) {
  const int fd = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
  if (fd < 0) throw PersistError("cannot open " + path.string() + " for writing");
  ::flock(fd, LOCK_EX);
  const std::string text = schema_to_string(catalog, registry);
  bool ok = ::ftruncate(fd, 0) == 0;
  ssize_t written = ok ? ::write(fd, text.data(), text.size()) : -1;
  ::flock(fd, LOCK_UN);
  ::close(fd);
  if (!ok || written != static_cast<ssize_t>(text.size()))
    throw PersistError("cannot rewrite " + path.string());
}

void print_decision(const Decision& decision) {
  std::cout << outcome_name(decision.outcome) << "\n";
  for (const std::string& message : decision.messages) std::cout << message << "\n";
}

std::string next_auto_name(const Registry& registry) {
  int max_seen = 0;
  for (const ExistenceConstraint& c : registry.constraints()) {
    if (c.name.size() < 3 || c.name.compare(0, 2, "EC") != 0) continue;
    int value = 0;
    const char* begin = c.name.data() + 2;
    const char* end = c.name.data() + c.name.size();
    if (auto [ptr, ec] = std::from_chars(begin, end, value); ec == std::errc{} && ptr == end)
      max_seen = std::max(max_seen, value);
  }
  return "EC" + std::to_string(max_seen + 1);
}

Value parse_cli_value(const std::string& token, const FunctionDef& column,
                      const Catalog& catalog) {
  if (token == "null") return Value{Null{}};
  if (token.size() >= 2 && token.front() == '"' && token.back() == '"')
    return Value{token.substr(1, token.size() - 2)};
  if (column.codomain.kind == Codomain::Kind::set) {
    int x = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw InstanceError("column " + column.name + ": bad reference '" + token + "'");
    return Value{Ref{x}};
  }
  const ValueDomain& vd = catalog.value_domain(column.codomain.domain_index);
  switch (vd.kind) {
    case ValueDomain::Kind::text_with_maxlen:
      return Value{token};
    case ValueDomain::Kind::naturals_with_max:
    case ValueDomain::Kind::integer_range: {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw InstanceError("column " + column.name + ": bad integer '" + token + "'");
      return Value{value};
    }
    case ValueDomain::Kind::real_range: {
      std::size_t pos = 0;
      const double value = std::stod(token, &pos);
      if (pos != token.size())
        throw InstanceError("column " + column.name + ": bad real '" + token + "'");
      return Value{value};
    }
    case ValueDomain::Kind::boolean_value:
      if (token == "true") return Value{true};
      if (token == "false") return Value{false};
      throw InstanceError("column " + column.name + ": bad boolean '" + token + "'");
  }
  return Value{Null{}};
}

/// Drops helper products/composites (their names carry '*' or '.') that no
/// registered constraint reaches anymore, so removing a constraint restores
/// the catalog file the admission wrote.
void collect_garbage(Catalog& catalog, const Registry& registry) {
  std::set<FuncId> keep;
  auto mark = [&](FuncId id, auto&& self) -> void {
    if (!keep.insert(id).second) return;
    for (FuncId member : catalog.function(id).members) self(member, self);
  };
  for (const FunctionDef& f : catalog.functions())
    if (f.name.find('*') == std::string::npos && f.name.find('.') == std::string::npos)
      mark(f.func_id, mark);
  for (const ExistenceConstraint& c : registry.constraints()) {
    mark(c.right, mark);
    if (c.left) mark(*c.left, mark);
  }
  std::vector<FuncId> drop;
  for (const FunctionDef& f : catalog.functions())
    if (!keep.count(f.func_id)) drop.push_back(f.func_id);
  for (FuncId id : drop) catalog.remove_function(id);
}

int run_check(const std::string& catalog_path) {
  auto schema = load_schema_file(catalog_path);
  const auto findings = schema->registry.audit();
  if (findings.empty()) {
    std::cout << "catalog OK: " << schema->catalog.sets().size() << " set(s), "
              << schema->catalog.functions().size() << " function(s), "
              << schema->registry.constraints().size() << " constraint(s)\n";
    return kOk;
  }
  for (const std::string& finding : findings) std::cout << finding << "\n";
  std::cout << findings.size() << " invariant violation(s)\n";
  return kRejected;
}

int run_add(const std::string& catalog_path, const std::string& expression,
            const std::string& data_dir) {
  auto schema = load_schema_file(catalog_path);
  const ResolvedConstraint resolved =
      resolve_constraint(parse_constraint(expression), schema->catalog);
  const std::string name = resolved.name ? *resolved.name : next_auto_name(schema->registry);

  InstanceStore store;
  const bool with_data = !data_dir.empty();
  if (with_data) load_data_dir(store, schema->catalog, data_dir);

  const Decision decision =
      schema->registry.add_constraint(name, resolved.inexist, resolved.left, resolved.negation,
                                      resolved.right, with_data ? &store : nullptr);
  print_decision(decision);
  if (!decision.accepted()) return kRejected;
  save_locked(catalog_path, schema->catalog, schema->registry);
  return kOk;
}

int run_rm(const std::string& catalog_path, const std::string& name, bool assume_yes) {
  auto schema = load_schema_file(catalog_path);
  if (!assume_yes && !::isatty(::fileno(stdin)))
    return diagnose("deleting " + name + " needs confirmation; re-run with --yes");

  auto confirm = [&](const std::string& prompt) {
    if (assume_yes) return true;
    std::cout << prompt << " [y/N] " << std::flush;
    std::string line;
    std::getline(std::cin, line);
    return line == "y" || line == "Y" || line == "yes";
  };
  const Decision decision = schema->registry.delete_constraint(name, confirm);
  print_decision(decision);
  if (decision.outcome == Outcome::rejected) return kRejected;
  if (decision.outcome == Outcome::deleted) {
    collect_garbage(schema->catalog, schema->registry);
    save_locked(catalog_path, schema->catalog, schema->registry);
  }
  return kOk;
}

int run_validate(const std::string& catalog_path, const std::string& data_dir) {
  auto schema = load_schema_file(catalog_path);
  InstanceStore store;
  load_data_dir(store, schema->catalog, data_dir);
  std::size_t total = 0;
  for (const ExistenceConstraint& c : schema->registry.constraints()) {
    const std::vector<int> xs = scan_violations(c, store, schema->catalog);
    total += xs.size();
    std::cout << c.name << " (" << render_syntax(c, schema->catalog) << "): " << xs.size()
              << " violation(s)";
    if (!xs.empty()) {
      std::cout << " at x =";
      for (int x : xs) std::cout << ' ' << x;
    }
    std::cout << "\n";
  }
  std::cout << total << " violations\n";
  return total == 0 ? kOk : kRejected;
}

int run_simulate(const std::string& catalog_path, const std::string& data_dir,
                 const std::string& table_name, const std::string& assignments, int row_x) {
  auto schema = load_schema_file(catalog_path);
  const SetDef* set = schema->catalog.find_set(table_name);
  if (!set) return diagnose("unknown table: " + table_name);

  InstanceStore store;
  load_data_dir(store, schema->catalog, data_dir);
  TableInstance& table = store.ensure_table(set->set_id, schema->catalog);

  CellValues cells;
  std::size_t start = 0;
  while (start < assignments.size()) {
    std::size_t comma = assignments.find(',', start);
    if (comma == std::string::npos) comma = assignments.size();
    const std::string pair = assignments.substr(start, comma - start);
    start = comma + 1;
    const std::size_t eq = pair.find('=');
    if (eq == std::string::npos) return diagnose("bad --set entry (need col=val): " + pair);
    const std::string column_name = pair.substr(0, eq);
    const FunctionDef* column = schema->catalog.find_function(column_name);
    if (!column || column->kind != FunctionKind::atomic || column->domain != set->set_id)
      return diagnose("unknown column: " + column_name + " on " + table_name);
    cells[column->func_id] =
        parse_cli_value(pair.substr(eq + 1), *column, schema->catalog);
  }

  Row pending;
  std::vector<FuncId> changed;
  bool is_insert = row_x == 0;
  if (is_insert) {
    pending.cells.assign(table.columns().size(), Value{Null{}});
  } else {
    const Row* current = table.find_row(row_x);
    if (!current) return diagnose("no row with x = " + std::to_string(row_x));
    pending = *current;
  }
  for (const auto& [column, value] : cells) {
    pending.cells[*table.column_index(column)] = value;
    changed.push_back(column);
  }

  const auto hooks = schema->registry.hook_constraints(set->set_id);
  const Verdict verdict =
      before_update(store, table, pending, is_insert, changed,
                    std::span(hooks.data(), hooks.size()), schema->catalog);
  if (verdict.violated) {
    std::cout << verdict.message << "\n";
    return kRejected;
  }
  std::cout << "ok: " << (is_insert ? "insert" : "update") << " would be accepted\n";
  return kOk;
}

int run_triggers(const std::string& catalog_path, const std::string& table_name,
                 const std::string& out_dir) {
  auto schema = load_schema_file(catalog_path);
  std::vector<SetId> targets;
  if (!table_name.empty()) {
    const SetDef* set = schema->catalog.find_set(table_name);
    if (!set) return diagnose("unknown table: " + table_name);
    targets.push_back(set->set_id);
  } else {
    for (const SetDef& set : schema->catalog.sets())
      if (!schema->registry.hooks(set.set_id).empty()) targets.push_back(set.set_id);
  }
  if (targets.empty()) return diagnose("no constraints to generate triggers for");

  for (SetId set : targets) {
    const auto hooked = schema->registry.hook_constraints(set);
    const std::string sql =
        generate_trigger(set, std::span(hooked.data(), hooked.size()), schema->catalog);
    if (out_dir.empty()) {
      std::cout << sql;
    } else {
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path path =
          std::filesystem::path(out_dir) / (schema->catalog.set(set).name + ".sql");
      std::ofstream out(path);
      if (!out) return diagnose("cannot write " + path.string());
      out << sql;
      std::cout << "wrote " << path.string() << "\n";
    }
  }
  return kOk;
}

int run_explain(const std::string& catalog_path) {
  auto schema = load_schema_file(catalog_path);
  std::cout << "subtypes (Inexist?, left side, Negation?, right side -> value / minimal code):\n";
  const char* syntaxes[] = {"f |- g", "f !|- g", "!|- f*g", "!f |- g",
                            "|- f*g", "!f !|- g", "!!|- f*g"};
  int row = 1;
  for (Subtype s : kAllSubtypes) {
    const SubtypeCodes codes = subtype_codes(s);
    std::printf("  %d. %-18s %-10s value=%s min=%s\n", row++, subtype_name(s),
                syntaxes[row - 2], codes.value.c_str(), codes.min_value.c_str());
  }
  std::cout << "\npairwise conjunctions of the five independent subtypes:\n";
  for (std::size_t i = 0; i < std::size(kIndependentSubtypes); ++i)
    for (std::size_t j = i + 1; j < std::size(kIndependentSubtypes); ++j) {
      const Subtype a = kIndependentSubtypes[i];
      const Subtype b = kIndependentSubtypes[j];
      const ConjunctionResult conj = conjunction_class(a, b);
      const char* note = is_degenerate(conj.cls)          ? "mutually exclusive"
                         : conj.cls == ConjunctionClass::equiv_x ? "collapses to !!|- f*g"
                                                                 : "may coexist";
    std::printf("  %-18s + %-18s -> %-22s (%s)\n", subtype_name(a), subtype_name(b),
                conjunction_class_name(conj.cls), note);
    }
  std::cout << "\nregistered constraints:\n";
  if (schema->registry.constraints().empty()) std::cout << "  (none)\n";
  for (const ExistenceConstraint& c : schema->registry.constraints())
    std::cout << "  " << c.name << ": " << render_syntax(c, schema->catalog) << "  ["
              << subtype_name(c.subtype()) << " on " << schema->catalog.set(c.set).name << "]\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nullguard - existence/non-existence/inexistence/anti-existence constraint engine"};
  app.require_subcommand(1);

  std::string catalog_path, expression, name, data_dir, table_name, assignments, out_dir;
  int row_x = 0;
  bool assume_yes = false;

  auto* check = app.add_subcommand("check", "Audit catalog and constraint-set invariants");
  check->add_option("catalog", catalog_path, "catalog JSON file")->required();

  auto* add = app.add_subcommand("add", "Admit a constraint given in the ASCII syntax");
  add->add_option("catalog", catalog_path)->required();
  add->add_option("constraint", expression, "e.g. \"iec: |- email*PhoneNo\"")->required();
  add->add_option("--data", data_dir, "data directory for the satisfiability gate");

  auto* rm = app.add_subcommand("rm", "Delete a constraint (asks for confirmation)");
  rm->add_option("catalog", catalog_path)->required();
  rm->add_option("name", name)->required();
  rm->add_flag("--yes", assume_yes, "confirm without prompting");

  auto* validate = app.add_subcommand("validate", "Scan a data directory for violations");
  validate->add_option("catalog", catalog_path)->required();
  validate->add_option("--data", data_dir)->required();

  auto* simulate = app.add_subcommand("simulate", "Dry-run a row save against the hooks");
  simulate->add_option("catalog", catalog_path)->required();
  simulate->add_option("--data", data_dir)->required();
  simulate->add_option("--table", table_name)->required();
  simulate->add_option("--set", assignments, "col=val[,col=val...]; `null` clears a cell")
      ->required();
  simulate->add_option("--row", row_x, "update this row instead of inserting");

  auto* triggers = app.add_subcommand("triggers", "Emit T-SQL validation triggers");
  triggers->add_option("catalog", catalog_path)->required();
  triggers->add_option("--table", table_name);
  triggers->add_option("-o,--out", out_dir, "write <Table>.sql files here");

  auto* explain = app.add_subcommand("explain", "Describe subtypes, codes, and interactions");
  explain->add_option("catalog", catalog_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(catalog_path);
    if (*add) return run_add(catalog_path, expression, data_dir);
    if (*rm) return run_rm(catalog_path, name, assume_yes);
    if (*validate) return run_validate(catalog_path, data_dir);
    if (*simulate) return run_simulate(catalog_path, data_dir, table_name, assignments, row_x);
    if (*triggers) return run_triggers(catalog_path, table_name, out_dir);
    if (*explain) return run_explain(catalog_path);
  } catch (const std::exception& e) {
    return diagnose(e.what());
  }
  return kUsage;
}
