#include "nullguard/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nullguard/registry.hpp"

namespace nullguard {

TableInstance::TableInstance(SetId set, std::vector<FuncId> columns)
    : set_(set), columns_(std::move(columns)) {}

std::optional<std::size_t> TableInstance::column_index(FuncId column) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == column) return i;
  return std::nullopt;
}

const Row* TableInstance::find_row(int x) const {
  for (const Row& row : rows_)
    if (row.x == x) return &row;
  return nullptr;
}

int TableInstance::append_row(std::vector<Value> cells, int explicit_x) {
  if (cells.size() != columns_.size())
    throw InstanceError("row has " + std::to_string(cells.size()) + " cells, table expects " +
                        std::to_string(columns_.size()));
  Row row;
  if (explicit_x > 0) {
    if (explicit_x < next_x_)
      throw InstanceError("surrogate key " + std::to_string(explicit_x) +
                          " is not increasing (keys are never reused)");
    row.x = explicit_x;
    next_x_ = explicit_x + 1;
  } else {
    row.x = next_x_++;
  }
  row.cells = std::move(cells);
  rows_.push_back(std::move(row));
  return rows_.back().x;
}

void TableInstance::replace_cells(int x, std::vector<Value> cells) {
  for (Row& row : rows_) {
    if (row.x == x) {
      row.cells = std::move(cells);
      return;
    }
  }
  throw InstanceError("unknown surrogate key: " + std::to_string(x));
}

void TableInstance::erase_row(int x) {
  auto it = std::find_if(rows_.begin(), rows_.end(), [x](const Row& r) { return r.x == x; });
  if (it == rows_.end()) throw InstanceError("unknown surrogate key: " + std::to_string(x));
  rows_.erase(it);
}

TableInstance& InstanceStore::ensure_table(SetId set, const Catalog& catalog) {
  auto it = tables_.find(set);
  if (it != tables_.end()) return it->second;
  catalog.set(set);  // throws on unknown set
  auto [pos, _] = tables_.emplace(set, TableInstance(set, catalog.columns_of(set)));
  return pos->second;
}

const TableInstance* InstanceStore::find_table(SetId set) const {
  auto it = tables_.find(set);
  return it == tables_.end() ? nullptr : &it->second;
}

TableInstance* InstanceStore::find_table(SetId set) {
  auto it = tables_.find(set);
  return it == tables_.end() ? nullptr : &it->second;
}

std::vector<Value> InstanceStore::cells_from(const TableInstance& table, const CellValues& cells,
                                             const Row* base) const {
  std::vector<Value> out(table.columns().size(), Value{Null{}});
  if (base) out = base->cells;
  for (const auto& [column, value] : cells) {
    auto idx = table.column_index(column);
    if (!idx) throw InstanceError("unknown column id: " + std::to_string(column));
    out[*idx] = value;
  }
  return out;
}

std::variant<int, Verdict> InstanceStore::insert_row(SetId set, const CellValues& cells,
                                                     const Catalog& catalog,
                                                     const Registry* registry) {
  TableInstance& table = ensure_table(set, catalog);
  Row pending;
  pending.cells = cells_from(table, cells, nullptr);
  if (registry) {
    const auto hooks = registry->hook_constraints(set);
    Verdict verdict = before_update(*this, table, pending, /*is_insert=*/true, {},
                                    std::span(hooks.data(), hooks.size()), catalog);
    if (verdict.violated) return verdict;
  }
  return table.append_row(std::move(pending.cells));
}

std::optional<Verdict> InstanceStore::update_row(SetId set, int x, const CellValues& changed,
                                                 const Catalog& catalog, const Registry* registry) {
  TableInstance* table = find_table(set);
  if (!table) throw InstanceError("no instance for set id " + std::to_string(set));
  const Row* current = table->find_row(x);
  if (!current) throw InstanceError("unknown surrogate key: " + std::to_string(x));
  Row pending;
  pending.x = x;
  pending.cells = cells_from(*table, changed, current);
  if (registry) {
    std::vector<FuncId> changed_columns;
    changed_columns.reserve(changed.size());
    for (const auto& [column, _] : changed) changed_columns.push_back(column);
    const auto hooks = registry->hook_constraints(set);
    Verdict verdict = before_update(*this, *table, pending, /*is_insert=*/false, changed_columns,
                                    std::span(hooks.data(), hooks.size()), catalog);
    if (verdict.violated) return verdict;
  }
  table->replace_cells(x, std::move(pending.cells));
  return std::nullopt;
}

void InstanceStore::delete_row(SetId set, int x) {
  TableInstance* table = find_table(set);
  if (!table) throw InstanceError("no instance for set id " + std::to_string(set));
  table->erase_row(x);
}

std::vector<Value> InstanceStore::eval_function(const TableInstance& table, const Row& row,
                                                FuncId f, const Catalog& catalog) const {
  const FunctionDef& def = catalog.function(f);
  if (def.domain != table.set())
    throw InstanceError("function " + def.name + " is not defined over this table's set");
  switch (def.kind) {
    case FunctionKind::atomic: {
      auto idx = table.column_index(f);
      if (!idx) throw InstanceError("column " + def.name + " missing from table instance");
      return {row.cells[*idx]};
    }
    case FunctionKind::product: {
      std::vector<Value> out;
      for (FuncId member : def.members) {
        auto sub = eval_function(table, row, member, catalog);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case FunctionKind::composite: {
      const TableInstance* current_table = &table;
      const Row* current_row = &row;
      Value value{Null{}};
      for (std::size_t i = 0; i < def.members.size(); ++i) {
        const FunctionDef& link = catalog.function(def.members[i]);
        auto idx = current_table->column_index(link.func_id);
        if (!idx) throw InstanceError("column " + link.name + " missing from table instance");
        value = current_row->cells[*idx];
        if (is_null(value)) return {Value{Null{}}};  // chain short-circuits on null
        if (i + 1 == def.members.size()) break;
        const Ref* ref = std::get_if<Ref>(&value);
        if (!ref)
          throw InstanceError("column " + link.name + " holds a scalar, cannot traverse chain");
        const TableInstance* next_table = find_table(link.codomain.set);
        const Row* next_row = next_table ? next_table->find_row(ref->x) : nullptr;
        if (!next_row)
          throw InstanceError("dangling reference " + std::to_string(ref->x) + " through " +
                              link.name);
        current_table = next_table;
        current_row = next_row;
      }
      return {value};
    }
  }
  return {Value{Null{}}};
}

NullPattern InstanceStore::null_pattern(const TableInstance& table, const Row& row,
                                        const ExistenceConstraint& ec,
                                        const Catalog& catalog) const {
  NullPattern pattern;
  auto fill = [&](FuncId side, std::vector<bool>& out) {
    for (FuncId member : catalog.top_members(side))
      out.push_back(is_null(eval_function(table, row, member, catalog).front()));
  };
  if (ec.left) fill(*ec.left, pattern.left_nulls);
  fill(ec.right, pattern.right_nulls);
  return pattern;
}

std::vector<int> scan_violations_shape(Subtype subtype, const std::optional<FuncId>& left,
                                       const std::vector<FuncId>& right_members,
                                       const InstanceStore& store, const Catalog& catalog) {
  if (right_members.empty()) return {};
  const SetId set = catalog.function(right_members.front()).domain;
  const TableInstance* table = store.find_table(set);
  if (!table) return {};
  std::vector<FuncId> left_members;
  if (left) left_members = catalog.top_members(*left);
  std::vector<int> out;
  for (const Row& row : table->rows()) {
    NullPattern pattern;
    for (FuncId member : left_members)
      pattern.left_nulls.push_back(is_null(store.eval_function(*table, row, member, catalog).front()));
    for (FuncId member : right_members)
      pattern.right_nulls.push_back(
          is_null(store.eval_function(*table, row, member, catalog).front()));
    if (violation_flag(subtype, pattern)) out.push_back(row.x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> scan_violations(const ExistenceConstraint& ec, const InstanceStore& store,
                                 const Catalog& catalog) {
  return scan_violations_shape(ec.subtype(), ec.left, catalog.top_members(ec.right), store,
                               catalog);
}

namespace {

bool needs_quoting(const std::string& s) {
  if (s.empty()) return true;  // distinguish empty text from null
  return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_double(double d) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  if (ec != std::errc{}) return "0";
  return std::string(buf, ptr);
}

std::string cell_text(const Value& v) {
  if (is_null(v)) return "";
  if (const auto* s = std::get_if<std::string>(&v)) return needs_quoting(*s) ? quote(*s) : *s;
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::to_string(std::get<Ref>(v).x);
}

struct CsvField {
  std::string text;
  bool quoted = false;
};

// RFC-4180-ish: quoted fields may contain commas, doubled quotes and
// newlines; records end at an unquoted \n (a preceding \r is dropped).
std::vector<std::vector<CsvField>> parse_csv(std::istream& in) {
  std::vector<std::vector<CsvField>> records;
  std::vector<CsvField> record;
  CsvField field;
  bool in_quotes = false;
  bool any_char = false;
  char c;
  while (in.get(c)) {
    any_char = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.text.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.text.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field.quoted = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field = {};
        break;
      case '\r':
        break;
      case '\n':
        record.push_back(std::move(field));
        field = {};
        records.push_back(std::move(record));
        record = {};
        break;
      default:
        field.text.push_back(c);
    }
  }
  if (in_quotes) throw InstanceError("malformed CSV: unterminated quoted field");
  if (!field.text.empty() || field.quoted || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (!any_char) throw InstanceError("malformed CSV: empty file");
  return records;
}

Value parse_ref(const CsvField& field, const FunctionDef& column) {
  int x = 0;
  auto [ptr, ec] = std::from_chars(field.text.data(), field.text.data() + field.text.size(), x);
  if (ec != std::errc{} || ptr != field.text.data() + field.text.size())
    throw InstanceError("column " + column.name + ": bad reference '" + field.text + "'");
  return Value{Ref{x}};
}

}  // namespace

void export_csv(const TableInstance& table, const Catalog& catalog, std::ostream& out) {
  out << 'x';
  for (FuncId column : table.columns()) out << ',' << catalog.function(column).name;
  out << '\n';
  for (const Row& row : table.rows()) {
    out << row.x;
    for (const Value& cell : row.cells) out << ',' << cell_text(cell);
    out << '\n';
  }
}

std::size_t import_csv(TableInstance& table, const Catalog& catalog, std::istream& in) {
  const auto records = parse_csv(in);
  if (records.empty()) throw InstanceError("malformed CSV: missing header");
  const auto& header = records.front();
  std::size_t first_column = 0;
  bool has_x = !header.empty() && !header[0].quoted && header[0].text == "x";
  if (has_x) first_column = 1;
  if (header.size() - first_column != table.columns().size())
    throw InstanceError("CSV header has " + std::to_string(header.size() - first_column) +
                        " columns, table expects " + std::to_string(table.columns().size()));
  for (std::size_t i = 0; i < table.columns().size(); ++i) {
    const std::string& expected = catalog.function(table.columns()[i]).name;
    if (header[first_column + i].text != expected)
      throw InstanceError("unknown header name '" + header[first_column + i].text +
                          "' (expected '" + expected + "')");
  }
  std::size_t imported = 0;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    if (record.size() != header.size())
      throw InstanceError("CSV row " + std::to_string(r + 1) + " has " +
                          std::to_string(record.size()) + " fields, expected " +
                          std::to_string(header.size()));
    int explicit_x = 0;
    if (has_x) {
      const std::string& text = record[0].text;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), explicit_x);
      if (ec != std::errc{} || ptr != text.data() + text.size() || explicit_x <= 0)
        throw InstanceError("CSV row " + std::to_string(r + 1) + ": bad surrogate key '" + text +
                            "'");
    }
    std::vector<Value> cells;
    cells.reserve(table.columns().size());
    for (std::size_t i = 0; i < table.columns().size(); ++i) {
      const FunctionDef& column = catalog.function(table.columns()[i]);
      const CsvField& field = record[first_column + i];
      if (!field.quoted && field.text.empty()) {
        cells.emplace_back(Null{});
        continue;
      }
      if (column.codomain.kind == Codomain::Kind::set) {
        cells.push_back(parse_ref(field, column));
        continue;
      }
      const ValueDomain& vd = catalog.value_domain(column.codomain.domain_index);
      const std::string& text = field.text;
      switch (vd.kind) {
        case ValueDomain::Kind::text_with_maxlen:
          cells.emplace_back(text);
          break;
        case ValueDomain::Kind::naturals_with_max:
        case ValueDomain::Kind::integer_range: {
          long long value = 0;
          auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
          if (ec != std::errc{} || ptr != text.data() + text.size())
            throw InstanceError("column " + column.name + ": bad integer '" + text + "'");
          cells.emplace_back(value);
          break;
        }
        case ValueDomain::Kind::real_range: {
          try {
            std::size_t pos = 0;
            double value = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            cells.emplace_back(value);
          } catch (const std::exception&) {
            throw InstanceError("column " + column.name + ": bad real '" + text + "'");
          }
          break;
        }
        case ValueDomain::Kind::boolean_value:
          if (text == "true") cells.emplace_back(true);
          else if (text == "false") cells.emplace_back(false);
          else throw InstanceError("column " + column.name + ": bad boolean '" + text + "'");
          break;
      }
    }
    table.append_row(std::move(cells), explicit_x);
    ++imported;
  }
  return imported;
}

void save_data_dir(const InstanceStore& store, const Catalog& catalog,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [set, table] : store.tables()) {
    const std::filesystem::path path = dir / (catalog.set(set).name + ".csv");
    std::ofstream out(path);
    if (!out) throw InstanceError("cannot write " + path.string());
    export_csv(table, catalog, out);
  }
}

std::size_t load_data_dir(InstanceStore& store, const Catalog& catalog,
                          const std::filesystem::path& dir) {
  std::size_t total = 0;
  for (const SetDef& set : catalog.sets()) {
    const std::filesystem::path path = dir / (set.name + ".csv");
    if (!std::filesystem::exists(path)) continue;
    std::ifstream in(path);
    if (!in) throw InstanceError("cannot read " + path.string());
    TableInstance& table = store.ensure_table(set.set_id, catalog);
    total += import_csv(table, catalog, in);
  }
  // References can only be validated once every table is in memory.
  for (const auto& [set, table] : store.tables()) {
    for (FuncId column : table.columns()) {
      const FunctionDef& def = catalog.function(column);
      if (def.codomain.kind != Codomain::Kind::set) continue;
      const TableInstance* target = store.find_table(def.codomain.set);
      const auto idx = table.column_index(column);
      for (const Row& row : table.rows()) {
        const Value& cell = row.cells[*idx];
        if (is_null(cell)) continue;
        const Ref ref = std::get<Ref>(cell);
        if (!target || !target->find_row(ref.x))
          throw InstanceError("dangling reference " + std::to_string(ref.x) + " in " +
                              catalog.set(set).name + "." + def.name);
      }
    }
  }
  return total;
}

}  // namespace nullguard
