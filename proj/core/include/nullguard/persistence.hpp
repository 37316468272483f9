#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>

#include "nullguard/catalog.hpp"
#include "nullguard/registry.hpp"

namespace nullguard {

class PersistError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A catalog together with its constraint registry; the registry borrows the
/// catalog, so the pair moves as one unit.
struct Schema {
  Catalog catalog;
  Registry registry;

  Schema() : registry(catalog) {}
  Schema(const Schema&) = delete;
  Schema& operator=(const Schema&) = delete;
};

/// The persistence format is a single JSON document with order-preserving
/// arrays "sets", "value_domains", "functions", "constraints"; dumps are
/// deterministic, so equal states serialize byte-identically.
std::string schema_to_string(const Catalog& catalog, const Registry& registry);
void save_schema(const Catalog& catalog, const Registry& registry, std::ostream& out);
void save_schema_file(const Catalog& catalog, const Registry& registry,
                      const std::filesystem::path& path);

std::unique_ptr<Schema> load_schema(std::istream& in);
std::unique_ptr<Schema> load_schema_string(const std::string& text);
std::unique_ptr<Schema> load_schema_file(const std::filesystem::path& path);

}  // namespace nullguard
