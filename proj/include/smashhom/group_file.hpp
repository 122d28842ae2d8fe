#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smashhom/group.hpp"

namespace smashhom {

/// On-disk description of a matrix group: JSON with cyclotomic literal
/// entries over "z", a primitive cyclotomic_order-th root of unity.
struct GroupFile {
  int schema_version = 1;
  std::string name;
  unsigned cyclotomic_order = 1;
  unsigned dim = 1;
  std::vector<std::vector<std::vector<std::string>>> generators;  // matrix -> row -> entry
  std::optional<size_t> max_order;
};

GroupFile group_file_from_json(const nlohmann::json& j);
nlohmann::json group_file_to_json(const GroupFile& gf);
GroupFile load_group_file(const std::string& path);

/// Parses the generator entries and closes the group. The closure cap is, in
/// order of precedence: the HOCH_MAX_GROUP_ORDER environment variable, the
/// file's max_order, then 10000.
MatrixGroup close_group_file(const GroupFile& gf);

/// Built-in groups with their expected invariants (self-test metadata).
struct CatalogEntry {
  GroupFile file;
  size_t expected_order = 0;
  size_t expected_classes = 0;
  bool expected_in_sl = false;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

/// Resolves "catalog:NAME" or a file path.
GroupFile resolve_group_spec(const std::string& spec);

/// A group file acting on V + V* (generators block-doubled); used by the
/// doubled catalog entries and the --double flag.
GroupFile double_group_file(const GroupFile& gf, const std::string& new_name);

}  // namespace smashhom
