#include "smashhom/group_file.hpp"

#include <cstdlib>
#include <fstream>

namespace smashhom {

namespace {

Matrix parse_generator(const GroupFile& gf, size_t gi) {
  const auto& rows = gf.generators[gi];
  if (rows.size() != gf.dim)
    throw SchemaError("generator " + std::to_string(gi) + " has " + std::to_string(rows.size()) +
                      " rows, expected " + std::to_string(gf.dim));
  Matrix m(gf.dim, gf.dim, gf.cyclotomic_order);
  for (size_t i = 0; i < gf.dim; ++i) {
    if (rows[i].size() != gf.dim)
      throw SchemaError("generator " + std::to_string(gi) + " row " + std::to_string(i) +
                        " has wrong length");
    for (size_t j = 0; j < gf.dim; ++j) {
      try {
        m.set(i, j, Cyclotomic::parse(gf.cyclotomic_order, rows[i][j]));
      } catch (const ParseError& e) {
        throw SchemaError("generator " + std::to_string(gi) + " entry (" + std::to_string(i) + "," +
                          std::to_string(j) + "): " + e.what());
      }
    }
  }
  return m;
}

}  // namespace

GroupFile group_file_from_json(const nlohmann::json& j) {
  GroupFile gf;
  try {
    if (!j.is_object()) throw SchemaError("group file must be a JSON object");
    gf.schema_version = j.value("schema_version", 1);
    if (gf.schema_version != 1)
      throw SchemaError("unsupported schema_version " + std::to_string(gf.schema_version));
    gf.name = j.at("name").get<std::string>();
    gf.cyclotomic_order = j.at("cyclotomic_order").get<unsigned>();
    gf.dim = j.at("dim").get<unsigned>();
    if (gf.cyclotomic_order == 0) throw SchemaError("cyclotomic_order must be positive");
    if (gf.dim == 0) throw SchemaError("dim must be positive");
    gf.generators = j.at("generators").get<std::vector<std::vector<std::vector<std::string>>>>();
    if (j.contains("max_order")) gf.max_order = j.at("max_order").get<size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed group file: ") + e.what());
  }
  return gf;
}

nlohmann::json group_file_to_json(const GroupFile& gf) {
  nlohmann::json j;
  j["schema_version"] = gf.schema_version;
  j["name"] = gf.name;
  j["cyclotomic_order"] = gf.cyclotomic_order;
  j["dim"] = gf.dim;
  j["generators"] = gf.generators;
  if (gf.max_order) j["max_order"] = *gf.max_order;
  return j;
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return group_file_from_json(j);
}

MatrixGroup close_group_file(const GroupFile& gf) {
  size_t cap = gf.max_order.value_or(10000);
  if (const char* env = std::getenv("HOCH_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw SchemaError("HOCH_MAX_GROUP_ORDER must be a positive integer");
    cap = v;
  }
  std::vector<Matrix> gens;
  gens.reserve(gf.generators.size());
  for (size_t gi = 0; gi < gf.generators.size(); ++gi) gens.push_back(parse_generator(gf, gi));
  if (gens.empty()) gens.push_back(Matrix::identity(gf.dim, gf.cyclotomic_order));
  try {
    return MatrixGroup::close(gens, cap);
  } catch (const NonInvertibleGeneratorError& e) {
    throw SchemaError(std::string("group file ") + gf.name + ": " + e.what());
  }
}

GroupFile double_group_file(const GroupFile& gf, const std::string& new_name) {
  GroupFile out;
  out.name = new_name;
  out.cyclotomic_order = gf.cyclotomic_order;
  out.dim = 2 * gf.dim;
  out.max_order = gf.max_order;
  for (size_t gi = 0; gi < gf.generators.size(); ++gi) {
    Matrix g = parse_generator(gf, gi);
    Matrix big = Matrix::block_diag(g, g.inverse().transpose());
    std::vector<std::vector<std::string>> rows(out.dim, std::vector<std::string>(out.dim));
    for (size_t i = 0; i < out.dim; ++i)
      for (size_t j = 0; j < out.dim; ++j) rows[i][j] = big.at(i, j).str();
    out.generators.push_back(std::move(rows));
  }
  return out;
}

namespace {

GroupFile make_entry(std::string name, unsigned m, unsigned dim,
                     std::vector<std::vector<std::vector<std::string>>> gens) {
  GroupFile gf;
  gf.name = std::move(name);
  gf.cyclotomic_order = m;
  gf.dim = dim;
  gf.generators = std::move(gens);
  return gf;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](GroupFile gf, size_t order, size_t classes, bool in_sl) {
    out.push_back(CatalogEntry{std::move(gf), order, classes, in_sl});
  };

  add(make_entry("trivial-1", 1, 1, {}), 1, 1, true);
  add(make_entry("trivial-2", 1, 2, {}), 1, 1, true);
  // sign action on k[x]
  add(make_entry("c2-line", 1, 1, {{{"-1"}}}), 2, 2, false);
  // -I in SL(2)
  add(make_entry("c2-scalar", 1, 2, {{{"-1", "0"}, {"0", "-1"}}}), 2, 2, true);
  // single weights on a line
  add(make_entry("c3-weights", 3, 1, {{{"z"}}}), 3, 3, false);
  add(make_entry("c4-weights", 4, 1, {{{"z"}}}), 4, 4, false);
  // cyclic subgroups of SL(2)
  add(make_entry("c3-diag-sl2", 3, 2, {{{"z", "0"}, {"0", "-z - 1"}}}), 3, 3, true);
  add(make_entry("c4-diag", 4, 2, {{{"z", "0"}, {"0", "-z"}}}), 4, 4, true);
  // diagonal +-1 with determinant -1 elements
  add(make_entry("klein-four", 1, 2, {{{"-1", "0"}, {"0", "1"}}, {{"1", "0"}, {"0", "-1"}}}), 4, 4,
      false);
  // quaternion group inside SL(2)
  add(make_entry("q8", 4, 2, {{{"z", "0"}, {"0", "-z"}}, {{"0", "1"}, {"-1", "0"}}}), 8, 5, true);
  // permutation matrices
  add(make_entry("s3-perm", 1, 3,
                 {{{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}},
                  {{"0", "0", "1"}, {"1", "0", "0"}, {"0", "1", "0"}}}),
      6, 3, false);
  // S3 and A3 on the sum-zero plane, basis e1-e2, e2-e3
  add(make_entry("s3-sumzero", 1, 2, {{{"-1", "1"}, {"0", "1"}}, {{"0", "-1"}, {"1", "-1"}}}), 6, 3,
      false);
  add(make_entry("a3-sumzero", 1, 2, {{{"0", "-1"}, {"1", "-1"}}}), 3, 3, true);
  // symplectic doublings
  auto find = [&](const std::string& name) -> const GroupFile& {
    for (const CatalogEntry& e : out)
      if (e.file.name == name) return e.file;
    throw Error("catalog bootstrap: missing " + name);
  };
  add(double_group_file(find("q8"), "q8-doubled"), 8, 5, true);
  add(double_group_file(find("klein-four"), "klein-doubled"), 4, 4, true);
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.file.name == name) return e;
  throw SchemaError("unknown catalog entry: " + name);
}

GroupFile resolve_group_spec(const std::string& spec) {
  constexpr std::string_view prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) return catalog_entry(spec.substr(prefix.size())).file;
  return load_group_file(spec);
}

}  // namespace smashhom
