#include "smashhom/report.hpp"

#include <chrono>
#include <sstream>

#include "smashhom/bar.hpp"
#include "smashhom/closedform.hpp"
#include "smashhom/koszul.hpp"

namespace smashhom {

namespace {

long as_dim(const Rational& r) {
  if (!is_integer(r)) throw Error("series coefficient is not an integer: " + r.get_str());
  return r.get_num().get_si();
}

nlohmann::json series_rows_json(const std::vector<PowerSeries>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t n = 0; n < rows.size(); ++n) {
    nlohmann::json row;
    row["n"] = n;
    row["offset"] = rows[n].offset();
    nlohmann::json coeffs = nlohmann::json::array();
    for (long e = rows[n].offset(); e <= rows[n].trunc(); ++e) coeffs.push_back(as_dim(rows[n].at(e)));
    row["coeffs"] = std::move(coeffs);
    arr.push_back(std::move(row));
  }
  return arr;
}

nlohmann::json series_json(const SeriesTable& t) {
  nlohmann::json j;
  j["side"] = series_side_name(t.side);
  j["trunc"] = t.trunc;
  j["rows"] = series_rows_json(t.rows);
  if (t.per_class) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ClassSeries& cs : *t.per_class) {
      nlohmann::json c;
      c["class_index"] = cs.class_index;
      c["rep"] = cs.rep;
      c["rows"] = series_rows_json(cs.rows);
      arr.push_back(std::move(c));
    }
    j["per_class"] = std::move(arr);
  }
  return j;
}

nlohmann::json dims_json(const GradedDims& gd) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, v] : gd.dims) {
    nlohmann::json e;
    e["n"] = key.first;
    e["D"] = key.second;
    e["dim"] = v;
    arr.push_back(std::move(e));
  }
  return arr;
}

nlohmann::json duality_json(const DualityReport& r) {
  nlohmann::json j;
  j["d"] = r.d;
  j["in_SL"] = r.in_SL;
  j["twisted_match"] = r.twisted_match;
  j["untwisted_match"] = r.untwisted_match;
  auto mismatch = [](const std::optional<DualityMismatch>& m) -> nlohmann::json {
    if (!m) return nullptr;
    nlohmann::json e;
    e["n"] = m->n;
    e["degree"] = m->degree;
    e["lhs"] = m->lhs.get_str();
    e["rhs"] = m->rhs.get_str();
    return e;
  };
  j["first_twisted_mismatch"] = mismatch(r.first_twisted_mismatch);
  j["first_untwisted_mismatch"] = mismatch(r.first_untwisted_mismatch);
  j["twisted_all"] = r.twisted_all();
  j["untwisted_all"] = r.untwisted_all();
  return j;
}

// Compare a series table against oracle dims on the stated window; report up
// to 16 mismatches.
nlohmann::json compare_series_oracle(const SeriesTable& t, const GradedDims& oracle, long d_low,
                                     long d_high, bool& ok) {
  nlohmann::json mism = nlohmann::json::array();
  for (size_t n = 0; n < t.rows.size(); ++n) {
    for (long e = d_low; e <= d_high; ++e) {
      const long series_val = t.rows[n].has(e) ? as_dim(t.rows[n].at(e)) : 0;
      const long oracle_val = oracle.at(static_cast<long>(n), e);
      if (series_val != oracle_val) {
        ok = false;
        if (mism.size() < 16) {
          nlohmann::json m;
          m["n"] = n;
          m["D"] = e;
          m["series"] = series_val;
          m["oracle"] = oracle_val;
          mism.push_back(std::move(m));
        }
      }
    }
  }
  return mism;
}

struct LoadedGroup {
  GroupFile file;
  MatrixGroup group;
  bool doubled = false;
};

LoadedGroup load(const RunOptions& opts) {
  if (opts.group.empty()) throw SchemaError("missing --group");
  GroupFile gf = resolve_group_spec(opts.group);
  bool doubled = false;
  if (opts.use_double) {
    gf = double_group_file(gf, gf.name);
    doubled = true;
  }
  MatrixGroup g = close_group_file(gf);
  return LoadedGroup{std::move(gf), std::move(g), doubled};
}

nlohmann::json group_json(const LoadedGroup& lg) {
  nlohmann::json j;
  j["name"] = lg.file.name;
  j["doubled"] = lg.doubled;
  j["dim"] = lg.group.dim();
  j["cyclotomic_order"] = lg.group.field_order();
  j["order"] = lg.group.size();
  j["classes"] = lg.group.conjugacy_classes().size();
  j["in_SL"] = determinant_character(lg.group).in_SL;
  return j;
}

constexpr const char* kGradingTag = "V in degree 1; wedge generators +1; dual generators -1";

}  // namespace

RunResult run(const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult out;
  out.report["schema_version"] = 1;
  out.report["command"] = opts.command;
  out.report["grading"] = kGradingTag;

  if (opts.command == "catalog") {
    nlohmann::json arr = nlohmann::json::array();
    for (const CatalogEntry& e : catalog()) {
      MatrixGroup g = close_group_file(e.file);
      if (g.size() != e.expected_order || g.conjugacy_classes().size() != e.expected_classes)
        throw Error("catalog self-test failed for " + e.file.name);
      nlohmann::json c;
      c["name"] = e.file.name;
      c["dim"] = e.file.dim;
      c["cyclotomic_order"] = e.file.cyclotomic_order;
      c["order"] = g.size();
      c["classes"] = g.conjugacy_classes().size();
      c["in_SL"] = determinant_character(g).in_SL;
      arr.push_back(std::move(c));
    }
    out.report["catalog"] = std::move(arr);
    out.exit_code = 0;
  } else if (opts.command == "homology" || opts.command == "cohomology" ||
             opts.command == "twisted-homology") {
    LoadedGroup lg = load(opts);
    const long trunc = opts.trunc >= 0 ? opts.trunc : 8;
    SeriesOptions sopts{opts.per_class, opts.jobs, lg.file.name};
    SeriesTable t = opts.command == "homology" ? homology_series(lg.group, trunc, sopts)
                    : opts.command == "cohomology"
                        ? cohomology_series_direct(lg.group, trunc, sopts)
                        : twisted_homology_series(lg.group, trunc, sopts);
    out.report["group"] = group_json(lg);
    out.report["trunc"] = trunc;
    out.report["series"] = series_json(t);
    out.exit_code = 0;
  } else if (opts.command == "duality") {
    LoadedGroup lg = load(opts);
    const long trunc = opts.trunc >= 0 ? opts.trunc : std::max<long>(8, lg.group.dim());
    DualityReport r = duality_check(lg.group, trunc, SeriesOptions{false, opts.jobs, lg.file.name});
    out.report["group"] = group_json(lg);
    out.report["trunc"] = trunc;
    out.report["duality"] = duality_json(r);
    out.exit_code = r.twisted_all() ? 0 : 1;
  } else if (opts.command == "oracle-check") {
    LoadedGroup lg = load(opts);
    const long trunc = opts.trunc >= 0 ? opts.trunc : 4;
    const long d = lg.group.dim();
    SeriesOptions sopts{false, opts.jobs, lg.file.name};
    bool hom_ok = true, coh_ok = true;
    SeriesTable hom = homology_series(lg.group, trunc, sopts);
    GradedDims hom_oracle = class_decomposition_dims(lg.group, ComplexSide::Homology, trunc, opts.jobs);
    nlohmann::json hom_mism = compare_series_oracle(hom, hom_oracle, 0, trunc, hom_ok);
    SeriesTable coh = cohomology_series_direct(lg.group, trunc, sopts);
    GradedDims coh_oracle =
        class_decomposition_dims(lg.group, ComplexSide::Cohomology, trunc, opts.jobs);
    nlohmann::json coh_mism = compare_series_oracle(coh, coh_oracle, -d, trunc, coh_ok);
    out.report["group"] = group_json(lg);
    out.report["trunc"] = trunc;
    out.report["oracle_check"] = {
        {"homology_match", hom_ok},
        {"cohomology_match", coh_ok},
        {"homology_mismatches", hom_mism},
        {"cohomology_mismatches", coh_mism},
        {"homology_dims", dims_json(hom_oracle)},
        {"cohomology_dims", dims_json(coh_oracle)},
    };
    out.exit_code = hom_ok && coh_ok ? 0 : 1;
  } else if (opts.command == "bar-check") {
    LoadedGroup lg = load(opts);
    GradedDims bar = bar_dims(lg.group, opts.bar_nmax, opts.bar_dmax);
    GradedDims cls =
        class_decomposition_dims(lg.group, ComplexSide::Homology, opts.bar_dmax, opts.jobs);
    bool ok = true;
    nlohmann::json mism = nlohmann::json::array();
    for (long n = 0; n <= opts.bar_nmax; ++n)
      for (long e = 0; e <= opts.bar_dmax; ++e)
        if (bar.at(n, e) != cls.at(n, e)) {
          ok = false;
          if (mism.size() < 16)
            mism.push_back({{"n", n}, {"D", e}, {"bar", bar.at(n, e)}, {"classes", cls.at(n, e)}});
        }
    out.report["group"] = group_json(lg);
    out.report["bar_check"] = {{"n_max", opts.bar_nmax},
                               {"d_max", opts.bar_dmax},
                               {"match", ok},
                               {"mismatches", mism},
                               {"bar_dims", dims_json(bar)}};
    out.exit_code = ok ? 0 : 1;
  } else {
    throw SchemaError("unknown command: " + opts.command);
  }

  const auto t1 = std::chrono::steady_clock::now();
  out.report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return out;
}

namespace {

void render_series(std::ostringstream& os, const nlohmann::json& rows, const std::string& prefix) {
  for (const auto& row : rows) {
    os << "  " << prefix << row["n"].get<long>() << " [offset " << row["offset"].get<long>() << "]:";
    for (const auto& c : row["coeffs"]) os << " " << c.get<long>();
    os << "\n";
  }
}

}  // namespace

std::string render_table(const nlohmann::json& report) {
  std::ostringstream os;
  const std::string cmd = report["command"].get<std::string>();
  if (report.contains("group")) {
    const auto& g = report["group"];
    os << "group " << g["name"].get<std::string>() << (g["doubled"].get<bool>() ? " (doubled)" : "")
       << ": |G|=" << g["order"].get<size_t>() << ", classes=" << g["classes"].get<size_t>()
       << ", dim=" << g["dim"].get<unsigned>() << ", m=" << g["cyclotomic_order"].get<unsigned>()
       << ", in_SL=" << (g["in_SL"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (cmd == "catalog") {
    os << "built-in groups:\n";
    for (const auto& c : report["catalog"])
      os << "  " << c["name"].get<std::string>() << ": |G|=" << c["order"].get<size_t>()
         << ", classes=" << c["classes"].get<size_t>() << ", dim=" << c["dim"].get<unsigned>()
         << ", m=" << c["cyclotomic_order"].get<unsigned>()
         << ", in_SL=" << (c["in_SL"].get<bool>() ? "yes" : "no") << "\n";
  } else if (report.contains("series")) {
    const auto& s = report["series"];
    os << s["side"].get<std::string>() << " series to internal degree " << s["trunc"].get<long>()
       << "\n";
    render_series(os, s["rows"], "n=");
    if (s.contains("per_class"))
      for (const auto& c : s["per_class"]) {
        os << " class " << c["class_index"].get<size_t>() << " (rep " << c["rep"].get<size_t>()
           << "):\n";
        render_series(os, c["rows"], "n=");
      }
  } else if (cmd == "duality") {
    const auto& d = report["duality"];
    os << "twisted duality:   " << (d["twisted_all"].get<bool>() ? "match" : "MISMATCH") << "\n";
    os << "untwisted duality: " << (d["untwisted_all"].get<bool>() ? "match" : "MISMATCH") << "\n";
    auto row = [&](const char* name, const nlohmann::json& v) {
      os << "  " << name << ":";
      for (const auto& b : v) os << " " << (b.get<bool>() ? "ok" : "x");
      os << "\n";
    };
    row("twisted by n  ", d["twisted_match"]);
    row("untwisted by n", d["untwisted_match"]);
    if (!d["first_untwisted_mismatch"].is_null()) {
      const auto& m = d["first_untwisted_mismatch"];
      os << "  first untwisted mismatch: n=" << m["n"].get<long>() << " D=" << m["degree"].get<long>()
         << " cohomology=" << m["lhs"].get<std::string>() << " shifted homology="
         << m["rhs"].get<std::string>() << "\n";
    }
  } else if (cmd == "oracle-check") {
    const auto& oc = report["oracle_check"];
    os << "homology   closed-form vs Koszul oracle: "
       << (oc["homology_match"].get<bool>() ? "PASS" : "FAIL") << "\n";
    os << "cohomology closed-form vs Koszul oracle: "
       << (oc["cohomology_match"].get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const char* key : {"homology_mismatches", "cohomology_mismatches"})
      for (const auto& m : oc[key])
        os << "  mismatch " << key << " n=" << m["n"].get<long>() << " D=" << m["D"].get<long>()
           << " series=" << m["series"].get<long>() << " oracle=" << m["oracle"].get<long>() << "\n";
  } else if (cmd == "bar-check") {
    const auto& bc = report["bar_check"];
    os << "bar complex vs class decomposition (n<=" << bc["n_max"].get<long>() << ", D<="
       << bc["d_max"].get<long>() << "): " << (bc["match"].get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& m : bc["mismatches"])
      os << "  mismatch n=" << m["n"].get<long>() << " D=" << m["D"].get<long>() << " bar="
         << m["bar"].get<long>() << " classes=" << m["classes"].get<long>() << "\n";
  }
  return os.str();
}

}  // namespace smashhom
