#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "edtop/claim.hpp"
#include "edtop/harness.hpp"
#include "edtop/topology.hpp"

namespace edtop {

using json = nlohmann::ordered_json;

// Bumped when the report document layout changes, so stored fixtures can
// tell which layout they were written against.
inline constexpr int kReportFormatVersion = 1;

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

class schema_error : public std::runtime_error {
 public:
  explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Topology files
// ---------------------------------------------------------------------------
//
// {"points": n, "opens": [[0],[0,1],...]}     inner lists sorted, no dups
// {"points": n, "preorder": [[1,0],[1,1]]}    n-by-n 0/1 matrix
//
// Exactly one of "opens" / "preorder" must be present.

inline Topology topology_from_json(const json& doc) {
  if (!doc.is_object()) throw schema_error("topology document must be an object");
  if (!doc.contains("points") || !doc["points"].is_number_integer())
    throw schema_error("missing integer field 'points'");
  const int n = doc["points"].get<int>();
  if (n < 0 || n > kMaxPoints)
    throw schema_error("'points' must be in [0, " + std::to_string(kMaxPoints) + "]");

  const bool has_opens = doc.contains("opens");
  const bool has_preorder = doc.contains("preorder");
  if (has_opens == has_preorder)
    throw schema_error("exactly one of 'opens' or 'preorder' must be present");

  if (has_opens) {
    const json& arr = doc["opens"];
    if (!arr.is_array()) throw schema_error("'opens' must be an array of arrays");
    std::vector<PointSet> family;
    family.reserve(arr.size());
    for (const json& inner : arr) {
      if (!inner.is_array()) throw schema_error("'opens' must be an array of arrays");
      PointSet::mask_type mask = 0;
      int prev = -1;
      for (const json& e : inner) {
        if (!e.is_number_integer())
          throw schema_error("open-set entries must be integers");
        const int p = e.get<int>();
        if (p < 0 || p >= n)
          throw schema_error("point index " + std::to_string(p) +
                             " outside [0, " + std::to_string(n) + ")");
        if (p <= prev)
          throw schema_error("open-set entries must be sorted ascending with no duplicates");
        prev = p;
        mask |= PointSet::mask_type{1} << p;
      }
      family.push_back(PointSet::from_mask(n, mask));
    }
    return Topology::build_from_opens(n, family);
  }

  const json& rows = doc["preorder"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw schema_error("'preorder' must be an n-by-n matrix");
  std::vector<std::vector<int>> matrix;
  matrix.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw schema_error("'preorder' must be an n-by-n matrix");
    std::vector<int> r;
    r.reserve(row.size());
    for (const json& e : row) {
      if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
        throw schema_error("'preorder' entries must be 0 or 1");
      r.push_back(e.get<int>());
    }
    matrix.push_back(std::move(r));
  }
  return Topology::build_from_preorder(n, matrix);
}

inline Topology load_topology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw schema_error(path.string() + ": " + e.what());
  }
  return topology_from_json(doc);
}

inline json topology_to_json(const Topology& t) {
  json opens = json::array();
  for (const PointSet& s : t.opens()) {
    json inner = json::array();
    for (int p : s.points()) inner.push_back(p);
    opens.push_back(std::move(inner));
  }
  return json{{"points", t.point_count()}, {"opens", std::move(opens)}};
}

// ---------------------------------------------------------------------------
// Report documents
// ---------------------------------------------------------------------------
//
// One structured document per run:
//   {version, command, parameters, per_n_stats, failures, duration_ms}
//
// duration_ms is 0 unless timings are explicitly requested, so identical
// runs produce identical bytes.

inline json set_to_json(const PointSet& s) {
  json arr = json::array();
  for (int p : s.points()) arr.push_back(p);
  return arr;
}

inline json opens_to_json(const std::vector<PointSet>& opens) {
  json arr = json::array();
  for (const PointSet& s : opens) arr.push_back(set_to_json(s));
  return arr;
}

inline json witness_to_json(const Witness& w) {
  json assignment = json::array();
  for (const WitnessBinding& b : w.assignment)
    assignment.push_back(json{{"name", b.name}, {"set", set_to_json(b.value)}});
  return json{{"assignment", std::move(assignment)},
              {"left", set_to_json(w.lhs)},
              {"right", set_to_json(w.rhs)},
              {"relation", to_string(w.op)}};
}

inline json report_document(const std::string& command, json parameters,
                            json per_n_stats, json failures,
                            std::uint64_t duration_ms) {
  return json{{"version", kReportFormatVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"per_n_stats", std::move(per_n_stats)},
              {"failures", std::move(failures)},
              {"duration_ms", duration_ms}};
}

inline json to_document(const Report& r, const std::string& claim_text,
                        TopologyFilter filter, int n_max, bool extended,
                        bool include_timing) {
  json per_n = json::array();
  for (const SweepStats& s : r.per_n)
    per_n.push_back(json{{"n", s.n},
                         {"enumerated", s.enumerated},
                         {"checked", s.checked},
                         {"ed_count", s.ed_count},
                         {"failures", s.failures}});
  json failures = json::array();
  for (const ClaimFailure& f : r.failures)
    failures.push_back(json{{"n", f.n},
                            {"index", f.index},
                            {"topology", json{{"points", f.n}, {"opens", opens_to_json(f.opens)}}},
                            {"witness", witness_to_json(f.witness)}});
  json params{{"claim", claim_text},
              {"max_n", n_max},
              {"filter", to_string(filter)},
              {"extended", extended},
              {"max_failures", r.failure_cap},
              {"failures_total", r.failures_total}};
  return report_document("claim", std::move(params), std::move(per_n),
                         std::move(failures),
                         include_timing ? static_cast<std::uint64_t>(r.duration.count()) : 0);
}

// Worker count is deliberately absent from the document: results are merged
// in deterministic order, so the bytes must not depend on --jobs.
inline json to_document(const EquivalenceReport& r, bool extended,
                        bool include_timing) {
  json per_n = json::array();
  for (const TheoremPerN& s : r.per_n) {
    json row{{"n", s.n},
             {"labeled_count", s.labeled_count},
             {"checked", s.checked},
             {"ed_count", s.ed_count},
             {"disagreements", s.disagreements},
             {"lemma1_failures", s.lemma1_failures},
             {"corollary2_failures", s.corollary2_failures},
             {"hint_failures", s.hint_failures},
             {"hint_open_failures", s.hint_open_failures}};
    if (s.class_count) row["class_count"] = *s.class_count;
    per_n.push_back(std::move(row));
  }
  json failures = json::array();
  for (const Disagreement& d : r.disagreements) {
    json verdicts = json::object();
    for (std::size_t i = 0; i < kTheoremConditions.size(); ++i)
      verdicts[to_string(kTheoremConditions[i])] = d.verdicts[i];
    failures.push_back(json{{"category", "disagreement"},
                            {"n", d.n},
                            {"index", d.index},
                            {"key", d.key},
                            {"topology", json{{"points", d.n}, {"opens", opens_to_json(d.opens)}}},
                            {"verdicts", std::move(verdicts)}});
  }
  auto push_check_failures = [&](const std::vector<CheckFailure>& list) {
    for (const CheckFailure& f : list)
      failures.push_back(json{{"category", to_string(f.which)},
                              {"n", f.n},
                              {"index", f.index},
                              {"key", f.key},
                              {"topology", json{{"points", f.n}, {"opens", opens_to_json(f.opens)}}},
                              {"witness", witness_to_json(f.witness)}});
  };
  push_check_failures(r.lemma_failures);
  push_check_failures(r.hint_counterexamples);
  json params{{"max_n", r.n_max},
              {"up_to_homeo", r.up_to_homeo},
              {"extended", extended},
              {"max_failures", r.failure_cap},
              {"scope", "finite models only"},
              {"disagreements_total", r.disagreements_total},
              {"lemma_failures_total", r.lemma_failures_total},
              {"hint_counterexamples_total", r.hint_counterexamples_total}};
  return report_document("verify", std::move(params), std::move(per_n),
                         std::move(failures),
                         include_timing ? static_cast<std::uint64_t>(r.duration.count()) : 0);
}

inline json census_document(int n_max, bool extended,
                            const std::vector<std::uint64_t>& labeled,
                            const std::vector<std::uint64_t>& via_a,
                            const std::vector<std::uint64_t>& via_g,
                            std::uint64_t duration_ms) {
  json per_n = json::array();
  bool all_agree = true;
  for (int n = 0; n <= n_max; ++n) {
    const bool agree = via_a[n] == via_g[n];
    all_agree &= agree;
    per_n.push_back(json{{"n", n},
                         {"labeled_count", labeled[n]},
                         {"ed_count_via_a", via_a[n]},
                         {"ed_count_via_g", via_g[n]},
                         {"agree", agree}});
  }
  json params{{"max_n", n_max}, {"extended", extended}, {"agree", all_agree}};
  return report_document("census", std::move(params), std::move(per_n),
                         json::array(), duration_ms);
}

}  // namespace edtop
