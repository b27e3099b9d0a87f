#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include <edtop/enumerate.hpp>
#include <edtop/io.hpp>

using edtop::json;
using edtop::PointSet;
using edtop::Topology;

namespace {

json sierpinski_doc() {
  return json{{"points", 2}, {"opens", json::array({json::array(), {0}, {0, 1}})}};
}

std::string schema_message(const json& doc) {
  try {
    edtop::topology_from_json(doc);
  } catch (const edtop::schema_error& e) {
    return e.what();
  }
  return "(no schema_error thrown)";
}

std::filesystem::path temp_file(const std::string& stem, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / stem;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("loading a topology from explicit opens") {
  const Topology t = edtop::topology_from_json(sierpinski_doc());
  CHECK(t.point_count() == 2);
  CHECK(t.opens() == std::vector<PointSet>{PointSet::empty_set(2),
                                           PointSet::of(2, {0}),
                                           PointSet::full_set(2)});
}

TEST_CASE("loading a topology from a preorder matrix") {
  const json doc{{"points", 2}, {"preorder", {{1, 0}, {1, 1}}}};
  const Topology t = edtop::topology_from_json(doc);
  CHECK(t.opens() == std::vector<PointSet>{PointSet::empty_set(2),
                                           PointSet::of(2, {0}),
                                           PointSet::full_set(2)});
}

TEST_CASE("json round trip is the identity for every small topology") {
  for (int n = 0; n <= 3; ++n) {
    edtop::enumerate_topologies(n, [&](std::size_t, const Topology& t) {
      const Topology back = edtop::topology_from_json(edtop::topology_to_json(t));
      REQUIRE(back.point_count() == t.point_count());
      REQUIRE(back.opens() == t.opens());
      return true;
    });
  }
}

TEST_CASE("schema violations are reported precisely") {
  CHECK_THAT(schema_message(json::array()),
             Catch::Matchers::ContainsSubstring("must be an object"));
  CHECK_THAT(schema_message(json{{"opens", json::array()}}),
             Catch::Matchers::ContainsSubstring("missing integer field 'points'"));
  CHECK_THAT(schema_message(json{{"points", "two"}, {"opens", json::array()}}),
             Catch::Matchers::ContainsSubstring("missing integer field 'points'"));
  CHECK_THAT(schema_message(json{{"points", 17}, {"opens", json::array()}}),
             Catch::Matchers::ContainsSubstring("'points' must be in [0, 16]"));
  CHECK_THAT(schema_message(json{{"points", -1}, {"opens", json::array()}}),
             Catch::Matchers::ContainsSubstring("'points' must be in [0, 16]"));

  json both = sierpinski_doc();
  both["preorder"] = {{1, 0}, {1, 1}};
  CHECK_THAT(schema_message(both),
             Catch::Matchers::ContainsSubstring("exactly one of 'opens' or 'preorder'"));
  CHECK_THAT(schema_message(json{{"points", 2}}),
             Catch::Matchers::ContainsSubstring("exactly one of 'opens' or 'preorder'"));

  CHECK_THAT(schema_message(json{{"points", 2}, {"opens", 7}}),
             Catch::Matchers::ContainsSubstring("array of arrays"));
  CHECK_THAT(schema_message(json{{"points", 2}, {"opens", {7}}}),
             Catch::Matchers::ContainsSubstring("array of arrays"));
  CHECK_THAT(schema_message(json{{"points", 2}, {"opens", {json::array({"a"})}}}),
             Catch::Matchers::ContainsSubstring("entries must be integers"));
  CHECK_THAT(schema_message(json{{"points", 2}, {"opens", {{0, 2}}}}),
             Catch::Matchers::ContainsSubstring("point index 2 outside [0, 2)"));
  CHECK_THAT(schema_message(json{{"points", 2}, {"opens", {{1, 0}}}}),
             Catch::Matchers::ContainsSubstring("sorted ascending with no duplicates"));
  CHECK_THAT(schema_message(json{{"points", 2}, {"opens", {{0, 0}}}}),
             Catch::Matchers::ContainsSubstring("sorted ascending with no duplicates"));

  CHECK_THAT(schema_message(json{{"points", 2}, {"preorder", {{1, 0}}}}),
             Catch::Matchers::ContainsSubstring("n-by-n matrix"));
  CHECK_THAT(schema_message(json{{"points", 2}, {"preorder", {{1, 0, 0}, {0, 1, 0}}}}),
             Catch::Matchers::ContainsSubstring("n-by-n matrix"));
  CHECK_THAT(schema_message(json{{"points", 2}, {"preorder", {{1, 2}, {0, 1}}}}),
             Catch::Matchers::ContainsSubstring("entries must be 0 or 1"));
}

TEST_CASE("well-formed documents can still describe an invalid topology") {
  const json doc{{"points", 2}, {"opens", json::array({json::array(), {0}, {1}})}};
  try {
    edtop::topology_from_json(doc);
    FAIL("expected topology_error");
  } catch (const edtop::topology_error& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("full set X absent"));
    CHECK_THAT(e.what(),
               Catch::Matchers::ContainsSubstring("{0} union {1} = {0,1} is not in the family"));
  }
}

TEST_CASE("load_topology distinguishes io, syntax and schema problems") {
  CHECK_THROWS_AS(edtop::load_topology("/nonexistent/topology.json"),
                  edtop::io_error);

  const auto bad = temp_file("edtop_io_test_bad.json", "{ not json");
  CHECK_THROWS_AS(edtop::load_topology(bad), edtop::schema_error);
  std::filesystem::remove(bad);

  const auto good = temp_file("edtop_io_test_good.json", sierpinski_doc().dump());
  CHECK(edtop::load_topology(good).opens().size() == 3);
  std::filesystem::remove(good);
}

TEST_CASE("witness serialization") {
  const edtop::Witness w{
      {{"A", PointSet::of(2, {1})}, {"B", PointSet::of(2, {0})}},
      PointSet::of(2, {1}),
      PointSet::empty_set(2),
      edtop::RelationOp::subset_of};
  const json doc = edtop::witness_to_json(w);
  CHECK(doc["assignment"][0]["name"] == "A");
  CHECK(doc["assignment"][0]["set"] == json::array({1}));
  CHECK(doc["assignment"][1]["set"] == json::array({0}));
  CHECK(doc["left"] == json::array({1}));
  CHECK(doc["right"] == json::array());
  CHECK(doc["relation"] == "<=");
}

TEST_CASE("claim report documents") {
  const edtop::Claim c = edtop::parse_claim("forall set A : cl(A) = A");
  const edtop::Report r = edtop::model_check(c, 2, edtop::TopologyFilter::all);
  const json doc = edtop::to_document(r, "forall set A : cl(A) = A",
                                      edtop::TopologyFilter::all, 2, false, false);
  CHECK(doc["version"] == edtop::kReportFormatVersion);
  CHECK(doc["command"] == "claim");
  CHECK(doc["parameters"]["claim"] == "forall set A : cl(A) = A");
  CHECK(doc["parameters"]["filter"] == "all");
  CHECK(doc["parameters"]["max_n"] == 2);
  CHECK(doc["parameters"]["failures_total"] == 3);
  CHECK(doc["duration_ms"] == 0);  // byte-stable unless timing is requested
  REQUIRE(doc["per_n_stats"].size() == 3);
  CHECK(doc["per_n_stats"][2]["enumerated"] == 4);
  CHECK(doc["per_n_stats"][2]["failures"] == 3);
  REQUIRE(doc["failures"].size() == 3);
  CHECK(doc["failures"][0]["n"] == 2);
  CHECK(doc["failures"][0]["index"] == 1);
  CHECK(doc["failures"][0]["topology"]["opens"] ==
        json::array({json::array(), {0}, {0, 1}}));
  CHECK(doc["failures"][0]["witness"]["assignment"][0]["name"] == "A");
}

TEST_CASE("verify report documents") {
  edtop::VerifyOptions opts;
  opts.n_max = 2;
  const edtop::EquivalenceReport r = edtop::verify_theorem(opts);
  const json doc = edtop::to_document(r, false, false);
  CHECK(doc["version"] == 1);
  CHECK(doc["command"] == "verify");
  CHECK(doc["parameters"]["max_n"] == 2);
  CHECK(doc["parameters"]["scope"] == "finite models only");
  CHECK(doc["parameters"]["disagreements_total"] == 0);
  CHECK(doc["parameters"]["hint_counterexamples_total"] == 2);
  // worker count must never reach the document, or bytes would depend on it
  CHECK_FALSE(doc["parameters"].contains("jobs"));
  REQUIRE(doc["per_n_stats"].size() == 3);
  CHECK(doc["per_n_stats"][2]["labeled_count"] == 4);
  CHECK(doc["per_n_stats"][2]["ed_count"] == 4);
  CHECK(doc["per_n_stats"][2]["hint_failures"] == 2);
  CHECK_FALSE(doc["per_n_stats"][2].contains("class_count"));
  REQUIRE(doc["failures"].size() == 2);
  CHECK(doc["failures"][0]["category"] == "hint");
  CHECK(doc["failures"][0]["key"] == "[{},{0},{0,1}]");

  opts.up_to_homeo = true;
  const json classes = edtop::to_document(edtop::verify_theorem(opts), false, false);
  CHECK(classes["per_n_stats"][2]["class_count"] == 3);
  CHECK(classes["per_n_stats"][2]["labeled_count"] == 4);
}

TEST_CASE("census documents record both routes and their agreement") {
  const json doc = edtop::census_document(2, false, {1, 1, 4}, {1, 1, 4}, {1, 1, 4}, 0);
  CHECK(doc["command"] == "census");
  CHECK(doc["parameters"]["agree"] == true);
  CHECK(doc["per_n_stats"][2]["ed_count_via_a"] == 4);
  CHECK(doc["per_n_stats"][2]["agree"] == true);

  const json off = edtop::census_document(1, false, {1, 1}, {1, 1}, {1, 0}, 0);
  CHECK(off["parameters"]["agree"] == false);
  CHECK(off["per_n_stats"][0]["agree"] == true);
  CHECK(off["per_n_stats"][1]["agree"] == false);
}
