#include "latwalk/json_io.hpp"

#include "latwalk/error.hpp"
#include "latwalk/lattice.hpp"
#include "latwalk/walks.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace latwalk;

namespace {

WeightedGraph round_trip(const WeightedGraph& g) { return graph_from_json(graph_to_json(g)); }

bool same_graph(const WeightedGraph& x, const WeightedGraph& y) {
  if (x.vertex_count() != y.vertex_count() || x.edges().size() != y.edges().size()) return false;
  for (int v = 0; v < x.vertex_count(); ++v)
    if (x.label(v) != y.label(v) || x.clipped(v) != y.clipped(v)) return false;
  for (size_t i = 0; i < x.edges().size(); ++i) {
    const Edge& e = x.edges()[i];
    const Edge& f = y.edges()[i];
    if (e.tail != f.tail || e.head != f.head || e.directed != f.directed ||
        !(e.weight == f.weight))
      return false;
  }
  return x.declared_bipartition() == y.declared_bipartition();
}

} // namespace

TEST_CASE("graph round-trips preserve everything") {
  testing::Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = testing::random_graph(rng, 5, trial % 2 == 0);
    CHECK(same_graph(g, round_trip(g)));
  }
}

TEST_CASE("bipartitions survive the round trip") {
  WeightedGraph g;
  g.add_vertex({0});
  g.add_vertex({1});
  g.add_edge(0, 1, false, Ring(1));
  g.declare_bipartition({0, 1});
  WeightedGraph back = round_trip(g);
  REQUIRE(back.declared_bipartition().has_value());
  CHECK(*back.declared_bipartition() == std::vector<int>{0, 1});
}

TEST_CASE("clipped rims survive the round trip") {
  WeightedGraph g = materialize_lattice({LatticeKind::line, {0}, 4, Ring(1), 0});
  WeightedGraph back = round_trip(g);
  CHECK(same_graph(g, back));
  CHECK(back.clipped(back.index_of({4})));
  CHECK(back.clipped(back.index_of({-4})));
  CHECK_FALSE(back.clipped(back.index_of({0})));
  // A reloaded window must still refuse orders its margin cannot cover.
  CHECK_THROWS_AS((void)count_walks(back, Label{0}, Label{0}, 5), error);
  CHECK(count_walks(back, Label{0}, Label{0}, 4) ==
        count_walks(g, Label{0}, Label{0}, 4));
}

TEST_CASE("graph serialization is byte stable") {
  testing::Rng rng(52);
  WeightedGraph g = testing::random_graph(rng, 5, true);
  std::string once = graph_to_json(g).dump();
  std::string twice = graph_to_json(round_trip(g)).dump();
  CHECK(once == twice);
}

TEST_CASE("integer weights serialize as JSON numbers") {
  WeightedGraph g;
  g.add_vertex({0});
  g.add_edge(0, 0, true, Ring(7));
  Json j = graph_to_json(g);
  CHECK(j["edges"][0]["weight"].is_number_integer());
  CHECK(j["edges"][0]["weight"].get<long long>() == 7);
}

TEST_CASE("big integer weights fall back to decimal strings") {
  Ring big(BigInt("1267650600228229401496703205376")); // 2^100
  Json j = ring_to_json(big);
  REQUIRE(j.is_string());
  CHECK(j.get<std::string>() == "1267650600228229401496703205376");
  CHECK(ring_from_json(j, "weight") == big);
}

TEST_CASE("polynomial weights serialize as monomial lists") {
  Ring w = Ring(2) * Ring::var_a() - Ring::var_b() * Ring::var_b() * Ring::var_b();
  Json j = ring_to_json(w);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(ring_from_json(j, "weight") == w);
}

TEST_CASE("weights parse from every accepted shape") {
  CHECK(ring_from_json(Json(5), "w") == Ring(5));
  CHECK(ring_from_json(Json("-12"), "w") == Ring(-12));
  Json mono = {{"a", 1}, {"b", 2}, {"c", 3}};
  CHECK(ring_from_json(mono, "w") == Ring::monomial(1, 2, 3));
  Json list = Json::array({Json{{"a", 1}}, Json{{"c", -4}}});
  CHECK(ring_from_json(list, "w") == Ring::var_a() - Ring(4));
}

TEST_CASE("malformed weights point at the field") {
  Json mono = {{"a", 1}, {"oops", 2}};
  try {
    ring_from_json(mono, "edges[3].weight");
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("edges[3].weight") != std::string::npos);
  }
  Json negative = {{"a", -1}};
  CHECK_THROWS_AS(ring_from_json(negative, "w"), error);
  CHECK_THROWS_AS(ring_from_json(Json("12x"), "w"), error);
  CHECK_THROWS_AS(ring_from_json(Json(1.5), "w"), error);
}

TEST_CASE("graph parsing diagnostics name the offending field") {
  Json g;
  g["vertices"] = Json::array({Json::array({0}), Json::array({1})});
  g["edges"] = Json::array({Json{{"tail", 0}, {"head", 5}, {"directed", true}}});
  try {
    graph_from_json(g);
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("edges[0]") != std::string::npos);
  }

  Json missing;
  missing["edges"] = Json::array();
  CHECK_THROWS_AS(graph_from_json(missing), error); // no vertices array

  Json unknown_key = g;
  unknown_key["edges"][0]["head"] = 1;
  unknown_key["edges"][0]["color"] = "red";
  CHECK_THROWS_AS(graph_from_json(unknown_key), error);
}

TEST_CASE("missing edge weight defaults to one") {
  Json g;
  g["vertices"] = Json::array({Json::array({0}), Json::array({1})});
  g["edges"] = Json::array({Json{{"tail", 0}, {"head", 1}, {"directed", false}}});
  WeightedGraph parsed = graph_from_json(g);
  CHECK(parsed.edges()[0].weight == Ring(1));
}

TEST_CASE("text parsing reports the source and position") {
  try {
    parse_json_text("{\"vertices\": [,]}", "input.json");
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    std::string what = e.what();
    CHECK(what.find("input.json") != std::string::npos);
  }
}

TEST_CASE("missing files are reported with the path") {
  try {
    load_graph_file("/nonexistent/graph.json");
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/graph.json") != std::string::npos);
  }
}

TEST_CASE("graph files load end to end") {
  std::string path = "/tmp/latwalk_test_graph.json";
  {
    std::ofstream out(path);
    out << R"({"vertices": [[0], [1]],
               "edges": [{"tail": 0, "head": 1, "directed": false, "weight": {"a": 1}}]})";
  }
  WeightedGraph g = load_graph_file(path);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges()[0].weight == Ring::var_a());
  std::remove(path.c_str());
}

TEST_CASE("cayley specs round-trip") {
  CayleySpec spec;
  spec.group.free_rank = 1;
  spec.group.torsion = {4};
  spec.generators = {{Label{1, 0}, Ring(1)}, {Label{0, 1}, Ring::var_b()}};
  CayleySpec back = cayley_spec_from_json(cayley_spec_to_json(spec));
  CHECK(back.group.free_rank == 1);
  CHECK(back.group.torsion == std::vector<long long>{4});
  REQUIRE(back.generators.size() == 2);
  CHECK(back.generators[0].element == Label{1, 0});
  CHECK(back.generators[1].weight == Ring::var_b());
}

TEST_CASE("cayley spec validation") {
  Json bad;
  bad["free_rank"] = 1;
  bad["torsion"] = Json::array({3});
  bad["generators"] = Json::array({Json{{"elem", Json::array({1})}, {"weight", 1}}});
  CHECK_THROWS_AS(cayley_spec_from_json(bad), error); // elem shorter than dimension

  Json negative_rank;
  negative_rank["free_rank"] = -1;
  negative_rank["generators"] = Json::array();
  CHECK_THROWS_AS(cayley_spec_from_json(negative_rank), error);

  Json bad_torsion;
  bad_torsion["free_rank"] = 0;
  bad_torsion["torsion"] = Json::array({0});
  bad_torsion["generators"] = Json::array();
  CHECK_THROWS_AS(cayley_spec_from_json(bad_torsion), error);
}

TEST_CASE("generator weights default to one") {
  Json j;
  j["free_rank"] = 1;
  j["generators"] = Json::array({Json{{"elem", Json::array({1})}}});
  CayleySpec spec = cayley_spec_from_json(j);
  CHECK(spec.generators[0].weight == Ring(1));
}

TEST_CASE("egf sequences serialize as decimal strings") {
  EgfSeq s(3);
  s[0] = Ring(1);
  s[2] = Ring(BigInt("123456789012345678901234567890"));
  Json j = egf_to_json(s);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  CHECK(j[0].get<std::string>() == "1");
  CHECK(j[1].get<std::string>() == "0");
  CHECK(j[2].get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("identity reports carry the failure details only on failure") {
  IdentityReport pass;
  pass.name = "eqbin";
  pass.range["n_max"] = 20;
  pass.pass = true;
  Json jp = identity_report_to_json(pass);
  CHECK(jp["identity"] == "eqbin");
  CHECK(jp["pass"] == true);
  CHECK(!jp.contains("counterexample"));

  IdentityReport fail_report;
  fail_report.name = "eqbin";
  fail_report.range["n_max"] = 20;
  fail_report.pass = false;
  fail_report.counterexample["n"] = 3;
  fail_report.counterexample["m"] = 1;
  fail_report.lhs = "2";
  fail_report.rhs = "3";
  Json jf = identity_report_to_json(fail_report);
  CHECK(jf["pass"] == false);
  CHECK(jf["counterexample"]["n"] == 3);
  CHECK(jf["lhs"] == "2");
  CHECK(jf["rhs"] == "3");
}
