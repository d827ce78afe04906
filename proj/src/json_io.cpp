#include "latwalk/json_io.hpp"

#include "latwalk/error.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace latwalk {
namespace {

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
  fail(errc::parse_error, where + ": " + what);
}

BigInt parse_big(const std::string& text, const std::string& where) {
  size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) bad_field(where, "expected a decimal integer, got '" + text + "'");
  for (size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      bad_field(where, "expected a decimal integer, got '" + text + "'");
  return BigInt(text);
}

long long get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad_field(where, "expected an integer");
  return j.get<long long>();
}

BigInt get_big(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return parse_big(j.get<std::string>(), where);
  bad_field(where, "expected an integer or a decimal string");
}

Ring monomial_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) bad_field(where, "expected a monomial object {\"a\",\"b\",\"c\"}");
  long long ea = 0, eb = 0;
  BigInt coeff = 1;
  for (const auto& [key, value] : j.items()) {
    if (key == "a")
      ea = get_int(value, where + ".a");
    else if (key == "b")
      eb = get_int(value, where + ".b");
    else if (key == "c")
      coeff = get_big(value, where + ".c");
    else
      bad_field(where, "unknown monomial key '" + key + "'");
  }
  if (ea < 0 || eb < 0) bad_field(where, "negative exponent");
  return Ring::monomial(static_cast<int>(ea), static_cast<int>(eb), coeff);
}

// Integer weights stay JSON numbers when they fit; anything else falls back
// to the count serialization.
Json weight_to_json(const Ring& value) {
  if (value.is_integer()) {
    const BigInt& v = value.as_integer();
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return Json(v.convert_to<long long>());
  }
  return ring_to_json(value);
}

} // namespace

Json ring_to_json(const Ring& value) {
  if (value.is_integer()) return Json(value.as_integer().str());
  Json terms = Json::array();
  for (const auto& [exps, coeff] : value.monomials()) {
    Json term = Json::object();
    term["a"] = exps.first;
    term["b"] = exps.second;
    term["c"] = coeff.str();
    terms.push_back(std::move(term));
  }
  return terms;
}

Ring ring_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Ring(j.get<long long>());
  if (j.is_string()) return Ring(parse_big(j.get<std::string>(), where));
  if (j.is_object()) return monomial_from_json(j, where);
  if (j.is_array()) {
    Ring sum(0);
    int index = 0;
    for (const auto& term : j) {
      sum += monomial_from_json(term, where + "[" + std::to_string(index) + "]");
      ++index;
    }
    return sum;
  }
  bad_field(where, "expected an integer, decimal string, monomial, or monomial list");
}

Json egf_to_json(const EgfSeq& seq) {
  Json out = Json::array();
  for (int n = 0; n <= seq.order(); ++n) out.push_back(ring_to_json(seq[n]));
  return out;
}

Json graph_to_json(const WeightedGraph& g) {
  Json vertices = Json::array();
  for (const auto& label : g.labels()) vertices.push_back(label);
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json edge = Json::object();
    edge["tail"] = e.tail;
    edge["head"] = e.head;
    edge["directed"] = e.directed;
    edge["weight"] = weight_to_json(e.weight);
    edges.push_back(std::move(edge));
  }
  Json out = Json::object();
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  if (g.declared_bipartition()) out["bipartition"] = *g.declared_bipartition();
  // Window rims must survive the round trip or a reloaded window would stop
  // policing its own exactness margin.
  Json clipped = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.clipped(v)) clipped.push_back(v);
  if (!clipped.empty()) out["clipped"] = std::move(clipped);
  return out;
}

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) bad_field("graph", "expected an object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    bad_field("graph.vertices", "expected an array of integer labels");
  WeightedGraph g;
  int vi = 0;
  for (const auto& vertex : j["vertices"]) {
    std::string where = "vertices[" + std::to_string(vi) + "]";
    if (!vertex.is_array()) bad_field(where, "expected an array of integers");
    Label label;
    for (const auto& coord : vertex) label.push_back(get_int(coord, where));
    try {
      g.add_vertex(std::move(label));
    } catch (const error& e) {
      bad_field(where, e.what());
    }
    ++vi;
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) bad_field("graph.edges", "expected an array");
    int ei = 0;
    for (const auto& edge : j["edges"]) {
      std::string where = "edges[" + std::to_string(ei) + "]";
      if (!edge.is_object()) bad_field(where, "expected an edge object");
      long long tail = get_int(edge.contains("tail") ? edge["tail"] : Json(), where + ".tail");
      long long head = get_int(edge.contains("head") ? edge["head"] : Json(), where + ".head");
      if (tail < 0 || tail >= g.vertex_count())
        bad_field(where + ".tail", "vertex index out of range");
      if (head < 0 || head >= g.vertex_count())
        bad_field(where + ".head", "vertex index out of range");
      bool directed = false;
      if (edge.contains("directed")) {
        if (!edge["directed"].is_boolean()) bad_field(where + ".directed", "expected a boolean");
        directed = edge["directed"].get<bool>();
      }
      Ring weight(1);
      if (edge.contains("weight")) weight = ring_from_json(edge["weight"], where + ".weight");
      for (const auto& [key, value] : edge.items())
        if (key != "tail" && key != "head" && key != "directed" && key != "weight")
          bad_field(where, "unknown edge key '" + key + "'");
      try {
        g.add_edge(static_cast<int>(tail), static_cast<int>(head), directed, std::move(weight));
      } catch (const error& e) {
        bad_field(where, e.what());
      }
      ++ei;
    }
  }
  if (j.contains("bipartition")) {
    if (!j["bipartition"].is_array()) bad_field("graph.bipartition", "expected an array of 0/1");
    std::vector<int> parts;
    for (const auto& color : j["bipartition"])
      parts.push_back(static_cast<int>(get_int(color, "graph.bipartition")));
    try {
      g.declare_bipartition(std::move(parts));
    } catch (const error& e) {
      bad_field("graph.bipartition", e.what());
    }
  }
  if (j.contains("clipped")) {
    if (!j["clipped"].is_array()) bad_field("graph.clipped", "expected an array of vertex indices");
    for (const auto& entry : j["clipped"]) {
      long long v = get_int(entry, "graph.clipped");
      if (v < 0 || v >= g.vertex_count()) bad_field("graph.clipped", "vertex index out of range");
      g.mark_clipped(static_cast<int>(v));
    }
  }
  return g;
}

Json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, source_name + ": " + e.what());
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace

WeightedGraph load_graph_file(const std::string& path) {
  return graph_from_json(parse_json_text(read_file(path), path));
}

Json cayley_spec_to_json(const CayleySpec& spec) {
  Json out = Json::object();
  out["free_rank"] = spec.group.free_rank;
  out["torsion"] = spec.group.torsion;
  Json generators = Json::array();
  for (const auto& gen : spec.generators) {
    Json g = Json::object();
    g["elem"] = gen.element;
    g["weight"] = weight_to_json(gen.weight);
    generators.push_back(std::move(g));
  }
  out["generators"] = std::move(generators);
  return out;
}

CayleySpec cayley_spec_from_json(const Json& j) {
  if (!j.is_object()) bad_field("cayley", "expected an object");
  CayleySpec spec;
  if (!j.contains("free_rank")) bad_field("cayley.free_rank", "missing");
  long long rank = get_int(j["free_rank"], "cayley.free_rank");
  if (rank < 0) bad_field("cayley.free_rank", "must be nonnegative");
  spec.group.free_rank = static_cast<int>(rank);
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) bad_field("cayley.torsion", "expected an array");
    int ti = 0;
    for (const auto& q : j["torsion"]) {
      long long order = get_int(q, "cayley.torsion[" + std::to_string(ti) + "]");
      if (order < 1) bad_field("cayley.torsion[" + std::to_string(ti) + "]", "order must be >= 1");
      spec.group.torsion.push_back(order);
      ++ti;
    }
  }
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) bad_field("cayley.generators", "expected an array");
    int gi = 0;
    for (const auto& gen : j["generators"]) {
      std::string where = "generators[" + std::to_string(gi) + "]";
      if (!gen.is_object() || !gen.contains("elem") || !gen["elem"].is_array())
        bad_field(where, "expected {\"elem\": [ints], \"weight\": ...}");
      CayleyGenerator out;
      for (const auto& coord : gen["elem"]) out.element.push_back(get_int(coord, where + ".elem"));
      if (static_cast<int>(out.element.size()) != spec.group.dimension())
        bad_field(where + ".elem", "length must equal free_rank + |torsion|");
      out.weight = gen.contains("weight") ? ring_from_json(gen["weight"], where + ".weight") : Ring(1);
      spec.generators.push_back(std::move(out));
      ++gi;
    }
  }
  return spec;
}

CayleySpec load_cayley_file(const std::string& path) {
  return cayley_spec_from_json(parse_json_text(read_file(path), path));
}

Json identity_report_to_json(const IdentityReport& report) {
  Json out = Json::object();
  out["identity"] = report.name;
  Json range = Json::object();
  for (const auto& [key, value] : report.range) range[key] = value;
  out["range"] = std::move(range);
  out["pass"] = report.pass;
  if (!report.pass) {
    Json ce = Json::object();
    for (const auto& [key, value] : report.counterexample) ce[key] = value;
    out["counterexample"] = std::move(ce);
    out["lhs"] = report.lhs;
    out["rhs"] = report.rhs;
  }
  return out;
}

} // namespace latwalk
