// latticewalk: exact walk enumeration on weighted graphs and lattice windows.
//
// Every subcommand prints a deterministic payload (json, csv, or plain) and
// exits 0 on success, 2 on a usage problem, and 1 when a verification the
// user asked for fails, so CI pipelines can gate on the code.

#include "latwalk/closed_forms.hpp"
#include "latwalk/constructions.hpp"
#include "latwalk/egf_linalg.hpp"
#include "latwalk/error.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/group_walks.hpp"
#include "latwalk/json_io.hpp"
#include "latwalk/lattice.hpp"
#include "latwalk/walks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace latwalk;

Label parse_label(const std::string& text) {
  Label out;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "bad coordinate '" + part + "' in label '" + text + "'");
    }
  }
  if (out.empty()) fail(errc::invalid_argument, "empty label '" + text + "'");
  return out;
}

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
  if (text.empty()) return {};
  Label values = parse_label(text);
  (void)what;
  return values;
}

long long l1_norm(const Label& v) {
  long long total = 0;
  for (long long x : v) total += x > 0 ? x : -x;
  return total;
}

Ring parse_weight(const std::string& text) {
  if (text == "a") return Ring::var_a();
  if (text == "b") return Ring::var_b();
  try {
    size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Ring(v);
  } catch (const std::exception&) {
    fail(errc::invalid_argument, "bad weight '" + text + "' (expected an integer, 'a', or 'b')");
  }
}

int lattice_arity(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::square:
    case LatticeKind::half_plane:
      return 2;
    default:
      return 1;
  }
}

// Smallest window that both contains the given labels and keeps them `order`
// steps clear of the truncated rim.
int auto_radius(LatticeKind kind, long long cycle_length, int order,
                const std::vector<Label>& labels) {
  if (kind == LatticeKind::single_loop) return 0;
  if (kind == LatticeKind::cycle) return static_cast<int>(cycle_length);
  long long reach = 0;
  for (const auto& label : labels) reach = std::max(reach, l1_norm(label));
  return static_cast<int>(reach) + order + 1;
}

struct LatticeArgs {
  std::string kind_name;
  int radius = -1; // -1 = size automatically
  std::string loop_weight = "1";
  long long cycle_length = 0;

  void add_to(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--lattice", kind_name,
                                "Lattice kind: R (line), Rab (line, ascent weight a / descent "
                                "weight b), P (half line), Pab, R2 (square grid), RxP (half "
                                "plane), K1 (one vertex with a weighted loop), Cq (cycle)");
    if (required) opt->required();
    cmd->add_option("--radius", radius,
                    "Window radius; default is sized so every requested count is exact");
    cmd->add_option("--loop-weight", loop_weight, "Loop weight for K1: an integer, 'a', or 'b'");
    cmd->add_option("--cycle-length", cycle_length, "Number of vertices for Cq");
  }

  WeightedGraph materialize(int order, const std::vector<Label>& labels) const {
    LatticeKind kind = lattice_kind_from_name(kind_name);
    LatticeWindow window;
    window.kind = kind;
    window.center = Label(static_cast<size_t>(lattice_arity(kind)), 0);
    window.loop_weight = parse_weight(loop_weight);
    window.cycle_length = cycle_length;
    window.radius = radius >= 0 ? radius : auto_radius(kind, cycle_length, order, labels);
    return materialize_lattice(window);
  }
};

std::string format_choice(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  return format;
}

void print_sequence(const std::string& format, const Json& meta, const EgfSeq& counts) {
  if (format == "json") {
    Json out = meta;
    out["counts"] = egf_to_json(counts);
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n,count\n";
    for (int n = 0; n <= counts.order(); ++n) std::cout << n << "," << counts[n].str() << "\n";
  } else {
    std::cout << "[";
    for (int n = 0; n <= counts.order(); ++n) {
      if (n) std::cout << ",";
      std::cout << counts[n].str();
    }
    std::cout << "]\n";
  }
}

void print_verdict(const std::string& format, const Json& payload, const std::string& plain_line) {
  if (format == "json")
    std::cout << payload.dump() << "\n";
  else if (format == "csv") {
    std::cout << "field,value\n";
    for (const auto& [key, value] : payload.items())
      std::cout << key << "," << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
  } else
    std::cout << plain_line << "\n";
}

OracleLimits oracle_limits_from_env() {
  OracleLimits limits;
  if (const char* bound = std::getenv("LATTICEWALK_ORACLE_BOUND")) {
    try {
      limits.max_order = std::stoi(bound);
    } catch (const std::exception&) {
      fail(errc::invalid_argument,
           "LATTICEWALK_ORACLE_BOUND must be an integer, got '" + std::string(bound) + "'");
    }
  }
  return limits;
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  LatticeArgs lattice;
  std::string graph_file;
  std::string from, to;
  int order = 8;
  std::string format = "json";
  bool verify_oracle = false;
};

int run_count(const CountArgs& args) {
  Label from = parse_label(args.from);
  Label to = parse_label(args.to);
  WeightedGraph g;
  Json meta = Json::object();
  if (!args.graph_file.empty()) {
    g = load_graph_file(args.graph_file);
    meta["graph"] = args.graph_file;
  } else {
    g = args.lattice.materialize(args.order, {from, to});
    meta["lattice"] = args.lattice.kind_name;
  }
  meta["from"] = from;
  meta["to"] = to;
  meta["order"] = args.order;
  EgfSeq counts = count_walks(g, from, to, args.order);
  if (args.verify_oracle) {
    OracleLimits limits = oracle_limits_from_env();
    int oracle_order = std::min(args.order, limits.max_order);
    EgfSeq reference =
        count_walks_oracle(g, g.index_of(from), g.index_of(to), oracle_order, limits);
    for (int n = 0; n <= oracle_order; ++n)
      if (counts[n] != reference[n]) {
        std::cerr << "verification failed: engine " << counts[n].str() << " vs oracle "
                  << reference[n].str() << " at length " << n << "\n";
        return 1;
      }
    meta["oracle_checked_to"] = oracle_order;
  }
  print_sequence(args.format, meta, counts);
  return 0;
}

// ---- composite -------------------------------------------------------------

struct CompositeArgs {
  LatticeArgs lattice;
  std::string graph_file;
  std::string from, to;
  std::vector<std::string> via;
  int order = 8;
  std::string format = "json";
};

int run_composite(const CompositeArgs& args) {
  std::vector<Label> waypoints;
  waypoints.push_back(parse_label(args.from));
  for (const auto& text : args.via) waypoints.push_back(parse_label(text));
  waypoints.push_back(parse_label(args.to));
  WeightedGraph g;
  Json meta = Json::object();
  if (!args.graph_file.empty()) {
    g = load_graph_file(args.graph_file);
    meta["graph"] = args.graph_file;
  } else {
    g = args.lattice.materialize(args.order, waypoints);
    meta["lattice"] = args.lattice.kind_name;
  }
  Json wp = Json::array();
  for (const auto& label : waypoints) wp.push_back(label);
  meta["waypoints"] = std::move(wp);
  meta["order"] = args.order;
  EgfSeq counts = count_composite_walks(g, waypoints, args.order);
  print_sequence(args.format, meta, counts);
  return 0;
}

// ---- cayley ----------------------------------------------------------------

struct CayleyArgs {
  std::string spec_file;
  std::string target;
  std::string moduli;
  int order = 8;
  std::string format = "json";
};

int run_cayley(const CayleyArgs& args) {
  CayleySpec spec = load_cayley_file(args.spec_file);
  Label target = parse_label(args.target);
  Json meta = Json::object();
  meta["spec"] = args.spec_file;
  meta["target"] = target;
  meta["order"] = args.order;
  EgfSeq counts(0);
  if (!args.moduli.empty()) {
    std::vector<long long> moduli = parse_int_list(args.moduli, "moduli");
    meta["moduli"] = moduli;
    counts = quotient_counts(spec, moduli, target, args.order);
  } else {
    counts = cayley_counts(spec, target, args.order);
  }
  print_sequence(args.format, meta, counts);
  return 0;
}

// ---- product-count ----------------------------------------------------------

struct ProductArgs {
  std::string kind = "cartesian";
  LatticeArgs lattice1, lattice2;
  std::string graph1, graph2;
  std::string from1, from2, to1, to2;
  int order = 8;
  std::string format = "json";
  bool verify = false;
};

WeightedGraph load_factor(const std::string& graph_file, const LatticeArgs& lattice, int order,
                          const std::vector<Label>& labels, const char* which) {
  if (!graph_file.empty()) return load_graph_file(graph_file);
  if (lattice.kind_name.empty())
    fail(errc::invalid_argument, std::string("factor ") + which + " needs --lattice or --graph");
  return lattice.materialize(order, labels);
}

int run_product(const ProductArgs& args) {
  Label from1 = parse_label(args.from1), from2 = parse_label(args.from2);
  Label to1 = parse_label(args.to1), to2 = parse_label(args.to2);
  WeightedGraph g1 = load_factor(args.graph1, args.lattice1, args.order, {from1, to1}, "1");
  WeightedGraph g2 = load_factor(args.graph2, args.lattice2, args.order, {from2, to2}, "2");
  WeightedGraph product;
  if (args.kind == "cartesian")
    product = cartesian_product(g1, g2);
  else if (args.kind == "biproduct")
    product = biproduct(g1, g2);
  else if (args.kind == "parity0")
    product = parity_product(g1, g2, 0);
  else if (args.kind == "parity1")
    product = parity_product(g1, g2, 1);
  else
    fail(errc::invalid_argument, "unknown product kind '" + args.kind + "'");

  Label from = from1, to = to1;
  from.insert(from.end(), from2.begin(), from2.end());
  to.insert(to.end(), to2.begin(), to2.end());

  Json meta = Json::object();
  meta["product"] = args.kind;
  meta["from"] = from;
  meta["to"] = to;
  meta["order"] = args.order;
  EgfSeq counts = count_walks(product, from, to, args.order);

  if (args.verify) {
    EgfSeq f1 = count_walks(g1, from1, to1, args.order);
    EgfSeq f2 = count_walks(g2, from2, to2, args.order);
    EgfSeq expected = args.kind == "cartesian" ? egf_mul(f1, f2) : egf_hadamard(f1, f2);
    if (counts != expected) {
      std::cerr << "verification failed: product walks " << counts.str()
                << " vs factor combination " << expected.str() << "\n";
      return 1;
    }
    meta["verified"] = true;
  }
  print_sequence(args.format, meta, counts);
  return 0;
}

// ---- power-count ------------------------------------------------------------

struct PowerArgs {
  std::string power = "sym";
  int exponent = 2;
  LatticeArgs lattice;
  std::string graph_file;
  std::string from, to;
  int order = 6;
  std::string format = "json";
  bool verify = false;
};

std::vector<Label> split_tuple(const Label& flat, int arity, const std::string& what) {
  if (arity <= 0 || static_cast<int>(flat.size()) % arity != 0)
    fail(errc::invalid_argument, what + ": label length does not split into base vertices");
  std::vector<Label> parts;
  for (size_t i = 0; i < flat.size(); i += static_cast<size_t>(arity))
    parts.emplace_back(flat.begin() + static_cast<long>(i),
                       flat.begin() + static_cast<long>(i) + arity);
  return parts;
}

BigInt tuple_multiplicity_factor(const std::vector<int>& indices) {
  std::map<int, int> mult;
  for (int v : indices) ++mult[v];
  BigInt product = 1;
  for (const auto& [v, count] : mult) product *= factorial(count);
  return product;
}

int run_power(const PowerArgs& args) {
  Label from = parse_label(args.from);
  Label to = parse_label(args.to);
  WeightedGraph base;
  Json meta = Json::object();
  int arity = 1;
  if (!args.graph_file.empty()) {
    base = load_graph_file(args.graph_file);
    if (base.vertex_count() == 0) fail(errc::invalid_graph, "graph has no vertices");
    arity = static_cast<int>(base.label(0).size());
    meta["graph"] = args.graph_file;
  } else {
    arity = lattice_arity(lattice_kind_from_name(args.lattice.kind_name));
    std::vector<Label> anchor;
    for (const auto& part : split_tuple(from, arity, "--from")) anchor.push_back(part);
    for (const auto& part : split_tuple(to, arity, "--to")) anchor.push_back(part);
    base = args.lattice.materialize(args.order, anchor);
    meta["lattice"] = args.lattice.kind_name;
  }

  WeightedGraph power;
  if (args.power == "sym")
    power = symmetric_power(base, args.exponent);
  else if (args.power == "ext")
    power = exterior_power(base, args.exponent);
  else if (args.power == "sym2")
    power = symmetric_bipower(base, args.exponent);
  else if (args.power == "ext2")
    power = exterior_bipower(base, args.exponent);
  else
    fail(errc::invalid_argument, "unknown power kind '" + args.power + "'");

  meta["power"] = args.power;
  meta["exponent"] = args.exponent;
  meta["from"] = from;
  meta["to"] = to;
  meta["order"] = args.order;
  EgfSeq counts = count_walks(power, from, to, args.order);

  if (args.verify) {
    std::vector<int> rows, cols;
    for (const auto& part : split_tuple(from, arity, "--from")) rows.push_back(base.index_of(part));
    for (const auto& part : split_tuple(to, arity, "--to")) cols.push_back(base.index_of(part));
    EgfMatrix block = egf_block(base, rows, cols, args.order);
    EgfSeq reference(args.order);
    if (args.power == "sym")
      reference = permanent_egf(block);
    else if (args.power == "ext")
      reference = determinant_egf(block);
    else if (args.power == "sym2")
      reference = hadamard_permanent(block);
    else
      reference = hadamard_determinant(block);
    // Repeated target vertices collapse distinct tensor walks onto one power
    // vertex, so the block count overshoots by the multiplicity factorials.
    EgfSeq scaled = egf_scale(Ring(tuple_multiplicity_factor(cols)), counts);
    if (scaled != reference) {
      std::cerr << "verification failed: power walks " << counts.str() << " vs matrix form "
                << reference.str() << "\n";
      return 1;
    }
    meta["verified"] = true;
  }
  print_sequence(args.format, meta, counts);
  return 0;
}

// ---- covering-check ----------------------------------------------------------

struct CoveringArgs {
  std::string graph1, graph2;
  std::string map_text;
  std::string side = "left";
  std::string transfer_g1, transfer_g2;
  int order = 6;
  std::string format = "json";
};

int run_covering(const CoveringArgs& args) {
  WeightedGraph g1 = load_graph_file(args.graph1);
  WeightedGraph g2 = load_graph_file(args.graph2);
  std::vector<long long> image_ll = parse_int_list(args.map_text, "map");
  std::vector<int> image(image_ll.begin(), image_ll.end());
  if (static_cast<int>(image.size()) != g1.vertex_count())
    fail(errc::invalid_argument, "--map must list one image vertex per graph1 vertex");
  VertexMap pi(image, g2.vertex_count());

  bool holds = false;
  if (args.side == "left")
    holds = verify_left_semicovering(pi, g1, g2);
  else if (args.side == "right")
    holds = verify_right_semicovering(pi, g1, g2);
  else if (args.side == "weak")
    holds = verify_weak_covering(pi, g1, g2);
  else
    fail(errc::invalid_argument, "unknown side '" + args.side + "' (left, right, weak)");

  Json payload = Json::object();
  payload["side"] = args.side;
  payload["holds"] = holds;

  bool transfer_requested = !args.transfer_g1.empty() || !args.transfer_g2.empty();
  bool transfer_equal = true;
  if (holds && transfer_requested) {
    if (args.transfer_g1.empty() || args.transfer_g2.empty())
      fail(errc::invalid_argument, "transfer needs both --transfer-g1 and --transfer-g2");
    if (args.side == "weak")
      fail(errc::invalid_argument, "transfer works with --side left or right");
    int v1 = g1.index_of(parse_label(args.transfer_g1));
    int v2 = g2.index_of(parse_label(args.transfer_g2));
    TransferSide side = args.side == "left" ? TransferSide::left : TransferSide::right;
    auto [quotient, fiber] = semicovering_transfer(pi, g1, g2, v1, v2, args.order, side);
    transfer_equal = quotient == fiber;
    payload["quotient_counts"] = egf_to_json(quotient);
    payload["fiber_counts"] = egf_to_json(fiber);
    payload["transfer_equal"] = transfer_equal;
  }

  std::string plain = holds ? "holds" : "violated";
  if (holds && transfer_requested) plain += transfer_equal ? " transfer-equal" : " transfer-differs";
  print_verdict(args.format, payload, plain);
  return (holds && transfer_equal) ? 0 : 1;
}

// ---- identity ----------------------------------------------------------------

struct IdentityArgs {
  std::string name;
  long long n_max = -1, k_max = -1, ab_max = -1, a_max = -1, b_max = -1;
  std::string format = "json";
};

int run_identity(const IdentityArgs& args) {
  IdentityRange range;
  range.n_max = args.n_max;
  range.k_max = args.k_max;
  range.a_max = args.a_max >= 0 ? args.a_max : args.ab_max;
  range.b_max = args.b_max >= 0 ? args.b_max : args.ab_max;
  IdentityReport report = check_identity(args.name, range);
  std::string plain = report.pass ? "pass" : "fail";
  if (!report.pass) {
    plain += " at";
    for (const auto& [key, value] : report.counterexample)
      plain += " " + key + "=" + std::to_string(value);
    plain += " lhs=" + report.lhs + " rhs=" + report.rhs;
  }
  print_verdict(args.format, identity_report_to_json(report), plain);
  return report.pass ? 0 : 1;
}

// ---- wave ---------------------------------------------------------------------

struct WaveArgs {
  int k = 1;
  std::string format = "json";
};

int run_wave(const WaveArgs& args) {
  WaveCount result = wave_graph_count(args.k);
  Json payload = Json::object();
  payload["k"] = args.k;
  payload["formula"] = result.formula.str();
  payload["determinant_route"] = result.determinant.str();
  payload["equal"] = result.equal;
  std::string plain = result.formula.str() + " " + result.determinant.str() +
                      (result.equal ? " equal" : " MISMATCH");
  print_verdict(args.format, payload, plain);
  return result.equal ? 0 : 1;
}

// ---- bessel ---------------------------------------------------------------------

struct BesselArgs {
  long long m = 0;
  int order = 10;
  std::string lattice = "R";
  std::string format = "json";
};

int run_bessel(const BesselArgs& args) {
  Json meta = Json::object();
  meta["lattice"] = args.lattice;
  meta["m"] = args.m;
  meta["order"] = args.order;
  EgfSeq counts(0);
  if (args.lattice == "R")
    counts = bessel_coeffs(args.m, args.order);
  else if (args.lattice == "P")
    counts = bessel_P_coeffs(args.m, args.order);
  else
    fail(errc::invalid_argument, "--lattice must be R or P");
  print_sequence(args.format, meta, counts);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of weighted walks on graphs, lattice windows, graph products,"
               " powers, and abelian Cayley graphs.  Counts are exact integers or polynomials"
               " in the formal edge weights a, b."};
  app.require_subcommand(1);
  long long seed = 0;
  app.add_option("--seed", seed, "Seed for randomized suites (reserved; current subcommands are"
                                 " deterministic)");

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand(
      "count", "Count walks of each length up to --order between two vertices, exactly");
  count_args.lattice.add_to(count_cmd, false);
  count_cmd->add_option("--graph", count_args.graph_file, "Graph JSON file instead of a lattice");
  count_cmd->add_option("--from", count_args.from, "Start vertex label, e.g. 0 or 0,1")->required();
  count_cmd->add_option("--to", count_args.to, "End vertex label")->required();
  count_cmd->add_option("--order", count_args.order, "Largest walk length to count");
  format_choice(count_cmd, count_args.format);
  count_cmd->add_flag("--verify-oracle", count_args.verify_oracle,
                      "Re-count by brute-force walk enumeration and compare"
                      " (LATTICEWALK_ORACLE_BOUND overrides the enumeration cap)");

  CompositeArgs composite_args;
  auto* composite_cmd = app.add_subcommand(
      "composite", "Count walks that visit the --via waypoints in order on the way");
  composite_args.lattice.add_to(composite_cmd, false);
  composite_cmd->add_option("--graph", composite_args.graph_file, "Graph JSON file");
  composite_cmd->add_option("--from", composite_args.from, "Start vertex label")->required();
  composite_cmd->add_option("--via", composite_args.via, "Intermediate waypoint label (repeatable)")
      ->required();
  composite_cmd->add_option("--to", composite_args.to, "End vertex label")->required();
  composite_cmd->add_option("--order", composite_args.order, "Largest walk length to count");
  format_choice(composite_cmd, composite_args.format);

  CayleyArgs cayley_args;
  auto* cayley_cmd = app.add_subcommand(
      "cayley", "Count walks from the identity on the Cayley graph of a finitely generated"
                " abelian group, with an optional coordinate-wise quotient");
  cayley_cmd->add_option("--spec", cayley_args.spec_file, "Group and generator JSON file")
      ->required();
  cayley_cmd->add_option("--to", cayley_args.target, "Target group element")->required();
  cayley_cmd->add_option("--quotient", cayley_args.moduli,
                         "Per-free-coordinate moduli (0 keeps a coordinate free); counts walks"
                         " to the whole fiber of the target");
  cayley_cmd->add_option("--order", cayley_args.order, "Largest walk length to count");
  format_choice(cayley_cmd, cayley_args.format);

  ProductArgs product_args;
  auto* product_cmd = app.add_subcommand(
      "product-count", "Count walks on a product of two graphs; --verify cross-checks against"
                       " the combination of the factor counts");
  product_cmd->add_option("--kind", product_args.kind,
                          "cartesian (one factor moves per step), biproduct (both move),"
                          " parity0/parity1 (biproduct restricted to one color class)");
  product_cmd->add_option("--graph1", product_args.graph1, "First factor graph JSON");
  product_cmd->add_option("--graph2", product_args.graph2, "Second factor graph JSON");
  product_cmd->add_option("--lattice1", product_args.lattice1.kind_name, "First factor lattice");
  product_cmd->add_option("--lattice2", product_args.lattice2.kind_name, "Second factor lattice");
  product_cmd->add_option("--radius1", product_args.lattice1.radius, "First factor window radius");
  product_cmd->add_option("--radius2", product_args.lattice2.radius, "Second factor window radius");
  product_cmd->add_option("--from1", product_args.from1, "Start vertex in factor 1")->required();
  product_cmd->add_option("--from2", product_args.from2, "Start vertex in factor 2")->required();
  product_cmd->add_option("--to1", product_args.to1, "End vertex in factor 1")->required();
  product_cmd->add_option("--to2", product_args.to2, "End vertex in factor 2")->required();
  product_cmd->add_option("--order", product_args.order, "Largest walk length to count");
  format_choice(product_cmd, product_args.format);
  product_cmd->add_flag("--verify", product_args.verify,
                        "Check the product counts against the factor counts");

  PowerArgs power_args;
  auto* power_cmd = app.add_subcommand(
      "power-count", "Count walks on a symmetric or exterior power of a graph; --verify"
                     " cross-checks against the permanent or determinant of the base counts");
  power_cmd->add_option("--power", power_args.power,
                        "sym (unordered tuples, one coordinate moves), ext (distinct tuples,"
                        " signed), sym2/ext2 (all coordinates move each step)");
  power_cmd->add_option("--exponent", power_args.exponent, "Tuple size n");
  power_args.lattice.add_to(power_cmd, false);
  power_cmd->add_option("--graph", power_args.graph_file, "Base graph JSON file");
  power_cmd->add_option("--from", power_args.from,
                        "Start tuple: base labels concatenated, sorted, e.g. 0,1")
      ->required();
  power_cmd->add_option("--to", power_args.to, "End tuple")->required();
  power_cmd->add_option("--order", power_args.order, "Largest walk length to count");
  format_choice(power_cmd, power_args.format);
  power_cmd->add_flag("--verify", power_args.verify,
                      "Check the power counts against the matrix form of the base counts");

  CoveringArgs covering_args;
  auto* covering_cmd = app.add_subcommand(
      "covering-check", "Verify that a vertex map is a fiber-sum covering of graph2 by graph1,"
                        " and optionally that walk counts transfer along it");
  covering_cmd->add_option("--graph1", covering_args.graph1, "Covering graph JSON")->required();
  covering_cmd->add_option("--graph2", covering_args.graph2, "Base graph JSON")->required();
  covering_cmd
      ->add_option("--map", covering_args.map_text,
                   "Image vertex index in graph2 for each graph1 vertex, comma separated")
      ->required();
  covering_cmd->add_option("--side", covering_args.side,
                           "left (rows: edges into each fiber), right (columns: edges out of"
                           " each fiber), weak (both)");
  covering_cmd->add_option("--transfer-g1", covering_args.transfer_g1,
                           "Graph1 vertex label for the walk-count transfer check");
  covering_cmd->add_option("--transfer-g2", covering_args.transfer_g2,
                           "Graph2 vertex label for the walk-count transfer check");
  covering_cmd->add_option("--order", covering_args.order, "Largest walk length to compare");
  format_choice(covering_cmd, covering_args.format);

  IdentityArgs identity_args;
  auto* identity_cmd = app.add_subcommand(
      "identity", "Check one of the built-in binomial identities exactly over a parameter grid");
  identity_cmd
      ->add_option("--name", identity_args.name,
                   "eq38 (two-binomial product as a multinomial sum), eqbin (central binomial"
                   " difference), corp3 (telescoped weighted row sums), eqRP5 (product"
                   " difference as one product), eqRP6 (two-variable telescoped sums)")
      ->required();
  identity_cmd->add_option("--n-max", identity_args.n_max, "Largest n in the grid");
  identity_cmd->add_option("--k-max", identity_args.k_max, "Largest k in the grid");
  identity_cmd->add_option("--ab-max", identity_args.ab_max, "Largest a and b in the grid");
  identity_cmd->add_option("--a-max", identity_args.a_max, "Largest a (overrides --ab-max)");
  identity_cmd->add_option("--b-max", identity_args.b_max, "Largest b (overrides --ab-max)");
  format_choice(identity_cmd, identity_args.format);

  WaveArgs wave_args;
  auto* wave_cmd = app.add_subcommand(
      "wave", "Count the signed closed pair walks of length 2k on the half line two ways:"
              " a factorial-quotient formula and a 2x2 walk determinant");
  wave_cmd->add_option("--k", wave_args.k, "Half the walk length")->required();
  format_choice(wave_cmd, wave_args.format);

  BesselArgs bessel_args;
  auto* bessel_cmd = app.add_subcommand(
      "bessel", "Per-length walk counts to displacement m on the line (R) or half line (P),"
                " the coefficient sequences of the modified Bessel forms");
  bessel_cmd->add_option("--m", bessel_args.m, "Endpoint displacement");
  bessel_cmd->add_option("--order", bessel_args.order, "Largest walk length");
  bessel_cmd->add_option("--lattice", bessel_args.lattice, "R or P");
  format_choice(bessel_cmd, bessel_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(count_cmd)) return run_count(count_args);
    if (app.got_subcommand(composite_cmd)) return run_composite(composite_args);
    if (app.got_subcommand(cayley_cmd)) return run_cayley(cayley_args);
    if (app.got_subcommand(product_cmd)) return run_product(product_args);
    if (app.got_subcommand(power_cmd)) return run_power(power_args);
    if (app.got_subcommand(covering_cmd)) return run_covering(covering_args);
    if (app.got_subcommand(identity_cmd)) return run_identity(identity_args);
    if (app.got_subcommand(wave_cmd)) return run_wave(wave_args);
    if (app.got_subcommand(bessel_cmd)) return run_bessel(bessel_args);
  } catch (const latwalk::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
