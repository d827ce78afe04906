// Python bindings.  Counts come back as plain Python integers (arbitrary
// precision both sides, so the round trip is exact) and polynomial weights
// as {(a_power, b_power): coefficient} dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latwalk/characters.hpp"
#include "latwalk/closed_forms.hpp"
#include "latwalk/constructions.hpp"
#include "latwalk/egf.hpp"
#include "latwalk/group_walks.hpp"
#include "latwalk/json_io.hpp"
#include "latwalk/lattice.hpp"
#include "latwalk/walks.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace latwalk;

namespace {

py::int_ bigint_to_py(const BigInt& v) {
  std::string dec = v.str();
  PyObject* obj = PyLong_FromString(dec.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object ring_to_py(const Ring& value) {
  if (value.is_integer()) return bigint_to_py(value.as_integer());
  py::dict d;
  for (const auto& [exps, coeff] : value.monomials())
    d[py::make_tuple(exps.first, exps.second)] = bigint_to_py(coeff);
  return d;
}

py::list egf_to_py(const EgfSeq& seq) {
  py::list out;
  for (int n = 0; n <= seq.order(); ++n) out.append(ring_to_py(seq[n]));
  return out;
}

BigInt bigint_from_py(py::handle h) {
  return BigInt(py::cast<std::string>(py::str(h)));
}

// Accepts an int, the strings "a" / "b", or a {(a_power, b_power): coeff}
// dict, mirroring ring_to_py.
Ring ring_from_py(py::handle h) {
  if (py::isinstance<py::int_>(h)) return Ring(bigint_from_py(h));
  if (py::isinstance<py::str>(h)) {
    auto s = py::cast<std::string>(h);
    if (s == "a") return Ring::var_a();
    if (s == "b") return Ring::var_b();
    throw std::invalid_argument("weight string must be \"a\" or \"b\", got \"" + s + "\"");
  }
  if (py::isinstance<py::dict>(h)) {
    Ring out;
    for (auto item : py::cast<py::dict>(h)) {
      auto key = py::cast<std::pair<int, int>>(item.first);
      out += Ring::monomial(key.first, key.second, bigint_from_py(item.second));
    }
    return out;
  }
  throw std::invalid_argument("weight must be an int, \"a\", \"b\", or a monomial dict");
}

// Dict or already-serialized text, either way through the same validator.
Json json_from_py(py::handle h, const std::string& source) {
  std::string text;
  if (py::isinstance<py::str>(h))
    text = py::cast<std::string>(h);
  else
    text = py::cast<std::string>(py::module_::import("json").attr("dumps")(h));
  return parse_json_text(text, source);
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

LatticeWindow window_from_args(const std::string& kind, const Label& center, int radius,
                               py::handle loop_weight, long long cycle_length) {
  LatticeWindow w;
  w.kind = lattice_kind_from_name(kind);
  w.center = center;
  w.radius = radius;
  w.loop_weight = ring_from_py(loop_weight);
  w.cycle_length = cycle_length;
  return w;
}

RegularitySide side_from_name(const std::string& side) {
  if (side == "left") return RegularitySide::left;
  if (side == "right") return RegularitySide::right;
  if (side == "weak") return RegularitySide::weak;
  throw std::invalid_argument("side must be \"left\", \"right\", or \"weak\"");
}

} // namespace

PYBIND11_MODULE(_latticewalk, m) {
  m.doc() = "Exact walk enumeration on weighted graphs and lattice windows";

  py::class_<WeightedGraph>(m, "Graph")
      .def_static(
          "lattice",
          [](const std::string& kind, const Label& center, int radius, py::handle loop_weight,
             long long cycle_length) {
            return materialize_lattice(
                window_from_args(kind, center, radius, loop_weight, cycle_length));
          },
          py::arg("kind"), py::arg("center"), py::arg("radius"),
          py::arg("loop_weight") = py::int_(1), py::arg("cycle_length") = 0,
          "Finite window of a named lattice: every vertex within the radius, "
          "rim vertices marked clipped")
      .def_static(
          "from_json", [](py::handle j) { return graph_from_json(json_from_py(j, "<python>")); },
          py::arg("data"), "Build from the graph JSON format (text or dict)")
      .def("to_json", [](const WeightedGraph& g) { return json_to_py(graph_to_json(g)); })
      .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
      .def("label", &WeightedGraph::label, py::arg("vertex"))
      .def("index_of", &WeightedGraph::index_of, py::arg("label"))
      .def("clipped", &WeightedGraph::clipped, py::arg("vertex"))
      .def("__repr__", [](const WeightedGraph& g) {
        return "<Graph with " + std::to_string(g.vertex_count()) + " vertices>";
      });

  m.def(
      "count_walks",
      [](const WeightedGraph& g, const Label& source, const Label& target, int order) {
        return egf_to_py(count_walks(g, source, target, order));
      },
      py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("order"),
      "Exact walk counts by length, index n is the number of length-n walks");
  m.def(
      "count_composite_walks",
      [](const WeightedGraph& g, const std::vector<Label>& waypoints, int order) {
        return egf_to_py(count_composite_walks(g, waypoints, order));
      },
      py::arg("graph"), py::arg("waypoints"), py::arg("order"),
      "Walks visiting the waypoints in order, counted by total length");
  m.def(
      "count_walks_oracle",
      [](const WeightedGraph& g, const Label& source, const Label& target, int order) {
        return egf_to_py(
            count_walks_oracle(g, g.index_of(source), g.index_of(target), order));
      },
      py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("order"),
      "Depth-first enumeration cross-check, deliberately independent of count_walks");

  m.def("cartesian_product", &cartesian_product, py::arg("g1"), py::arg("g2"));
  m.def("biproduct", &biproduct, py::arg("g1"), py::arg("g2"));
  m.def("parity_product", &parity_product, py::arg("g1"), py::arg("g2"), py::arg("parity"));
  m.def("symmetric_power", &symmetric_power, py::arg("graph"), py::arg("n"));
  m.def("exterior_power", &exterior_power, py::arg("graph"), py::arg("n"));
  m.def("symmetric_bipower", &symmetric_bipower, py::arg("graph"), py::arg("n"));
  m.def("exterior_bipower", &exterior_bipower, py::arg("graph"), py::arg("n"));
  m.def(
      "add_uniform_loops",
      [](const WeightedGraph& g, py::handle weight) {
        return add_uniform_loops(g, ring_from_py(weight));
      },
      py::arg("graph"), py::arg("weight"));

  m.def(
      "cayley_counts",
      [](py::handle spec, const Label& target, int order) {
        return egf_to_py(
            cayley_counts(cayley_spec_from_json(json_from_py(spec, "<spec>")), target, order));
      },
      py::arg("spec"), py::arg("target"), py::arg("order"),
      "Walk counts on the Cayley graph of a finitely generated abelian group");
  m.def(
      "quotient_counts",
      [](py::handle spec, const std::vector<long long>& moduli, const Label& target,
         int order) {
        return egf_to_py(quotient_counts(cayley_spec_from_json(json_from_py(spec, "<spec>")),
                                         moduli, target, order));
      },
      py::arg("spec"), py::arg("moduli"), py::arg("target"), py::arg("order"),
      "Counts after reducing free coordinates mod the given moduli (0 keeps one free)");
  m.def(
      "check_semiregular",
      [](const WeightedGraph& g, const std::string& side) -> py::object {
        std::optional<Ring> r = check_semiregular(g, side_from_name(side));
        return r ? ring_to_py(*r) : py::none();
      },
      py::arg("graph"), py::arg("side") = "left",
      "Common row sum (left), column sum (right), or symmetrized sum (weak) of the "
      "unclipped vertices, None if they disagree");

  m.def(
      "closed_R", [](long long n, long long m) { return ring_to_py(closed_R(n, m)); },
      py::arg("n"), py::arg("m"), "Length-n walks on the integer line from 0 to m");
  m.def(
      "closed_P",
      [](long long n, long long k, long long l) { return ring_to_py(closed_P(n, k, l)); },
      py::arg("n"), py::arg("k"), py::arg("l"), "Length-n walks on the half line from k to l");
  m.def(
      "closed_R2",
      [](long long n, long long m1, long long m2) {
        return ring_to_py(closed_R2(n, m1, m2));
      },
      py::arg("n"), py::arg("m1"), py::arg("m2"),
      "Length-n walks on the square grid from the origin to (m1, m2)");
  m.def(
      "closed_RxP",
      [](long long n, long long k1, long long k2, long long l1, long long l2) {
        return ring_to_py(closed_RxP(n, k1, k2, l1, l2));
      },
      py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("l1"), py::arg("l2"),
      "Length-n walks on the line-times-half-line strip");
  m.def(
      "closed_composite_R",
      [](long long n, const std::vector<long long>& ms) {
        return ring_to_py(closed_composite_R(n, ms));
      },
      py::arg("n"), py::arg("ms"),
      "Length-n line walks through waypoints at the partial sums of ms");
  m.def(
      "closed_R_ab",
      [](long long n, long long m) { return ring_to_py(closed_R_ab(n, m)); }, py::arg("n"),
      py::arg("m"), "Weighted line walks: up-steps carry a, down-steps carry b");
  m.def(
      "closed_P_ab",
      [](long long n, long long k, long long l) { return ring_to_py(closed_P_ab(n, k, l)); },
      py::arg("n"), py::arg("k"), py::arg("l"));
  m.def(
      "closed_composite_R_ab",
      [](long long n, const std::vector<long long>& ms) {
        return ring_to_py(closed_composite_R_ab(n, ms));
      },
      py::arg("n"), py::arg("ms"));
  m.def(
      "bessel_coeffs",
      [](long long displacement, int order) {
        return egf_to_py(bessel_coeffs(displacement, order));
      },
      py::arg("displacement"), py::arg("order"),
      "Per-length counts of line walks with the given displacement");
  m.def(
      "bessel_P_coeffs",
      [](long long target, int order) { return egf_to_py(bessel_P_coeffs(target, order)); },
      py::arg("target"), py::arg("order"));
  m.def(
      "factorial", [](long long n) { return bigint_to_py(factorial(n)); }, py::arg("n"));

  m.def(
      "check_identity",
      [](const std::string& name, long long n_max, long long k_max, long long a_max,
         long long b_max) {
        IdentityRange range{n_max, k_max, a_max, b_max};
        return json_to_py(identity_report_to_json(check_identity(name, range)));
      },
      py::arg("name"), py::arg("n_max") = -1, py::arg("k_max") = -1, py::arg("a_max") = -1,
      py::arg("b_max") = -1,
      "Exhaustive grid check of a registered binomial identity; -1 keeps its default bound");
  m.def("identity_names", &identity_names);

  m.def(
      "wave_count",
      [](int k) {
        WaveCount w = wave_graph_count(k);
        py::dict out;
        out["formula"] = bigint_to_py(w.formula);
        out["determinant_route"] = bigint_to_py(w.determinant);
        out["equal"] = w.equal;
        return out;
      },
      py::arg("k"),
      "Closed length-2k walks of a coupled half-line neighbor pair, both routes");

  m.def(
      "sn_character",
      [](const Partition& lambda, const Partition& mu) { return sn_character(lambda, mu); },
      py::arg("lambda_"), py::arg("mu"),
      "Irreducible symmetric group character at a conjugacy class, both given as partitions");
  m.def("partitions_of", &partitions_of, py::arg("n"));
  m.def(
      "conjugacy_class_size",
      [](const Partition& mu) { return bigint_to_py(conjugacy_class_size(mu)); },
      py::arg("mu"));
}
