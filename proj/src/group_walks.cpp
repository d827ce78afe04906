#include "latwalk/group_walks.hpp"

#include "latwalk/error.hpp"
#include "latwalk/matrix.hpp"
#include "latwalk/walks.hpp"

#include <map>
#include <string>

namespace latwalk {

Label AbelianGroup::normalize(Label element) const {
  if (static_cast<int>(element.size()) != dimension())
    fail(errc::invalid_argument, "element " + label_str(element) + " has wrong dimension for a "
                                     "rank-" + std::to_string(free_rank) + " group with " +
                                     std::to_string(torsion.size()) + " torsion coordinates");
  for (size_t i = 0; i < torsion.size(); ++i) {
    long long q = torsion[i];
    if (q < 1) fail(errc::invalid_argument, "torsion orders must be >= 1");
    long long& x = element[static_cast<size_t>(free_rank) + i];
    x = ((x % q) + q) % q;
  }
  return element;
}

EgfSeq cayley_counts(const CayleySpec& spec, const Label& target, int order) {
  if (order < 0) fail(errc::invalid_argument, "negative walk order");
  const Label goal = spec.group.normalize(target);
  std::map<Label, Ring> generator_sum;
  for (const CayleyGenerator& g : spec.generators)
    generator_sum[spec.group.normalize(g.element)] += g.weight;
  std::map<Label, Ring> power;
  power[spec.group.normalize(Label(static_cast<size_t>(spec.group.dimension()), 0))] = Ring(1);
  EgfSeq out(order);
  auto read = [&]() {
    auto it = power.find(goal);
    return it == power.end() ? Ring(0) : it->second;
  };
  out[0] = read();
  for (int n = 1; n <= order; ++n) {
    std::map<Label, Ring> next;
    for (const auto& [elem, coeff] : power) {
      if (coeff.is_zero()) continue;
      for (const auto& [step, weight] : generator_sum) {
        Label sum = elem;
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += step[i];
        next[spec.group.normalize(std::move(sum))] += coeff * weight;
      }
    }
    power = std::move(next);
    out[n] = read();
  }
  return out;
}

namespace {

void check_moduli(const CayleySpec& spec, const std::vector<long long>& moduli) {
  if (static_cast<int>(moduli.size()) != spec.group.free_rank)
    fail(errc::invalid_argument, "need one modulus per free coordinate (" +
                                     std::to_string(spec.group.free_rank) + "), got " +
                                     std::to_string(moduli.size()));
  for (long long q : moduli)
    if (q < 0 || q == 1)
      fail(errc::invalid_argument, "modulus must be 0 (keep free) or >= 2, got " +
                                       std::to_string(q));
}

} // namespace

CayleySpec quotient_spec(const CayleySpec& spec, const std::vector<long long>& moduli) {
  check_moduli(spec, moduli);
  AbelianGroup quotient;
  std::vector<size_t> free_slots, reduced_slots;
  for (size_t i = 0; i < moduli.size(); ++i)
    (moduli[i] == 0 ? free_slots : reduced_slots).push_back(i);
  quotient.free_rank = static_cast<int>(free_slots.size());
  for (size_t i : reduced_slots) quotient.torsion.push_back(moduli[i]);
  for (long long q : spec.group.torsion) quotient.torsion.push_back(q);
  auto project = [&](const Label& e) {
    Label out;
    for (size_t i : free_slots) out.push_back(e[i]);
    for (size_t i : reduced_slots) out.push_back(e[i]);
    for (size_t i = moduli.size(); i < e.size(); ++i) out.push_back(e[i]);
    return quotient.normalize(out);
  };
  CayleySpec out;
  out.group = quotient;
  for (const CayleyGenerator& g : spec.generators)
    out.generators.push_back({project(spec.group.normalize(g.element)), g.weight});
  return out;
}

EgfSeq quotient_counts(const CayleySpec& spec, const std::vector<long long>& moduli,
                       const Label& target, int order) {
  check_moduli(spec, moduli);
  if (order < 0) fail(errc::invalid_argument, "negative walk order");
  CayleySpec qspec = quotient_spec(spec, moduli);
  const Label goal = qspec.group.normalize(target);
  std::vector<size_t> free_slots, reduced_slots;
  for (size_t i = 0; i < moduli.size(); ++i)
    (moduli[i] == 0 ? free_slots : reduced_slots).push_back(i);
  auto project = [&](const Label& e) {
    Label out;
    for (size_t i : free_slots) out.push_back(e[i]);
    for (size_t i : reduced_slots) out.push_back(e[i]);
    for (size_t i = moduli.size(); i < e.size(); ++i) out.push_back(e[i]);
    return qspec.group.normalize(out);
  };
  // Convolve on the original group and sum the fiber; the support is finite,
  // so the infinite fiber contributes only finitely many nonzero terms.
  std::map<Label, Ring> generator_sum;
  for (const CayleyGenerator& g : spec.generators)
    generator_sum[spec.group.normalize(g.element)] += g.weight;
  std::map<Label, Ring> power;
  power[spec.group.normalize(Label(static_cast<size_t>(spec.group.dimension()), 0))] = Ring(1);
  EgfSeq out(order);
  auto read = [&]() {
    Ring acc;
    for (const auto& [elem, coeff] : power)
      if (project(elem) == goal) acc += coeff;
    return acc;
  };
  out[0] = read();
  for (int n = 1; n <= order; ++n) {
    std::map<Label, Ring> next;
    for (const auto& [elem, coeff] : power) {
      if (coeff.is_zero()) continue;
      for (const auto& [step, weight] : generator_sum) {
        Label sum = elem;
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += step[i];
        next[spec.group.normalize(std::move(sum))] += coeff * weight;
      }
    }
    power = std::move(next);
    out[n] = read();
  }
  return out;
}

VertexMap::VertexMap(std::vector<int> image, int codomain_size)
    : image_(std::move(image)), codomain_(codomain_size) {
  if (codomain_ < 0) fail(errc::invalid_argument, "negative codomain size");
  std::vector<bool> hit(static_cast<size_t>(codomain_), false);
  for (int v : image_) {
    if (v < 0 || v >= codomain_)
      fail(errc::invalid_argument, "vertex map value " + std::to_string(v) + " out of range");
    hit[static_cast<size_t>(v)] = true;
  }
  for (int v = 0; v < codomain_; ++v)
    if (!hit[static_cast<size_t>(v)])
      fail(errc::not_surjective, "vertex map misses codomain vertex " + std::to_string(v));
}

std::vector<std::vector<int>> VertexMap::fibers() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(codomain_));
  for (size_t v = 0; v < image_.size(); ++v)
    out[static_cast<size_t>(image_[v])].push_back(static_cast<int>(v));
  return out;
}

namespace {

void check_map_shapes(const VertexMap& pi, const WeightedGraph& g1, const WeightedGraph& g2) {
  if (pi.domain_size() != g1.vertex_count() || pi.codomain_size() != g2.vertex_count())
    fail(errc::invalid_argument, "vertex map shape does not match the graphs");
}

} // namespace

bool verify_left_semicovering(const VertexMap& pi, const WeightedGraph& g1,
                              const WeightedGraph& g2) {
  check_map_shapes(pi, g1, g2);
  const RingMatrix w1 = weight_matrix(g1);
  const RingMatrix w2 = weight_matrix(g2);
  const auto fibers = pi.fibers();
  for (int u1 = 0; u1 < g1.vertex_count(); ++u1) {
    if (g1.clipped(u1)) continue; // truncated row, no complete data
    for (int v = 0; v < g2.vertex_count(); ++v) {
      Ring sum;
      for (int vj : fibers[static_cast<size_t>(v)]) sum += w1.at(u1, vj);
      if (sum != w2.at(pi(u1), v)) return false;
    }
  }
  return true;
}

bool verify_right_semicovering(const VertexMap& pi, const WeightedGraph& g1,
                               const WeightedGraph& g2) {
  check_map_shapes(pi, g1, g2);
  const RingMatrix w1 = weight_matrix(g1);
  const RingMatrix w2 = weight_matrix(g2);
  const auto fibers = pi.fibers();
  for (int v1 = 0; v1 < g1.vertex_count(); ++v1) {
    if (g1.clipped(v1)) continue;
    for (int u = 0; u < g2.vertex_count(); ++u) {
      Ring sum;
      for (int ui : fibers[static_cast<size_t>(u)]) sum += w1.at(ui, v1);
      if (sum != w2.at(u, pi(v1))) return false;
    }
  }
  return true;
}

bool verify_weak_covering(const VertexMap& pi, const WeightedGraph& g1, const WeightedGraph& g2) {
  return verify_left_semicovering(pi, g1, g2) && verify_right_semicovering(pi, g1, g2);
}

std::pair<EgfSeq, EgfSeq> semicovering_transfer(const VertexMap& pi, const WeightedGraph& g1,
                                                const WeightedGraph& g2, int g1_vertex,
                                                int g2_vertex, int order, TransferSide side) {
  check_map_shapes(pi, g1, g2);
  if (g1_vertex < 0 || g1_vertex >= g1.vertex_count())
    fail(errc::vertex_not_found, "G1 vertex index out of range");
  if (g2_vertex < 0 || g2_vertex >= g2.vertex_count())
    fail(errc::vertex_not_found, "G2 vertex index out of range");
  const bool left = side == TransferSide::left;
  if (left ? !verify_left_semicovering(pi, g1, g2) : !verify_right_semicovering(pi, g1, g2))
    fail(errc::precondition_failed, "the vertex map is not a semicovering on the given side");
  const auto fibers = pi.fibers();
  const auto& fiber = fibers[static_cast<size_t>(g2_vertex)];
  EgfSeq quotient_side(order), fiber_side(order);
  if (left) {
    // Walks pi(u1) -> v downstairs; u1 -> each fiber vertex upstairs.
    quotient_side = count_walks(g2, pi(g1_vertex), g2_vertex, order);
    EgfMatrix row = egf_block(g1, {g1_vertex}, fiber, order);
    for (int j = 0; j < row.cols(); ++j) fiber_side = egf_add(fiber_side, row.at(0, j));
  } else {
    quotient_side = count_walks(g2, g2_vertex, pi(g1_vertex), order);
    EgfMatrix col = egf_block(g1, fiber, {g1_vertex}, order);
    for (int i = 0; i < col.rows(); ++i) fiber_side = egf_add(fiber_side, col.at(i, 0));
  }
  return {quotient_side, fiber_side};
}

std::optional<Ring> check_semiregular(const WeightedGraph& g, RegularitySide side) {
  if (side == RegularitySide::weak) {
    auto l = check_semiregular(g, RegularitySide::left);
    auto r = check_semiregular(g, RegularitySide::right);
    if (l && r && *l == *r) return l;
    return std::nullopt;
  }
  const RingMatrix w = weight_matrix(g);
  std::optional<Ring> common;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.clipped(v)) continue;
    Ring sum;
    for (int x = 0; x < g.vertex_count(); ++x)
      sum += side == RegularitySide::left ? w.at(v, x) : w.at(x, v);
    if (!common)
      common = sum;
    else if (*common != sum)
      return std::nullopt;
  }
  return common;
}

WeightedGraph add_uniform_loops(const WeightedGraph& g, const Ring& m) {
  WeightedGraph out = g;
  for (int v = 0; v < g.vertex_count(); ++v) out.add_edge(v, v, true, m);
  return out;
}

} // namespace latwalk
