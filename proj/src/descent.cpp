#include "whitehead/descent.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace whitehead {

int DescentPlan::chi_of(Vertex v) const {
  if (v.id() < chi.size() && chi[v.id()] != CHI_UNSET) return chi[v.id()];
  throw InternalError("chi undefined on vertex");
}

namespace {

// Connected components of the graph induced on V - {removed}.
std::map<Vertex, int> components_without(const WhiteheadGraph& g, Vertex removed) {
  std::map<Vertex, int> label;
  for (const Vertex v : g.vertices()) {
    if (v != removed) label[v] = -1;
  }
  int next = 0;
  for (auto& [start, l] : label) {
    if (l != -1) continue;
    l = next;
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Vertex w : g.neighbors(v)) {
        if (w == removed) continue;
        auto it = label.find(w);
        if (it->second == -1) {
          it->second = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool joins(const WhiteheadGraph& g, Vertex v, const std::set<Vertex>& part) {
  for (const Vertex w : g.neighbors(v)) {
    if (part.count(w)) return true;
  }
  return false;
}

}  // namespace

DescentPlan find_descent(const WhiteheadGraph& g, Vertex z,
                         std::span<const GeneratorId> block_gens) {
  if (z.is_one()) {
    throw ValidationError("the basepoint is not a legal cutvertex");
  }
  const std::vector<Vertex> cuts = g.cutvertices();
  if (!std::binary_search(cuts.begin(), cuts.end(), z)) {
    throw ValidationError("chosen vertex is not a cutvertex");
  }

  const Vertex iota_z = z;
  const Vertex tau_z = Vertex::terminal(z.letter());

  // Step 1. Split V - {iota z} along components: V1 is the component of the
  // first neighbor of iota z, V2 the rest, swapped if needed so tau z lies
  // in V2. Components never join each other, so the split is valid.
  const std::map<Vertex, int> comp = components_without(g, iota_z);
  const std::vector<Vertex> nbrs = g.neighbors(iota_z);
  if (nbrs.empty() || !comp.count(tau_z)) {
    throw InternalError("cutvertex in a degenerate graph");
  }
  const int first_comp = comp.at(nbrs.front());
  std::set<Vertex> v1, v2;
  for (const auto& [v, l] : comp) {
    (l == first_comp ? v1 : v2).insert(v);
  }
  if (v2.empty()) {
    throw InternalError("vertex is not a cutvertex after all");
  }
  if (v2.count(tau_z) == 0) std::swap(v1, v2);

  Letter y = z.letter();
  std::set<Vertex> v_iota, v_tau;
  int step1_case = 0;
  if (joins(g, iota_z, v1)) {
    // Case 1.1: an edge joins iota z to V1.
    step1_case = 1;
    y = z.letter();
    v_iota = std::move(v1);
    v_tau = std::move(v2);
  } else {
    // Case 1.2: every edge at iota z goes to V2. Push iota z into V2 and
    // look for a letter crossing the enlarged split; the atom hypothesis
    // guarantees one exists.
    step1_case = 2;
    v2.insert(iota_z);
    bool found = false;
    for (const GeneratorId gen : block_gens) {
      for (const Letter cand : {Letter::positive(gen), Letter::negative(gen)}) {
        const Vertex iv = Vertex::initial(cand);
        const Vertex tv = Vertex::terminal(cand);
        if (v1.count(iv) && v2.count(tv)) {
          y = cand;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      throw InternalError(
          "descent found no crossing letter: the block is not an atom for its relators");
    }
    v1.erase(Vertex::initial(y));
    v_iota = std::move(v1);
    v_tau = std::move(v2);
  }

  // Step 2. chi labels v_iota with m+1 and everything else with m, where
  // m = -1 exactly when the basepoint sits in v_iota (so chi(1) = 0 both
  // ways and element boundaries never pick up a conjugating y).
  const bool basepoint_in_iota = v_iota.count(Vertex::one()) > 0;
  const int m = basepoint_in_iota ? -1 : 0;

  DescentPlan plan;
  plan.y = y;
  plan.v_iota.assign(v_iota.begin(), v_iota.end());
  plan.v_tau.assign(v_tau.begin(), v_tau.end());
  plan.m = m;
  plan.step1_case = step1_case;
  plan.step2_case = basepoint_in_iota ? 1 : 2;
  plan.block.assign(block_gens.begin(), block_gens.end());

  std::uint32_t max_id = Vertex::one().id();
  for (const GeneratorId gen : block_gens) {
    max_id = std::max(max_id, Vertex::initial(Letter::negative(gen)).id());
  }
  plan.chi.assign(max_id + 1, DescentPlan::CHI_UNSET);
  auto set_chi = [&plan](Vertex v, int value) {
    if (v.id() >= plan.chi.size()) throw InternalError("vertex outside block");
    plan.chi[v.id()] = static_cast<std::int8_t>(value);
  };
  // chi = 0 is the no-op label in both cases; block letters missing from the
  // graph keep it, so their images stay put.
  for (const GeneratorId gen : block_gens) {
    set_chi(Vertex::initial(Letter::positive(gen)), 0);
    set_chi(Vertex::initial(Letter::negative(gen)), 0);
  }
  for (const Vertex v : plan.v_iota) set_chi(v, m + 1);
  for (const Vertex v : plan.v_tau) set_chi(v, m);
  set_chi(Vertex::one(), 0);  // the basepoint keeps chi = 0 in both cases
  set_chi(Vertex::initial(y), m);

  return plan;
}

void validate_plan(const DescentPlan& p, const WhiteheadGraph& g) {
  auto fail = [](const char* what) { throw InternalError(std::string("invalid plan: ") + what); };

  const Vertex iy = Vertex::initial(p.y);
  const Vertex ty = Vertex::terminal(p.y);
  std::set<Vertex> vi(p.v_iota.begin(), p.v_iota.end());
  std::set<Vertex> vt(p.v_tau.begin(), p.v_tau.end());

  if (vi.empty() || vt.empty()) fail("V_iota and V_tau must be nonempty");
  for (const Vertex v : vi) {
    if (vt.count(v)) fail("V_iota and V_tau overlap");
  }
  std::set<Vertex> rest(g.vertices().begin(), g.vertices().end());
  rest.erase(iy);
  if (vi.size() + vt.size() != rest.size()) fail("V_iota and V_tau must cover V - {iota y}");
  for (const Vertex v : rest) {
    if (!vi.count(v) && !vt.count(v)) fail("V_iota and V_tau must cover V - {iota y}");
  }
  if (!vt.count(ty)) fail("tau y must lie in V_tau");
  if (p.m != 0 && p.m != -1) fail("m must be 0 or -1");
  if (p.chi_of(Vertex::one()) != 0) fail("chi(1) must be 0");
  if (p.chi_of(iy) != p.m || p.chi_of(ty) != p.m) fail("chi(iota y) and chi(tau y) must equal m");
  for (const Vertex v : g.vertices()) {
    const int c = p.chi_of(v);
    if (c != p.m && c != p.m + 1) fail("chi must take values in {m, m+1}");
  }

  bool some_split = false;
  bool some_edge_to_iota = false;
  for (const Turn& t : g.edges()) {
    const bool crosses_vi_vt = (vi.count(t.a) && vt.count(t.b)) || (vt.count(t.a) && vi.count(t.b));
    if (crosses_vi_vt) fail("an edge joins V_iota to V_tau");
    if (t.touches(iy) && vi.count(t.other(iy))) some_edge_to_iota = true;
    if (p.is_chi_split(t)) {
      some_split = true;
      if (!t.touches(iy)) fail("a chi-split turn misses iota y");
    }
  }
  if (!some_edge_to_iota) fail("no edge joins iota y to V_iota");
  if (!some_split) fail("no chi-split turn exists");
}

WhiteheadTransform plan_to_transform(const DescentPlan& p, const BasisState& x) {
  if (p.v_iota.empty()) {
    throw InternalError("plan's chi is constant; no descent is possible");
  }

  // x' = y^-chi(iota x) * x * y^chi(tau x). For m = 0 the multiplier is y;
  // for m = -1 it is y^-1, with gamma(x) set where chi(iota x) = m+1 resp. m.
  const Letter mult = p.m == 0 ? p.y : p.y.inverse();
  std::vector<bool> gamma(2 * x.rank(), false);
  for (std::uint32_t code = 0; code < 2 * x.rank(); ++code) {
    const Vertex v = Vertex::initial(Letter::from_code(code));
    if (v.id() >= p.chi.size() || p.chi[v.id()] == DescentPlan::CHI_UNSET) continue;
    const int c = p.chi[v.id()];
    gamma[code] = (p.m == 0) ? (c == 1) : (c == -1);
  }
  return WhiteheadTransform(x.rank(), mult, std::move(gamma));
}

std::size_t split_turn_count(const DescentPlan& p, const WhiteheadGraph& g) {
  std::size_t n = 0;
  for (const Turn& t : g.edges()) {
    if (p.is_chi_split(t)) ++n;
  }
  return n;
}

std::size_t split_position_count(const DescentPlan& p, const Relator& r) {
  std::set<GeneratorId> block(p.block.begin(), p.block.end());
  for (const GeneratorId g : r.support()) {
    if (!block.count(g)) return 0;  // relator lives in another block
  }
  auto chi = [&p](Vertex v) { return p.chi_of(v); };
  std::size_t n = 0;
  if (r.is_element()) {
    const auto& ls = r.element_word().letters();
    const std::size_t len = ls.size();
    for (std::size_t i = 0; i <= len; ++i) {
      const Vertex from = i == 0 ? Vertex::one() : Vertex::terminal(ls[i - 1]);
      const Vertex to = i == len ? Vertex::one() : Vertex::initial(ls[i]);
      if (chi(from) != chi(to)) ++n;
    }
  } else {
    const auto& ls = r.class_word().letters();
    const std::size_t len = ls.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex from = Vertex::terminal(ls[i]);
      const Vertex to = Vertex::initial(ls[(i + 1) % len]);
      if (chi(from) != chi(to)) ++n;
    }
  }
  return n;
}

}  // namespace whitehead
