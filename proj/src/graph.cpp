#include "whitehead/graph.hpp"

#include <algorithm>

namespace whitehead {

std::set<Turn> turns_of_element(const Word& w) {
  if (w.empty()) {
    throw ValidationError("turns of a trivial element are undefined");
  }
  std::set<Turn> out;
  const std::size_t n = w.size();
  out.insert(Turn(Vertex::one(), Vertex::initial(w.at(0))));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.insert(Turn(Vertex::terminal(w.at(i)), Vertex::initial(w.at(i + 1))));
  }
  out.insert(Turn(Vertex::terminal(w.at(n - 1)), Vertex::one()));
  return out;
}

std::set<Turn> turns_of_class(const CyclicWord& c) {
  std::set<Turn> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(Turn(Vertex::terminal(c.letters()[i]), Vertex::initial(c.letters()[(i + 1) % n])));
  }
  return out;
}

std::set<Turn> turns_of_relator(const Relator& r) {
  return r.is_element() ? turns_of_element(r.element_word()) : turns_of_class(r.class_word());
}

WhiteheadGraph WhiteheadGraph::of(std::span<const Relator> rs) {
  std::set<Turn> edge_set;
  for (const Relator& r : rs) {
    std::set<Turn> t = turns_of_relator(r);
    edge_set.insert(t.begin(), t.end());
  }
  std::set<Vertex> vertex_set;
  for (const Turn& t : edge_set) {
    vertex_set.insert(t.a);
    vertex_set.insert(t.b);
  }
  WhiteheadGraph g;
  g.vertices_.assign(vertex_set.begin(), vertex_set.end());
  g.edges_.assign(edge_set.begin(), edge_set.end());
  g.adj_.resize(g.vertices_.size());
  for (const Turn& t : g.edges_) {
    const std::size_t ia = g.index_of(t.a);
    const std::size_t ib = g.index_of(t.b);
    g.adj_[ia].push_back(static_cast<std::uint32_t>(ib));
    g.adj_[ib].push_back(static_cast<std::uint32_t>(ia));
  }
  for (auto& ns : g.adj_) std::sort(ns.begin(), ns.end());
  return g;
}

std::size_t WhiteheadGraph::index_of(Vertex v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw InternalError("vertex not in graph");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool WhiteheadGraph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool WhiteheadGraph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Turn(u, v));
}

std::vector<Vertex> WhiteheadGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const std::uint32_t j : adj_[index_of(v)]) out.push_back(vertices_[j]);
  return out;
}

std::size_t WhiteheadGraph::component_count() const {
  const std::size_t n = vertices_.size();
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  std::vector<std::uint32_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (const std::uint32_t w : adj_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

std::vector<Vertex> WhiteheadGraph::cutvertices_discovery_order() const {
  const std::size_t n = vertices_.size();
  if (n < 3) return {};  // removing one vertex leaves fewer than two

  // Every vertex is touched by an edge and no edge is a loop, so in a
  // disconnected graph removing any vertex still leaves a vertex of its own
  // component plus the other components: every vertex cuts.
  if (component_count() > 1) return vertices_;

  // Articulation points, iterative DFS.
  std::vector<std::uint32_t> disc(n, 0), low(n, 0), parent(n, UINT32_MAX);
  std::vector<char> is_cut(n, 0);
  std::vector<Vertex> order;
  std::uint32_t timer = 1;

  struct Frame {
    std::uint32_t v;
    std::size_t next_child = 0;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{0});
  disc[0] = low[0] = timer++;
  std::size_t root_children = 0;

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_child < adj_[f.v].size()) {
      const std::uint32_t w = adj_[f.v][f.next_child++];
      if (disc[w] == 0) {
        parent[w] = f.v;
        disc[w] = low[w] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back(Frame{w});
      } else if (w != parent[f.v]) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      const std::uint32_t v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        const std::uint32_t p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p] && !is_cut[p]) {
          is_cut[p] = 1;
          order.push_back(vertices_[p]);
        }
      }
    }
  }
  if (root_children >= 2) {
    is_cut[0] = 1;
    order.push_back(vertices_[0]);
  }
  return order;
}

std::vector<Vertex> WhiteheadGraph::cutvertices() const {
  std::vector<Vertex> out = cutvertices_discovery_order();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> WhiteheadGraph::legal_cutvertices() const {
  std::vector<Vertex> out = cutvertices();
  std::erase_if(out, [](Vertex v) { return v.is_one(); });
  return out;
}

}  // namespace whitehead
