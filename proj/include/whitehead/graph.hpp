#ifndef WHITEHEAD_GRAPH_HPP_
#define WHITEHEAD_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "whitehead/word.hpp"

namespace whitehead {

/// A vertex of a Whitehead graph: the basepoint (for the boundary turns of
/// element relators) or a letter vertex. The id ordering — basepoint first,
/// then letters by generator id with positive before negative — is the
/// deterministic vertex order used whenever the algorithm picks a vertex.
class Vertex {
 public:
  static constexpr Vertex one() { return Vertex(0); }
  static constexpr Vertex initial(Letter l) { return Vertex(1 + l.code()); }
  /// The far end of letter l, i.e. the vertex of l^-1.
  static constexpr Vertex terminal(Letter l) { return initial(l.inverse()); }
  static constexpr Vertex from_id(std::uint32_t id) { return Vertex(id); }

  constexpr bool is_one() const { return id_ == 0; }
  constexpr Letter letter() const { return Letter::from_code(id_ - 1); }
  constexpr std::uint32_t id() const { return id_; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  constexpr explicit Vertex(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

/// An undirected turn. Endpoints are distinct and stored sorted.
struct Turn {
  Vertex a;
  Vertex b;

  Turn(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw InternalError("turn joins a vertex to itself");
  }
  friend auto operator<=>(const Turn&, const Turn&) = default;

  bool touches(Vertex v) const { return a == v || b == v; }
  Vertex other(Vertex v) const { return a == v ? b : a; }
};

/// Boundary-padded turns of an element: the word is read with the identity
/// on both ends, giving length+1 turns before deduplication.
std::set<Turn> turns_of_element(const Word& w);

/// Cyclic turns of a class; rotation invariant.
std::set<Turn> turns_of_class(const CyclicWord& c);

std::set<Turn> turns_of_relator(const Relator& r);

class WhiteheadGraph {
 public:
  WhiteheadGraph() = default;  // the empty graph

  /// Union of the relators' turns; the vertex set is exactly the touched
  /// vertices.
  static WhiteheadGraph of(std::span<const Relator> rs);

  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Turn>& edges() const { return edges_; }
  bool has_vertex(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  std::size_t component_count() const;

  /// Vertices whose removal splits the rest into two nonempty parts with no
  /// edge between them. Sorted in vertex order.
  std::vector<Vertex> cutvertices() const;
  /// Same set in DFS discovery order (the "first-found" choice policy).
  std::vector<Vertex> cutvertices_discovery_order() const;
  /// Cutvertices other than the basepoint.
  std::vector<Vertex> legal_cutvertices() const;

 private:
  std::size_t index_of(Vertex v) const;  // position in vertices_
  std::vector<Vertex> vertices_;         // sorted
  std::vector<Turn> edges_;              // sorted, unique
  std::vector<std::vector<std::uint32_t>> adj_;  // by vertex index
};

}  // namespace whitehead

#endif  // WHITEHEAD_GRAPH_HPP_
