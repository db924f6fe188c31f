#ifndef WHITEHEAD_DESCENT_HPP_
#define WHITEHEAD_DESCENT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "whitehead/basis.hpp"
#include "whitehead/graph.hpp"
#include "whitehead/transform.hpp"
#include "whitehead/word.hpp"

namespace whitehead {

/// The data produced by the descent subroutine for one cutvertex: a letter
/// y, a split of the remaining vertices into V_iota / V_tau, and a two-valued
/// vertex labelling chi whose split turns all touch the vertex of y.
/// Applying the induced transform shortens the relators by at least the
/// number of chi-split turns.
struct DescentPlan {
  Letter y = Letter::positive(0);
  std::vector<Vertex> v_iota;  // sorted; some edge joins iota(y) here
  std::vector<Vertex> v_tau;   // sorted; contains tau(y); no edge to v_iota
  int m = 0;                   // 0 or -1; chi takes values in {m, m+1}
  int step1_case = 0;          // 1 or 2, which Step 1 case fired
  int step2_case = 0;          // 1 or 2, whether the basepoint sat in v_iota

  /// chi over the basepoint and the block letters, indexed by vertex id.
  /// CHI_UNSET marks vertices outside the block.
  static constexpr std::int8_t CHI_UNSET = 127;
  std::vector<std::int8_t> chi;

  std::vector<GeneratorId> block;  // the sub-basis this plan acts on

  int chi_of(Vertex v) const;
  bool is_chi_split(const Turn& t) const { return chi_of(t.a) != chi_of(t.b); }
};

/// Steps 1 and 2 of the descent subroutine. z must be a legal cutvertex of
/// g (ValidationError otherwise); g must be the Whitehead graph of the
/// block's relators with the block an atom for them, else the Case 1.2
/// search for y cannot succeed and an InternalError reports the violated
/// atom precondition.
DescentPlan find_descent(const WhiteheadGraph& g, Vertex z,
                         std::span<const GeneratorId> block_gens);

/// Checks every plan invariant against the graph; throws InternalError
/// naming the first violated one.
void validate_plan(const DescentPlan& p, const WhiteheadGraph& g);

/// Step 3: the transform with images x' = y^-chi(iota x) * x * y^chi(tau x).
/// Throws InternalError if chi is constant (no split turn).
WhiteheadTransform plan_to_transform(const DescentPlan& p, const BasisState& x);

/// Number of chi-split edges of the graph (these all touch iota(y)).
std::size_t split_turn_count(const DescentPlan& p, const WhiteheadGraph& g);

/// Number of positions of r whose turn is chi-split. Counts occurrences,
/// not distinct turns, so it lower-bounds the length drop of r.
std::size_t split_position_count(const DescentPlan& p, const Relator& r);

}  // namespace whitehead

#endif  // WHITEHEAD_DESCENT_HPP_
