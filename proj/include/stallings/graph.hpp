#pragma once

// Stallings graphs of finitely generated subgroups of free groups: bouquet
// construction, folding, core pruning, rank/chi0, membership, basis
// extraction, the valence-3 vertex census, canonical numbering, DOT export.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

/// Unfolded edge-labeled multigraph, the input of fold(). Edges carry a
/// positive generator label; an inverse letter is the same edge traversed
/// backwards.
class PreGraph {
 public:
  struct Edge {
    std::uint32_t src;
    int generator;
    std::uint32_t dst;
  };

  explicit PreGraph(Alphabet alphabet)
      : alphabet_(alphabet), base_(0), vertex_count_(1) {}

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t base() const { return base_; }
  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::uint32_t add_vertex() { return vertex_count_++; }
  void add_edge(std::uint32_t src, int generator, std::uint32_t dst);

  /// Attach a subdivided loop at the base spelling w. Throws on the empty
  /// word and on letters outside the alphabet.
  void add_loop(const Word& w);

 private:
  Alphabet alphabet_;
  std::uint32_t base_;
  std::uint32_t vertex_count_;
  std::vector<Edge> edges_;
};

/// Wedge of subdivided loops at the base, one loop per generator.
PreGraph build_bouquet(const std::vector<Word>& generators, const Alphabet& alphabet);

/// Folded, basepointed, edge-labeled graph. The transition table is a
/// partial function (vertex, slot) -> vertex satisfying the involution
/// law target(v, l) = w  iff  target(w, inverse(l)) = v; the graph is
/// connected. Immutable after construction and safe to share.
class StallingsGraph {
 public:
  static constexpr std::uint32_t kNoTarget = 0xFFFFFFFFu;

  /// Validates shape, involution consistency, and connectivity.
  StallingsGraph(Alphabet alphabet, std::uint32_t vertex_count, std::uint32_t base,
                 std::vector<std::uint32_t> transitions);

  static StallingsGraph single_vertex(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t base() const { return base_; }
  std::uint32_t edge_count() const { return edge_count_; }

  std::uint32_t target(std::uint32_t v, Letter l) const {
    return transitions_[static_cast<std::size_t>(v) * slots_ + static_cast<std::size_t>(l.slot())];
  }
  std::uint32_t target_slot(std::uint32_t v, int slot) const {
    return transitions_[static_cast<std::size_t>(v) * slots_ + static_cast<std::size_t>(slot)];
  }

  /// Number of defined slots at v (in-edges plus out-edges, loops twice).
  int valence(std::uint32_t v) const;

  struct Edge {
    std::uint32_t src;
    int generator;
    std::uint32_t dst;
  };
  /// Each geometric edge once, in its positive orientation, in (src, generator) order.
  std::vector<Edge> positive_edges() const;

  friend bool operator==(const StallingsGraph& a, const StallingsGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.base_ == b.base_ &&
           a.vertex_count_ == b.vertex_count_ && a.transitions_ == b.transitions_;
  }

 private:
  Alphabet alphabet_;
  std::uint32_t base_;
  std::uint32_t vertex_count_;
  std::uint32_t edge_count_;
  std::size_t slots_;
  std::vector<std::uint32_t> transitions_;
};

/// Stallings folding via union-find with a worklist: repeatedly identify
/// equally-labeled edges sharing an endpoint until the transition relation
/// is a partial function. The recognized subgroup is unchanged and the
/// result is independent of fold order (see fold_shuffled + tests).
StallingsGraph fold(const PreGraph& g);

/// fold() with the initial worklist shuffled by seed — a test hook for the
/// confluence property. Same abstract result as fold().
StallingsGraph fold_shuffled(const PreGraph& g, std::uint64_t seed);

/// Iteratively removes valence-1 vertices. keep_base=true never removes
/// the basepoint (the based core G0); keep_base=false yields the
/// cyclically reduced core used by the census — if the base is pruned the
/// smallest surviving vertex becomes the base. A cycle-free graph cores to
/// a single vertex, never to the empty graph.
StallingsGraph core(const StallingsGraph& g, bool keep_base);

/// rank = E - V + 1 for a connected graph; chi0 = max(0, E - V); both are
/// invariant under core pruning.
int rank(const StallingsGraph& g);
int chi0(const StallingsGraph& g);

/// True iff tracing w from the base keeps every transition defined and
/// ends at the base. Requires the base-retained graph.
bool membership(const StallingsGraph& g, const Word& w);

/// Breadth-first spanning tree from the base (slots in a < a^-1 < b < ...
/// order, FIFO vertex order) and one basis word per non-tree edge
/// (u, l, v): path(base->u) * l * path(v->base). |basis| = rank.
std::vector<Word> basis(const StallingsGraph& g);

/// Word read along the BFS tree path base -> target.
Word path_word_from_base(const StallingsGraph& g, std::uint32_t target);

/// Valence-3 vertex classification of a rank-2 graph (run it on the
/// cyclically reduced core). Slots are a-out, a-in, b-out, b-in.
struct VertexCensus {
  /// Per-vertex bitmask of present slots (bit s = slot s defined).
  std::vector<std::uint8_t> slot_masks;
  /// Valence-3 counts keyed by the single missing slot.
  std::array<std::uint32_t, 4> missing_slot{0, 0, 0, 0};
  /// Valence-3 counts keyed by (incoming, outgoing) valence.
  std::map<std::pair<int, int>, std::uint32_t> valence3_by_signature;
  /// All vertices keyed by (incoming, outgoing) valence.
  std::map<std::pair<int, int>, std::uint32_t> signature_spectrum;
  std::uint32_t valence3_total = 0;

  std::uint32_t signature_count(int in, int out) const {
    auto it = valence3_by_signature.find({in, out});
    return it == valence3_by_signature.end() ? 0u : it->second;
  }
};

/// Throws unless the alphabet has rank 2.
VertexCensus census(const StallingsGraph& g);

/// Breadth-first renumbering from the base with slots in fixed order; two
/// based, folded, cored graphs recognize the same subgroup iff their
/// canonical forms compare equal.
StallingsGraph canonical_form(const StallingsGraph& g);

/// DOT digraph, one arc per positive edge, base drawn as a doublecircle.
std::string to_dot(const StallingsGraph& g);

/// build_bouquet + fold + core + canonical_form in one step.
StallingsGraph subgroup_graph(const std::vector<Word>& generators, const Alphabet& alphabet,
                              bool keep_base = true);

}  // namespace stallings
