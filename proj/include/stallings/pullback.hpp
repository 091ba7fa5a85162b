#pragma once

// Fiber product of two Stallings graphs, its connected components (one per
// nontrivial double coset), per-component reduced Euler characteristic, the
// intersection-inequality check, and verified double-coset witnesses.

#include <compare>
#include <cstdint>
#include <vector>

#include "stallings/graph.hpp"
#include "stallings/words.hpp"

namespace stallings {

struct VertexPair {
  std::uint32_t u;  // vertex of the first factor
  std::uint32_t v;  // vertex of the second factor
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// One connected component of the fiber product. Isolated pairs (no
/// incident product edge) are dropped from reports; they contribute 0.
struct PullbackComponent {
  std::vector<VertexPair> pairs;  // ascending (u, then v); pairs.front() is the anchor
  std::uint32_t vertex_count = 0;
  std::uint32_t edge_count = 0;
  int chi0 = 0;  // max(0, E - V), invariant under pruning
  bool contains_bases = false;

  const VertexPair& base_pair() const { return pairs.front(); }
};

struct PullbackReport {
  std::vector<PullbackComponent> components;  // ordered by anchor pair
  int lhs_sum = 0;                            // sum of component chi0 values
};

/// Product vertices are pairs (u, v); for each letter l there is an edge
/// (u, v) -> (tU(u, l), tV(v, l)) whenever both transitions are defined.
/// Requires a common alphabet.
PullbackReport product(const StallingsGraph& gU, const StallingsGraph& gV);

/// The component as a folded graph on its pairs, based at the anchor
/// (least) pair.
StallingsGraph component_graph(const PullbackComponent& c, const StallingsGraph& gU,
                               const StallingsGraph& gV);

/// Core graph of U intersect V: the product component of (baseU, baseV),
/// cored with the base kept, canonically numbered. Membership in it agrees
/// with simultaneous membership in both factors.
StallingsGraph intersection_graph(const StallingsGraph& gU, const StallingsGraph& gV);

/// Double-coset witness for a component: a representative x and generators
/// of the subgroup the component recognizes. Contract, asserted in tests:
/// every generator g has membership(gU, g) and membership(gV, x g x^-1).
struct Witness {
  Word x;
  std::vector<Word> generators;
};

/// Built from the anchor pair (p, q): with alpha = path baseU -> p and
/// beta = path baseV -> q, x = beta * alpha^-1 and each spanning-tree basis
/// word w of the component becomes alpha * w * alpha^-1.
Witness make_witness(const PullbackComponent& c, const StallingsGraph& gU,
                     const StallingsGraph& gV);

struct ShncVerdict {
  int lhs = 0;
  int rhs = 0;
  bool holds = true;
  int margin = 0;  // rhs - lhs
};

struct ShncResult {
  ShncVerdict verdict;
  PullbackReport report;
  StallingsGraph gU;
  StallingsGraph gV;
};

/// Folds and cores both generator lists, computes the component sum on the
/// left and chi0(U) * chi0(V) on the right. holds iff lhs <= rhs; a false
/// verdict would falsify a theorem and signals an implementation bug.
ShncResult shnc_check(const std::vector<Word>& gensU, const std::vector<Word>& gensV,
                      const Alphabet& alphabet);

}  // namespace stallings
