#include "stallings/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "stallings/detail/union_find.hpp"
#include "stallings/prng.hpp"

namespace stallings {

void PreGraph::add_edge(std::uint32_t src, int generator, std::uint32_t dst) {
  if (src >= vertex_count_ || dst >= vertex_count_)
    throw std::invalid_argument("pregraph edge endpoint out of range");
  if (generator < 0 || generator >= alphabet_.rank())
    throw std::invalid_argument("pregraph edge label out of range");
  edges_.push_back({src, generator, dst});
}

void PreGraph::add_loop(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cannot attach a loop spelling the empty word");
  if (!fits_alphabet(w, alphabet_))
    throw std::invalid_argument("loop word uses letters outside the alphabet");
  std::uint32_t prev = base_;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    std::uint32_t next = (i + 1 == letters.size()) ? base_ : add_vertex();
    Letter l = letters[i];
    if (l.inverted())
      edges_.push_back({next, l.generator(), prev});
    else
      edges_.push_back({prev, l.generator(), next});
    prev = next;
  }
}

PreGraph build_bouquet(const std::vector<Word>& generators, const Alphabet& alphabet) {
  PreGraph g(alphabet);
  for (const Word& w : generators) {
    if (w.empty()) throw std::invalid_argument("bouquet generator reduces to the empty word");
    g.add_loop(w);
  }
  return g;
}

StallingsGraph::StallingsGraph(Alphabet alphabet, std::uint32_t vertex_count, std::uint32_t base,
                               std::vector<std::uint32_t> transitions)
    : alphabet_(alphabet),
      base_(base),
      vertex_count_(vertex_count),
      edge_count_(0),
      slots_(static_cast<std::size_t>(2) * static_cast<std::size_t>(alphabet.rank())),
      transitions_(std::move(transitions)) {
  if (vertex_count_ == 0) throw std::invalid_argument("graph needs at least one vertex");
  if (base_ >= vertex_count_) throw std::invalid_argument("basepoint out of range");
  if (transitions_.size() != static_cast<std::size_t>(vertex_count_) * slots_)
    throw std::invalid_argument("transition table has the wrong size");

  std::uint32_t defined = 0;
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    for (std::size_t s = 0; s < slots_; ++s) {
      std::uint32_t w = transitions_[v * slots_ + s];
      if (w == kNoTarget) continue;
      if (w >= vertex_count_) throw std::invalid_argument("transition target out of range");
      std::size_t back = s ^ 1u;
      if (transitions_[w * slots_ + back] != v)
        throw std::invalid_argument("transition table violates edge involution");
      ++defined;
    }
  }
  edge_count_ = defined / 2;

  // Connectivity: every vertex reachable from the base.
  std::vector<char> seen(vertex_count_, 0);
  std::vector<std::uint32_t> stack{base_};
  seen[base_] = 1;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < slots_; ++s) {
      std::uint32_t w = transitions_[v * slots_ + s];
      if (w != kNoTarget && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count_) throw std::invalid_argument("graph is not connected");
}

StallingsGraph StallingsGraph::single_vertex(const Alphabet& alphabet) {
  std::vector<std::uint32_t> table(static_cast<std::size_t>(2) * alphabet.rank(), kNoTarget);
  return StallingsGraph(alphabet, 1, 0, std::move(table));
}

int StallingsGraph::valence(std::uint32_t v) const {
  int count = 0;
  for (std::size_t s = 0; s < slots_; ++s)
    if (transitions_[v * slots_ + s] != kNoTarget) ++count;
  return count;
}

std::vector<StallingsGraph::Edge> StallingsGraph::positive_edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    for (int gen = 0; gen < alphabet_.rank(); ++gen) {
      std::uint32_t w = target_slot(v, 2 * gen);
      if (w == kNoTarget) continue;
      // Each geometric edge is listed once from its positive endpoint; a
      // positive loop appears in both directions of the table but only the
      // out-slot scan sees it once.
      out.push_back({v, gen, w});
    }
  }
  return out;
}

namespace {

struct FoldState {
  std::size_t slots;
  detail::UnionFind uf;
  // Transition table over original pregraph vertex ids; entries meaningful
  // only at union-find roots.
  std::vector<std::uint32_t> table;

  explicit FoldState(std::uint32_t n, std::size_t slots_in)
      : slots(slots_in), uf(n), table(static_cast<std::size_t>(n) * slots_in, StallingsGraph::kNoTarget) {}

  std::uint32_t& at(std::uint32_t v, std::size_t s) { return table[static_cast<std::size_t>(v) * slots + s]; }
};

struct PendingEdge {
  std::uint32_t src;
  std::size_t slot;
  std::uint32_t dst;
};

}  // namespace

static StallingsGraph fold_impl(const PreGraph& g, std::vector<PendingEdge> work) {
  const std::size_t slots = static_cast<std::size_t>(2) * g.alphabet().rank();
  FoldState st(g.vertex_count(), slots);

  while (!work.empty()) {
    PendingEdge e = work.back();
    work.pop_back();
    std::uint32_t u = st.uf.find(e.src);
    std::uint32_t v = st.uf.find(e.dst);
    std::uint32_t cur = st.at(u, e.slot);
    if (cur == StallingsGraph::kNoTarget) {
      st.at(u, e.slot) = v;
      // Record the reverse direction through the worklist so the involution
      // law holds even when v already has that slot occupied (that is the
      // co-determinism fold).
      work.push_back({v, e.slot ^ 1u, u});
      continue;
    }
    cur = st.uf.find(cur);
    st.at(u, e.slot) = cur;
    if (cur == v) continue;
    // Same label out of the same vertex to two places: merge the targets.
    // The losing row is replayed through the worklist, which also covers the
    // case lose == u where the slot written above sits on the dead row.
    std::uint32_t keep = st.uf.unite(cur, v);
    std::uint32_t lose = (keep == cur) ? v : cur;
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint32_t w = st.at(lose, s);
      if (w == StallingsGraph::kNoTarget) continue;
      st.at(lose, s) = StallingsGraph::kNoTarget;
      work.push_back({keep, s, w});
    }
  }

  // Compact surviving roots into dense ids, preserving ascending order.
  std::vector<std::uint32_t> remap(g.vertex_count(), StallingsGraph::kNoTarget);
  std::uint32_t next_id = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (st.uf.find(v) == v) remap[v] = next_id++;

  std::vector<std::uint32_t> table(static_cast<std::size_t>(next_id) * slots,
                                   StallingsGraph::kNoTarget);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (st.uf.find(v) != v) continue;
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint32_t w = st.at(v, s);
      if (w != StallingsGraph::kNoTarget)
        table[static_cast<std::size_t>(remap[v]) * slots + s] = remap[st.uf.find(w)];
    }
  }
  std::uint32_t base = remap[st.uf.find(g.base())];
  return StallingsGraph(g.alphabet(), next_id, base, std::move(table));
}

static std::vector<PendingEdge> initial_work(const PreGraph& g) {
  std::vector<PendingEdge> work;
  work.reserve(g.edges().size());
  for (const auto& e : g.edges())
    work.push_back({e.src, static_cast<std::size_t>(2 * e.generator), e.dst});
  return work;
}

StallingsGraph fold(const PreGraph& g) { return fold_impl(g, initial_work(g)); }

StallingsGraph fold_shuffled(const PreGraph& g, std::uint64_t seed) {
  std::vector<PendingEdge> work = initial_work(g);
  SplitMix64 rng{seed};
  for (std::size_t i = work.size(); i > 1; --i)
    std::swap(work[i - 1], work[rng.below(i)]);
  return fold_impl(g, std::move(work));
}

StallingsGraph core(const StallingsGraph& g, bool keep_base) {
  const std::size_t slots = static_cast<std::size_t>(2) * g.alphabet().rank();
  std::vector<std::uint32_t> table(static_cast<std::size_t>(g.vertex_count()) * slots);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t s = 0; s < slots; ++s) table[v * slots + s] = g.target_slot(v, static_cast<int>(s));

  std::vector<int> valence(g.vertex_count());
  std::vector<char> removed(g.vertex_count(), 0);
  std::queue<std::uint32_t> pending;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    valence[v] = g.valence(v);
    if (valence[v] <= 1 && !(keep_base && v == g.base())) pending.push(v);
  }

  std::uint32_t survivors = g.vertex_count();
  while (!pending.empty()) {
    std::uint32_t v = pending.front();
    pending.pop();
    if (removed[v] || valence[v] > 1) continue;
    if (survivors == 1) break;  // cycle-free graphs core to a point, not nothing
    removed[v] = 1;
    --survivors;
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint32_t w = table[v * slots + s];
      if (w == StallingsGraph::kNoTarget) continue;
      table[v * slots + s] = StallingsGraph::kNoTarget;
      table[w * slots + (s ^ 1u)] = StallingsGraph::kNoTarget;
      --valence[w];
      --valence[v];
      if (!removed[w] && valence[w] <= 1 && !(keep_base && w == g.base())) pending.push(w);
    }
  }

  std::vector<std::uint32_t> remap(g.vertex_count(), StallingsGraph::kNoTarget);
  std::uint32_t next_id = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) remap[v] = next_id++;

  std::vector<std::uint32_t> out(static_cast<std::size_t>(next_id) * slots,
                                 StallingsGraph::kNoTarget);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (removed[v]) continue;
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint32_t w = table[v * slots + s];
      if (w != StallingsGraph::kNoTarget) out[static_cast<std::size_t>(remap[v]) * slots + s] = remap[w];
    }
  }
  std::uint32_t base;
  if (!removed[g.base()])
    base = remap[g.base()];
  else
    base = 0;  // smallest surviving id; only reachable with keep_base=false
  return StallingsGraph(g.alphabet(), next_id, base, std::move(out));
}

int rank(const StallingsGraph& g) {
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

int chi0(const StallingsGraph& g) { return std::max(0, rank(g) - 1); }

bool membership(const StallingsGraph& g, const Word& w) {
  if (!fits_alphabet(w, g.alphabet())) return false;
  std::uint32_t v = g.base();
  for (Letter l : w.letters()) {
    v = g.target(v, l);
    if (v == StallingsGraph::kNoTarget) return false;
  }
  return v == g.base();
}

namespace {

struct BfsTree {
  std::vector<std::uint32_t> order;   // visit order, order[0] == base
  std::vector<std::uint32_t> parent;  // kNoTarget at base
  std::vector<int> parent_slot;       // slot taken from parent to reach v; -1 at base
};

BfsTree bfs_tree(const StallingsGraph& g) {
  const int slots = 2 * g.alphabet().rank();
  BfsTree t;
  t.parent.assign(g.vertex_count(), StallingsGraph::kNoTarget);
  t.parent_slot.assign(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<std::uint32_t> q;
  q.push(g.base());
  seen[g.base()] = 1;
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop();
    t.order.push_back(v);
    for (int s = 0; s < slots; ++s) {
      std::uint32_t w = g.target_slot(v, s);
      if (w == StallingsGraph::kNoTarget || seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.parent_slot[w] = s;
      q.push(w);
    }
  }
  return t;
}

Word tree_path(const StallingsGraph& g, const BfsTree& t, std::uint32_t target) {
  std::vector<Letter> letters;
  std::uint32_t v = target;
  while (v != g.base()) {
    letters.push_back(Letter::from_slot(t.parent_slot[v]));
    v = t.parent[v];
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

}  // namespace

Word path_word_from_base(const StallingsGraph& g, std::uint32_t target) {
  if (target >= g.vertex_count()) throw std::invalid_argument("path target out of range");
  return tree_path(g, bfs_tree(g), target);
}

std::vector<Word> basis(const StallingsGraph& g) {
  BfsTree t = bfs_tree(g);

  // Geometric tree edges, normalized to positive orientation.
  std::vector<std::pair<std::uint32_t, std::pair<int, std::uint32_t>>> tree_edges;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (t.parent[v] == StallingsGraph::kNoTarget) continue;
    int s = t.parent_slot[v];
    Letter l = Letter::from_slot(s);
    std::uint32_t p = t.parent[v];
    if (l.inverted())
      tree_edges.push_back({v, {l.generator(), p}});
    else
      tree_edges.push_back({p, {l.generator(), v}});
  }
  std::sort(tree_edges.begin(), tree_edges.end());

  auto in_tree = [&](std::uint32_t src, int gen, std::uint32_t dst) {
    return std::binary_search(tree_edges.begin(), tree_edges.end(),
                              std::make_pair(src, std::make_pair(gen, dst)));
  };

  std::vector<Word> out;
  for (const auto& e : g.positive_edges()) {
    if (in_tree(e.src, e.generator, e.dst)) continue;
    Word head = tree_path(g, t, e.src);
    Word tail = tree_path(g, t, e.dst);
    out.push_back(concat_reduce(concat_reduce(head, Word({Letter(e.generator, false)})), invert(tail)));
  }
  return out;
}

VertexCensus census(const StallingsGraph& g) {
  if (g.alphabet().rank() != 2)
    throw std::invalid_argument("valence-3 census is defined for rank-2 alphabets only");
  VertexCensus c;
  c.slot_masks.resize(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    std::uint8_t mask = 0;
    int in = 0, out = 0;
    for (int s = 0; s < 4; ++s) {
      if (g.target_slot(v, s) != StallingsGraph::kNoTarget) {
        mask |= static_cast<std::uint8_t>(1u << s);
        // Even slots read a positive letter leaving v; odd slots are the
        // reverse ends of edges arriving at v.
        if (s & 1)
          ++in;
        else
          ++out;
      }
    }
    c.slot_masks[v] = mask;
    ++c.signature_spectrum[{in, out}];
    if (in + out == 3) {
      ++c.valence3_total;
      ++c.valence3_by_signature[{in, out}];
      for (int s = 0; s < 4; ++s)
        if (!(mask & (1u << s))) ++c.missing_slot[s];
    }
  }
  return c;
}

StallingsGraph canonical_form(const StallingsGraph& g) {
  BfsTree t = bfs_tree(g);
  std::vector<std::uint32_t> remap(g.vertex_count(), StallingsGraph::kNoTarget);
  for (std::uint32_t i = 0; i < t.order.size(); ++i) remap[t.order[i]] = i;

  const std::size_t slots = static_cast<std::size_t>(2) * g.alphabet().rank();
  std::vector<std::uint32_t> table(static_cast<std::size_t>(g.vertex_count()) * slots,
                                   StallingsGraph::kNoTarget);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint32_t w = g.target_slot(v, static_cast<int>(s));
      if (w != StallingsGraph::kNoTarget)
        table[static_cast<std::size_t>(remap[v]) * slots + s] = remap[w];
    }
  return StallingsGraph(g.alphabet(), g.vertex_count(), remap[g.base()], std::move(table));
}

std::string to_dot(const StallingsGraph& g) {
  std::ostringstream os;
  os << "digraph stallings {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  " << g.base() << " [shape=doublecircle];\n";
  for (const auto& e : g.positive_edges())
    os << "  " << e.src << " -> " << e.dst << " [label=\"" << g.alphabet().symbol(e.generator)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

StallingsGraph subgroup_graph(const std::vector<Word>& generators, const Alphabet& alphabet,
                              bool keep_base) {
  for (const Word& w : generators)
    if (!fits_alphabet(w, alphabet))
      throw std::invalid_argument("generator uses letters outside the alphabet");
  std::vector<Word> nonempty;
  for (const Word& w : generators)
    if (!w.empty()) nonempty.push_back(w);
  if (nonempty.empty()) return StallingsGraph::single_vertex(alphabet);
  return canonical_form(core(fold(build_bouquet(nonempty, alphabet)), keep_base));
}

}  // namespace stallings
