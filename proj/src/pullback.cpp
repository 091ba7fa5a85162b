#include "stallings/pullback.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "stallings/detail/union_find.hpp"

namespace stallings {

PullbackReport product(const StallingsGraph& gU, const StallingsGraph& gV) {
  if (!(gU.alphabet() == gV.alphabet()))
    throw std::invalid_argument("fiber product requires a common alphabet");
  const std::uint32_t nU = gU.vertex_count();
  const std::uint32_t nV = gV.vertex_count();
  const int r = gU.alphabet().rank();
  const std::size_t total = static_cast<std::size_t>(nU) * nV;
  auto id = [nV](std::uint32_t u, std::uint32_t v) {
    return static_cast<std::uint32_t>(static_cast<std::size_t>(u) * nV + v);
  };

  detail::UnionFind uf(total);
  for (std::uint32_t u = 0; u < nU; ++u)
    for (std::uint32_t v = 0; v < nV; ++v)
      for (int gen = 0; gen < r; ++gen) {
        std::uint32_t u2 = gU.target_slot(u, 2 * gen);
        std::uint32_t v2 = gV.target_slot(v, 2 * gen);
        if (u2 != StallingsGraph::kNoTarget && v2 != StallingsGraph::kNoTarget)
          uf.unite(id(u, v), id(u2, v2));
      }

  // Edges per component root; each positive out-slot pair counts one
  // geometric product edge.
  std::vector<std::uint32_t> edges_at_root(total, 0);
  for (std::uint32_t u = 0; u < nU; ++u)
    for (std::uint32_t v = 0; v < nV; ++v)
      for (int gen = 0; gen < r; ++gen) {
        std::uint32_t u2 = gU.target_slot(u, 2 * gen);
        std::uint32_t v2 = gV.target_slot(v, 2 * gen);
        if (u2 != StallingsGraph::kNoTarget && v2 != StallingsGraph::kNoTarget)
          ++edges_at_root[uf.find(id(u, v))];
      }

  PullbackReport report;
  std::vector<std::uint32_t> slot_of_root(total, StallingsGraph::kNoTarget);
  // Ascending pair ids, so each component's pair list is sorted and the
  // components come out ordered by their least pair.
  for (std::uint32_t u = 0; u < nU; ++u)
    for (std::uint32_t v = 0; v < nV; ++v) {
      std::uint32_t root = uf.find(id(u, v));
      std::uint32_t slot = slot_of_root[root];
      if (slot == StallingsGraph::kNoTarget) {
        slot = static_cast<std::uint32_t>(report.components.size());
        slot_of_root[root] = slot;
        report.components.emplace_back();
        report.components.back().edge_count = edges_at_root[root];
      }
      report.components[slot].pairs.push_back({u, v});
    }

  std::uint32_t base_root = uf.find(id(gU.base(), gV.base()));
  for (auto& c : report.components) {
    c.vertex_count = static_cast<std::uint32_t>(c.pairs.size());
    c.chi0 = std::max(0, static_cast<int>(c.edge_count) - static_cast<int>(c.vertex_count));
    c.contains_bases = uf.find(id(c.pairs.front().u, c.pairs.front().v)) == base_root;
  }
  std::erase_if(report.components,
                [](const PullbackComponent& c) { return c.edge_count == 0 && c.vertex_count == 1; });
  for (const auto& c : report.components) report.lhs_sum += c.chi0;
  return report;
}

StallingsGraph component_graph(const PullbackComponent& c, const StallingsGraph& gU,
                               const StallingsGraph& gV) {
  if (c.pairs.empty()) throw std::invalid_argument("component has no vertex pairs");
  const std::size_t slots = static_cast<std::size_t>(2) * gU.alphabet().rank();
  auto index_of = [&](VertexPair p) {
    auto it = std::lower_bound(c.pairs.begin(), c.pairs.end(), p);
    if (it == c.pairs.end() || *it != p)
      throw std::logic_error("product transition leaves the component");
    return static_cast<std::uint32_t>(it - c.pairs.begin());
  };

  std::vector<std::uint32_t> table(c.pairs.size() * slots, StallingsGraph::kNoTarget);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const VertexPair p = c.pairs[i];
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint32_t u2 = gU.target_slot(p.u, static_cast<int>(s));
      std::uint32_t v2 = gV.target_slot(p.v, static_cast<int>(s));
      if (u2 != StallingsGraph::kNoTarget && v2 != StallingsGraph::kNoTarget)
        table[i * slots + s] = index_of({u2, v2});
    }
  }
  return StallingsGraph(gU.alphabet(), static_cast<std::uint32_t>(c.pairs.size()), 0,
                        std::move(table));
}

StallingsGraph intersection_graph(const StallingsGraph& gU, const StallingsGraph& gV) {
  if (!(gU.alphabet() == gV.alphabet()))
    throw std::invalid_argument("fiber product requires a common alphabet");
  const std::size_t slots = static_cast<std::size_t>(2) * gU.alphabet().rank();

  // BFS over the pairs reachable from (baseU, baseV); indices in visit order.
  std::map<VertexPair, std::uint32_t> index;
  std::vector<VertexPair> order;
  auto intern = [&](VertexPair p) {
    auto [it, fresh] = index.try_emplace(p, static_cast<std::uint32_t>(order.size()));
    if (fresh) order.push_back(p);
    return it->second;
  };
  std::queue<std::uint32_t> pending;
  pending.push(intern({gU.base(), gV.base()}));
  std::vector<std::uint32_t> table;
  while (!pending.empty()) {
    std::uint32_t i = pending.front();
    pending.pop();
    const VertexPair p = order[i];
    if (table.size() < (static_cast<std::size_t>(i) + 1) * slots)
      table.resize((static_cast<std::size_t>(i) + 1) * slots, StallingsGraph::kNoTarget);
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint32_t u2 = gU.target_slot(p.u, static_cast<int>(s));
      std::uint32_t v2 = gV.target_slot(p.v, static_cast<int>(s));
      if (u2 == StallingsGraph::kNoTarget || v2 == StallingsGraph::kNoTarget) continue;
      std::size_t before = order.size();
      std::uint32_t j = intern({u2, v2});
      if (order.size() > before) pending.push(j);
      table[static_cast<std::size_t>(i) * slots + s] = j;
    }
  }
  table.resize(order.size() * slots, StallingsGraph::kNoTarget);
  StallingsGraph component(gU.alphabet(), static_cast<std::uint32_t>(order.size()), 0,
                           std::move(table));
  return canonical_form(core(component, /*keep_base=*/true));
}

Witness make_witness(const PullbackComponent& c, const StallingsGraph& gU,
                     const StallingsGraph& gV) {
  StallingsGraph cg = component_graph(c, gU, gV);
  const VertexPair anchor = c.base_pair();
  Word alpha = path_word_from_base(gU, anchor.u);
  Word beta = path_word_from_base(gV, anchor.v);
  Witness w;
  w.x = concat_reduce(beta, invert(alpha));
  for (const Word& b : basis(cg))
    w.generators.push_back(concat_reduce(concat_reduce(alpha, b), invert(alpha)));
  return w;
}

ShncResult shnc_check(const std::vector<Word>& gensU, const std::vector<Word>& gensV,
                      const Alphabet& alphabet) {
  StallingsGraph gU = subgroup_graph(gensU, alphabet, /*keep_base=*/true);
  StallingsGraph gV = subgroup_graph(gensV, alphabet, /*keep_base=*/true);
  PullbackReport report = product(gU, gV);
  ShncVerdict verdict;
  verdict.lhs = report.lhs_sum;
  verdict.rhs = chi0(gU) * chi0(gV);
  verdict.holds = verdict.lhs <= verdict.rhs;
  verdict.margin = verdict.rhs - verdict.lhs;
  return ShncResult{verdict, std::move(report), std::move(gU), std::move(gV)};
}

}  // namespace stallings
