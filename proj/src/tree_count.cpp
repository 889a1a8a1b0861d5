#include "revpre/tree_count.hpp"

#include <bit>
#include <ranges>

namespace revpre {

std::size_t threshold(std::size_t degree, State y_v, State current, ParentContext parent,
                      unsigned k) {
  const bool parent_helps = parent == context_of(y_v);
  if (current == y_v) {
    // Staying needs fewer than k disagreeing neighbors.
    const std::size_t needed_neighbors = degree + 1 > k ? degree + 1 - k : 0;
    const std::size_t from_parent = parent_helps ? 1 : 0;
    return needed_neighbors > from_parent ? needed_neighbors - from_parent : 0;
  }
  // Flipping to y_v needs at least k neighbors already in y_v.
  return parent_helps ? k - 1 : k;
}

const CountPair& CfstateTable::at(VertexId v, ParentContext c) const {
  const auto& slot = entries_[v][static_cast<std::size_t>(c)];
  if (!slot) throw Error("cfstate entry not computed for this context");
  return *slot;
}

namespace {

void require_size(const RootedTree& t, const Configuration& y) {
  if (y.size() != t.num_vertices()) throw Error("configuration length does not match tree");
}

std::vector<ParentContext> contexts_for(const RootedTree& t, VertexId v) {
  if (v == t.root()) return {ParentContext::None};
  return {ParentContext::Minus, ParentContext::Plus};
}

/// Ways for children to have at least `need` members in state `counted`,
/// each child weighted by its own subtree count for that state.
BigInt children_ways_dp(const CfstateTable& table, std::span<const VertexId> kids,
                        ParentContext child_context, State counted, std::size_t need) {
  const std::size_t d = kids.size();
  if (need > d) return 0;
  std::vector<BigInt> row(d + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    const CountPair& child = table.at(kids[i - 1], child_context);
    const BigInt& same = child[counted];
    const BigInt& other = child[-counted];
    for (std::size_t j = i; j >= 1; --j) row[j] = row[j] * other + row[j - 1] * same;
    row[0] *= other;
  }
  BigInt sum = 0;
  for (std::size_t j = need; j <= d; ++j) sum += row[j];
  return sum;
}

BigInt children_ways_subsets(const CfstateTable& table, std::span<const VertexId> kids,
                             ParentContext child_context, State counted, std::size_t need) {
  const std::size_t d = kids.size();
  BigInt sum = 0;
  for (std::uint32_t subset = 0; subset < (1U << d); ++subset) {
    if (static_cast<std::size_t>(std::popcount(subset)) < need) continue;
    BigInt product = 1;
    for (std::size_t i = 0; i < d; ++i) {
      const CountPair& child = table.at(kids[i], child_context);
      product *= ((subset >> i) & 1U) ? child[counted] : child[-counted];
    }
    sum += product;
  }
  return sum;
}

}  // namespace

CfstateTable calc_cfstate(const RootedTree& t, ProcessParams p, const Configuration& y) {
  require_size(t, y);
  CfstateTable table(t.num_vertices());
  const Graph& g = t.graph();
  for (VertexId v : std::views::reverse(t.order())) {
    const auto kids = t.children(v);
    for (ParentContext c : contexts_for(t, v)) {
      CountPair pair;
      for (State rt : {State::Plus, State::Minus}) {
        const std::size_t need = threshold(g.degree(v), y[v], rt, c, p.k());
        (rt == State::Plus ? pair.plus : pair.minus) =
            children_ways_dp(table, kids, context_of(rt), y[v], need);
      }
      table.entries_[v][static_cast<std::size_t>(c)] = std::move(pair);
    }
  }
  return table;
}

CfstateTable calc_cfstate_by_subsets(const RootedTree& t, ProcessParams p,
                                     const Configuration& y) {
  require_size(t, y);
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    if (t.children(v).size() > kMaxSubsetChildren) {
      throw Error("subset enumeration supports at most " + std::to_string(kMaxSubsetChildren) +
                  " children per vertex");
    }
  }
  CfstateTable table(t.num_vertices());
  const Graph& g = t.graph();
  for (VertexId v : std::views::reverse(t.order())) {
    const auto kids = t.children(v);
    for (ParentContext c : contexts_for(t, v)) {
      CountPair pair;
      for (State rt : {State::Plus, State::Minus}) {
        const std::size_t need = threshold(g.degree(v), y[v], rt, c, p.k());
        (rt == State::Plus ? pair.plus : pair.minus) =
            children_ways_subsets(table, kids, context_of(rt), y[v], need);
      }
      table.entries_[v][static_cast<std::size_t>(c)] = std::move(pair);
    }
  }
  return table;
}

BigInt count_tree(const RootedTree& t, ProcessParams p, const Configuration& y) {
  return calc_cfstate(t, p, y).at(t.root(), ParentContext::None).total();
}

BigInt count_tree_by_subsets(const RootedTree& t, ProcessParams p, const Configuration& y) {
  return calc_cfstate_by_subsets(t, p, y).at(t.root(), ParentContext::None).total();
}

}  // namespace revpre
