#include "revpre/generators.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace revpre {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph hub_and_spokes(std::size_t p) {
  std::vector<Edge> edges;
  const auto hub_spokes = static_cast<VertexId>(p);
  for (VertexId i = 1; i <= hub_spokes; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, hub_spokes + 2 * i - 1});
    edges.push_back({i, hub_spokes + 2 * i});
  }
  return Graph::from_edges(3 * p + 1, edges);
}

Graph tree_from_pruefer(std::size_t n, const std::vector<VertexId>& code) {
  if (n == 0) throw Error("a tree needs at least one vertex");
  if (n == 1) return Graph::from_edges(1, std::span<const Edge>{});
  if (code.size() != n - 2) throw Error("Pruefer code must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (VertexId c : code) {
    if (c >= n) throw Error("Pruefer code value out of range");
    ++degree[c];
  }
  // Linear-time decoding with a moving pointer to the smallest leaf.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (VertexId c : code) {
    edges.push_back({static_cast<VertexId>(leaf), c});
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({static_cast<VertexId>(leaf), static_cast<VertexId>(n - 1)});
  return Graph::from_edges(n, edges);
}

std::vector<Graph> all_labeled_trees(std::size_t n) {
  if (n == 0 || n > 9) throw Error("all_labeled_trees supports 1 <= n <= 9");
  if (n <= 2) return {path_graph(n)};
  std::vector<Graph> out;
  std::vector<VertexId> code(n - 2, 0);
  while (true) {
    out.push_back(tree_from_pruefer(n, code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 2) return path_graph(n);
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = static_cast<VertexId>(uniform_below(rng, n));
  return tree_from_pruefer(n, code);
}

Graph random_graph(std::size_t n, std::size_t m, Rng& rng) {
  if (n < 2 ? m > 0 : m > n * (n - 1) / 2) throw Error("too many edges for a simple graph");
  std::unordered_set<std::uint64_t> used;
  used.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    auto u = static_cast<VertexId>(uniform_below(rng, n));
    auto v = static_cast<VertexId>(uniform_below(rng, n));
    if (u == v) continue;
    const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
    if (used.insert(key).second) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph random_bounded_degree_graph(std::size_t n, std::size_t attempts, std::size_t max_degree,
                                  Rng& rng) {
  std::vector<std::size_t> degree(n, 0);
  std::unordered_set<std::uint64_t> used;
  std::vector<Edge> edges;
  if (n >= 2) {
    for (std::size_t a = 0; a < attempts; ++a) {
      auto u = static_cast<VertexId>(uniform_below(rng, n));
      auto v = static_cast<VertexId>(uniform_below(rng, n));
      if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
      const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
      if (!used.insert(key).second) continue;
      ++degree[u];
      ++degree[v];
      edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_regular_graph(std::size_t n, std::size_t d, Rng& rng) {
  if ((n * d) % 2 != 0 || d >= n) throw Error("no simple d-regular graph with these parameters");
  std::vector<VertexId> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<VertexId>(i / d);
  for (int restart = 0; restart < 1000; ++restart) {
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[uniform_below(rng, i)]);
    }
    std::vector<Edge> edges;
    edges.reserve(points.size() / 2);
    std::unordered_set<std::uint64_t> used;
    used.reserve(points.size());
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const VertexId u = points[i], v = points[i + 1];
      const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
      simple = u != v && used.insert(key).second;
      edges.push_back({u, v});
    }
    if (simple) return Graph::from_edges(n, edges);
  }
  throw Error("pairing model failed to produce a simple graph");
}

Configuration random_config(std::size_t n, Rng& rng) {
  Configuration y(n, State::Plus);
  for (VertexId v = 0; v < n; ++v) {
    if (uniform_below(rng, 2) == 0) y[v] = State::Minus;
  }
  return y;
}

}  // namespace revpre
