#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revpre/error.hpp"

namespace revpre {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex state. Negation is the involution -1 <-> +1.
enum class State : std::int8_t { Minus = -1, Plus = 1 };

constexpr State operator-(State s) noexcept {
  return s == State::Plus ? State::Minus : State::Plus;
}

constexpr int to_int(State s) noexcept { return static_cast<int>(s); }

/// One state per vertex, indexed by VertexId.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::size_t n, State fill) : states_(n, fill) {}
  explicit Configuration(std::vector<State> states) : states_(std::move(states)) {}
  Configuration(std::initializer_list<int> values);

  std::size_t size() const noexcept { return states_.size(); }
  State operator[](VertexId v) const { return states_[v]; }
  State& operator[](VertexId v) { return states_[v]; }

  auto begin() const noexcept { return states_.begin(); }
  auto end() const noexcept { return states_.end(); }
  const std::vector<State>& states() const noexcept { return states_; }

  Configuration operator-() const;
  friend bool operator==(const Configuration&, const Configuration&) = default;

  /// Canonical "+1"/"-1" tokens separated by single spaces.
  std::string to_string() const;

 private:
  std::vector<State> states_;
};

/// Simple undirected graph on vertices 0..n-1 in compressed adjacency form.
/// Neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws Error on out-of-range endpoints, loops or duplicate edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Edges in insertion order, each as given by the caller.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(VertexId u, VertexId v) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<Edge> edges_;
};

// Text formats -------------------------------------------------------------

/// "n m" header followed by m "u v" lines; '#' lines and blank lines skipped.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
void write_graph(std::ostream& out, const Graph& g);

/// n tokens drawn from "+1", "-1", "+", "-".
Configuration parse_config(std::istream& in, std::size_t n);
Configuration parse_config(std::string_view text, std::size_t n);
void write_config(std::ostream& out, const Configuration& y);

// Structural queries -------------------------------------------------------

std::size_t max_degree(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Components sorted by smallest member; members ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// A proper 2-coloring (0/1 per vertex) if one exists.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const VertexId> perm);
Configuration relabel(const Configuration& y, std::span<const VertexId> perm);

/// Tree oriented away from a root. Children of each vertex are ascending.
class RootedTree {
 public:
  /// Throws Error when g is not a tree or root is out of range.
  RootedTree(Graph g, VertexId root);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }
  VertexId root() const noexcept { return root_; }

  std::optional<VertexId> parent(VertexId v) const {
    if (v == root_) return std::nullopt;
    return parent_[v];
  }
  std::span<const VertexId> children(VertexId v) const {
    return {children_.data() + child_offsets_[v], children_.data() + child_offsets_[v + 1]};
  }

  /// Breadth-first order from the root; parents precede their children.
  std::span<const VertexId> order() const noexcept { return order_; }

 private:
  Graph graph_;
  VertexId root_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offsets_;
  std::vector<VertexId> children_;
  std::vector<VertexId> order_;
};

inline RootedTree root_tree(Graph g, VertexId root) { return RootedTree(std::move(g), root); }

}  // namespace revpre
