#include "revpre/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>

namespace revpre {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

bool skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r\n\f\v");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

// Configuration -------------------------------------------------------------

Configuration::Configuration(std::initializer_list<int> values) {
  states_.reserve(values.size());
  for (int v : values) {
    if (v != 1 && v != -1) throw Error("state must be -1 or +1");
    states_.push_back(v > 0 ? State::Plus : State::Minus);
  }
}

Configuration Configuration::operator-() const {
  Configuration out(*this);
  for (auto& s : out.states_) s = -s;
  return out;
}

std::string Configuration::to_string() const {
  std::string out;
  out.reserve(states_.size() * 3);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (i) out.push_back(' ');
    out += states_[i] == State::Plus ? "+1" : "-1";
  }
  return out;
}

// Graph ---------------------------------------------------------------------

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                  ") references a vertex >= n = " + std::to_string(n));
    }
    if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw Error("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
  }
  g.edges_.assign(edges.begin(), edges.end());
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

// Text formats --------------------------------------------------------------

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    }
    std::uint64_t a = parse_count(tokens[0], line_no);
    std::uint64_t b = parse_count(tokens[1], line_no);
    if (!header) {
      if (a > std::numeric_limits<VertexId>::max()) throw ParseError("vertex count too large");
      header.emplace(a, b);
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(b, 1u << 24)));
      continue;
    }
    if (edges.size() == header->second) {
      throw ParseError("line " + std::to_string(line_no) + ": more edge lines than the declared " +
                       std::to_string(header->second));
    }
    if (a >= header->first || b >= header->first) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  if (!header) throw ParseError("missing \"n m\" header");
  if (edges.size() != header->second) {
    throw ParseError("declared " + std::to_string(header->second) + " edges but found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(header->first), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Configuration parse_config(std::istream& in, std::size_t n) {
  std::vector<State> states;
  states.reserve(n);
  std::string token;
  while (in >> token) {
    if (token == "+1" || token == "+") {
      states.push_back(State::Plus);
    } else if (token == "-1" || token == "-") {
      states.push_back(State::Minus);
    } else {
      throw ParseError("unknown state token '" + token + "'");
    }
  }
  if (states.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " states, found " +
                     std::to_string(states.size()));
  }
  return Configuration(std::move(states));
}

Configuration parse_config(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  return parse_config(in, n);
}

void write_config(std::ostream& out, const Configuration& y) { out << y.to_string() << '\n'; }

// Structural queries --------------------------------------------------------

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId u : g.neighbors(queue[head])) {
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 && is_connected(g);
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  constexpr std::uint8_t kUncolored = 2;
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> color(n, kUncolored);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (color[s] != kUncolored) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (VertexId u : g.neighbors(v)) {
        if (color[u] == kUncolored) {
          color[u] = static_cast<std::uint8_t>(1 - color[v]);
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.num_vertices()) throw Error("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::from_edges(g.num_vertices(), edges);
}

Configuration relabel(const Configuration& y, std::span<const VertexId> perm) {
  if (perm.size() != y.size()) throw Error("permutation size mismatch");
  Configuration out(y.size(), State::Plus);
  for (VertexId v = 0; v < y.size(); ++v) out[perm[v]] = y[v];
  return out;
}

// RootedTree ----------------------------------------------------------------

RootedTree::RootedTree(Graph g, VertexId root) : graph_(std::move(g)), root_(root) {
  const std::size_t n = graph_.num_vertices();
  if (root >= n) throw Error("root " + std::to_string(root) + " out of range");
  if (graph_.num_edges() != n - 1) throw Error("graph is not a tree: m != n-1");

  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  parent_.assign(n, kNone);
  order_.reserve(n);
  order_.push_back(root);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    VertexId v = order_[head];
    for (VertexId u : graph_.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        parent_[u] = v;
        order_.push_back(u);
      }
    }
  }
  if (order_.size() != n) throw Error("graph is not a tree: disconnected");

  child_offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    child_offsets_[v + 1] = child_offsets_[v] + graph_.degree(v) - (v == root ? 0 : 1);
  }
  children_.reserve(n - 1);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : graph_.neighbors(v)) {
      if (u != parent_[v]) children_.push_back(u);
    }
  }
}

}  // namespace revpre
