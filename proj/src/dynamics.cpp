#include "revpre/dynamics.hpp"

namespace revpre {

namespace {

void require_size(const Graph& g, const Configuration& y) {
  if (y.size() != g.num_vertices()) {
    throw Error("configuration has " + std::to_string(y.size()) + " states but graph has " +
                std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

std::size_t differing_neighbors(const Graph& g, const Configuration& y, VertexId v) {
  std::size_t count = 0;
  for (VertexId u : g.neighbors(v)) count += y[u] != y[v];
  return count;
}

Configuration step(const Graph& g, ProcessParams p, const Configuration& y) {
  require_size(g, y);
  Configuration next(y);
  for (VertexId v = 0; v < y.size(); ++v) {
    if (differing_neighbors(g, y, v) >= p.k()) next[v] = -y[v];
  }
  return next;
}

Configuration simulate(const Graph& g, ProcessParams p, const Configuration& y, std::size_t t) {
  require_size(g, y);
  Configuration current(y);
  for (std::size_t i = 0; i < t; ++i) current = step(g, p, current);
  return current;
}

bool is_predecessor(const Graph& g, ProcessParams p, const Configuration& candidate,
                    const Configuration& target) {
  require_size(g, candidate);
  require_size(g, target);
  for (VertexId v = 0; v < candidate.size(); ++v) {
    bool flips = differing_neighbors(g, candidate, v) >= p.k();
    State next = flips ? -candidate[v] : candidate[v];
    if (next != target[v]) return false;
  }
  return true;
}

}  // namespace revpre
