#include "revpre/pre1.hpp"

#include <limits>

namespace revpre {

McsPartition mcs_partition(const Graph& g, const Configuration& y) {
  const std::size_t n = g.num_vertices();
  if (y.size() != n) throw Error("configuration length does not match graph");

  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  McsPartition part;
  part.component.assign(n, kUnassigned);
  part.vertex_locked.assign(n, false);

  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (part.component[s] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(part.component_state.size());
    part.component_state.push_back(y[s]);
    part.component_locked.push_back(false);
    part.component[s] = id;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      bool locked = true;
      for (VertexId u : g.neighbors(v)) {
        if (y[u] != y[v]) {
          locked = false;
        } else if (part.component[u] == kUnassigned) {
          part.component[u] = id;
          queue.push_back(u);
        }
      }
      if (locked) {
        part.vertex_locked[v] = true;
        part.component_locked[id] = true;
      }
    }
  }
  return part;
}

std::optional<Configuration> decide_pre1(const Graph& g, const Configuration& y) {
  const McsPartition part = mcs_partition(g, y);
  const std::size_t n = g.num_vertices();

  for (VertexId v = 0; v < n; ++v) {
    const std::uint32_t own = part.component[v];
    bool has_unlocked_foreign = false;
    for (VertexId u : g.neighbors(v)) {
      const std::uint32_t other = part.component[u];
      if (other == own) continue;
      if (part.component_locked[own] && part.component_locked[other]) return std::nullopt;
      if (!part.component_locked[other]) has_unlocked_foreign = true;
    }
    if (!part.component_locked[own] && !has_unlocked_foreign) return std::nullopt;
  }

  Configuration witness(y);
  for (VertexId v = 0; v < n; ++v) {
    if (!part.component_locked[part.component[v]]) witness[v] = -y[v];
  }
  return witness;
}

}  // namespace revpre
