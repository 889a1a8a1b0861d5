#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "revpre/graph.hpp"

namespace revpre {

/// Maximal connected same-state subgraphs (MCSs) of a configuration.
///
/// A vertex is locked when every neighbor shares its state (isolated vertices
/// included); an MCS is locked when it contains a locked vertex. Locked
/// vertices can never flip, so a locked MCS keeps its state in any
/// predecessor.
struct McsPartition {
  std::vector<std::uint32_t> component;  // MCS id per vertex
  std::vector<State> component_state;
  std::vector<bool> component_locked;
  std::vector<bool> vertex_locked;

  std::size_t num_components() const noexcept { return component_state.size(); }
};

/// MCS ids are assigned in order of each component's smallest vertex.
McsPartition mcs_partition(const Graph& g, const Configuration& y);

/// Predecessor of y under the 1-reversible process, if one exists.
///
/// y has a predecessor iff no two locked MCSs are adjacent and every vertex
/// of an unlocked MCS has a neighbor in a different unlocked MCS. The
/// returned witness flips exactly the vertices of unlocked MCSs. O(n + m).
std::optional<Configuration> decide_pre1(const Graph& g, const Configuration& y);

}  // namespace revpre
