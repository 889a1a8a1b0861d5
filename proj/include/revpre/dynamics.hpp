#pragma once

#include <cstddef>

#include "revpre/graph.hpp"

namespace revpre {

/// Threshold k of a k-reversible process. Always >= 1.
class ProcessParams {
 public:
  explicit ProcessParams(unsigned k) : k_(k) {
    if (k == 0) throw Error("k must be at least 1");
  }
  unsigned k() const noexcept { return k_; }

 private:
  unsigned k_;
};

/// Number of neighbors of v whose state differs from y(v).
std::size_t differing_neighbors(const Graph& g, const Configuration& y, VertexId v);

/// One synchronous step: v flips iff at least k neighbors disagree with it.
Configuration step(const Graph& g, ProcessParams p, const Configuration& y);

/// t-fold composition of step; t = 0 returns y.
Configuration simulate(const Graph& g, ProcessParams p, const Configuration& y, std::size_t t);

bool is_predecessor(const Graph& g, ProcessParams p, const Configuration& candidate,
                    const Configuration& target);

}  // namespace revpre
