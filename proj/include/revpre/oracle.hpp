#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "revpre/bigint.hpp"
#include "revpre/dynamics.hpp"
#include "revpre/graph.hpp"

namespace revpre {

/// Exhaustive ground truth over all 2^n candidate configurations.
///
/// Candidates are encoded as integers in which vertex v occupies bit n-1-v
/// (set bit = +1), so increasing indices are lexicographic with -1 < +1.
namespace oracle {

inline constexpr std::size_t kDefaultLimit = 20;
/// Hard ceiling regardless of what the caller asks for.
inline constexpr std::size_t kMaxLimit = 40;

std::uint64_t config_index(const Configuration& y);
Configuration config_from_index(std::uint64_t index, std::size_t n);

}  // namespace oracle

/// Every y' with step(g, k, y') = target, in lexicographic order (-1 < +1).
/// Throws Error when n exceeds limit.
std::vector<Configuration> enumerate_predecessors(const Graph& g, ProcessParams p,
                                                  const Configuration& target,
                                                  std::size_t limit = oracle::kDefaultLimit);

BigInt count_predecessors_bruteforce(const Graph& g, ProcessParams p, const Configuration& target,
                                     std::size_t limit = oracle::kDefaultLimit);

/// hist[oracle::config_index(y)] = number of predecessors of y, for all 2^n targets.
std::vector<std::uint64_t> predecessor_histogram(const Graph& g, ProcessParams p,
                                                 std::size_t limit = oracle::kDefaultLimit);

}  // namespace revpre
