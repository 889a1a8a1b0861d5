#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "revpre/graph.hpp"

namespace revpre {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling on raw engine output, so
/// results are identical on every standard library.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Fixed families.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center 0
Graph complete_graph(std::size_t n);

/// Hub 0 joined to spokes 1..p; spoke i carries leaves p+2i-1 and p+2i.
/// 3p + 1 vertices.
Graph hub_and_spokes(std::size_t p);

/// Tree decoded from a Pruefer sequence of length n-2 (values < n).
Graph tree_from_pruefer(std::size_t n, const std::vector<VertexId>& code);

/// Every labeled tree on n vertices (n^(n-2) of them), n <= 9.
std::vector<Graph> all_labeled_trees(std::size_t n);

// Random families.
Graph random_tree(std::size_t n, Rng& rng);
Graph random_graph(std::size_t n, std::size_t m, Rng& rng);
/// Up to `attempts` random edges, skipping loops, duplicates and edges that
/// would exceed max_degree.
Graph random_bounded_degree_graph(std::size_t n, std::size_t attempts, std::size_t max_degree,
                                  Rng& rng);
/// Simple d-regular graph by the pairing model with restarts; n*d must be even.
Graph random_regular_graph(std::size_t n, std::size_t d, Rng& rng);
Configuration random_config(std::size_t n, Rng& rng);

}  // namespace revpre
