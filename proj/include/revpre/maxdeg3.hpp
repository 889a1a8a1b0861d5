#pragma once

#include <optional>

#include "revpre/graph.hpp"
#include "revpre/two_sat.hpp"

namespace revpre {

/// 2SAT encoding of 2-reversible predecessor existence on a graph with
/// maximum degree 3. Variable v is true iff y'(v) = +1.
///
/// Per vertex with Y(v) = +1 (Y(v) = -1 negates every literal):
///   degree 0 or 1: (x_v)
///   degree 2, neighbors u, w: (x_v | x_u), (x_v | x_w), (x_u | x_w)
///   degree 3, neighbors u, w, z: (x_u | x_w), (x_u | x_z), (x_w | x_z)
/// Throws Error when some vertex has degree above 3.
TwoSatInstance build_2sat(const Graph& g, const Configuration& y);

/// Predecessor of y under the 2-reversible process when max degree <= 3.
std::optional<Configuration> decide_maxdeg3(const Graph& g, const Configuration& y);

}  // namespace revpre
