#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "revpre/dynamics.hpp"
#include "revpre/graph.hpp"

namespace revpre::cli {

enum class Method { Auto, Pre1, Tree, TwoSat, Oracle };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

/// Concrete solver for predecessor existence. Auto picks PRE1 for k = 1, TREE
/// for trees, TWOSAT for k = 2 with max degree <= 3, ORACLE when n fits the
/// limit. Explicit requests are checked for applicability. Throws Error.
Method choose_method(const Graph& g, ProcessParams p, Method requested, std::size_t oracle_limit);

/// Same for counting: TREE or ORACLE only.
Method choose_count_method(const Graph& g, Method requested, std::size_t oracle_limit);

/// Exit codes shared by every subcommand.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revpre::cli
