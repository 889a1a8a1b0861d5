#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "revpre/dynamics.hpp"
#include "revpre/graph.hpp"

namespace revpre {

/// State of a vertex's parent in the predecessor under construction.
/// The root is evaluated with context None.
enum class ParentContext : std::uint8_t { Minus = 0, Plus = 1, None = 2 };

constexpr ParentContext context_of(State s) noexcept {
  return s == State::Plus ? ParentContext::Plus : ParentContext::Minus;
}

/// True iff a vertex in state `current` with `differing` disagreeing
/// neighbors ends in state `target` after one step.
constexpr bool vstate(State target, State current, std::size_t differing, unsigned k) noexcept {
  return current == target ? differing < k : differing >= k;
}

/// Forced predecessor state of v given its parent's state.
enum class Forced : std::int8_t { Unset = 0, Minus = -1, Plus = 1, Infeasible = 2 };

constexpr Forced forced_of(State s) noexcept {
  return s == State::Plus ? Forced::Plus : Forced::Minus;
}

/// Memo table of forced states, one entry per (vertex, parent context).
/// Entries are written once. Also records how many times each vertex was
/// requested during evaluation.
class FstateTable {
 public:
  explicit FstateTable(std::size_t n) : entries_(n), visits_(n, 0) {}

  Forced at(VertexId v, ParentContext c) const { return entries_[v][static_cast<std::size_t>(c)]; }
  std::span<const std::uint32_t> visits() const noexcept { return visits_; }

 private:
  friend FstateTable calc_fstate(const RootedTree&, ProcessParams, const Configuration&);

  std::vector<std::array<Forced, 3>> entries_;
  std::vector<std::uint32_t> visits_;
};

/// Memoized forced-state evaluation from the root, with an explicit stack.
///
/// For each requested (v, c) both candidate states are tried, the parent's
/// state Y(parent) first (+1 at the root); the first candidate whose children
/// are all feasible and whose disagreement count passes vstate wins. Each
/// vertex is requested at most four times.
FstateTable calc_fstate(const RootedTree& t, ProcessParams p, const Configuration& y);

/// Reads a witness top-down from a table whose root entry is feasible.
std::optional<Configuration> build_state(const RootedTree& t, const FstateTable& table);

/// Predecessor of y on a tree, or nullopt for a garden-of-Eden configuration. O(n).
std::optional<Configuration> decide_tree(const RootedTree& t, ProcessParams p,
                                         const Configuration& y);

}  // namespace revpre
