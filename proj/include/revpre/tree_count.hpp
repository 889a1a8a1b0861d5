#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "revpre/bigint.hpp"
#include "revpre/dynamics.hpp"
#include "revpre/graph.hpp"
#include "revpre/tree_pre.hpp"

namespace revpre {

/// Least number of children that must be in state y_v in the predecessor for
/// a vertex of total degree `degree`, itself in state `current`, to end in
/// y_v. The parent counts toward y_v only when parent == context_of(y_v);
/// None (root) never does.
std::size_t threshold(std::size_t degree, State y_v, State current, ParentContext parent,
                      unsigned k);

/// Predecessor counts of a subtree T_v given the parent's state, split by v's
/// own predecessor state.
struct CountPair {
  BigInt plus;
  BigInt minus;

  const BigInt& operator[](State s) const { return s == State::Plus ? plus : minus; }
  BigInt total() const { return plus + minus; }
};

/// cfstate(v, c) for every vertex: contexts Minus/Plus for non-root vertices,
/// None for the root.
class CfstateTable {
 public:
  explicit CfstateTable(std::size_t n) : entries_(n) {}

  const CountPair& at(VertexId v, ParentContext c) const;

 private:
  friend CfstateTable calc_cfstate(const RootedTree&, ProcessParams, const Configuration&);
  friend CfstateTable calc_cfstate_by_subsets(const RootedTree&, ProcessParams,
                                              const Configuration&);

  std::vector<std::array<std::optional<CountPair>, 3>> entries_;
};

/// Bottom-up table of subtree counts. Each vertex's row runs a dynamic
/// program over its children counting how many end up in state Y(v), which
/// costs O(d'(v)^2) big-integer operations.
CfstateTable calc_cfstate(const RootedTree& t, ProcessParams p, const Configuration& y);

/// Same table via explicit enumeration of child subsets. Throws Error when
/// some vertex has more than kMaxSubsetChildren children.
inline constexpr std::size_t kMaxSubsetChildren = 10;
CfstateTable calc_cfstate_by_subsets(const RootedTree& t, ProcessParams p, const Configuration& y);

/// Exact number of predecessors of y on the tree. O(n^2).
BigInt count_tree(const RootedTree& t, ProcessParams p, const Configuration& y);
BigInt count_tree_by_subsets(const RootedTree& t, ProcessParams p, const Configuration& y);

}  // namespace revpre
