#include <doctest.h>

#include "revpre/revpre.hpp"

using namespace revpre;

TEST_CASE("threshold examples") {
  CHECK(threshold(3, State::Plus, State::Plus, ParentContext::Minus, 2) == 2);
  CHECK(threshold(3, State::Plus, State::Plus, ParentContext::Plus, 2) == 1);
  CHECK(threshold(1, State::Plus, State::Plus, ParentContext::None, 2) == 0);
  CHECK(threshold(1, State::Plus, State::Plus, ParentContext::Plus, 2) == 0);
  CHECK(threshold(4, State::Minus, State::Plus, ParentContext::Plus, 3) == 3);
  CHECK(threshold(4, State::Minus, State::Plus, ParentContext::Minus, 3) == 2);
  CHECK(threshold(2, State::Plus, State::Minus, ParentContext::None, 2) == 2);
}

TEST_CASE("count_tree examples") {
  const RootedTree p3(path_graph(3), 0);
  CHECK(count_tree(p3, ProcessParams(2), Configuration{1, 1, 1}) == 2);
  CHECK(count_tree(p3, ProcessParams(2), Configuration{1, -1, 1}) == 0);
  CHECK(count_tree(RootedTree(path_graph(2), 0), ProcessParams(2), Configuration{1, -1}) == 1);
  CHECK(count_tree(RootedTree(star_graph(3), 0), ProcessParams(2), Configuration{-1, 1, 1, 1}) ==
        0);
  CHECK(count_tree(RootedTree(hub_and_spokes(3), 0), ProcessParams(2), Configuration(10, State::Plus)) ==
        8);
  CHECK(count_tree(RootedTree(Graph::from_edges(1, std::span<const Edge>{}), 0), ProcessParams(1),
                   Configuration{-1}) == 1);
}

TEST_CASE("count_tree matches the oracle, subset enumeration and decide_tree") {
  Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 12);
    const Graph g = random_tree(n, rng);
    const ProcessParams p(1 + static_cast<unsigned>(uniform_below(rng, 4)));
    const Configuration y = random_config(n, rng);
    const RootedTree t(g, static_cast<VertexId>(uniform_below(rng, n)));
    const BigInt count = count_tree(t, p, y);
    CHECK(count == count_predecessors_bruteforce(g, p, y));
    CHECK(count == count_tree_by_subsets(t, p, y));
    CHECK((count > 0) == decide_tree(t, p, y).has_value());
    CHECK(count == count_tree(t, p, -y));
  }
}

TEST_CASE("cfstate table entries agree between methods") {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const RootedTree t(random_tree(n, rng), 0);
    const ProcessParams p(1 + static_cast<unsigned>(uniform_below(rng, 3)));
    const Configuration y = random_config(n, rng);
    const CfstateTable fast = calc_cfstate(t, p, y);
    const CfstateTable slow = calc_cfstate_by_subsets(t, p, y);
    for (VertexId v = 0; v < n; ++v) {
      const std::vector<ParentContext> contexts =
          v == t.root() ? std::vector{ParentContext::None}
                        : std::vector{ParentContext::Minus, ParentContext::Plus};
      for (ParentContext c : contexts) {
        CHECK(fast.at(v, c).plus == slow.at(v, c).plus);
        CHECK(fast.at(v, c).minus == slow.at(v, c).minus);
      }
    }
  }
}

TEST_CASE("hub and spokes count is a power of two") {
  for (std::size_t p : {1u, 2u, 5u, 10u, 64u, 128u}) {
    const Graph g = hub_and_spokes(p);
    const BigInt count =
        count_tree(RootedTree(g, 0), ProcessParams(2), Configuration(g.num_vertices(), State::Plus));
    CHECK(count == BigInt(1) << p);
  }
}

TEST_CASE("subset enumeration refuses wide vertices") {
  const RootedTree star(star_graph(kMaxSubsetChildren + 1), 0);
  CHECK_THROWS_AS(calc_cfstate_by_subsets(star, ProcessParams(2),
                                          Configuration(kMaxSubsetChildren + 2, State::Plus)),
                  Error);
}
