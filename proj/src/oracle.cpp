#include "revpre/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace revpre {

namespace {

struct Bitboard {
  std::size_t n = 0;
  std::vector<std::uint64_t> neighbor_mask;  // per vertex, in index encoding
  std::vector<unsigned> bit;                 // bit position of each vertex
};

Bitboard make_bitboard(const Graph& g, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  if (limit > oracle::kMaxLimit) {
    throw Error("oracle limit " + std::to_string(limit) + " exceeds the hard ceiling " +
                std::to_string(oracle::kMaxLimit));
  }
  if (n > limit) {
    throw Error("graph has " + std::to_string(n) + " vertices; oracle limit is " +
                std::to_string(limit));
  }
  Bitboard b;
  b.n = n;
  b.bit.resize(n);
  for (VertexId v = 0; v < n; ++v) b.bit[v] = static_cast<unsigned>(n - 1 - v);
  b.neighbor_mask.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) b.neighbor_mask[v] |= std::uint64_t{1} << b.bit[u];
  }
  return b;
}

inline bool next_bit(const Bitboard& b, std::uint64_t s, VertexId v, unsigned k) {
  const bool own = (s >> b.bit[v]) & 1U;
  const std::uint64_t differing = own ? (b.neighbor_mask[v] & ~s) : (b.neighbor_mask[v] & s);
  const bool flips = static_cast<unsigned>(std::popcount(differing)) >= k;
  return own != flips;
}

template <typename Visit>
void for_each_predecessor(const Graph& g, ProcessParams p, const Configuration& target,
                          std::size_t limit, Visit&& visit) {
  if (target.size() != g.num_vertices()) throw Error("target length does not match graph");
  const Bitboard b = make_bitboard(g, limit);
  const std::uint64_t goal = oracle::config_index(target);

  // Low-degree vertices first: they reject most candidates after one check.
  std::vector<VertexId> order(b.n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId c) { return g.degree(a) < g.degree(c); });

  const std::uint64_t total = std::uint64_t{1} << b.n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool ok = true;
    for (VertexId v : order) {
      if (next_bit(b, s, v, p.k()) != static_cast<bool>((goal >> b.bit[v]) & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) visit(s);
  }
}

}  // namespace

namespace oracle {

std::uint64_t config_index(const Configuration& y) {
  if (y.size() > 63) throw Error("configuration too long for index encoding");
  std::uint64_t index = 0;
  for (State s : y) index = (index << 1) | (s == State::Plus ? 1U : 0U);
  return index;
}

Configuration config_from_index(std::uint64_t index, std::size_t n) {
  Configuration y(n, State::Minus);
  for (VertexId v = 0; v < n; ++v) {
    if ((index >> (n - 1 - v)) & 1U) y[v] = State::Plus;
  }
  return y;
}

}  // namespace oracle

std::vector<Configuration> enumerate_predecessors(const Graph& g, ProcessParams p,
                                                  const Configuration& target, std::size_t limit) {
  std::vector<Configuration> out;
  for_each_predecessor(g, p, target, limit, [&](std::uint64_t s) {
    out.push_back(oracle::config_from_index(s, g.num_vertices()));
  });
  return out;
}

BigInt count_predecessors_bruteforce(const Graph& g, ProcessParams p, const Configuration& target,
                                     std::size_t limit) {
  std::uint64_t count = 0;
  for_each_predecessor(g, p, target, limit, [&](std::uint64_t) { ++count; });
  return BigInt(count);
}

std::vector<std::uint64_t> predecessor_histogram(const Graph& g, ProcessParams p,
                                                 std::size_t limit) {
  const Bitboard b = make_bitboard(g, limit);
  if (b.n > 26) throw Error("histogram needs a 2^n table; n must be at most 26");
  const std::uint64_t total = std::uint64_t{1} << b.n;
  std::vector<std::uint64_t> hist(total, 0);
  for (std::uint64_t s = 0; s < total; ++s) {
    std::uint64_t image = 0;
    for (VertexId v = 0; v < b.n; ++v) {
      if (next_bit(b, s, v, p.k())) image |= std::uint64_t{1} << b.bit[v];
    }
    ++hist[image];
  }
  return hist;
}

}  // namespace revpre
