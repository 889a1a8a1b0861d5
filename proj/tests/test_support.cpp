#include "test_support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace revpre::testing {

namespace {

std::vector<std::pair<VertexId, VertexId>> pairs_of(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

}  // namespace

std::uint32_t edge_mask(const Graph& g) {
  const auto pairs = pairs_of(g.num_vertices());
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (g.has_edge(pairs[i].first, pairs[i].second)) mask |= 1U << i;
  }
  return mask;
}

Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  const auto pairs = pairs_of(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1U) edges.push_back({pairs[i].first, pairs[i].second});
  }
  return Graph::from_edges(n, edges);
}

std::uint32_t canonical_mask(std::size_t n, std::uint32_t mask) {
  const auto pairs = pairs_of(n);
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = index[pairs[i].second][pairs[i].first] = i;
  }
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::uint32_t best = mask;
  do {
    std::uint32_t image = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) image |= 1U << index[perm[pairs[i].first]][perm[pairs[i].second]];
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> all_connected_labeled_graphs(std::size_t n) {
  if (n == 0 || n > 6) throw Error("labeled enumeration supports 1 <= n <= 6");
  const std::size_t num_pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << num_pairs); ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_graph_classes(std::size_t n) {
  if (n == 0 || n > 7) throw Error("class enumeration supports 1 <= n <= 7");
  std::set<std::uint32_t> classes;
  if (n <= 6) {
    for (const Graph& g : all_connected_labeled_graphs(n)) {
      classes.insert(canonical_mask(n, edge_mask(g)));
    }
  } else {
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each smaller class by one vertex reaches every class.
    for (const Graph& base : connected_graph_classes(n - 1)) {
      for (std::uint32_t nb = 1; nb < (1U << (n - 1)); ++nb) {
        std::vector<Edge> edges = base.edges();
        for (VertexId u = 0; u + 1 < n; ++u) {
          if ((nb >> u) & 1U) edges.push_back({u, static_cast<VertexId>(n - 1)});
        }
        classes.insert(canonical_mask(n, edge_mask(Graph::from_edges(n, edges))));
      }
    }
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : classes) out.push_back(graph_from_mask(n, mask));
  return out;
}

std::vector<VertexId> random_permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  return perm;
}

}  // namespace revpre::testing

namespace revpre::testing {

const DrawnGadget& drawn_one_clause_gadget() {
  static const DrawnGadget gadget = [] {
    using R = Role;
    DrawnGadget d;
    d.nodes = {
        {"n6", {R::LiteralPos, 1}, +1, +1},  {"n4", {R::LiteralNeg, 1}, +1, -1},
        {"n5", {R::LiteralPos, 2}, +1, -1},  {"n1", {R::LiteralNeg, 2}, +1, +1},
        {"n2", {R::LiteralPos, 3}, +1, +1},  {"n3", {R::LiteralNeg, 3}, +1, -1},
        {"n7", {R::Clause, 1}, +1, +1},      {"n8", {R::ClausePrime, 1}, -1, +1},
        {"n9", {R::BPrime, 1, 1}, -1, -1},   {"n10", {R::BPrime, 1, 2}, -1, -1},
        {"n11", {R::B, 1, 1}, -1, -1},       {"n12", {R::U, 1, 1}, +1, +1},
        {"n13", {R::U, 1, 2}, +1, +1},       {"n100", {R::U, 1, 3}, -1, -1},
        {"n14", {R::P, 1, 1}, +1, +1},       {"n15", {R::P, 1, 2}, +1, +1},
        {"n101", {R::P, 1, 3}, -1, -1},      {"n16", {R::U, 2, 1}, +1, +1},
        {"n17", {R::U, 2, 2}, +1, +1},       {"n102", {R::U, 2, 3}, -1, -1},
        {"n18", {R::P, 2, 1}, +1, +1},       {"n19", {R::P, 2, 2}, +1, +1},
        {"n103", {R::P, 2, 3}, -1, -1},      {"n20", {R::U, 3, 1}, +1, +1},
        {"n21", {R::U, 3, 2}, +1, +1},       {"n104", {R::U, 3, 3}, -1, -1},
        {"n22", {R::P, 3, 1}, +1, +1},       {"n23", {R::P, 3, 2}, +1, +1},
        {"n105", {R::P, 3, 3}, -1, -1},      {"n24", {R::Z, 1}, +1, +1},
        {"n25", {R::ZPrime, 1}, -1, -1},     {"n26", {R::Z, 2}, +1, +1},
        {"n27", {R::ZPrime, 2}, -1, -1},     {"n28", {R::Z, 3}, +1, +1},
        {"n29", {R::ZPrime, 3}, -1, -1},     {"n30", {R::W, 1, 1}, -1, -1},
        {"n31", {R::W, 2, 1}, -1, -1},       {"n32", {R::W, 3, 1}, -1, -1},
        {"n33", {R::WPrime, 1, 1}, +1, +1},  {"n34", {R::WPrime, 2, 1}, +1, +1},
        {"n35", {R::WPrime, 3, 1}, +1, +1},
    };
    const char* drawn =
        "n100/n6, n101/n4, n102/n5, n103/n1, n104/n2, n105/n3, n8/n9, n8/n10, n11/n7,n7/n6,"
        "n7/n3,n7/n1,n8/n6,n8/n3,n8/n1,n24/n6,n24/n4,n25/n6, n25/n4, n26/n5, n26/n1, n27/n5,"
        " n27/n1, n28/n2,n28/n3, n29/n2, n29/n3, n12/n6, n13/n6, n14/n4, n15/n4, n16/n5, "
        "n17/n5, n18/n1, n19/n1, n20/n2, n21/n2, n22/n3, n23/n3, n30/n24, n31/n26, n32/n28, "
        "n33/n25, n34/n27, n35/n29";
    std::string text(drawn);
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      const auto slash = token.find('/');
      d.edges.emplace_back(token.substr(0, slash), token.substr(slash + 1));
      token.clear();
    };
    for (char ch : text) {
      if (ch == ',') {
        flush();
      } else if (ch != ' ') {
        token.push_back(ch);
      }
    }
    flush();
    return d;
  }();
  return gadget;
}

Cnf3 one_clause_formula() {
  return Cnf3(3, {{pos(0), neg(1), neg(2)}}, ClauseSemantics::ExactlyTwo);
}

}  // namespace revpre::testing
