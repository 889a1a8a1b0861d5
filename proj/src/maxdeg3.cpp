#include "revpre/maxdeg3.hpp"

namespace revpre {

TwoSatInstance build_2sat(const Graph& g, const Configuration& y) {
  const std::size_t n = g.num_vertices();
  if (y.size() != n) throw Error("configuration length does not match graph");
  if (max_degree(g) > 3) throw Error("maximum degree exceeds 3");

  TwoSatInstance s(n);
  for (VertexId v = 0; v < n; ++v) {
    const bool plus = y[v] == State::Plus;
    auto lit = [plus](VertexId u) { return Literal{u, plus}; };
    const auto nb = g.neighbors(v);
    switch (nb.size()) {
      case 0:
      case 1:
        s.add_unit(lit(v));
        break;
      case 2:
        s.add_binary(lit(v), lit(nb[0]));
        s.add_binary(lit(v), lit(nb[1]));
        s.add_binary(lit(nb[0]), lit(nb[1]));
        break;
      case 3:
        s.add_binary(lit(nb[0]), lit(nb[1]));
        s.add_binary(lit(nb[0]), lit(nb[2]));
        s.add_binary(lit(nb[1]), lit(nb[2]));
        break;
    }
  }
  return s;
}

std::optional<Configuration> decide_maxdeg3(const Graph& g, const Configuration& y) {
  const auto assignment = solve_2sat(build_2sat(g, y));
  if (!assignment) return std::nullopt;
  Configuration w(g.num_vertices(), State::Minus);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if ((*assignment)[v]) w[v] = State::Plus;
  }
  return w;
}

}  // namespace revpre
