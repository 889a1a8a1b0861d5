#include "revpre/two_sat.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "revpre/error.hpp"

namespace revpre {

void TwoSatInstance::add_unit(Literal a) {
  if (a.var >= num_vars_) throw Error("literal variable out of range");
  clauses_.push_back({a, std::nullopt});
}

void TwoSatInstance::add_binary(Literal a, Literal b) {
  if (a.var >= num_vars_ || b.var >= num_vars_) throw Error("literal variable out of range");
  clauses_.push_back({a, b});
}

bool TwoSatInstance::satisfied_by(const Assignment& a) const {
  if (a.size() != num_vars_) return false;
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const TwoSatClause& c) {
    return holds(c.first, a) || (c.second && holds(*c.second, a));
  });
}

namespace {

// Node 2v is x_v, node 2v+1 is not x_v.
inline std::uint32_t node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

struct ImplicationGraph {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
};

ImplicationGraph build_implications(const TwoSatInstance& s) {
  const std::size_t nodes = 2 * s.num_vars();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  arcs.reserve(2 * s.clauses().size());
  for (const TwoSatClause& c : s.clauses()) {
    const Literal a = c.first;
    const Literal b = c.second.value_or(c.first);
    // (a or b): not a -> b, not b -> a. A unit clause becomes not a -> a.
    arcs.emplace_back(node(~a), node(b));
    arcs.emplace_back(node(~b), node(a));
  }
  ImplicationGraph g;
  g.offsets.assign(nodes + 1, 0);
  for (const auto& [from, to] : arcs) ++g.offsets[from + 1];
  for (std::size_t i = 0; i < nodes; ++i) g.offsets[i + 1] += g.offsets[i];
  g.targets.resize(arcs.size());
  std::vector<std::size_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [from, to] : arcs) g.targets[fill[from]++] = to;
  return g;
}

/// Tarjan's algorithm without recursion. Component ids come out in reverse
/// topological order of the condensation.
std::vector<std::uint32_t> tarjan_scc(const ImplicationGraph& g) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t nodes = g.offsets.size() - 1;
  std::vector<std::uint32_t> index(nodes, kUnvisited), low(nodes, 0), comp(nodes, kUnvisited);
  std::vector<bool> on_stack(nodes, false);
  std::vector<std::uint32_t> scc_stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;  // node, next arc
  std::uint32_t next_index = 0, next_comp = 0;

  for (std::uint32_t start = 0; start < nodes; ++start) {
    if (index[start] != kUnvisited) continue;
    call.emplace_back(start, g.offsets[start]);
    index[start] = low[start] = next_index++;
    scc_stack.push_back(start);
    on_stack[start] = true;

    while (!call.empty()) {
      auto& [v, arc] = call.back();
      if (arc < g.offsets[v + 1]) {
        const std::uint32_t w = g.targets[arc++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          scc_stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, g.offsets[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != done);
        ++next_comp;
      }
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<Assignment> solve_2sat(const TwoSatInstance& s) {
  const auto comp = tarjan_scc(build_implications(s));
  Assignment a(s.num_vars(), false);
  for (std::uint32_t v = 0; v < s.num_vars(); ++v) {
    const std::uint32_t t = comp[node(pos(v))];
    const std::uint32_t f = comp[node(neg(v))];
    if (t == f) return std::nullopt;
    // Earlier component ids are closer to the sinks of the condensation.
    a[v] = t < f;
  }
  return a;
}

void write_dimacs(std::ostream& out, const TwoSatInstance& s) {
  out << "p cnf " << s.num_vars() << ' ' << s.clauses().size() << '\n';
  for (const TwoSatClause& c : s.clauses()) {
    out << c.first.dimacs();
    if (c.second) out << ' ' << c.second->dimacs();
    out << " 0\n";
  }
}

}  // namespace revpre
