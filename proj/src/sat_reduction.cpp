#include "revpre/sat_reduction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace revpre {

// Cnf3 -----------------------------------------------------------------------

Cnf3::Cnf3(std::size_t num_vars, std::vector<Clause3> clauses, ClauseSemantics semantics)
    : num_vars_(num_vars), clauses_(std::move(clauses)), semantics_(semantics) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const Clause3& c = clauses_[i];
    for (const Literal& l : c) {
      if (l.var >= num_vars_) {
        throw Error("clause " + std::to_string(i + 1) + " uses an undeclared variable");
      }
    }
    if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
      throw Error("clause " + std::to_string(i + 1) + " must use three distinct variables");
    }
  }
}

Cnf3 parse_dimacs_cnf3(std::istream& in, ClauseSemantics semantics) {
  std::string line;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Clause3> clauses;
  std::vector<long long> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long long n = -1, m = -1;
      if (header || !(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) {
        throw ParseError("malformed or repeated \"p cnf N M\" header");
      }
      header.emplace(n, m);
      continue;
    }
    if (!header) throw ParseError("clause data before \"p cnf\" header");
    std::istringstream values(line);
    long long lit = 0;
    while (values >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError("clause " + std::to_string(clauses.size() + 1) + " has " +
                           std::to_string(pending.size()) + " literals; expected 3");
        }
        Clause3 c;
        for (std::size_t i = 0; i < 3; ++i) c[i] = Literal::from_dimacs(pending[i]);
        clauses.push_back(c);
        pending.clear();
        continue;
      }
      if (lit > header->first || -lit > header->first) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds declared variable count");
      }
      pending.push_back(lit);
    }
    if (!values.eof()) throw ParseError("non-integer token in clause data");
  }
  if (!header) throw ParseError("missing \"p cnf N M\" header");
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0");
  if (static_cast<long long>(clauses.size()) != header->second) {
    throw ParseError("declared " + std::to_string(header->second) + " clauses but found " +
                     std::to_string(clauses.size()));
  }
  try {
    return Cnf3(static_cast<std::size_t>(header->first), std::move(clauses), semantics);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Cnf3 parse_dimacs_cnf3(std::string_view text, ClauseSemantics semantics) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_cnf3(in, semantics);
}

void write_dimacs(std::ostream& out, const Cnf3& f) {
  out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
  for (const Clause3& c : f.clauses()) {
    out << c[0].dimacs() << ' ' << c[1].dimacs() << ' ' << c[2].dimacs() << " 0\n";
  }
}

Assignment parse_assignment(std::istream& in, std::size_t num_vars) {
  std::vector<int> seen(num_vars, 0);  // 0 unset, +1 true, -1 false
  std::string line;
  bool terminated = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token[0] == 'c') break;
      if (token == "v") continue;
      if (terminated) throw ParseError("literal after terminating 0");
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(token, &used);
        if (used != token.size()) throw ParseError("bad literal '" + token + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad literal '" + token + "'");
      }
      if (lit == 0) {
        terminated = true;
        continue;
      }
      const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > num_vars) throw ParseError("assignment mentions variable " + std::to_string(var));
      if (seen[var - 1] != 0) throw ParseError("variable " + std::to_string(var) + " assigned twice");
      seen[var - 1] = lit > 0 ? 1 : -1;
    }
  }
  Assignment a(num_vars, false);
  for (std::size_t v = 0; v < num_vars; ++v) {
    if (seen[v] == 0) throw ParseError("variable " + std::to_string(v + 1) + " is unassigned");
    a[v] = seen[v] > 0;
  }
  return a;
}

Assignment parse_assignment(std::string_view text, std::size_t num_vars) {
  std::istringstream in{std::string(text)};
  return parse_assignment(in, num_vars);
}

Cnf3 invert_exactly1_to_exactly2(const Cnf3& f) {
  if (f.semantics() != ClauseSemantics::ExactlyOne) {
    throw Error("literal inversion expects an exactly-one formula");
  }
  std::vector<Clause3> clauses = f.clauses();
  for (Clause3& c : clauses) {
    for (Literal& l : c) l = ~l;
  }
  return Cnf3(f.num_vars(), std::move(clauses), ClauseSemantics::ExactlyTwo);
}

bool check_semantics(const Cnf3& f, const Assignment& a) {
  if (a.size() != f.num_vars()) throw Error("assignment size does not match variable count");
  const int wanted = f.semantics() == ClauseSemantics::ExactlyOne ? 1 : 2;
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause3& c) {
    return holds(c[0], a) + holds(c[1], a) + holds(c[2], a) == wanted;
  });
}

std::optional<Assignment> find_assignment_bruteforce(const Cnf3& f) {
  const std::size_t n = f.num_vars();
  if (n > 24) throw Error("exhaustive search limited to 24 variables");
  Assignment a(n, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1U;
    if (check_semantics(f, a)) return a;
  }
  return std::nullopt;
}

// Gadget ---------------------------------------------------------------------

std::string_view role_name(Role r) {
  switch (r) {
    case Role::LiteralPos: return "LITERAL_POS";
    case Role::LiteralNeg: return "LITERAL_NEG";
    case Role::Z: return "Z";
    case Role::ZPrime: return "ZP";
    case Role::U: return "U";
    case Role::P: return "P";
    case Role::W: return "W";
    case Role::WPrime: return "WP";
    case Role::Clause: return "CLAUSE";
    case Role::ClausePrime: return "CLAUSEP";
    case Role::B: return "B";
    case Role::BPrime: return "BP";
  }
  return "?";
}

std::optional<VertexId> ReductionInstance::find(Role role, std::uint32_t index,
                                                std::uint32_t j) const {
  const VertexRole key{role, index, j};
  auto it = std::find(roles.begin(), roles.end(), key);
  if (it == roles.end()) return std::nullopt;
  return static_cast<VertexId>(it - roles.begin());
}

std::size_t gadget_vertex_count(std::size_t num_vars, std::size_t num_clauses, unsigned k) {
  return num_vars * (6 * k - 6) + num_clauses * (2 * k - 1);
}

std::size_t gadget_edge_count(std::size_t num_vars, std::size_t num_clauses, unsigned k) {
  return num_vars * (6 * k - 6) + num_clauses * (2 * k + 3);
}

namespace {

struct VariableBlock {
  VertexId x, not_x, z, z_prime;
};

}  // namespace

ReductionInstance build_instance(const Cnf3& f, ProcessParams p) {
  const unsigned k = p.k();
  if (k < 2) throw Error("gadget construction requires k >= 2");
  if (f.semantics() != ClauseSemantics::ExactlyTwo) {
    throw Error("gadget construction expects an exactly-two formula");
  }

  std::vector<VertexRole> roles;
  std::vector<State> target;
  std::vector<Edge> edges;
  roles.reserve(gadget_vertex_count(f.num_vars(), f.clauses().size(), k));

  auto add = [&](Role role, std::uint32_t index, std::uint32_t j, State y) {
    roles.push_back({role, index, j});
    target.push_back(y);
    return static_cast<VertexId>(roles.size() - 1);
  };

  std::vector<VariableBlock> blocks;
  for (std::uint32_t i = 1; i <= f.num_vars(); ++i) {
    VariableBlock b{};
    b.x = add(Role::LiteralPos, i, 0, State::Plus);
    b.not_x = add(Role::LiteralNeg, i, 0, State::Plus);
    b.z = add(Role::Z, i, 0, State::Plus);
    b.z_prime = add(Role::ZPrime, i, 0, State::Minus);
    edges.push_back({b.x, b.z});
    edges.push_back({b.x, b.z_prime});
    edges.push_back({b.not_x, b.z});
    edges.push_back({b.not_x, b.z_prime});
    for (std::uint32_t j = 1; j <= 2 * k - 3; ++j) {
      edges.push_back({b.x, add(Role::U, i, j, j <= k - 1 ? State::Plus : State::Minus)});
    }
    for (std::uint32_t j = 1; j <= 2 * k - 3; ++j) {
      edges.push_back({b.not_x, add(Role::P, i, j, j <= k - 1 ? State::Plus : State::Minus)});
    }
    for (std::uint32_t j = 1; j + 2 <= k; ++j) edges.push_back({b.z, add(Role::W, i, j, State::Minus)});
    for (std::uint32_t j = 1; j + 2 <= k; ++j) {
      edges.push_back({b.z_prime, add(Role::WPrime, i, j, State::Plus)});
    }
    blocks.push_back(b);
  }

  for (std::uint32_t i = 1; i <= f.clauses().size(); ++i) {
    const VertexId c = add(Role::Clause, i, 0, State::Plus);
    const VertexId c_prime = add(Role::ClausePrime, i, 0, State::Minus);
    for (std::uint32_t j = 1; j + 2 <= k; ++j) edges.push_back({c, add(Role::B, i, j, State::Minus)});
    for (std::uint32_t j = 1; j + 1 <= k; ++j) {
      edges.push_back({c_prime, add(Role::BPrime, i, j, State::Minus)});
    }
    for (const Literal& l : f.clauses()[i - 1]) {
      const VertexId lit = l.positive ? blocks[l.var].x : blocks[l.var].not_x;
      edges.push_back({c, lit});
      edges.push_back({c_prime, lit});
    }
  }

  Graph g = Graph::from_edges(roles.size(), edges);
  return ReductionInstance{f, p, std::move(g), Configuration(std::move(target)), std::move(roles)};
}

Configuration witness_from_assignment(const ReductionInstance& r, const Assignment& a) {
  if (!check_semantics(r.formula, a)) {
    throw Error("assignment does not satisfy every clause with exactly two true literals");
  }
  Configuration w(r.target);
  for (VertexId v = 0; v < r.roles.size(); ++v) {
    const VertexRole& role = r.roles[v];
    switch (role.role) {
      case Role::LiteralPos:
        w[v] = a[role.index - 1] ? State::Plus : State::Minus;
        break;
      case Role::LiteralNeg:
        w[v] = a[role.index - 1] ? State::Minus : State::Plus;
        break;
      case Role::ClausePrime:
        w[v] = State::Plus;
        break;
      default:
        // z, z', pendants and c_i keep their target state.
        break;
    }
  }
  return w;
}

Assignment assignment_from_witness(const ReductionInstance& r, const Configuration& w) {
  if (w.size() != r.roles.size()) throw Error("witness length does not match gadget");
  Assignment a(r.formula.num_vars(), false);
  for (VertexId v = 0; v < r.roles.size(); ++v) {
    if (r.roles[v].role == Role::LiteralPos) a[r.roles[v].index - 1] = w[v] == State::Plus;
  }
  return a;
}

void write_role_map(std::ostream& out, const ReductionInstance& r) {
  for (VertexId v = 0; v < r.roles.size(); ++v) {
    const VertexRole& role = r.roles[v];
    out << "v " << v << ' ' << role_name(role.role) << ' ' << role.index;
    if (role.j != 0) out << ' ' << role.j;
    out << '\n';
  }
}

}  // namespace revpre
