#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "revpre/dynamics.hpp"
#include "revpre/graph.hpp"
#include "revpre/literal.hpp"

namespace revpre {

enum class ClauseSemantics { ExactlyOne, ExactlyTwo };

using Clause3 = std::array<Literal, 3>;

/// 3-literal CNF whose clauses must each have exactly one (or exactly two)
/// true literals. Every clause ranges over three distinct variables.
class Cnf3 {
 public:
  Cnf3(std::size_t num_vars, std::vector<Clause3> clauses, ClauseSemantics semantics);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause3>& clauses() const noexcept { return clauses_; }
  ClauseSemantics semantics() const noexcept { return semantics_; }

  friend bool operator==(const Cnf3&, const Cnf3&) = default;

 private:
  std::size_t num_vars_;
  std::vector<Clause3> clauses_;
  ClauseSemantics semantics_;
};

/// DIMACS "p cnf N M" with three nonzero literals and a 0 per clause.
Cnf3 parse_dimacs_cnf3(std::istream& in, ClauseSemantics semantics = ClauseSemantics::ExactlyTwo);
Cnf3 parse_dimacs_cnf3(std::string_view text,
                       ClauseSemantics semantics = ClauseSemantics::ExactlyTwo);
void write_dimacs(std::ostream& out, const Cnf3& f);

/// Whitespace-separated signed 1-based literals mentioning every variable
/// exactly once; an optional trailing 0 and "c" comment lines are allowed.
Assignment parse_assignment(std::istream& in, std::size_t num_vars);
Assignment parse_assignment(std::string_view text, std::size_t num_vars);

/// Flips every literal; exactly-one solutions become exactly-two solutions.
Cnf3 invert_exactly1_to_exactly2(const Cnf3& f);

bool check_semantics(const Cnf3& f, const Assignment& a);

/// Exhaustive search for a satisfying assignment (num_vars <= 24).
std::optional<Assignment> find_assignment_bruteforce(const Cnf3& f);

// Gadget construction --------------------------------------------------------

enum class Role : std::uint8_t {
  LiteralPos,   // x_i
  LiteralNeg,   // not x_i
  Z,            // z_i
  ZPrime,       // z'_i
  U,            // u_{i,j}, pendant on x_i
  P,            // p_{i,j}, pendant on not x_i
  W,            // w_{i,j}, pendant on z_i
  WPrime,       // w'_{i,j}, pendant on z'_i
  Clause,       // c_i
  ClausePrime,  // c'_i
  B,            // b_{i,j}, pendant on c_i
  BPrime,       // b'_{i,j}, pendant on c'_i
};

std::string_view role_name(Role r);

/// Role of one gadget vertex. `index` is the 1-based variable or clause
/// number; `j` is the 1-based member index within a pendant family, 0 otherwise.
struct VertexRole {
  Role role;
  std::uint32_t index;
  std::uint32_t j = 0;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct ReductionInstance {
  Cnf3 formula;
  ProcessParams params;
  Graph graph;
  Configuration target;
  std::vector<VertexRole> roles;

  /// Vertex id of a role, if present.
  std::optional<VertexId> find(Role role, std::uint32_t index, std::uint32_t j = 0) const;
};

/// Closed-form gadget sizes: N(6k-6) + M(2k-1) vertices, N(6k-6) + M(2k+3) edges.
std::size_t gadget_vertex_count(std::size_t num_vars, std::size_t num_clauses, unsigned k);
std::size_t gadget_edge_count(std::size_t num_vars, std::size_t num_clauses, unsigned k);

/// Bipartite graph and target configuration whose predecessors correspond to
/// exactly-two assignments of f.
///
/// Numbering: for each variable i in order, the block
///   x_i, not x_i, z_i, z'_i, u_{i,1..2k-3}, p_{i,1..2k-3}, w_{i,1..k-2}, w'_{i,1..k-2};
/// then for each clause i, the block c_i, c'_i, b_{i,1..k-2}, b'_{i,1..k-1}.
/// Requires exactly-two semantics and k >= 2.
ReductionInstance build_instance(const Cnf3& f, ProcessParams p);

/// Predecessor of the gadget target built from an exactly-two assignment.
/// Throws Error when the assignment does not satisfy the formula.
Configuration witness_from_assignment(const ReductionInstance& r, const Assignment& a);

/// Predecessor back to an assignment: variable i is true iff y'(x_i) = +1.
Assignment assignment_from_witness(const ReductionInstance& r, const Configuration& w);

/// One line per vertex: "v <id> <ROLE> <index> [j]".
void write_role_map(std::ostream& out, const ReductionInstance& r);

}  // namespace revpre
