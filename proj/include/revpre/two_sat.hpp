#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "revpre/literal.hpp"

namespace revpre {

/// Disjunction of one or two literals.
struct TwoSatClause {
  Literal first;
  std::optional<Literal> second;

  friend bool operator==(const TwoSatClause&, const TwoSatClause&) = default;
};

class TwoSatInstance {
 public:
  explicit TwoSatInstance(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<TwoSatClause>& clauses() const noexcept { return clauses_; }

  void add_unit(Literal a);
  void add_binary(Literal a, Literal b);

  bool satisfied_by(const Assignment& a) const;

 private:
  std::size_t num_vars_;
  std::vector<TwoSatClause> clauses_;
};

/// Satisfying assignment via strongly connected components of the
/// implication graph (iterative Tarjan), or nullopt if unsatisfiable.
/// Linear in variables plus clauses and deterministic for a fixed clause order.
std::optional<Assignment> solve_2sat(const TwoSatInstance& s);

/// "p cnf N M" followed by 0-terminated clauses with 1-based signed ids.
void write_dimacs(std::ostream& out, const TwoSatInstance& s);

}  // namespace revpre
