#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "revpre/revpre.hpp"
#include "test_support.hpp"

using namespace revpre;

namespace {

Assignment from_mask(std::uint64_t mask, std::size_t n) {
  Assignment a(n);
  for (std::size_t v = 0; v < n; ++v) a[v] = (mask >> v) & 1u;
  return a;
}

Cnf3 random_formula(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Clause3> clauses;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint32_t> vars(n);
    for (std::uint32_t v = 0; v < n; ++v) vars[v] = v;
    Clause3 c;
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t pick = s + uniform_below(rng, n - s);
      std::swap(vars[s], vars[pick]);
      c[s] = Literal{vars[s], uniform_below(rng, 2) == 0};
    }
    clauses.push_back(c);
  }
  return Cnf3(n, std::move(clauses), ClauseSemantics::ExactlyTwo);
}

}  // namespace

TEST_CASE("formula semantics and inversion") {
  const Cnf3 f = testing::one_clause_formula();
  CHECK(check_semantics(f, {true, false, true}));
  CHECK_FALSE(check_semantics(f, {true, false, false}));
  CHECK_FALSE(check_semantics(f, {false, true, true}));

  const Cnf3 one(3, {{pos(0), pos(1), pos(2)}}, ClauseSemantics::ExactlyOne);
  const Cnf3 two = invert_exactly1_to_exactly2(one);
  CHECK(two.semantics() == ClauseSemantics::ExactlyTwo);
  CHECK(two.clauses()[0] == Clause3{neg(0), neg(1), neg(2)});
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    CHECK(check_semantics(one, from_mask(mask, 3)) == check_semantics(two, from_mask(mask, 3)));
  }
  CHECK_THROWS_AS(Cnf3(3, {{pos(0), neg(0), pos(1)}}, ClauseSemantics::ExactlyTwo), Error);
}

TEST_CASE("DIMACS and assignment parsing") {
  const Cnf3 f = parse_dimacs_cnf3("c demo\np cnf 3 1\n1 -2 -3 0\n");
  CHECK(f == testing::one_clause_formula());
  std::ostringstream out;
  write_dimacs(out, f);
  CHECK(parse_dimacs_cnf3(out.str()) == f);

  CHECK_THROWS_AS(parse_dimacs_cnf3("p cnf 3 1\n1 -1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs_cnf3("p cnf 3 1\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs_cnf3("p cnf 3 2\n1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs_cnf3("1 2 3 0\n"), ParseError);

  CHECK(parse_assignment("c x\n1 -2 3 0\n", 3) == Assignment{true, false, true});
  CHECK(parse_assignment("-3 2 1", 3) == Assignment{true, true, false});
  CHECK_THROWS_AS(parse_assignment("1 -1 3", 3), ParseError);
  CHECK_THROWS_AS(parse_assignment("1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_assignment("1 2 4", 3), ParseError);
}

TEST_CASE("one-clause gadget matches the reference layout for k = 3") {
  const ReductionInstance r = build_instance(testing::one_clause_formula(), ProcessParams(3));
  const testing::DrawnGadget& drawn = testing::drawn_one_clause_gadget();
  REQUIRE(r.graph.num_vertices() == 41);
  REQUIRE(r.graph.num_edges() == 45);
  CHECK(gadget_vertex_count(3, 1, 3) == 41);
  CHECK(gadget_edge_count(3, 1, 3) == 45);
  REQUIRE(drawn.nodes.size() == 41);
  REQUIRE(drawn.edges.size() == 45);

  // Pendant numbering is arbitrary; compare by role family.
  std::map<std::string, VertexId> id;
  for (const auto& node : drawn.nodes) {
    const auto v = r.find(node.role.role, node.role.index, node.role.j);
    REQUIRE(v.has_value());
    id[node.name] = *v;
  }
  CHECK(id.size() == 41);

  auto family = [&](VertexId v) {
    const VertexRole& role = r.roles[v];
    return std::make_pair(static_cast<int>(role.role), role.index);
  };
  std::multiset<std::pair<std::pair<int, std::uint32_t>, std::pair<int, std::uint32_t>>> built,
      expected;
  for (const Edge& e : r.graph.edges()) {
    auto a = family(e.u), b = family(e.v);
    if (b < a) std::swap(a, b);
    built.insert({a, b});
  }
  for (const auto& [x, y] : drawn.edges) {
    auto a = family(id.at(x)), b = family(id.at(y));
    if (b < a) std::swap(a, b);
    expected.insert({a, b});
  }
  CHECK(built == expected);

  // Targets per role family.
  std::map<std::pair<int, std::uint32_t>, std::multiset<int>> drawn_y, built_y;
  for (const auto& node : drawn.nodes) drawn_y[family(id.at(node.name))].insert(node.target);
  for (VertexId v = 0; v < r.graph.num_vertices(); ++v) built_y[family(v)].insert(to_int(r.target[v]));
  CHECK(drawn_y == built_y);

  const Configuration w = witness_from_assignment(r, {true, false, true});
  CHECK(is_predecessor(r.graph, r.params, w, r.target));
  std::map<std::pair<int, std::uint32_t>, std::multiset<int>> drawn_w, built_w;
  for (const auto& node : drawn.nodes) drawn_w[family(id.at(node.name))].insert(node.predecessor);
  for (VertexId v = 0; v < r.graph.num_vertices(); ++v) built_w[family(v)].insert(to_int(w[v]));
  CHECK(drawn_w == built_w);
  CHECK(assignment_from_witness(r, w) == Assignment{true, false, true});
}

TEST_CASE("gadget structure") {
  Rng rng(3);
  for (unsigned k = 2; k <= 5; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 3 + uniform_below(rng, 4);
      const std::size_t m = uniform_below(rng, 5);
      const ReductionInstance r = build_instance(random_formula(n, m, rng), ProcessParams(k));
      CHECK(r.graph.num_vertices() == gadget_vertex_count(n, m, k));
      CHECK(r.graph.num_edges() == gadget_edge_count(n, m, k));
      CHECK(r.roles.size() == r.graph.num_vertices());
      CHECK(is_bipartite(r.graph));
      for (VertexId v = 0; v < r.graph.num_vertices(); ++v) {
        const Role role = r.roles[v].role;
        if (role == Role::U || role == Role::P || role == Role::W || role == Role::WPrime ||
            role == Role::B || role == Role::BPrime) {
          CHECK(r.graph.degree(v) == 1);
        }
        if (role == Role::Z || role == Role::ZPrime) CHECK(r.graph.degree(v) == k);
      }
    }
  }
  const ReductionInstance k2 = build_instance(testing::one_clause_formula(), ProcessParams(2));
  CHECK(k2.graph.num_vertices() == 21);
  CHECK(k2.graph.num_edges() == 25);
  CHECK(k2.target[*k2.find(Role::BPrime, 1, 1)] == State::Minus);
}

TEST_CASE("witness construction") {
  const ReductionInstance r = build_instance(testing::one_clause_formula(), ProcessParams(4));
  CHECK_THROWS_AS(witness_from_assignment(r, {true, true, true}), Error);
  const Configuration w = witness_from_assignment(r, {false, false, false});
  CHECK(is_predecessor(r.graph, r.params, w, r.target));
  for (std::uint32_t i = 1; i <= 3; ++i) {
    CHECK(w[*r.find(Role::LiteralNeg, i)] == -w[*r.find(Role::LiteralPos, i)]);
  }
  CHECK(w[*r.find(Role::ClausePrime, 1)] == State::Plus);
  CHECK_THROWS_AS(build_instance(Cnf3(3, {}, ClauseSemantics::ExactlyOne), ProcessParams(2)), Error);
  CHECK_THROWS_AS(build_instance(testing::one_clause_formula(), ProcessParams(1)), Error);
}

TEST_CASE("every exactly-two assignment yields a verified witness") {
  Rng rng(44);
  for (unsigned k = 2; k <= 4; ++k) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 3 + uniform_below(rng, 2);
      const Cnf3 f = random_formula(n, uniform_below(rng, 4), rng);
      const ReductionInstance r = build_instance(f, ProcessParams(k));
      for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        const Assignment a = from_mask(mask, n);
        if (!check_semantics(f, a)) continue;
        const Configuration w = witness_from_assignment(r, a);
        CHECK(is_predecessor(r.graph, r.params, w, r.target));
        CHECK(assignment_from_witness(r, w) == a);
      }
    }
  }
}

TEST_CASE("role map format") {
  const ReductionInstance r = build_instance(testing::one_clause_formula(), ProcessParams(2));
  std::ostringstream out;
  write_role_map(out, r);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "v 0 LITERAL_POS 1");
  std::size_t lines = 1;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 21);
}
