#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "revpre/revpre.hpp"

namespace revpre::cli {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Pre1: return "pre1";
    case Method::Tree: return "tree";
    case Method::TwoSat: return "twosat";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Auto, Method::Pre1, Method::Tree, Method::TwoSat, Method::Oracle}) {
    if (method_name(m) == name) return m;
  }
  throw Error("unknown method '" + std::string(name) + "'");
}

namespace {

void require_oracle_fits(const Graph& g, std::size_t oracle_limit) {
  if (g.num_vertices() > oracle_limit) {
    throw Error("instance class is NP-complete in general and exceeds oracle limit (n = " +
                std::to_string(g.num_vertices()) + ", limit = " + std::to_string(oracle_limit) +
                ")");
  }
}

}  // namespace

Method choose_method(const Graph& g, ProcessParams p, Method requested, std::size_t oracle_limit) {
  const bool tree = is_tree(g);
  const bool bounded = p.k() == 2 && max_degree(g) <= 3;
  switch (requested) {
    case Method::Auto:
      if (p.k() == 1) return Method::Pre1;
      if (tree) return Method::Tree;
      if (bounded) return Method::TwoSat;
      require_oracle_fits(g, oracle_limit);
      return Method::Oracle;
    case Method::Pre1:
      if (p.k() != 1) throw Error("method pre1 requires k = 1");
      return requested;
    case Method::Tree:
      if (!tree) throw Error("method tree requires a tree");
      return requested;
    case Method::TwoSat:
      if (!bounded) throw Error("method twosat requires k = 2 and maximum degree <= 3");
      return requested;
    case Method::Oracle:
      require_oracle_fits(g, oracle_limit);
      return requested;
  }
  throw Error("unreachable method");
}

Method choose_count_method(const Graph& g, Method requested, std::size_t oracle_limit) {
  switch (requested) {
    case Method::Auto:
      if (is_tree(g)) return Method::Tree;
      require_oracle_fits(g, oracle_limit);
      return Method::Oracle;
    case Method::Tree:
      if (!is_tree(g)) throw Error("method tree requires a tree");
      return requested;
    case Method::Oracle:
      require_oracle_fits(g, oracle_limit);
      return requested;
    default:
      throw Error("counting supports methods auto, tree and oracle");
  }
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  return out;
}

Graph read_graph(const std::string& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

Configuration read_config(const std::string& path, std::size_t n) {
  auto in = open_input(path);
  return parse_config(in, n);
}

Cnf3 read_cnf(const std::string& path, bool exactly_one) {
  auto in = open_input(path);
  if (exactly_one) return invert_exactly1_to_exactly2(parse_dimacs_cnf3(in, ClauseSemantics::ExactlyOne));
  return parse_dimacs_cnf3(in, ClauseSemantics::ExactlyTwo);
}

struct Options {
  unsigned k = 0;
  std::string graph, config, candidate, cnf, out_prefix, assignment, dimacs;
  std::string method = "auto";
  std::size_t steps = 1;
  std::size_t oracle_limit = oracle::kDefaultLimit;
  bool exactly_one = false;

  std::string kind;
  std::uint64_t seed = 1;
  std::size_t n = 0, m = 0, p = 0, max_degree = 3;
};

std::optional<Configuration> solve(const Graph& g, ProcessParams params, const Configuration& y,
                                   Method method, const Options& opt, std::ostream& err) {
  switch (method) {
    case Method::Pre1:
      return decide_pre1(g, y);
    case Method::Tree:
      return decide_tree(RootedTree(g, 0), params, y);
    case Method::TwoSat: {
      if (!opt.dimacs.empty()) {
        auto out = open_output(opt.dimacs);
        write_dimacs(out, build_2sat(g, y));
        err << "wrote " << opt.dimacs << '\n';
      }
      return decide_maxdeg3(g, y);
    }
    case Method::Oracle: {
      auto all = enumerate_predecessors(g, params, y, opt.oracle_limit);
      if (all.empty()) return std::nullopt;
      return all.front();
    }
    case Method::Auto:
      break;
  }
  throw Error("method not resolved");
}

int cmd_step(const Options& opt, std::ostream& out) {
  const Graph g = read_graph(opt.graph);
  const Configuration y = read_config(opt.config, g.num_vertices());
  write_config(out, simulate(g, ProcessParams(opt.k), y, opt.steps));
  return kExitYes;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Graph g = read_graph(opt.graph);
  const Configuration target = read_config(opt.config, g.num_vertices());
  const Configuration candidate = read_config(opt.candidate, g.num_vertices());
  const bool ok = is_predecessor(g, ProcessParams(opt.k), candidate, target);
  out << (ok ? "YES" : "NO") << '\n';
  return ok ? kExitYes : kExitNo;
}

int cmd_pre(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph(opt.graph);
  const Configuration y = read_config(opt.config, g.num_vertices());
  const ProcessParams params(opt.k);
  const Method method = choose_method(g, params, parse_method(opt.method), opt.oracle_limit);
  err << "method: " << method_name(method) << '\n';
  const auto witness = solve(g, params, y, method, opt, err);
  if (!witness) {
    out << "NO\n";
    return kExitNo;
  }
  if (!is_predecessor(g, params, *witness, y)) {
    throw std::logic_error("solver returned a witness that does not verify");
  }
  out << "YES\n";
  write_config(out, *witness);
  return kExitYes;
}

int cmd_count(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph(opt.graph);
  const Configuration y = read_config(opt.config, g.num_vertices());
  const ProcessParams params(opt.k);
  const Method method = choose_count_method(g, parse_method(opt.method), opt.oracle_limit);
  err << "method: " << method_name(method) << '\n';
  const BigInt count = method == Method::Tree
                           ? count_tree(RootedTree(g, 0), params, y)
                           : count_predecessors_bruteforce(g, params, y, opt.oracle_limit);
  out << count.str() << '\n';
  return kExitYes;
}

int cmd_reduce(const Options& opt, std::ostream& err) {
  const Cnf3 f = read_cnf(opt.cnf, opt.exactly_one);
  const ReductionInstance r = build_instance(f, ProcessParams(opt.k));
  {
    auto g = open_output(opt.out_prefix + ".graph");
    write_graph(g, r.graph);
    auto c = open_output(opt.out_prefix + ".config");
    write_config(c, r.target);
    auto m = open_output(opt.out_prefix + ".map");
    write_role_map(m, r);
  }
  err << "wrote " << opt.out_prefix << ".{graph,config,map}: " << r.graph.num_vertices()
      << " vertices, " << r.graph.num_edges() << " edges\n";
  return kExitYes;
}

int cmd_witness(const Options& opt, std::ostream& out) {
  const Cnf3 f = read_cnf(opt.cnf, opt.exactly_one);
  auto in = open_input(opt.assignment);
  const Assignment a = parse_assignment(in, f.num_vars());
  const ReductionInstance r = build_instance(f, ProcessParams(opt.k));
  write_config(out, witness_from_assignment(r, a));
  return kExitYes;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  Rng rng(opt.seed);
  if (opt.kind == "config") {
    write_config(out, random_config(opt.n, rng));
    return kExitYes;
  }
  Graph g;
  if (opt.kind == "tree") {
    g = random_tree(opt.n, rng);
  } else if (opt.kind == "path") {
    g = path_graph(opt.n);
  } else if (opt.kind == "graph") {
    g = random_graph(opt.n, opt.m, rng);
  } else if (opt.kind == "bounded") {
    g = random_bounded_degree_graph(opt.n, opt.m, opt.max_degree, rng);
  } else if (opt.kind == "cubic") {
    g = random_regular_graph(opt.n, 3, rng);
  } else if (opt.kind == "spokes") {
    g = hub_and_spokes(opt.p);
  } else {
    throw Error("unknown kind '" + opt.kind + "'");
  }
  write_graph(out, g);
  return kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Predecessor existence and counting for k-reversible processes", "revpre"};
  app.require_subcommand(1);
  Options opt;

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", opt.k, "Threshold k >= 1")->required()->check(CLI::PositiveNumber);
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", opt.graph, "Graph file")->required();
  };
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "Target configuration file")->required();
  };

  auto* step = app.add_subcommand("step", "Apply the update rule --steps times");
  add_k(step);
  add_graph(step);
  add_config(step);
  step->add_option("--steps", opt.steps, "Number of steps")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check that --candidate steps to --config");
  add_k(verify);
  add_graph(verify);
  add_config(verify);
  verify->add_option("--candidate", opt.candidate, "Candidate predecessor file")->required();

  auto* pre = app.add_subcommand("pre", "Decide whether --config has a predecessor");
  add_k(pre);
  add_graph(pre);
  add_config(pre);
  pre->add_option("--method", opt.method, "auto|pre1|tree|twosat|oracle")->capture_default_str();
  pre->add_option("--oracle-limit", opt.oracle_limit, "Largest n for brute force")
      ->capture_default_str();
  pre->add_option("--dimacs", opt.dimacs, "Write the 2SAT instance here (twosat only)");

  auto* count = app.add_subcommand("count", "Count predecessors of --config");
  add_k(count);
  add_graph(count);
  add_config(count);
  count->add_option("--method", opt.method, "auto|tree|oracle")->capture_default_str();
  count->add_option("--oracle-limit", opt.oracle_limit, "Largest n for brute force")
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Build the gadget instance of a 3-literal formula");
  add_k(reduce);
  reduce->add_option("--cnf", opt.cnf, "DIMACS formula")->required();
  reduce->add_option("--out-prefix", opt.out_prefix, "Writes PREFIX.graph/.config/.map")
      ->required();
  reduce->add_flag("--exactly-one", opt.exactly_one, "Input is exactly-one; invert literals first");

  auto* witness = app.add_subcommand("witness", "Gadget predecessor from an exactly-two assignment");
  add_k(witness);
  witness->add_option("--cnf", opt.cnf, "DIMACS formula")->required();
  witness->add_option("--assignment", opt.assignment, "Signed literal list")->required();
  witness->add_flag("--exactly-one", opt.exactly_one, "Input is exactly-one; invert literals first");

  auto* gen = app.add_subcommand("gen", "Reproducible random graphs and configurations");
  gen->add_option("--kind", opt.kind, "tree|path|graph|bounded|cubic|spokes|config")->required();
  gen->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  gen->add_option("--n", opt.n, "Vertex count");
  gen->add_option("--m", opt.m, "Edge count (graph) or edge attempts (bounded)");
  gen->add_option("--p", opt.p, "Spoke count (spokes)");
  gen->add_option("--max-degree", opt.max_degree, "Degree cap (bounded)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (step->parsed()) return cmd_step(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (pre->parsed()) return cmd_pre(opt, out, err);
    if (count->parsed()) return cmd_count(opt, out, err);
    if (reduce->parsed()) return cmd_reduce(opt, err);
    if (witness->parsed()) return cmd_witness(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
  } catch (const revpre::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace revpre::cli
