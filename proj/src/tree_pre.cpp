#include "revpre/tree_pre.hpp"

namespace revpre {

namespace {

struct Frame {
  VertexId v;
  ParentContext context;
  State candidate;
  std::uint8_t attempt = 0;
  bool child_requested = false;
  bool children_ok = true;
  std::size_t next_child = 0;
  std::size_t differing = 0;

  void begin_attempt(State s) {
    candidate = s;
    next_child = 0;
    child_requested = false;
    children_ok = true;
    differing = (context != ParentContext::None && context != context_of(s)) ? 1 : 0;
  }
};

}  // namespace

FstateTable calc_fstate(const RootedTree& t, ProcessParams p, const Configuration& y) {
  const std::size_t n = t.num_vertices();
  if (y.size() != n) throw Error("configuration length does not match tree");
  FstateTable table(n);
  auto& entries = table.entries_;
  auto& visits = table.visits_;

  auto open = [&](std::vector<Frame>& stack, VertexId v, ParentContext c) {
    Frame f{v, c, State::Plus};
    const auto parent = t.parent(v);
    f.begin_attempt(parent ? y[*parent] : State::Plus);
    stack.push_back(f);
  };

  std::vector<Frame> stack;
  ++visits[t.root()];
  open(stack, t.root(), ParentContext::None);

  while (!stack.empty()) {
    const std::size_t top = stack.size() - 1;
    const auto kids = t.children(stack[top].v);

    if (stack[top].next_child < kids.size()) {
      const VertexId child = kids[stack[top].next_child];
      const ParentContext child_context = context_of(stack[top].candidate);
      if (!stack[top].child_requested) {
        ++visits[child];
        stack[top].child_requested = true;
        if (entries[child][static_cast<std::size_t>(child_context)] == Forced::Unset) {
          open(stack, child, child_context);
          continue;
        }
      }
      Frame& f = stack[top];
      const Forced got = entries[child][static_cast<std::size_t>(child_context)];
      if (got == Forced::Infeasible) {
        f.children_ok = false;
      } else if (got != forced_of(f.candidate)) {
        ++f.differing;
      }
      ++f.next_child;
      f.child_requested = false;
      continue;
    }

    Frame& f = stack[top];
    auto& slot = entries[f.v][static_cast<std::size_t>(f.context)];
    if (f.children_ok && vstate(y[f.v], f.candidate, f.differing, p.k())) {
      slot = forced_of(f.candidate);
      stack.pop_back();
    } else if (f.attempt == 0) {
      f.attempt = 1;
      f.begin_attempt(-f.candidate);
    } else {
      slot = Forced::Infeasible;
      stack.pop_back();
    }
  }
  return table;
}

std::optional<Configuration> build_state(const RootedTree& t, const FstateTable& table) {
  const Forced at_root = table.at(t.root(), ParentContext::None);
  if (at_root == Forced::Infeasible || at_root == Forced::Unset) return std::nullopt;

  Configuration w(t.num_vertices(), State::Plus);
  w[t.root()] = at_root == Forced::Plus ? State::Plus : State::Minus;
  for (VertexId v : t.order()) {
    for (VertexId child : t.children(v)) {
      const Forced f = table.at(child, context_of(w[v]));
      if (f != Forced::Plus && f != Forced::Minus) {
        throw Error("forced-state table is incomplete along the witness path");
      }
      w[child] = f == Forced::Plus ? State::Plus : State::Minus;
    }
  }
  return w;
}

std::optional<Configuration> decide_tree(const RootedTree& t, ProcessParams p,
                                         const Configuration& y) {
  return build_state(t, calc_fstate(t, p, y));
}

}  // namespace revpre
