#include "lcm/checker.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lcm {

namespace {

struct KeyHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::vector<int> robot_tuple(const SearchState& s, RobotId r) {
  const Configuration& c = s.exec.config;
  std::vector<int> t{c.placement[r], c.colors[r], c.crashed[r] ? 1 : 0, s.idle[r], s.monitor.roles[r]};
  const auto& p = s.exec.pending[r];
  if (!p) {
    t.push_back(0);
    return t;
  }
  t.push_back(1);
  t.push_back(p->colored ? 1 : 0);
  t.push_back(p->action.color.value_or(-2));
  if (p->action.orbit) {
    const auto& targets = p->observation.targets.at(static_cast<size_t>(*p->action.orbit));
    t.push_back(static_cast<int>(targets.size()));
    t.insert(t.end(), targets.begin(), targets.end());
  } else {
    t.push_back(0);
  }
  return t;
}

// Robot ids ordered by their anonymous tuple.
std::vector<RobotId> anonymous_order(const SearchState& s) {
  const int n = s.exec.config.robots();
  std::vector<std::vector<int>> tuples;
  for (RobotId r = 0; r < n; ++r) tuples.push_back(robot_tuple(s, r));
  std::vector<RobotId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](RobotId a, RobotId b) { return tuples[a] < tuples[b]; });
  return order;
}

SearchState start_state(const ProblemSpec& p, const Configuration& init) {
  SearchState s;
  s.exec = ExecState::initial(init);
  s.idle.assign(init.robots(), 0);
  s.monitor = monitor_start(p, init);
  return s;
}

std::vector<RobotId> acting_robots(const AdversaryChoice& ch) {
  if (ch.event != EventKind::kRound) return {ch.robot};
  std::vector<RobotId> out;
  for (RobotId r : ch.activated) {
    if (!ch.crash || *ch.crash != r) out.push_back(r);
  }
  return out;
}

// One step of the search transition system; empty when the step would leave
// a live robot idle for `window` steps.
std::optional<SearchState> advance(const CheckContext& ctx, const Engine& engine, const SearchState& s,
                                   const Decisions& d, const AdversaryChoice& ch) {
  SearchState next;
  next.exec = engine.apply(s.exec, d, ch);
  next.idle = s.idle;
  const auto acting = acting_robots(ch);
  for (RobotId r = 0; r < next.exec.config.robots(); ++r) {
    if (next.exec.config.crashed[r] ||
        std::find(acting.begin(), acting.end(), r) != acting.end()) {
      next.idle[r] = 0;
    } else if (++next.idle[r] >= ctx.bounds.window) {
      return std::nullopt;
    }
  }
  next.monitor = s.monitor;
  monitor_advance(ctx.problem, next.monitor, s.exec.config, next.exec.config);
  return next;
}

// Rewrites a choice made on `from` for the relabeled copy `to`.
AdversaryChoice relabel(const AdversaryChoice& ch, const SearchState& from, const SearchState& to) {
  const auto a = anonymous_order(from);
  const auto b = anonymous_order(to);
  std::vector<RobotId> map(a.size());
  for (size_t i = 0; i < a.size(); ++i) map[a[i]] = b[i];
  AdversaryChoice out = ch;
  for (auto& r : out.activated) r = map[r];
  std::sort(out.activated.begin(), out.activated.end());
  if (out.robot >= 0) out.robot = map[out.robot];
  if (out.crash) out.crash = map[*out.crash];
  for (auto& [r, v] : out.picks) r = map[r];
  std::sort(out.picks.begin(), out.picks.end());
  return out;
}

struct Node {
  SearchState state;
  int depth = 0;
  int parent = -1;
  int parent_edge = -1;
  int initial = -1;
  std::vector<std::pair<AdversaryChoice, int>> edges;
  std::vector<bool> stutter;
  std::optional<RobotId> undecided;
  bool dead_end = false;
};

enum class Outcome { kViolation, kLasso, kBlocked, kOpen, kComplete };

// Breadth-first exploration of the quotiented, fairness-annotated state space.
class Explorer {
 public:
  Explorer(const CheckContext& ctx, const Algorithm& algo)
      : ctx_(ctx),
        algo_(algo),
        engine_(ctx.problem.arena, ctx.model, ctx.scheduler, ctx.engine) {}

  Outcome run() {
    for (size_t i = 0; i < ctx_.problem.initial.size(); ++i) {
      SearchState s = start_state(ctx_.problem, ctx_.problem.initial[i]);
      if (index_.count(anonymous_key(s))) continue;
      add(std::move(s), 0, -1, -1, static_cast<int>(i));
    }
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].state.monitor.status == VerdictTag::kViolated) {
        violation_ = static_cast<int>(i);
        return Outcome::kViolation;
      }
      expand(static_cast<int>(i));
      if (violation_ >= 0) return Outcome::kViolation;
    }
    if (find_cycle()) return Outcome::kLasso;
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].undecided) {
        blocked_ = static_cast<int>(i);
        return Outcome::kBlocked;
      }
    }
    // A prefix the window cannot extend belongs to no window-fair run and is
    // dropped; only a start with no fair run at all is reported.
    for (const auto& n : nodes_) {
      if (n.depth == 0 && n.dead_end) {
        open_reason_ = "fairness window admits no run from an initial configuration";
        return Outcome::kOpen;
      }
    }
    if (truncated_) {
      open_reason_ = "depth bound reached with unexplored states";
      return Outcome::kOpen;
    }
    return Outcome::kComplete;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const Engine& engine() const { return engine_; }
  bool truncated() const { return truncated_; }
  const std::string& open_reason() const { return open_reason_; }
  int violation() const { return violation_; }
  int blocked() const { return blocked_; }
  const std::vector<std::pair<int, int>>& cycle() const { return cycle_; }

  // (node, edge index) steps from the root of `node`'s tree path.
  std::vector<std::pair<int, int>> tree_path(int node) const {
    std::vector<std::pair<int, int>> path;
    for (int v = node; nodes_[v].parent >= 0; v = nodes_[v].parent) {
      path.emplace_back(nodes_[v].parent, nodes_[v].parent_edge);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  int root_of(int node) const {
    while (nodes_[node].parent >= 0) node = nodes_[node].parent;
    return node;
  }

  // Concrete witness along representative steps starting at a root.
  Witness concretize(const std::vector<std::pair<int, int>>& steps, int root, int loop_start) const {
    Witness w;
    w.initial = nodes_[root].initial;
    w.loop_start = loop_start;
    SearchState cur = nodes_[root].state;
    w.trace.push_back(trace_line(engine_.graph(), cur.exec, "init"));
    for (const auto& [node, edge] : steps) {
      const AdversaryChoice ch = relabel(nodes_[node].edges[edge].first, nodes_[node].state, cur);
      auto next = advance(ctx_, engine_, cur, engine_.decide(cur.exec, algo_), ch);
      if (!next) throw std::logic_error("witness step became unfair while concretizing");
      cur = std::move(*next);
      w.trace.push_back(trace_line(engine_.graph(), cur.exec, ch.describe(engine_.graph())));
      w.choices.push_back(ch);
    }
    return w;
  }

  // Slots whose actions the representative steps rely on.
  std::set<SlotKey> dependencies(const std::vector<std::pair<int, int>>& steps) const {
    std::set<SlotKey> deps;
    for (const auto& [node, edge] : steps) {
      const AdversaryChoice& ch = nodes_[node].edges[edge].first;
      if (ch.event != EventKind::kRound && ch.event != EventKind::kLook) continue;
      const Decisions d = engine_.decide(nodes_[node].state.exec, algo_);
      for (RobotId r : acting_robots(ch)) deps.insert(d.observations[r]->view.slot());
    }
    return deps;
  }

  std::pair<SlotKey, View> blocking_slot() const {
    const Node& n = nodes_[blocked_];
    const View v = engine_.observe(n.state.exec.config, *n.undecided).view;
    return {v.slot(), v};
  }

 private:
  int add(SearchState s, int depth, int parent, int parent_edge, int initial) {
    const int id = static_cast<int>(nodes_.size());
    index_.emplace(anonymous_key(s), id);
    Node n;
    n.state = std::move(s);
    n.depth = depth;
    n.parent = parent;
    n.parent_edge = parent_edge;
    n.initial = initial;
    nodes_.push_back(std::move(n));
    return id;
  }

  void expand(int id) {
    const Decisions d = engine_.decide(nodes_[id].state.exec, algo_);
    bool deferred = false;
    auto choices = engine_.enumerate_choices(nodes_[id].state.exec, d, ctx_.problem.fault_budget, &deferred);
    if (deferred) {
      for (RobotId r = 0; r < static_cast<RobotId>(d.actions.size()); ++r) {
        if (d.undecided(r)) {
          nodes_[id].undecided = r;
          break;
        }
      }
    }
    bool any = false;
    for (auto& ch : choices) {
      auto next = advance(ctx_, engine_, nodes_[id].state, d, ch);
      if (!next) continue;
      any = true;
      const bool stutter = next->exec.config.same_positions(nodes_[id].state.exec.config);
      auto key = anonymous_key(*next);
      int target;
      if (auto it = index_.find(key); it != index_.end()) {
        target = it->second;
      } else if (nodes_[id].depth >= ctx_.bounds.max_depth) {
        truncated_ = true;
        continue;
      } else {
        const bool violated = next->monitor.status == VerdictTag::kViolated;
        target = add(std::move(*next), nodes_[id].depth + 1, id,
                     static_cast<int>(nodes_[id].edges.size()), -1);
        if (violated && violation_ < 0) violation_ = target;
      }
      nodes_[id].edges.emplace_back(std::move(ch), target);
      nodes_[id].stutter.push_back(stutter);
      if (violation_ >= 0) return;
    }
    if (!any && !deferred) nodes_[id].dead_end = true;
  }

  bool edge_allowed(int from, int edge) const {
    const Node& n = nodes_[from];
    if (ctx_.problem.perpetual()) return n.stutter[edge];
    return n.state.monitor.status == VerdictTag::kPending &&
           nodes_[n.edges[edge].second].state.monitor.status == VerdictTag::kPending;
  }

  // First cycle of allowed edges in depth-first order from the lowest node.
  bool find_cycle() {
    const int n = static_cast<int>(nodes_.size());
    std::vector<int> color(n, 0);
    for (int start = 0; start < n; ++start) {
      if (color[start]) continue;
      std::vector<std::pair<int, int>> stack{{start, 0}};
      color[start] = 1;
      while (!stack.empty()) {
        auto& [v, e] = stack.back();
        if (e >= static_cast<int>(nodes_[v].edges.size())) {
          color[v] = 2;
          stack.pop_back();
          continue;
        }
        const int edge = e++;
        if (!edge_allowed(v, edge)) continue;
        const int w = nodes_[v].edges[edge].second;
        if (color[w] == 1) {
          size_t k = 0;
          while (stack[k].first != w) ++k;
          for (; k < stack.size(); ++k) cycle_.emplace_back(stack[k].first, stack[k].second - 1);
          return true;
        }
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      }
    }
    return false;
  }

  const CheckContext& ctx_;
  const Algorithm& algo_;
  Engine engine_;
  std::vector<Node> nodes_;
  std::unordered_map<std::vector<int>, int, KeyHash> index_;
  bool truncated_ = false;
  int violation_ = -1;
  int blocked_ = -1;
  std::vector<std::pair<int, int>> cycle_;
  std::string open_reason_;
};

std::string lasso_reason(const ProblemSpec& p) {
  return p.perpetual() ? "fair execution in which the robots stop moving forever"
                       : "fair execution that never completes the task";
}

// The witness a refuting exploration produced, with the slots it relies on.
std::pair<Witness, std::set<SlotKey>> refutation(const Explorer& ex, Outcome outcome,
                                                 const ProblemSpec& p) {
  if (outcome == Outcome::kViolation) {
    const int v = ex.violation();
    auto steps = ex.tree_path(v);
    Witness w = ex.concretize(steps, ex.root_of(v), -1);
    w.reason = std::string(monitor_reason(ex.nodes()[v].state.monitor.reason));
    return {std::move(w), ex.dependencies(steps)};
  }
  const auto& cycle = ex.cycle();
  auto steps = ex.tree_path(cycle.front().first);
  const int loop_start = static_cast<int>(steps.size());
  steps.insert(steps.end(), cycle.begin(), cycle.end());
  Witness w = ex.concretize(steps, ex.root_of(cycle.front().first), loop_start);
  w.reason = lasso_reason(p);
  return {std::move(w), ex.dependencies(steps)};
}

struct GameResult {
  bool refuted = false;
  std::set<SlotKey> deps;
  std::shared_ptr<const StrategyNode> tree;
  std::optional<TableAlgorithm> survivor;
  std::string open_reason;
};

class Game {
 public:
  explicit Game(const CheckContext& ctx) : ctx_(ctx) {}

  GameResult solve(TableAlgorithm& table) {
    Explorer ex(ctx_, table);
    const Outcome outcome = ex.run();
    explored_ += ex.nodes().size();
    GameResult res;
    if (outcome == Outcome::kViolation || outcome == Outcome::kLasso) {
      auto [w, deps] = refutation(ex, outcome, ctx_.problem);
      auto leaf = std::make_shared<StrategyNode>();
      leaf->leaf = std::move(w);
      res.refuted = true;
      res.deps = std::move(deps);
      res.tree = std::move(leaf);
      return res;
    }
    if (outcome != Outcome::kBlocked) {
      res.survivor = table;
      res.open_reason = outcome == Outcome::kOpen ? ex.open_reason() : "candidate solves every explored run";
      return res;
    }
    auto [slot, view] = ex.blocking_slot();
    auto node = std::make_shared<StrategyNode>();
    node->slot = slot;
    node->view = view;
    std::set<SlotKey> deps;
    for (const Action& a : action_domain(view, ctx_.model)) {
      table.bind(slot, a);
      GameResult child = solve(table);
      table.unbind(slot);
      if (!child.refuted) return child;
      if (!child.deps.count(slot)) return child;
      child.deps.erase(slot);
      deps.insert(child.deps.begin(), child.deps.end());
      node->children.emplace_back(a, child.tree);
    }
    res.refuted = true;
    res.deps = std::move(deps);
    res.tree = std::move(node);
    return res;
  }

  size_t explored() const { return explored_; }

 private:
  const CheckContext& ctx_;
  size_t explored_ = 0;
};

void append_indented(std::ostringstream& out, const std::string& text, int indent) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out << std::string(indent, ' ') << line << '\n';
}

std::string witness_text(const Witness& w) {
  std::ostringstream out;
  out << "witness initial=" << w.initial << " loop=";
  if (w.lasso()) out << w.loop_start; else out << "none";
  out << " reason=\"" << w.reason << "\"\n";
  for (const auto& line : w.trace) out << "  " << line << '\n';
  return out.str();
}

void strategy_text(std::ostringstream& out, const StrategyNode& n, int indent) {
  if (n.leaf) {
    append_indented(out, witness_text(*n.leaf), indent);
    return;
  }
  out << std::string(indent, ' ') << "ask " << n.slot.str() << '\n';
  for (const auto& [a, child] : n.children) {
    out << std::string(indent + 2, ' ') << "answer " << a.str() << '\n';
    strategy_text(out, *child, indent + 4);
  }
}

}  // namespace

std::vector<int> anonymous_key(const SearchState& s) {
  std::vector<int> key{static_cast<int>(s.monitor.status), s.monitor.reason, s.monitor.index,
                       s.monitor.aux};
  for (RobotId r : anonymous_order(s)) {
    auto t = robot_tuple(s, r);
    key.push_back(static_cast<int>(t.size()));
    key.insert(key.end(), t.begin(), t.end());
  }
  return key;
}

size_t StrategyNode::leaves() const {
  if (leaf) return 1;
  size_t n = 0;
  for (const auto& [a, c] : children) n += c->leaves();
  return n;
}

size_t StrategyNode::depth() const {
  size_t d = 0;
  for (const auto& [a, c] : children) d = std::max(d, c->depth() + 1);
  return d;
}

std::string_view to_string(CertTag tag) {
  switch (tag) {
    case CertTag::kSolved: return "solved";
    case CertTag::kViolated: return "violated";
    case CertTag::kImpossible: return "impossible";
    case CertTag::kInconclusive: return "inconclusive";
  }
  return "?";
}

CheckContext CheckContext::from(const Scenario& s) {
  CheckContext c;
  c.problem = s.problem;
  c.model = s.model;
  c.scheduler = s.scheduler;
  c.bounds = s.bounds;
  c.engine.symmetry = s.symmetry;
  c.engine.split_act = s.split_act;
  return c;
}

CheckContext CheckContext::with_palette_bound() const {
  CheckContext c = *this;
  c.model = model.tag() == ModelTag::kOblot ? RobotModel::oblot() : RobotModel(model.tag(), bounds.palette);
  return c;
}

Certificate verify_solution(const Algorithm& algo, const CheckContext& ctx) {
  if (!algo.legal_for(ctx.model)) {
    throw std::invalid_argument(algo.name() + " is not an algorithm for " + ctx.model.str());
  }
  ctx.problem.validate();
  ctx.bounds.validate();
  Explorer ex(ctx, algo);
  const Outcome outcome = ex.run();
  Certificate cert;
  cert.bounds = ctx.bounds;
  cert.explored = ex.nodes().size();
  switch (outcome) {
    case Outcome::kViolation:
    case Outcome::kLasso: {
      cert.tag = CertTag::kViolated;
      cert.witness = refutation(ex, outcome, ctx.problem).first;
      cert.reason = cert.witness->reason;
      break;
    }
    case Outcome::kBlocked: {
      cert.tag = CertTag::kInconclusive;
      cert.reason = "algorithm has no action for view " + ex.blocking_slot().first.str();
      break;
    }
    case Outcome::kOpen:
      cert.tag = CertTag::kInconclusive;
      cert.reason = ex.open_reason();
      break;
    case Outcome::kComplete: {
      cert.tag = CertTag::kSolved;
      cert.reason = ctx.problem.perpetual() ? "every fair run settles in a cycle that follows the required sequence"
                                            : "every fair run completes the task and stays put";
      if (ctx.problem.perpetual()) {
        const auto& nodes = ex.nodes();
        for (int root = 0; root < static_cast<int>(nodes.size()) && nodes[root].depth == 0; ++root) {
          std::vector<std::pair<int, int>> steps;
          std::vector<int> seen_at(nodes.size(), -1);
          int v = root;
          while (seen_at[v] < 0 && !nodes[v].edges.empty()) {
            seen_at[v] = static_cast<int>(steps.size());
            steps.emplace_back(v, 0);
            v = nodes[v].edges[0].second;
          }
          if (seen_at[v] < 0) continue;
          Witness w = ex.concretize(steps, root, seen_at[v]);
          w.reason = "sample fair cycle";
          cert.lassos.push_back(std::move(w));
        }
      }
      break;
    }
  }
  return cert;
}

Certificate verify_impossibility(const CheckContext& base) {
  const CheckContext ctx = base.with_palette_bound();
  ctx.problem.validate();
  ctx.bounds.validate();
  Game game(ctx);
  TableAlgorithm table("candidate");
  GameResult res = game.solve(table);
  Certificate cert;
  cert.bounds = ctx.bounds;
  cert.explored = game.explored();
  if (res.refuted) {
    cert.tag = CertTag::kImpossible;
    cert.strategy = res.tree;
    cert.reason = "no algorithm with at most " + std::to_string(ctx.model.palette()) +
                  " color(s) survives the adversary within depth " + std::to_string(ctx.bounds.max_depth) +
                  " and window " + std::to_string(ctx.bounds.window);
  } else {
    cert.tag = CertTag::kInconclusive;
    cert.candidate = std::move(res.survivor);
    cert.reason = "surviving candidate: " + res.open_reason;
  }
  return cert;
}

StateGraph reachable_states(const Algorithm& algo, const CheckContext& ctx) {
  Explorer ex(ctx, algo);
  (void)ex.run();
  StateGraph g;
  g.truncated = ex.truncated();
  for (size_t i = 0; i < ex.nodes().size(); ++i) {
    const Node& n = ex.nodes()[i];
    g.states.push_back(n.state);
    g.depth.push_back(n.depth);
    for (const auto& [ch, to] : n.edges) g.edges.push_back({static_cast<int>(i), to, ch});
  }
  return g;
}

Replay replay_witness(const Witness& w, const Algorithm& algo, const CheckContext& ctx) {
  Replay rep;
  const Engine engine(ctx.problem.arena, ctx.model, ctx.scheduler, ctx.engine);
  if (w.initial < 0 || w.initial >= static_cast<int>(ctx.problem.initial.size())) {
    rep.detail = "unknown initial configuration";
    return rep;
  }
  SearchState cur = start_state(ctx.problem, ctx.problem.initial[w.initial]);
  rep.trace.push_back(cur.exec);
  std::vector<int> loop_key;
  bool progress = false;
  bool completed = false;
  for (size_t i = 0; i < w.choices.size(); ++i) {
    if (static_cast<int>(i) == w.loop_start) loop_key = anonymous_key(cur);
    Decisions d;
    try {
      d = engine.decide(cur.exec, algo);
    } catch (const std::exception& e) {
      rep.detail = "step " + std::to_string(i) + ": " + e.what();
      return rep;
    }
    const auto legal = engine.enumerate_choices(cur.exec, d, ctx.problem.fault_budget);
    if (std::find(legal.begin(), legal.end(), w.choices[i]) == legal.end()) {
      rep.detail = "step " + std::to_string(i) + ": choice " + w.choices[i].describe(engine.graph()) +
                   " is not available";
      return rep;
    }
    auto next = advance(ctx, engine, cur, d, w.choices[i]);
    if (!next) {
      rep.detail = "step " + std::to_string(i) + ": fairness window exceeded";
      return rep;
    }
    if (w.lasso() && static_cast<int>(i) >= w.loop_start) {
      if (!next->exec.config.same_positions(cur.exec.config)) progress = true;
      if (next->monitor.status != VerdictTag::kPending || cur.monitor.status != VerdictTag::kPending) {
        completed = true;
      }
    }
    cur = std::move(*next);
    rep.trace.push_back(cur.exec);
  }
  rep.monitor = cur.monitor;
  if (w.lasso()) {
    if (w.loop_start > static_cast<int>(w.choices.size()) || anonymous_key(cur) != loop_key) {
      rep.detail = "lasso does not return to its loop state";
      return rep;
    }
    rep.ok = true;
    rep.violated = ctx.problem.perpetual() ? !progress : !completed;
  } else {
    rep.ok = true;
    rep.violated = cur.monitor.status == VerdictTag::kViolated;
  }
  if (!rep.violated) rep.detail = "run does not violate the task";
  return rep;
}

Replay replay_strategy(const StrategyNode& root, const Algorithm& algo, const CheckContext& ctx) {
  const StrategyNode* n = &root;
  while (!n->leaf) {
    auto a = algo.decide(*n->view);
    if (!a) {
      Replay r;
      r.detail = "algorithm has no action for " + n->slot.str();
      return r;
    }
    const Action norm = normalize_action(*a, *n->view, ctx.model);
    const StrategyNode* next = nullptr;
    for (const auto& [answer, child] : n->children) {
      if (answer == norm) next = child.get();
    }
    if (!next) {
      Replay r;
      r.detail = "answer " + norm.str() + " at " + n->slot.str() + " is outside the strategy";
      return r;
    }
    n = next;
  }
  return replay_witness(*n->leaf, algo, ctx);
}

std::string to_text(const Certificate& cert, const CheckContext& ctx) {
  std::ostringstream out;
  out << "verdict " << to_string(cert.tag) << '\n';
  out << "reason " << cert.reason << '\n';
  out << "problem " << to_string(ctx.problem.kind) << " model " << ctx.model.str() << " scheduler "
      << to_string(ctx.scheduler) << '\n';
  out << "bounds depth=" << cert.bounds.max_depth << " window=" << cert.bounds.window
      << " palette=" << cert.bounds.palette << '\n';
  out << "explored " << cert.explored << '\n';
  if (cert.witness) out << witness_text(*cert.witness);
  for (const auto& w : cert.lassos) out << witness_text(w);
  if (cert.strategy) {
    out << "strategy leaves=" << cert.strategy->leaves() << " depth=" << cert.strategy->depth() << '\n';
    strategy_text(out, *cert.strategy, 2);
  }
  if (cert.candidate) {
    out << "candidate\n";
    append_indented(out, cert.candidate->to_text(), 2);
  }
  return out.str();
}

}  // namespace lcm
