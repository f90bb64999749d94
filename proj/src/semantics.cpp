#include "cra/semantics.hpp"

#include <algorithm>
#include <deque>

#include "cra/errors.hpp"

namespace cra {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Term: return "TERM";
    case Outcome::Abort: return "ABORT";
    case Outcome::Trunc: return "TRUNC";
  }
  return "?";
}

std::string format_behavior(const Model& m, const Behavior& b) {
  std::string out = "s" + std::to_string(b.initial);
  for (StepId s : b.steps) {
    const auto& info = m.step(s);
    out += " -" + info.name + "-> s" + std::to_string(info.post);
  }
  out += " : ";
  out += to_string(b.outcome);
  return out;
}

std::size_t Engine::DenKeyHash::operator()(const DenKey& k) const {
  return mix(mix(std::hash<const void*>()(k.cmd), static_cast<std::size_t>(k.state)),
             static_cast<std::size_t>(k.rem));
}

std::size_t Engine::GraftKeyHash::operator()(const GraftKey& k) const {
  std::size_t h = mix(std::hash<const void*>()(k.cmd), k.node);
  return mix(mix(h, static_cast<std::size_t>(k.state)), static_cast<std::size_t>(k.rem));
}

Engine::Engine(Model m, int depth, std::size_t node_budget)
    : model_(std::move(m)),
      depth_(depth),
      budget_(node_budget),
      intern_(64, NodeHash{this}, NodeEq{this}) {
  if (depth < 0) throw ConfigError("depth must be non-negative");
  // Fixed ids: dead, stub, abort, term. The stub is never interned.
  nodes_.push_back({0, 0, false, false, 0x11});
  nodes_.push_back({0, 0, false, false, 0x22});
  nodes_.push_back({0, 0, false, true, 0x33});
  nodes_.push_back({0, 0, true, false, 0x44});
  intern_.insert(kDead);
  intern_.insert(kAbort);
  intern_.insert(kTerm);
}

bool Engine::same_content(NodeId a, NodeId b) const {
  if (a == b) return true;
  if (a == kStub || b == kStub) return false;
  const auto& x = nodes_[a];
  const auto& y = nodes_[b];
  if (x.hash != y.hash || x.term != y.term || x.abort != y.abort || x.count != y.count)
    return false;
  const Kid* p = kid_begin(a);
  const Kid* q = kid_begin(b);
  for (std::uint32_t i = 0; i < x.count; ++i)
    if (p[i].step != q[i].step || p[i].node != q[i].node) return false;
  return true;
}

Engine::NodeId Engine::intern(bool term, bool abort, const std::vector<Kid>& scratch) {
  if (abort) return kAbort;
  std::size_t h = term ? 0x5bd1e995 : 0x27d4eb2d;
  for (const Kid& k : scratch) h = mix(mix(h, k.step), k.node);
  const auto begin = static_cast<std::uint32_t>(kids_.size());
  kids_.insert(kids_.end(), scratch.begin(), scratch.end());
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({begin, static_cast<std::uint32_t>(scratch.size()), term, false, h});
  auto [it, inserted] = intern_.insert(id);
  if (!inserted) {
    nodes_.pop_back();
    kids_.resize(begin);
    return *it;
  }
  if (nodes_.size() > budget_)
    throw ConfigError("semantic node budget of " + std::to_string(budget_) +
                      " exceeded; lower --depth or --states");
  return id;
}

void Engine::pin(const Command& c) { pins_.try_emplace(c.id(), c); }

Engine::NodeId Engine::find_kid(NodeId n, StepId s) const {
  const Kid* b = kid_begin(n);
  const Kid* e = kid_end(n);
  const Kid* it = std::lower_bound(b, e, s, [](const Kid& k, StepId v) { return k.step < v; });
  return it != e && it->step == s ? it->node : kNone;
}

std::vector<std::pair<StepId, Engine::NodeId>> Engine::kids(NodeId n) const {
  std::vector<std::pair<StepId, NodeId>> out;
  if (n == kStub) return out;
  for (const Kid* k = kid_begin(n); k != kid_end(n); ++k) out.emplace_back(k->step, k->node);
  return out;
}

Engine::NodeId Engine::union_nodes(NodeId a, NodeId b) {
  if (a == b) return a;
  if (a == kAbort || b == kAbort) return kAbort;
  if (a == kStub || b == kStub) return kStub;
  if (a == kDead) return b;
  if (b == kDead) return a;
  if (a > b) std::swap(a, b);
  auto key = pair_key(a, b);
  if (auto it = union_memo_.find(key); it != union_memo_.end()) return it->second;
  std::vector<Kid> out;
  // Recursive calls may grow the kid arena, so work on copies.
  const std::vector<Kid> ka(kid_begin(a), kid_end(a)), kb(kid_begin(b), kid_end(b));
  const Kid *p = ka.data(), *pe = p + ka.size();
  const Kid *q = kb.data(), *qe = q + kb.size();
  while (p != pe || q != qe) {
    if (q == qe || (p != pe && p->step < q->step)) {
      out.push_back(*p++);
    } else if (p == pe || q->step < p->step) {
      out.push_back(*q++);
    } else {
      Kid k{p->step, 0};
      NodeId x = p->node, y = q->node;
      ++p;
      ++q;
      k.node = union_nodes(x, y);
      out.push_back(k);
    }
  }
  NodeId r = intern(nodes_[a].term || nodes_[b].term, false, out);
  union_memo_.emplace(key, r);
  return r;
}

Engine::NodeId Engine::join_nodes(NodeId a, NodeId b) {
  if (a == b) return a;
  if (a == kAbort) return b;
  if (b == kAbort) return a;
  if (a == kStub || b == kStub) return kStub;
  if (a > b) std::swap(a, b);
  auto key = pair_key(a, b);
  if (auto it = join_memo_.find(key); it != join_memo_.end()) return it->second;
  std::vector<Kid> out;
  // Recursive calls may grow the kid arena, so work on copies.
  const std::vector<Kid> ka(kid_begin(a), kid_end(a)), kb(kid_begin(b), kid_end(b));
  const Kid *p = ka.data(), *pe = p + ka.size();
  const Kid *q = kb.data(), *qe = q + kb.size();
  while (p != pe && q != qe) {
    if (p->step < q->step) {
      ++p;
    } else if (q->step < p->step) {
      ++q;
    } else {
      StepId s = p->step;
      NodeId x = p->node, y = q->node;
      ++p;
      ++q;
      NodeId k = join_nodes(x, y);
      out.push_back({s, k});
    }
  }
  NodeId r = intern(nodes_[a].term && nodes_[b].term, false, out);
  join_memo_.emplace(key, r);
  return r;
}

Engine::NodeId Engine::conj_nodes(NodeId a, NodeId b) {
  if (a == kAbort || b == kAbort) return kAbort;
  if (a == b) return a;
  if (a == kStub || b == kStub) return kStub;
  if (a > b) std::swap(a, b);
  auto key = pair_key(a, b);
  if (auto it = conj_memo_.find(key); it != conj_memo_.end()) return it->second;
  std::vector<Kid> out;
  // Recursive calls may grow the kid arena, so work on copies.
  const std::vector<Kid> ka(kid_begin(a), kid_end(a)), kb(kid_begin(b), kid_end(b));
  const Kid *p = ka.data(), *pe = p + ka.size();
  const Kid *q = kb.data(), *qe = q + kb.size();
  while (p != pe && q != qe) {
    if (p->step < q->step) {
      ++p;
    } else if (q->step < p->step) {
      ++q;
    } else {
      StepId s = p->step;
      NodeId x = p->node, y = q->node;
      ++p;
      ++q;
      NodeId k = conj_nodes(x, y);
      out.push_back({s, k});
    }
  }
  NodeId r = intern(nodes_[a].term && nodes_[b].term, false, out);
  conj_memo_.emplace(key, r);
  return r;
}

bool Engine::alive(NodeId n) const {
  if (n == kStub || n == kAbort || nodes_[n].term) return true;
  for (const Kid* k = kid_begin(n); k != kid_end(n); ++k)
    if (model_.has_partner(k->step)) return true;
  return false;
}

Engine::NodeId Engine::par_nodes(NodeId a, NodeId b) {
  if (a == kStub && b == kStub) return kStub;
  if (a > b) std::swap(a, b);  // sync is commutative
  auto key = pair_key(a, b);
  if (auto it = par_memo_.find(key); it != par_memo_.end()) return it->second;
  NodeId r;
  if (a == kAbort || b == kAbort) {
    // An abort only shows if the other side can still take part.
    NodeId other = a == kAbort ? b : a;
    r = alive(other) ? kAbort : kDead;
  } else if (a == kStub || b == kStub) {
    r = kStub;
  } else {
    std::vector<Kid> out;
    const std::vector<Kid> ka(kid_begin(a), kid_end(a)), kb(kid_begin(b), kid_end(b));
    for (const Kid* p = ka.data(); p != ka.data() + ka.size(); ++p) {
      for (const Kid* q = kb.data(); q != kb.data() + kb.size(); ++q) {
        auto z = model_.sync_steps(p->step, q->step);
        if (!z) continue;
        NodeId k = par_nodes(p->node, q->node);
        auto it = std::lower_bound(out.begin(), out.end(), *z,
                                   [](const Kid& x, StepId v) { return x.step < v; });
        if (it != out.end() && it->step == *z)
          it->node = union_nodes(it->node, k);
        else
          out.insert(it, Kid{*z, k});
      }
    }
    r = intern(nodes_[a].term && nodes_[b].term, false, out);
  }
  par_memo_.emplace(key, r);
  return r;
}

Engine::NodeId Engine::strip_term(NodeId n) {
  if (n == kStub || n == kAbort || !nodes_[n].term) return n;
  std::vector<Kid> ks(kid_begin(n), kid_end(n));
  return intern(false, false, ks);
}

Engine::NodeId Engine::graft(NodeId a, int state, int rem, const Command& d) {
  if (a == kStub || a == kAbort || a == kDead) return a;
  GraftKey key{a, state, rem, d.id()};
  if (auto it = graft_memo_.find(key); it != graft_memo_.end()) return it->second;
  std::vector<Kid> out;
  out.reserve(nodes_[a].count);
  for (std::uint32_t i = 0; i < nodes_[a].count; ++i) {
    Kid k = kid_begin(a)[i];
    k.node = graft(k.node, model_.step(k.step).post, rem - 1, d);
    out.push_back(k);
  }
  NodeId r = intern(false, false, out);
  if (nodes_[a].term) r = union_nodes(r, den(d, state, rem));
  pin(d);
  graft_memo_.emplace(key, r);
  return r;
}

Engine::NodeId Engine::den(const Command& c, int state, int rem) {
  switch (c.op()) {
    case Op::Abort: return kAbort;
    case Op::Magic: return kDead;
    case Op::Nil: return kTerm;
    case Op::Test: return c.test().contains(state) ? kTerm : kDead;
    default: break;
  }
  DenKey key{c.id(), state, rem};
  if (auto it = den_memo_.find(key); it != den_memo_.end()) return it->second;
  NodeId r = kDead;
  switch (c.op()) {
    case Op::Atomic: {
      std::vector<Kid> out;
      NodeId next = rem == 0 ? kStub : kTerm;
      for_each_bit((c.atom() & model_.steps_from(state)).bits(),
                   [&](int s) { out.push_back({static_cast<StepId>(s), next}); });
      r = intern(false, false, out);
      break;
    }
    case Op::Choice:
      for (const auto& k : c.children()) {
        r = union_nodes(r, den(k, state, rem));
        if (r == kAbort) break;
      }
      break;
    case Op::Join:
      r = join_nodes(den(c.lhs(), state, rem), den(c.rhs(), state, rem));
      break;
    case Op::Conj:
      r = conj_nodes(den(c.lhs(), state, rem), den(c.rhs(), state, rem));
      break;
    case Op::Par:
      r = par_nodes(den(c.lhs(), state, rem), den(c.rhs(), state, rem));
      break;
    case Op::Seq:
      r = graft(den(c.lhs(), state, rem), state, rem, c.rhs());
      break;
    case Op::Fin: {
      // Greatest fixpoint: an immediate termination of the body just
      // restarts the iteration and adds nothing.
      NodeId body = den(c.body(), state, rem);
      if (body == kAbort) {
        r = kAbort;
      } else {
        r = union_nodes(kTerm, graft(strip_term(body), state, rem, c));
      }
      break;
    }
    case Op::Omega:
    case Op::Inf: {
      // Least fixpoint: a body that can terminate (or abort) without a step
      // makes the unfolding diverge immediately, which is ⊥.
      NodeId body = den(c.body(), state, rem);
      if (body == kAbort || nodes_[body].term) {
        r = kAbort;
      } else {
        r = graft(body, state, rem, c);
        if (c.op() == Op::Omega) r = union_nodes(kTerm, r);
      }
      break;
    }
    default: break;
  }
  pin(c);
  den_memo_.emplace(key, r);
  return r;
}

Engine::NodeId Engine::denote(const Command& c, int state, int depth) {
  if (state < 0 || state >= model_.num_states()) throw DomainError("initial state out of range");
  if (depth < 0) throw ConfigError("depth must be non-negative");
  return den(c, state, depth);
}

Engine::NodeId Engine::truncate(NodeId n, int depth) {
  if (depth < 0) return kStub;
  if (n == kStub || n == kAbort || n == kDead || n == kTerm) return n;
  auto key = pair_key(n, static_cast<std::uint32_t>(depth));
  if (auto it = trunc_memo_.find(key); it != trunc_memo_.end()) return it->second;
  std::vector<Kid> out;
  for (std::uint32_t i = 0; i < nodes_[n].count; ++i) {
    Kid k = kid_begin(n)[i];
    k.node = truncate(k.node, depth - 1);
    out.push_back(k);
  }
  NodeId r = intern(nodes_[n].term, false, out);
  trunc_memo_.emplace(key, r);
  return r;
}

bool Engine::contains(NodeId a, NodeId b) {
  if (a == b || a == kAbort || a == kStub) return true;
  if (b == kAbort || b == kStub) return false;
  if (nodes_[b].term && !nodes_[a].term) return false;
  if (nodes_[b].count == 0) return true;
  auto key = pair_key(a, b);
  if (auto it = contains_memo_.find(key); it != contains_memo_.end()) return it->second;
  bool ok = true;
  const Kid *p = kid_begin(a), *pe = kid_end(a);
  for (const Kid* q = kid_begin(b); q != kid_end(b) && ok; ++q) {
    while (p != pe && p->step < q->step) ++p;
    if (p == pe || p->step != q->step) {
      ok = false;
    } else {
      ok = contains(p->node, q->node);
    }
  }
  contains_memo_.emplace(key, ok);
  return ok;
}

Verdict Engine::witness(NodeId a, NodeId b, int state) {
  struct Item {
    NodeId a, b;
    std::vector<StepId> path;
  };
  auto outcome_of = [&](NodeId n) {
    if (n == kAbort) return Outcome::Abort;
    if (n != kStub && nodes_[n].term) return Outcome::Term;
    return Outcome::Trunc;
  };
  std::vector<Item> level{{a, b, {}}};
  std::unordered_set<std::uint64_t> seen{pair_key(a, b)};
  while (!level.empty()) {
    for (const auto& it : level) {
      if (it.b == kAbort && it.a != kAbort)
        return {false, Behavior{state, it.path, Outcome::Abort}, {}};
      if (it.b != kStub && nodes_[it.b].term && !nodes_[it.a].term)
        return {false, Behavior{state, it.path, Outcome::Term}, {}};
    }
    for (const auto& it : level) {
      for (const Kid* q = kid_begin(it.b); q != kid_end(it.b); ++q) {
        if (find_kid(it.a, q->step) != kNone) continue;
        auto path = it.path;
        path.push_back(q->step);
        return {false, Behavior{state, path, outcome_of(q->node)}, {}};
      }
    }
    std::vector<Item> next;
    for (const auto& it : level) {
      for (const Kid* q = kid_begin(it.b); q != kid_end(it.b); ++q) {
        NodeId x = find_kid(it.a, q->step);
        if (contains(x, q->node)) continue;
        if (!seen.insert(pair_key(x, q->node)).second) continue;
        auto path = it.path;
        path.push_back(q->step);
        next.push_back({x, q->node, std::move(path)});
      }
    }
    level = std::move(next);
  }
  // contains() and the search disagree; unreachable for well-formed tries.
  throw Error("internal error: refinement failed without a witness");
}

Verdict Engine::check_refines(const Command& c, const Command& d) {
  for (int s = 0; s < model_.num_states(); ++s) {
    NodeId a = den(c, s, depth_);
    NodeId b = den(d, s, depth_);
    if (!contains(a, b)) return witness(a, b, s);
  }
  return {};
}

bool Engine::refines(const Command& c, const Command& d) {
  for (int s = 0; s < model_.num_states(); ++s)
    if (!contains(den(c, s, depth_), den(d, s, depth_))) return false;
  return true;
}

Verdict Engine::check_equal(const Command& c, const Command& d) {
  Verdict v = check_refines(c, d);
  if (!v.holds) return v;
  v = check_refines(d, c);
  v.direction = Verdict::Direction::Backward;
  return v;
}

std::vector<Behavior> Engine::behaviors(const Command& c, int state, std::size_t limit) {
  std::vector<Behavior> out;
  std::vector<StepId> path;
  auto emit = [&](Outcome o) {
    if (out.size() >= limit)
      throw ConfigError("more than " + std::to_string(limit) + " behaviours; lower the depth");
    out.push_back({state, path, o});
  };
  auto walk = [&](auto&& self, NodeId n) -> void {
    if (n == kAbort) {
      emit(Outcome::Abort);
      return;
    }
    if (nodes_[n].term) emit(Outcome::Term);
    bool cut = false;
    for (const Kid* k = kid_begin(n); k != kid_end(n); ++k) {
      if (k->node == kStub) {
        cut = true;
        continue;
      }
    }
    if (cut || (!path.empty() && nodes_[n].count == 0 && !nodes_[n].term)) emit(Outcome::Trunc);
    for (std::uint32_t i = 0; i < nodes_[n].count; ++i) {
      Kid k = kid_begin(n)[i];
      if (k.node == kStub) continue;
      path.push_back(k.step);
      self(self, k.node);
      path.pop_back();
    }
  };
  walk(walk, denote(c, state));
  return out;
}

Verdict refines(const Model& m, const Command& c, const Command& d, int depth) {
  Engine e(m, depth);
  return e.check_refines(c, d);
}

Verdict equal(const Model& m, const Command& c, const Command& d, int depth) {
  Engine e(m, depth);
  return e.check_equal(c, d);
}

}  // namespace cra
