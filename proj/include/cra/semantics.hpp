#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cra/command.hpp"
#include "cra/model.hpp"

namespace cra {

inline constexpr int kDefaultDepth = 6;
inline constexpr std::size_t kDefaultNodeBudget = 4'000'000;

enum class Outcome { Term, Abort, Trunc };

std::string_view to_string(Outcome o);

/// One finite Aczel trace: the initial state, the steps taken and how the
/// run ends. Trunc marks a run cut by the depth bound (or one that can no
/// longer continue without having terminated).
struct Behavior {
  int initial = 0;
  std::vector<StepId> steps;
  Outcome outcome = Outcome::Term;

  bool operator==(const Behavior&) const = default;
};

/// `s0 -pi:0->1-> s1 : TERM`
std::string format_behavior(const Model& m, const Behavior& b);

struct Verdict {
  enum class Direction { Forward, Backward };

  bool holds = true;
  /// A behaviour of the refining side that the refined side lacks.
  std::optional<Behavior> witness;
  /// For equality: Forward when `c [= d` fails, Backward when `d [= c` fails.
  Direction direction = Direction::Forward;
};

/// Depth-bounded trace semantics.
///
/// A denotation is a prefix-closed trie of steps, hash-consed so that equal
/// sub-tries share one id. A node records whether the run may terminate or
/// abort there; an aborting node stands for every extension. Nodes at depth k
/// point to a shared stub that stands for "some step k+1 is possible".
///
/// Instances memoise aggressively and are not thread-safe; use one per thread.
class Engine {
 public:
  using NodeId = std::uint32_t;

  explicit Engine(Model m, int depth = kDefaultDepth,
                  std::size_t node_budget = kDefaultNodeBudget);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Model& model() const { return model_; }
  int depth() const { return depth_; }

  NodeId denote(const Command& c, int state) { return denote(c, state, depth_); }
  NodeId denote(const Command& c, int state, int depth);

  /// c ⊑ d from every initial state.
  bool refines(const Command& c, const Command& d);
  Verdict check_refines(const Command& c, const Command& d);
  Verdict check_equal(const Command& c, const Command& d);

  /// All TERM and ABORT behaviours plus TRUNC cut points, depth first.
  /// Throws ConfigError past `limit` behaviours.
  std::vector<Behavior> behaviors(const Command& c, int state, std::size_t limit = 1'000'000);

  /// Cuts a denotation computed at a larger depth down to `depth`.
  NodeId truncate(NodeId n, int depth);

  /// Trie introspection.
  bool terminates(NodeId n) const { return nodes_[n].term; }
  bool aborts(NodeId n) const { return n == kAbort; }
  bool is_stub(NodeId n) const { return n == kStub; }
  std::vector<std::pair<StepId, NodeId>> kids(NodeId n) const;
  bool contains(NodeId a, NodeId b);
  std::size_t node_count() const { return nodes_.size(); }

  static constexpr NodeId kDead = 0;
  static constexpr NodeId kStub = 1;
  static constexpr NodeId kAbort = 2;
  static constexpr NodeId kTerm = 3;
  static constexpr NodeId kNone = ~NodeId{0};

 private:
  struct Kid {
    StepId step;
    NodeId node;
  };
  struct TNode {
    std::uint32_t begin;
    std::uint32_t count;
    bool term;
    bool abort;
    std::size_t hash;
  };
  struct NodeHash {
    const Engine* e;
    std::size_t operator()(NodeId n) const { return e->nodes_[n].hash; }
  };
  struct NodeEq {
    const Engine* e;
    bool operator()(NodeId a, NodeId b) const { return e->same_content(a, b); }
  };
  struct DenKey {
    const void* cmd;
    int state;
    int rem;
    bool operator==(const DenKey&) const = default;
  };
  struct DenKeyHash {
    std::size_t operator()(const DenKey& k) const;
  };
  struct GraftKey {
    NodeId node;
    int state;
    int rem;
    const void* cmd;
    bool operator==(const GraftKey&) const = default;
  };
  struct GraftKeyHash {
    std::size_t operator()(const GraftKey& k) const;
  };

  const Kid* kid_begin(NodeId n) const { return kids_.data() + nodes_[n].begin; }
  const Kid* kid_end(NodeId n) const { return kid_begin(n) + nodes_[n].count; }
  NodeId find_kid(NodeId n, StepId s) const;
  bool same_content(NodeId a, NodeId b) const;
  /// Interns a node whose kids are `scratch`, sorted by step.
  NodeId intern(bool term, bool abort, const std::vector<Kid>& scratch);
  void pin(const Command& c);

  NodeId join_nodes(NodeId a, NodeId b);
  NodeId conj_nodes(NodeId a, NodeId b);
  NodeId union_nodes(NodeId a, NodeId b);
  NodeId par_nodes(NodeId a, NodeId b);
  bool alive(NodeId n) const;
  NodeId graft(NodeId a, int state, int rem, const Command& d);
  NodeId strip_term(NodeId n);
  NodeId den(const Command& c, int state, int rem);

  Verdict witness(NodeId a, NodeId b, int state);

  Model model_;
  int depth_;
  std::size_t budget_;

  std::vector<TNode> nodes_;
  std::vector<Kid> kids_;
  std::unordered_set<NodeId, NodeHash, NodeEq> intern_;

  std::unordered_map<std::uint64_t, NodeId> union_memo_, join_memo_, conj_memo_, par_memo_,
      trunc_memo_;
  std::unordered_map<std::uint64_t, bool> contains_memo_;
  std::unordered_map<DenKey, NodeId, DenKeyHash> den_memo_;
  std::unordered_map<GraftKey, NodeId, GraftKeyHash> graft_memo_;
  std::unordered_map<const void*, Command> pins_;
};

/// One-shot helpers building a fresh engine.
Verdict refines(const Model& m, const Command& c, const Command& d, int depth = kDefaultDepth);
Verdict equal(const Model& m, const Command& c, const Command& d, int depth = kDefaultDepth);

}  // namespace cra
