#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <vector>

#include "cra/model.hpp"

namespace cra {

enum class Op {
  Abort,  // ⊥
  Magic,  // ⊤
  Nil,
  Test,
  Atomic,
  Choice,  // ⨅ over a nonempty set
  Join,    // ⊔
  Seq,
  Par,
  Conj,  // weak conjunction ⋒
  Fin,   // c^*
  Omega,  // c^ω
  Inf,    // c^∞
};

/// An immutable command term. Copies share structure.
class Command {
 public:
  /// Defaults to ⊤.
  Command();

  Op op() const { return node_->op; }
  StateSet test() const { return node_->test; }
  Atom atom() const { return node_->atom; }
  /// Choice members (sorted, distinct), the two operands of a binary
  /// operator, or the body of an iteration.
  const std::vector<Command>& children() const { return node_->kids; }
  const Command& lhs() const { return node_->kids[0]; }
  const Command& rhs() const { return node_->kids[1]; }
  const Command& body() const { return node_->kids[0]; }

  std::size_t hash() const { return node_->hash; }
  /// Number of constructor nodes.
  std::size_t size() const { return node_->size; }
  /// Stable identity for memo tables; valid while any copy is alive.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Command& a, const Command& b);
  friend bool operator!=(const Command& a, const Command& b) { return !(a == b); }
  /// Total structural order.
  friend bool operator<(const Command& a, const Command& b);

 private:
  struct Node {
    Op op;
    StateSet test;
    Atom atom;
    std::vector<Command> kids;
    std::size_t hash;
    std::size_t size;
  };
  explicit Command(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Command make(Op op, StateSet t, Atom a, std::vector<Command> kids);

  friend Command mk_abort();
  friend Command mk_magic();
  friend Command mk_nil();
  friend Command mk_test(const Model&, StateSet);
  friend Command mk_atomic(const Model&, Atom);
  friend Command mk_choice(std::vector<Command>);
  friend Command mk_join(Command, Command);
  friend Command mk_seq(Command, Command);
  friend Command mk_par(Command, Command);
  friend Command mk_conj(Command, Command);
  friend Command mk_fin(Command);
  friend Command mk_omega(Command);
  friend Command mk_inf(Command);

  std::shared_ptr<const Node> node_;
};

int compare(const Command& a, const Command& b);

Command mk_abort();
Command mk_magic();
Command mk_nil();
/// Throws DomainError when `t` exceeds the model's state space.
Command mk_test(const Model& m, StateSet t);
/// Throws DomainError when `a` has steps outside the model.
Command mk_atomic(const Model& m, Atom a);
/// Flattens nested choices and removes duplicates; throws EmptyChoice.
Command mk_choice(std::vector<Command> cs);
Command mk_join(Command c, Command d);
Command mk_seq(Command c, Command d);
Command mk_par(Command c, Command d);
Command mk_conj(Command c, Command d);
Command mk_fin(Command c);
Command mk_omega(Command c);
Command mk_inf(Command c);

/// Binary choice convenience.
Command mk_choice(Command c, Command d);

/// skip ≜ E^ω, the identity of parallel composition.
Command skip(const Model& m);
/// c^n as a right-nested sequence ending in nil.
Command power(const Command& c, int n);
/// ⦃t⦄ ≜ t ⊓ ¬t;⊥
Command assertion(const Model& m, StateSet t);
/// ⦃a⦄ ≜ a ⊓ ¬a;⊥
Command assume(const Model& m, Atom a);

}  // namespace cra

template <>
struct std::hash<cra::Command> {
  std::size_t operator()(const cra::Command& c) const noexcept { return c.hash(); }
};
