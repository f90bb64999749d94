#include "cra/command.hpp"

#include <algorithm>

#include "cra/errors.hpp"

namespace cra {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Command::Command() : Command(mk_magic()) {}

Command Command::make(Op op, StateSet t, Atom a, std::vector<Command> kids) {
  std::size_t h = static_cast<std::size_t>(op) * 0x100000001b3ULL;
  h = mix(h, t.bits());
  h = mix(h, a.bits());
  std::size_t size = 1;
  for (const auto& k : kids) {
    h = mix(h, k.hash());
    size += k.size();
  }
  return Command(std::make_shared<const Node>(Node{op, t, a, std::move(kids), h, size}));
}

int compare(const Command& a, const Command& b) {
  if (a.id() == b.id()) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.test() != b.test()) return a.test() < b.test() ? -1 : 1;
  if (a.atom() != b.atom()) return a.atom() < b.atom() ? -1 : 1;
  const auto& ka = a.children();
  const auto& kb = b.children();
  if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (int c = compare(ka[i], kb[i]); c != 0) return c;
  return 0;
}

bool operator==(const Command& a, const Command& b) {
  return a.id() == b.id() || (a.hash() == b.hash() && compare(a, b) == 0);
}

bool operator<(const Command& a, const Command& b) { return compare(a, b) < 0; }

Command mk_abort() {
  static const Command c = Command::make(Op::Abort, {}, {}, {});
  return c;
}

Command mk_magic() {
  static const Command c = Command::make(Op::Magic, {}, {}, {});
  return c;
}

Command mk_nil() {
  static const Command c = Command::make(Op::Nil, {}, {}, {});
  return c;
}

Command mk_test(const Model& m, StateSet t) {
  m.check(t);
  return Command::make(Op::Test, t, {}, {});
}

Command mk_atomic(const Model& m, Atom a) {
  m.check(a);
  return Command::make(Op::Atomic, {}, a, {});
}

Command mk_choice(std::vector<Command> cs) {
  if (cs.empty()) throw EmptyChoice();
  std::vector<Command> flat;
  flat.reserve(cs.size());
  for (auto& c : cs) {
    if (c.op() == Op::Choice)
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    else
      flat.push_back(std::move(c));
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  return Command::make(Op::Choice, {}, {}, std::move(flat));
}

Command mk_choice(Command c, Command d) { return mk_choice(std::vector<Command>{std::move(c), std::move(d)}); }

Command mk_join(Command c, Command d) {
  return Command::make(Op::Join, {}, {}, {std::move(c), std::move(d)});
}

Command mk_seq(Command c, Command d) {
  return Command::make(Op::Seq, {}, {}, {std::move(c), std::move(d)});
}

Command mk_par(Command c, Command d) {
  return Command::make(Op::Par, {}, {}, {std::move(c), std::move(d)});
}

Command mk_conj(Command c, Command d) {
  return Command::make(Op::Conj, {}, {}, {std::move(c), std::move(d)});
}

Command mk_fin(Command c) { return Command::make(Op::Fin, {}, {}, {std::move(c)}); }

Command mk_omega(Command c) { return Command::make(Op::Omega, {}, {}, {std::move(c)}); }

Command mk_inf(Command c) { return Command::make(Op::Inf, {}, {}, {std::move(c)}); }

Command skip(const Model& m) { return mk_omega(mk_atomic(m, m.env_id())); }

Command power(const Command& c, int n) {
  if (n < 0) throw DomainError("negative power");
  Command out = mk_nil();
  for (int i = 0; i < n; ++i) out = mk_seq(c, out);
  return out;
}

Command assertion(const Model& m, StateSet t) {
  m.check(t);
  return mk_choice(mk_test(m, t), mk_seq(mk_test(m, m.all_states().minus(t)), mk_abort()));
}

Command assume(const Model& m, Atom a) {
  m.check(a);
  return mk_choice(mk_atomic(m, a), mk_seq(mk_atomic(m, m.negate(a)), mk_abort()));
}

}  // namespace cra
