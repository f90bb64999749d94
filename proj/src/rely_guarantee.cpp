#include "cra/rely_guarantee.hpp"

namespace cra {

Atom guard_atom(const Model& m, const Rel& g) { return m.meet(pgm(m, g), m.env_id()); }

Command guard(const Model& m, const Rel& g) { return mk_atomic(m, guard_atom(m, g)); }

Command guar(const Model& m, const Rel& g) { return mk_omega(guard(m, g)); }

Atom erelyatom(const Model& m, const Rel& r) { return m.negate(env(m, r.complement())); }

Command eassume(const Model& m, const Rel& r) { return assume(m, erelyatom(m, r)); }

Command rely(const Model& m, const Rel& r) { return mk_omega(eassume(m, r)); }

Command chaos(const Model& m) { return mk_omega(mk_atomic(m, m.alpha())); }

std::pair<Command, Command> quintuple(const Model& m, const RGSpec& s, const Command& c) {
  Command lhs = mk_seq(assertion(m, s.pre),
                       mk_conj(rely(m, s.rely), mk_conj(guar(m, s.guar), s.spec)));
  return {lhs, c};
}

}  // namespace cra
