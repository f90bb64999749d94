#include "cra/encodings.hpp"

#include "cra/errors.hpp"
#include "cra/normalize.hpp"

namespace cra {

Atom idle_atom(const Model& m) {
  if (m.kind() == ModelKind::Relational) throw ModelError("event encodings need an event model");
  return m.env_id();
}

Command atev(const Model& m, const std::string& event) {
  Command idle = mk_omega(mk_atomic(m, idle_atom(m)));
  return mk_seq(idle, mk_seq(mk_atomic(m, pi_event(m, event)), idle));
}

Command prefix(const Model& m, const std::string& event, const Command& p) {
  return mk_seq(atev(m, event), p);
}

Command ccs_restrict(const Model& m, const std::vector<std::string>& events, const Command& p) {
  for (const auto& e : events) require_event(m, e, false);
  return mk_join(p, mk_omega(mk_atomic(m, m.negate(pi_events(m, events)))));
}

Command csp_alphabetise(const Model& m, const std::vector<std::string>& events, const Command& p) {
  for (const auto& e : events) require_event(m, e, false);
  return mk_join(p, mk_omega(mk_atomic(m, m.negate(eps_events(m, events)))));
}

Command csp_par(const Model& m, const std::vector<std::string>& events, const Command& p1,
                const Command& p2) {
  return mk_par(csp_alphabetise(m, events, p1), csp_alphabetise(m, events, p2));
}

Atom hide_atom(const Model& m, const std::vector<std::string>& events, Atom b) {
  if (m.kind() != ModelKind::Csp && m.kind() != ModelKind::Ccs)
    throw ModelError("hiding needs a model with a silent program step");
  Atom hidden = pi_events(m, events);
  if ((b & hidden).empty()) return b;
  return Atom(b.bits() & ~hidden.bits()) | pi_event(m, kSilent);
}

Command csp_hide(const Model& m, const std::vector<std::string>& events, const Command& p,
                 int depth) {
  for (const auto& e : events) require_event(m, e, false);
  if (depth < 0) return p;
  switch (p.op()) {
    case Op::Abort:
    case Op::Magic:
    case Op::Nil:
    case Op::Test:
      return p;
    case Op::Atomic:
      return mk_atomic(m, hide_atom(m, events, p.atom()));
    case Op::Choice: {
      std::vector<Command> cs;
      for (const auto& k : p.children()) cs.push_back(csp_hide(m, events, k, depth));
      return mk_choice(std::move(cs));
    }
    case Op::Seq:
      return mk_seq(csp_hide(m, events, p.lhs(), depth), csp_hide(m, events, p.rhs(), depth));
    case Op::Fin: return mk_fin(csp_hide(m, events, p.body(), depth));
    case Op::Omega: return mk_omega(csp_hide(m, events, p.body(), depth));
    case Op::Inf: return mk_inf(csp_hide(m, events, p.body(), depth));
    case Op::Join:
    case Op::Par:
    case Op::Conj: {
      CanonicalHead h = head_normal(m, p);
      for (auto& b : h.branches) {
        b.atom = hide_atom(m, events, b.atom);
        b.rest = csp_hide(m, events, b.rest, depth - 1);
      }
      return reassemble(m, h);
    }
  }
  return p;
}

}  // namespace cra
