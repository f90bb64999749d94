#pragma once

#include <utility>

#include "cra/command.hpp"
#include "cra/relational.hpp"

namespace cra {

/// π(g) ⊓ E as a single atom: g-program steps or any environment step.
Atom guard_atom(const Model& m, const Rel& g);
Command guard(const Model& m, const Rel& g);
/// guar g ≜ (guard g)^ω
Command guar(const Model& m, const Rel& g);

/// ¬ε(r̄): anything except an environment step outside r.
Atom erelyatom(const Model& m, const Rel& r);
/// ¬ε(r̄) ⊓ ε(r̄);⊥
Command eassume(const Model& m, const Rel& r);
/// rely r ≜ (eassume r)^ω
Command rely(const Model& m, const Rel& r);

/// chaos ≜ α^ω
Command chaos(const Model& m);

/// Rely/guarantee quintuple {p, r} c {g, q}. `spec` stands in for the
/// specification command [q] and is supplied by the caller.
struct RGSpec {
  StateSet pre;
  Rel rely;
  Rel guar;
  Command spec;
};

/// (⦃p⦄ ; (rely r ⋒ guar g ⋒ spec), c); the quintuple holds when the first
/// refines to the second.
std::pair<Command, Command> quintuple(const Model& m, const RGSpec& s, const Command& c);

}  // namespace cra
