#pragma once

#include <string>
#include <vector>

#include "cra/command.hpp"
#include "cra/events.hpp"

namespace cra {

/// The environment-step atom the encodings stutter on: idle in CCS, every
/// ε step in CSP (atomid), the unit 1 in SCCS.
Atom idle_atom(const Model& m);

/// ⟨a⟩ ≜ id^ω ; π_a ; id^ω
Command atev(const Model& m, const std::string& event);
/// a.p and a → p, both ⟨a⟩ ; p
Command prefix(const Model& m, const std::string& event, const Command& p);

/// Res_A p ≜ p ⊔ (¬π_A)^ω
Command ccs_restrict(const Model& m, const std::vector<std::string>& events, const Command& p);
/// p_A ≜ p ⊔ (¬ε_A)^ω
Command csp_alphabetise(const Model& m, const std::vector<std::string>& events, const Command& p);
/// p1 ∥_A p2 ≜ p1_A ∥ p2_A
Command csp_par(const Model& m, const std::vector<std::string>& events, const Command& p1,
                const Command& p2);

/// Renames program steps on events in A to the silent step.
Atom hide_atom(const Model& m, const std::vector<std::string>& events, Atom b);
/// Hiding pushed through sequential composition, choice and iterations.
/// Operators it does not distribute over (parallel, join, weak conjunction)
/// are head-normalised first; continuations more than `depth` steps deep are
/// left as they are, since no depth-bounded observation reaches them.
Command csp_hide(const Model& m, const std::vector<std::string>& events, const Command& p,
                 int depth);

}  // namespace cra
