#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cra/model.hpp"

namespace cra {

/// The silent event ι.
inline constexpr const char* kSilent = "tau";

/// A single label of an event model.
///
/// Pgm is π_e (π_tau is the silent step), Env is ε_e (CSP only), Idle is the
/// pure environment step, Sccs is a particle exponent vector (the zero vector
/// being the SCCS unit 1).
struct EventLabel {
  enum class Kind { Pgm, Env, Idle, Sccs };

  ModelKind model = ModelKind::Ccs;
  Kind kind = Kind::Idle;
  std::string event;
  std::vector<int> exponents;

  bool operator==(const EventLabel&) const = default;
};

/// Label-level synchronisation; nullopt when the pair cannot synchronise.
/// Throws ModelError when the labels come from different models. SCCS is
/// computed with unbounded integer exponents.
std::optional<EventLabel> sync_labels(const EventLabel& x, const EventLabel& y,
                                      const EventInfo& info);

std::string label_name(const EventLabel& l, const EventInfo& info);

/// CCS over the given events; `complement` lists pairs (a, ā).
Model ccs_model(const std::vector<std::string>& events,
                const std::vector<std::pair<std::string, std::string>>& complement);
Model csp_model(const std::vector<std::string>& events);
/// SCCS with exponents bounded by `bound` in magnitude. Products are taken
/// modulo 2·bound+1, so the labels form the group Z_{2·bound+1}^n and sync
/// stays associative.
Model sccs_model(const std::vector<std::string>& particles, int bound);

EventLabel label_of(const Model& m, StepId s);
std::optional<StepId> find_label(const Model& m, const EventLabel& l);

/// π_a for an event (or "tau"). In SCCS an event is a product of particle
/// powers such as `x^-1.y^2`, or `1`.
Atom pi_event(const Model& m, const std::string& event);
/// π_A ≜ ⨅_{a∈A} π_a.
Atom pi_events(const Model& m, const std::vector<std::string>& events);
/// ε_A (CSP only).
Atom eps_events(const Model& m, const std::vector<std::string>& events);
/// The SCCS label with the given exponent vector.
Atom sccs_vector(const Model& m, const std::vector<int>& exponents);

/// Throws AlphabetError if `event` is not a declared event (or tau when allowed).
void require_event(const Model& m, const std::string& event, bool allow_silent);

}  // namespace cra
