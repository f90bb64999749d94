#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cra {

using StepId = std::uint8_t;

inline constexpr std::size_t kMaxSteps = 64;
inline constexpr int kMaxStates = 64;

/// Calls `f(i)` for every set bit `i` of `bits`, lowest first.
template <class F>
inline void for_each_bit(std::uint64_t bits, F&& f) {
  while (bits != 0) {
    int i = std::countr_zero(bits);
    f(i);
    bits &= bits - 1;
  }
}

/// A set of states, i.e. the denotation of a test.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static StateSet of(std::initializer_list<int> states);
  static constexpr StateSet all(int n) {
    return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int s) const { return (bits_ >> s) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  std::vector<int> members() const;

  constexpr StateSet operator|(StateSet o) const { return StateSet(bits_ | o.bits_); }
  constexpr StateSet operator&(StateSet o) const { return StateSet(bits_ & o.bits_); }
  constexpr StateSet minus(StateSet o) const { return StateSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(StateSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr auto operator<=>(const StateSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// An atomic step: the finite set of concrete steps it may perform.
///
/// Lower in the refinement order means more steps, so lattice meet (choice)
/// is set union and lattice join is intersection. The empty set is the
/// infeasible atom.
class Atom {
 public:
  constexpr Atom() = default;
  constexpr explicit Atom(std::uint64_t bits) : bits_(bits) {}

  static constexpr Atom single(StepId s) { return Atom(std::uint64_t{1} << s); }

  constexpr bool contains(StepId s) const { return (bits_ >> s) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  std::vector<StepId> steps() const;

  constexpr Atom operator|(Atom o) const { return Atom(bits_ | o.bits_); }
  constexpr Atom operator&(Atom o) const { return Atom(bits_ & o.bits_); }

  constexpr auto operator<=>(const Atom&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

enum class ModelKind { Relational, Ccs, Csp, Sccs };

std::string_view to_string(ModelKind kind);

/// Program steps belong to the process, environment steps to its context.
/// Idle marks the event-model step that stands for "any environment".
enum class StepKind { Program, Environment, Idle };

struct StepInfo {
  int pre = 0;
  int post = 0;
  StepKind kind = StepKind::Program;
  std::string name;
  std::vector<int> exponents;  // SCCS particle exponents, empty otherwise
  std::string event;           // event name for CCS/CSP, empty otherwise
};

/// Alphabet metadata for the event-based models.
struct EventInfo {
  std::vector<std::string> events;              // non-silent events
  std::map<std::string, std::string> complement;  // CCS only, symmetric
  std::vector<std::string> particles;           // SCCS only
  int exponent_bound = 0;                       // SCCS only
};

/// A finite atomic-step algebra over a concrete step universe.
///
/// Every instantiation (relational, CCS, CSP, SCCS) is described by its list
/// of concrete steps, each with pre/post state, plus a partial synchronisation
/// table on concrete steps. Atom-level operations lift from there.
class Model {
 public:
  /// `sync_table[x * steps.size() + y]` is the synchronisation of x and y.
  Model(ModelKind kind, int num_states, std::vector<StepInfo> steps,
        Atom env_id, EventInfo events,
        const std::vector<std::optional<StepId>>& sync_table);

  ModelKind kind() const { return impl_->kind; }
  int num_states() const { return impl_->num_states; }
  StateSet all_states() const { return StateSet::all(impl_->num_states); }
  std::size_t num_steps() const { return impl_->steps.size(); }
  const StepInfo& step(StepId s) const { return impl_->steps[s]; }
  const EventInfo& events() const { return impl_->events; }
  std::optional<StepId> find_step(std::string_view name) const;

  /// Steps whose pre-state is `state`.
  Atom steps_from(int state) const { return impl_->from[state]; }
  std::optional<StepId> sync_steps(StepId x, StepId y) const {
    auto v = impl_->sync[x * impl_->steps.size() + y];
    if (v < 0) return std::nullopt;
    return static_cast<StepId>(v);
  }
  /// True if some concrete step synchronises with `s`.
  bool has_partner(StepId s) const { return impl_->partnered.contains(s); }
  Atom partnered() const { return impl_->partnered; }

  Atom meet(Atom a, Atom b) const { return a | b; }
  Atom join(Atom a, Atom b) const { return a & b; }
  Atom negate(Atom a) const { return Atom(universe().bits() & ~a.bits()); }
  Atom sync(Atom a, Atom b) const;
  Atom alpha() const { return universe(); }
  Atom env_id() const { return impl_->env_id; }
  Atom magic_atom() const { return Atom(); }
  bool is_infeasible(Atom a) const { return a.empty(); }
  /// a ⊑ b: every step of b is a step of a.
  bool refines(Atom a, Atom b) const { return (b.bits() & ~a.bits()) == 0; }
  /// All atoms; only sensible for small universes.
  std::vector<Atom> enumerate() const;
  Atom universe() const {
    return Atom(num_steps() >= 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << num_steps()) - 1);
  }

  /// The atom `t ; b`: b restricted to steps starting in t.
  Atom guard(StateSet t, Atom b) const;
  /// States from which `a` can take a step.
  StateSet pre_states(Atom a) const;

  void check(Atom a) const;
  void check(StateSet s) const;

  /// Same configuration (kind, states, step universe).
  bool compatible(const Model& o) const;

 private:
  struct Impl {
    ModelKind kind;
    int num_states;
    std::vector<StepInfo> steps;
    Atom env_id;
    EventInfo events;
    std::vector<std::int16_t> sync;
    std::vector<Atom> from;
    Atom partnered;
    std::map<std::string, StepId, std::less<>> by_name;
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace cra
