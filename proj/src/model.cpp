#include "cra/model.hpp"

#include "cra/errors.hpp"

namespace cra {

StateSet StateSet::of(std::initializer_list<int> states) {
  std::uint64_t bits = 0;
  for (int s : states) {
    if (s < 0 || s >= kMaxStates) throw DomainError("state index out of range");
    bits |= std::uint64_t{1} << s;
  }
  return StateSet(bits);
}

std::vector<int> StateSet::members() const {
  std::vector<int> out;
  for_each_bit(bits_, [&](int i) { out.push_back(i); });
  return out;
}

std::vector<StepId> Atom::steps() const {
  std::vector<StepId> out;
  for_each_bit(bits_, [&](int i) { out.push_back(static_cast<StepId>(i)); });
  return out;
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Relational: return "rel";
    case ModelKind::Ccs: return "ccs";
    case ModelKind::Csp: return "csp";
    case ModelKind::Sccs: return "sccs";
  }
  return "?";
}

Model::Model(ModelKind kind, int num_states, std::vector<StepInfo> steps,
             Atom env_id, EventInfo events,
             const std::vector<std::optional<StepId>>& sync_table) {
  if (num_states < 1 || num_states > kMaxStates)
    throw ConfigError("state count must be within 1.." + std::to_string(kMaxStates));
  if (steps.empty() || steps.size() > kMaxSteps)
    throw ConfigError("step universe must hold 1.." + std::to_string(kMaxSteps) +
                      " steps, got " + std::to_string(steps.size()));
  const std::size_t n = steps.size();
  if (sync_table.size() != n * n) throw ConfigError("sync table has wrong size");

  auto impl = std::make_shared<Impl>();
  impl->kind = kind;
  impl->num_states = num_states;
  impl->env_id = env_id;
  impl->events = std::move(events);
  impl->from.assign(num_states, Atom());
  impl->sync.assign(n * n, -1);
  std::uint64_t partnered = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (auto z = sync_table[x * n + y]) {
        if (*z >= n) throw ConfigError("sync table refers to unknown step");
        const auto& a = steps[x];
        const auto& b = steps[y];
        const auto& c = steps[*z];
        if (a.pre != b.pre || a.post != b.post || c.pre != a.pre || c.post != a.post)
          throw ConfigError("synchronised steps must agree on pre- and post-state");
        impl->sync[x * n + y] = *z;
        partnered |= std::uint64_t{1} << x;
      }
    }
  }
  impl->partnered = Atom(partnered);
  for (std::size_t s = 0; s < n; ++s) {
    const auto& info = steps[s];
    if (info.pre < 0 || info.pre >= num_states || info.post < 0 ||
        info.post >= num_states)
      throw ConfigError("step '" + info.name + "' leaves the state space");
    impl->from[info.pre] = impl->from[info.pre] | Atom::single(static_cast<StepId>(s));
    impl->by_name.emplace(info.name, static_cast<StepId>(s));
  }
  impl->steps = std::move(steps);
  impl_ = std::move(impl);
}

std::optional<StepId> Model::find_step(std::string_view name) const {
  auto it = impl_->by_name.find(name);
  if (it == impl_->by_name.end()) return std::nullopt;
  return it->second;
}

Atom Model::sync(Atom a, Atom b) const {
  std::uint64_t out = 0;
  const std::size_t n = num_steps();
  for_each_bit(a.bits(), [&](int x) {
    for_each_bit(b.bits(), [&](int y) {
      auto z = impl_->sync[x * n + y];
      if (z >= 0) out |= std::uint64_t{1} << z;
    });
  });
  return Atom(out);
}

std::vector<Atom> Model::enumerate() const {
  if (num_steps() > 20)
    throw ConfigError("atom enumeration limited to universes of at most 20 steps");
  std::vector<Atom> out;
  const std::uint64_t count = std::uint64_t{1} << num_steps();
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) out.emplace_back(bits);
  return out;
}

Atom Model::guard(StateSet t, Atom b) const {
  std::uint64_t out = 0;
  for (int s = 0; s < num_states(); ++s)
    if (t.contains(s)) out |= impl_->from[s].bits();
  return Atom(b.bits() & out);
}

StateSet Model::pre_states(Atom a) const {
  std::uint64_t out = 0;
  for (int s = 0; s < num_states(); ++s)
    if ((impl_->from[s].bits() & a.bits()) != 0) out |= std::uint64_t{1} << s;
  return StateSet(out);
}

void Model::check(Atom a) const {
  if ((a.bits() & ~universe().bits()) != 0)
    throw DomainError("atom contains steps outside the configured model");
}

void Model::check(StateSet s) const {
  if (!s.subset_of(all_states()))
    throw DomainError("state set exceeds the configured state space of " +
                      std::to_string(num_states()) + " states");
}

bool Model::compatible(const Model& o) const {
  if (impl_ == o.impl_) return true;
  if (kind() != o.kind() || num_states() != o.num_states() ||
      num_steps() != o.num_steps())
    return false;
  for (std::size_t s = 0; s < num_steps(); ++s)
    if (step(static_cast<StepId>(s)).name != o.step(static_cast<StepId>(s)).name)
      return false;
  return true;
}

}  // namespace cra
