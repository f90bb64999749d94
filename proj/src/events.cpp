#include "cra/events.hpp"

#include <algorithm>
#include <set>

#include "cra/errors.hpp"

namespace cra {

namespace {

using Kind = EventLabel::Kind;

EventLabel make(ModelKind m, Kind k, std::string e = {}) {
  EventLabel l;
  l.model = m;
  l.kind = k;
  l.event = std::move(e);
  return l;
}

void check_alphabet(const std::vector<std::string>& events) {
  std::set<std::string> seen;
  for (const auto& e : events) {
    if (e.empty()) throw AlphabetError("empty event name");
    if (e == kSilent || e == "idle")
      throw AlphabetError("'" + e + "' is reserved and cannot be declared");
    if (!seen.insert(e).second) throw AlphabetError("event '" + e + "' declared twice");
  }
}

Model build(ModelKind kind, std::vector<EventLabel> labels, EventInfo info) {
  std::vector<StepInfo> steps;
  Atom env_id;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    StepInfo s;
    s.name = label_name(labels[i], info);
    s.event = labels[i].event;
    s.exponents = labels[i].exponents;
    switch (labels[i].kind) {
      case Kind::Pgm: s.kind = StepKind::Program; break;
      case Kind::Env: s.kind = StepKind::Environment; break;
      case Kind::Idle: s.kind = StepKind::Idle; break;
      case Kind::Sccs: {
        bool zero = std::all_of(s.exponents.begin(), s.exponents.end(),
                                [](int v) { return v == 0; });
        s.kind = zero ? StepKind::Idle : StepKind::Program;
        break;
      }
    }
    steps.push_back(std::move(s));
  }
  const std::size_t n = labels.size();
  std::vector<std::optional<StepId>> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (steps[x].kind != StepKind::Program) env_id = env_id | Atom::single(static_cast<StepId>(x));
    for (std::size_t y = 0; y < n; ++y) {
      auto z = sync_labels(labels[x], labels[y], info);
      if (!z) continue;
      if (kind == ModelKind::Sccs) {
        const int b = info.exponent_bound, span = 2 * b + 1;
        for (int& e : z->exponents) e = ((e + b) % span + span) % span - b;
      }
      auto it = std::find(labels.begin(), labels.end(), *z);
      if (it != labels.end()) table[x * n + y] = static_cast<StepId>(it - labels.begin());
    }
  }
  return Model(kind, 1, std::move(steps), env_id, std::move(info), table);
}

std::string sccs_name(const std::vector<int>& v, const EventInfo& info) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += '.';
    out += i < info.particles.size() ? info.particles[i] : "p" + std::to_string(i);
    if (v[i] != 1) out += "^" + std::to_string(v[i]);
  }
  return out.empty() ? "idle" : "pi:" + out;
}

}  // namespace

std::optional<EventLabel> sync_labels(const EventLabel& x, const EventLabel& y,
                                      const EventInfo& info) {
  if (x.model != y.model)
    throw ModelError("cannot synchronise labels of the " + std::string(to_string(x.model)) +
                     " and " + std::string(to_string(y.model)) + " models");
  switch (x.model) {
    case ModelKind::Ccs: {
      if (x.kind == Kind::Idle && y.kind == Kind::Idle) return x;
      if (x.kind == Kind::Idle && y.kind == Kind::Pgm) return y;
      if (x.kind == Kind::Pgm && y.kind == Kind::Idle) return x;
      if (x.kind == Kind::Pgm && y.kind == Kind::Pgm) {
        auto it = info.complement.find(x.event);
        if (it != info.complement.end() && it->second == y.event)
          return make(ModelKind::Ccs, Kind::Pgm, kSilent);
      }
      return std::nullopt;
    }
    case ModelKind::Csp: {
      // Idle is ε_tau: the environment step matching the silent event.
      auto ev = [](const EventLabel& l) { return l.kind == Kind::Idle ? std::string(kSilent) : l.event; };
      bool xe = x.kind != Kind::Pgm;
      bool ye = y.kind != Kind::Pgm;
      if (ev(x) != ev(y)) return std::nullopt;
      if (!xe && !ye) {
        if (x.event == kSilent) return std::nullopt;
        return x;
      }
      if (!xe) return x;
      if (!ye) return y;
      return x;
    }
    case ModelKind::Sccs: {
      if (x.exponents.size() != y.exponents.size())
        throw ModelError("SCCS labels over different particle sets");
      EventLabel z = make(ModelKind::Sccs, Kind::Sccs);
      z.exponents.resize(x.exponents.size());
      for (std::size_t i = 0; i < z.exponents.size(); ++i)
        z.exponents[i] = x.exponents[i] + y.exponents[i];
      return z;
    }
    case ModelKind::Relational:
      break;
  }
  throw ModelError("relational steps are not event labels");
}

std::string label_name(const EventLabel& l, const EventInfo& info) {
  switch (l.kind) {
    case Kind::Pgm: return "pi:" + l.event;
    case Kind::Env: return "eps:" + l.event;
    case Kind::Idle: return "idle";
    case Kind::Sccs: return sccs_name(l.exponents, info);
  }
  return "?";
}

Model ccs_model(const std::vector<std::string>& events,
                const std::vector<std::pair<std::string, std::string>>& complement) {
  check_alphabet(events);
  EventInfo info;
  info.events = events;
  for (const auto& [a, b] : complement) {
    for (const auto& e : {a, b})
      if (std::find(events.begin(), events.end(), e) == events.end())
        throw AlphabetError("complement refers to undeclared event '" + e + "'");
    if (a == b) throw AlphabetError("event '" + a + "' cannot be its own complement");
    for (const auto& e : {a, b})
      if (info.complement.count(e)) throw AlphabetError("event '" + e + "' has two complements");
    info.complement[a] = b;
    info.complement[b] = a;
  }
  std::vector<EventLabel> labels;
  for (const auto& e : events) labels.push_back(make(ModelKind::Ccs, Kind::Pgm, e));
  labels.push_back(make(ModelKind::Ccs, Kind::Pgm, kSilent));
  labels.push_back(make(ModelKind::Ccs, Kind::Idle));
  if (labels.size() > kMaxSteps) throw ConfigError("CCS alphabet too large");
  return build(ModelKind::Ccs, std::move(labels), std::move(info));
}

Model csp_model(const std::vector<std::string>& events) {
  check_alphabet(events);
  EventInfo info;
  info.events = events;
  std::vector<EventLabel> labels;
  for (const auto& e : events) {
    labels.push_back(make(ModelKind::Csp, Kind::Pgm, e));
    labels.push_back(make(ModelKind::Csp, Kind::Env, e));
  }
  labels.push_back(make(ModelKind::Csp, Kind::Pgm, kSilent));
  labels.push_back(make(ModelKind::Csp, Kind::Idle));
  if (labels.size() > kMaxSteps) throw ConfigError("CSP alphabet too large");
  return build(ModelKind::Csp, std::move(labels), std::move(info));
}

Model sccs_model(const std::vector<std::string>& particles, int bound) {
  check_alphabet(particles);
  if (particles.empty()) throw AlphabetError("SCCS needs at least one particle");
  if (bound < 1) throw ConfigError("SCCS exponent bound must be at least 1");
  std::size_t count = 1;
  for (std::size_t i = 0; i < particles.size(); ++i) {
    count *= static_cast<std::size_t>(2 * bound + 1);
    if (count > kMaxSteps)
      throw ConfigError("SCCS label universe exceeds " + std::to_string(kMaxSteps) +
                        " labels; reduce particles or exponent bound");
  }
  EventInfo info;
  info.particles = particles;
  info.exponent_bound = bound;
  std::vector<EventLabel> labels;
  std::vector<int> v(particles.size(), -bound);
  for (std::size_t c = 0; c < count; ++c) {
    EventLabel l = make(ModelKind::Sccs, Kind::Sccs);
    l.exponents = v;
    labels.push_back(std::move(l));
    for (std::size_t i = v.size(); i-- > 0;) {
      if (++v[i] <= bound) break;
      v[i] = -bound;
    }
  }
  return build(ModelKind::Sccs, std::move(labels), std::move(info));
}

EventLabel label_of(const Model& m, StepId s) {
  const auto& info = m.step(s);
  switch (m.kind()) {
    case ModelKind::Sccs: {
      EventLabel l = make(ModelKind::Sccs, Kind::Sccs);
      l.exponents = info.exponents;
      return l;
    }
    case ModelKind::Ccs:
    case ModelKind::Csp: {
      Kind k = info.kind == StepKind::Program ? Kind::Pgm
               : info.kind == StepKind::Environment ? Kind::Env
                                                    : Kind::Idle;
      return make(m.kind(), k, info.event);
    }
    case ModelKind::Relational:
      break;
  }
  throw ModelError("relational steps are not event labels");
}

std::optional<StepId> find_label(const Model& m, const EventLabel& l) {
  if (l.model != m.kind()) throw ModelError("label belongs to a different model");
  return m.find_step(label_name(l, m.events()));
}

namespace {

// `x`, `x^-1`, `x^2.y`; `1` is the unit.
std::optional<std::vector<int>> sccs_exponents(const Model& m, const std::string& event) {
  const auto& ps = m.events().particles;
  std::vector<int> v(ps.size(), 0);
  if (event == "1") return v;
  std::size_t start = 0;
  while (start <= event.size()) {
    std::size_t end = event.find('.', start);
    if (end == std::string::npos) end = event.size();
    std::string part = event.substr(start, end - start);
    std::size_t caret = part.find('^');
    std::string name = part.substr(0, caret);
    auto it = std::find(ps.begin(), ps.end(), name);
    if (it == ps.end()) return std::nullopt;
    int k = 1;
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        k = std::stoi(part.substr(caret + 1), &used);
        if (used != part.size() - caret - 1) return std::nullopt;
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    v[static_cast<std::size_t>(it - ps.begin())] += k;
    start = end + 1;
  }
  return v;
}

}  // namespace

void require_event(const Model& m, const std::string& event, bool allow_silent) {
  if (m.kind() == ModelKind::Relational) throw ModelError("the relational model has no events");
  if (m.kind() == ModelKind::Sccs) {
    auto v = sccs_exponents(m, event);
    if (!v) throw AlphabetError("unknown event '" + event + "'");
    if (sccs_vector(m, *v).empty())
      throw AlphabetError("event '" + event + "' lies outside the exponent bound");
    return;
  }
  if (allow_silent && event == kSilent) return;
  const auto& pool = m.events().events;
  if (std::find(pool.begin(), pool.end(), event) == pool.end())
    throw AlphabetError("unknown event '" + event + "'");
}

Atom pi_event(const Model& m, const std::string& event) {
  require_event(m, event, true);
  if (m.kind() == ModelKind::Sccs) return sccs_vector(m, *sccs_exponents(m, event));
  auto s = find_label(m, make(m.kind(), Kind::Pgm, event));
  return Atom::single(*s);
}

Atom pi_events(const Model& m, const std::vector<std::string>& events) {
  Atom out;
  for (const auto& e : events) out = out | pi_event(m, e);
  return out;
}

Atom eps_events(const Model& m, const std::vector<std::string>& events) {
  if (m.kind() != ModelKind::Csp) throw ModelError("environment events exist only in CSP");
  Atom out;
  for (const auto& e : events) {
    require_event(m, e, true);
    auto l = e == kSilent ? make(ModelKind::Csp, Kind::Idle) : make(ModelKind::Csp, Kind::Env, e);
    out = out | Atom::single(*find_label(m, l));
  }
  return out;
}

Atom sccs_vector(const Model& m, const std::vector<int>& exponents) {
  if (m.kind() != ModelKind::Sccs) throw ModelError("exponent vectors exist only in SCCS");
  if (exponents.size() != m.events().particles.size())
    throw ModelError("exponent vector has wrong length");
  EventLabel l = make(ModelKind::Sccs, Kind::Sccs);
  l.exponents = exponents;
  auto s = find_label(m, l);
  if (!s) return Atom();
  return Atom::single(*s);
}

}  // namespace cra
