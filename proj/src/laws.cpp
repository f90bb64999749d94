#include "cra/laws.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cra/encodings.hpp"
#include "cra/errors.hpp"
#include "cra/events.hpp"
#include "cra/normalize.hpp"
#include "cra/rely_guarantee.hpp"
#include "cra/syntax.hpp"

namespace cra {

int Gen::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool Gen::coin(int one_in) { return uniform(1, one_in) == 1; }

StateSet Gen::test() {
  return StateSet(rng_() & m_.all_states().bits());
}

Rel Gen::rel() {
  int n = m_.num_states();
  int density = uniform(1, 3);
  std::uint64_t bits = 0;
  for (int i = 0; i < n * n; ++i)
    if (uniform(0, 3) < density) bits |= std::uint64_t{1} << i;
  return Rel(n, bits);
}

Atom Gen::atom() {
  if (m_.kind() == ModelKind::Relational) {
    switch (uniform(0, 9)) {
      case 0: case 1: case 2: return pgm(m_, rel());
      case 3: case 4: return env(m_, rel());
      case 5: case 6: return pgm(m_, rel()) | env(m_, rel());
      case 7: return m_.alpha();
      case 8: return m_.env_id();
      default: break;
    }
  } else if (coin(3)) {
    return Atom::single(static_cast<StepId>(uniform(0, static_cast<int>(m_.num_steps()) - 1)));
  }
  std::uint64_t bits = rng_() & m_.universe().bits();
  return Atom(bits);
}

Atom Gen::feasible_atom() {
  for (;;) {
    Atom a = atom();
    if (!m_.is_infeasible(a)) return a;
  }
}

Command Gen::leaf() {
  switch (uniform(0, 19)) {
    case 0: return mk_abort();
    case 1: return mk_magic();
    case 2: case 3: case 4: return mk_nil();
    case 5: case 6: case 7: return mk_test(m_, test());
    case 8: return skip(m_);
    case 9: case 10: case 11: {
      // a stuttering step lets parallel partners of other lengths meet it
      Command e = skip(m_);
      return mk_seq(e, mk_seq(mk_atomic(m_, atom()), e));
    }
    default: return mk_atomic(m_, atom());
  }
}

Command Gen::command(int size) {
  if (size <= 1) return leaf();
  int l = uniform(1, size - 1);
  switch (uniform(0, 13)) {
    case 0: case 1: case 2: return mk_choice(command(l), command(size - l));
    case 3: return mk_join(command(l), command(size - l));
    case 4: case 5: case 6: case 7: return mk_seq(command(l), command(size - l));
    case 8: case 9: return mk_par(command(l), command(size - l));
    case 10: return mk_conj(command(l), command(size - l));
    case 11: return mk_fin(command(size - 1));
    case 12: return mk_omega(body(size - 1));
    default: return mk_inf(body(size - 1));
  }
}

Command Gen::body(int size) {
  // A body that can terminate at once makes ω and ∞ collapse to ⊥; mostly avoid it.
  if (size < 2 || coin(4)) return command(size);
  return mk_seq(mk_atomic(m_, atom()), command(size - 1));
}

Command Gen::abort_free(int size) {
  if (size <= 1) {
    switch (uniform(0, 9)) {
      case 0: return mk_magic();
      case 1: case 2: return mk_nil();
      case 3: case 4: return mk_test(m_, test());
      default: return mk_atomic(m_, atom());
    }
  }
  int l = uniform(1, size - 1);
  switch (uniform(0, 7)) {
    case 0: case 1: return mk_choice(abort_free(l), abort_free(size - l));
    case 2: return mk_join(abort_free(l), abort_free(size - l));
    case 3: case 4: return mk_seq(abort_free(l), abort_free(size - l));
    case 5: return mk_par(abort_free(l), abort_free(size - l));
    case 6: return mk_conj(abort_free(l), abort_free(size - l));
    default: return mk_fin(abort_free(size - 1));
  }
}

Command Gen::process(int size) {
  Command idle = mk_omega(mk_atomic(m_, idle_atom(m_)));
  const auto& evs = m_.events().events;
  if (size <= 1) return coin(3) ? mk_seq(idle, mk_magic()) : idle;
  int l = uniform(1, size - 1);
  switch (uniform(0, 3)) {
    case 0:
    case 1: {
      const std::string& e = evs[static_cast<std::size_t>(uniform(0, static_cast<int>(evs.size()) - 1))];
      return prefix(m_, e, process(size - 1));
    }
    case 2: return mk_choice(process(l), process(size - l));
    default: return mk_seq(process(l), process(size - l));
  }
}

bool LawCase::applies_to(ModelKind k) const {
  return models.empty() || std::find(models.begin(), models.end(), k) != models.end();
}

namespace {

using R = LawCase::Relation;

Command seq(std::initializer_list<Command> cs) {
  std::vector<Command> v(cs);
  Command out = v.back();
  for (std::size_t i = v.size() - 1; i-- > 0;) out = mk_seq(v[i], out);
  return out;
}

Command choice(std::initializer_list<Command> cs) { return mk_choice(std::vector<Command>(cs)); }

Command at(Gen& g) { return mk_atomic(g.model(), g.atom()); }
Command ts(Gen& g) { return mk_test(g.model(), g.test()); }
Command atom_of(Gen& g, Atom a) { return mk_atomic(g.model(), a); }

/// ⟨a⟩ ≜ E^ω ; a ; E^ω
Command stutter(const Model& m, const Command& a) {
  Command e = mk_omega(mk_atomic(m, m.env_id()));
  return seq({e, a, e});
}

LawCase law(std::string name, std::string ref, R rel, std::function<LawInstance(Gen&)> f,
            int size = 7) {
  LawCase l;
  l.name = std::move(name);
  l.ref = std::move(ref);
  l.relation = rel;
  l.size = size;
  l.instantiate = std::move(f);
  return l;
}

LawCase conjunctive(LawCase l) {
  l.conjunctive = true;
  return l;
}

LawCase only(LawCase l, std::vector<ModelKind> ks) {
  l.models = std::move(ks);
  return l;
}

LawCase disputed(LawCase l, std::string why) {
  l.note = std::move(why);
  return l;
}

std::string complement_of(const Model& m, const std::string& e) {
  auto it = m.events().complement.find(e);
  return it == m.events().complement.end() ? std::string() : it->second;
}

/// A random CCS event with a complement, and that complement.
std::pair<std::string, std::string> ccs_pair(Gen& g) {
  const Model& m = g.model();
  std::vector<std::string> ok;
  for (const auto& e : m.events().events)
    if (!complement_of(m, e).empty()) ok.push_back(e);
  if (ok.empty()) throw ConfigError("the CCS alphabet declares no complementary events");
  std::string a = ok[static_cast<std::size_t>(g.uniform(0, static_cast<int>(ok.size()) - 1))];
  return {a, complement_of(m, a)};
}

/// A random event a and an alphabet A containing it.
std::pair<std::string, std::vector<std::string>> csp_event(Gen& g) {
  const auto& evs = g.model().events().events;
  std::string a = evs[static_cast<std::size_t>(g.uniform(0, static_cast<int>(evs.size()) - 1))];
  std::vector<std::string> alphabet{a};
  for (const auto& e : evs)
    if (e != a && g.coin(2)) alphabet.push_back(e);
  return {a, alphabet};
}

std::vector<LawCase> build_catalogue() {
  const ModelKind rel = ModelKind::Relational;
  std::vector<LawCase> v;

  // Lattice.
  v.push_back(law("choice-assoc", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_choice(mk_choice(c, d), e), mk_choice(c, mk_choice(d, e))};
  }));
  v.push_back(law("choice-comm", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{mk_choice(c, d), mk_choice(d, c)};
  }));
  v.push_back(law("choice-idem", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_choice(c, c), c};
  }));
  v.push_back(law("join-assoc", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_join(mk_join(c, d), e), mk_join(c, mk_join(d, e))};
  }));
  v.push_back(law("join-comm", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{mk_join(c, d), mk_join(d, c)};
  }));
  v.push_back(law("join-idem", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_join(c, c), c};
  }));
  v.push_back(law("absorption", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{mk_choice(c, mk_join(c, d)), c};
  }));
  v.push_back(law("join-distr-choice", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_join(c, mk_choice(d, e)), mk_choice(mk_join(c, d), mk_join(c, e))};
  }));
  v.push_back(law("choice-distr-join", "lattice", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_choice(c, mk_join(d, e)), mk_join(mk_choice(c, d), mk_choice(c, e))};
  }));
  v.push_back(law("abort-refines", "lattice", R::Refines, [](Gen& g) {
    return LawInstance{mk_abort(), g.command()};
  }));
  v.push_back(law("refines-magic", "lattice", R::Refines, [](Gen& g) {
    return LawInstance{g.command(), mk_magic()};
  }));

  // Sequential composition and iteration.
  v.push_back(law("seq-assoc", "sequential", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_seq(mk_seq(c, d), e), mk_seq(c, mk_seq(d, e))};
  }));
  v.push_back(law("seq-nil-identity", "sequential", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_seq(mk_nil(), mk_seq(c, mk_nil())), c};
  }));
  v.push_back(law("seq-magic-annihilates", "sequential", R::Equal, [](Gen& g) {
    return LawInstance{mk_seq(mk_magic(), g.command()), mk_magic()};
  }));
  v.push_back(law("seq-abort-annihilates", "sequential", R::Equal, [](Gen& g) {
    return LawInstance{mk_seq(mk_abort(), g.command()), mk_abort()};
  }));
  v.push_back(law("seq-distr-right", "sequential", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_seq(mk_choice(c, d), e), mk_choice(mk_seq(c, e), mk_seq(d, e))};
  }));
  v.push_back(conjunctive(law("seq-distr-left", "sequential", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_seq(c, mk_choice(d, e)), mk_choice(mk_seq(c, d), mk_seq(c, e))};
  })));
  v.push_back(law("omega-unfold", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_omega(c), mk_choice(mk_nil(), mk_seq(c, mk_omega(c)))};
  }));
  v.push_back(law("finite-unfold", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_fin(c), mk_choice(mk_nil(), mk_seq(c, mk_fin(c)))};
  }));
  v.push_back(law("infinite-unfold", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_inf(c), mk_seq(c, mk_inf(c))};
  }));
  v.push_back(law("infinite-unfold-power", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_inf(c), mk_seq(power(c, g.uniform(0, 3)), mk_inf(c))};
  }));
  v.push_back(law("infinite-annihilates", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{mk_seq(mk_inf(c), d), mk_inf(c)};
  }));
  v.push_back(law("infinite-definition", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_inf(c), mk_seq(mk_omega(c), mk_magic())};
  }));
  v.push_back(conjunctive(law("isolation", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_omega(c), mk_choice(mk_fin(c), mk_inf(c))};
  })));
  v.push_back(conjunctive(law("finite-iteration", "iteration", R::Equal, [](Gen& g) {
    // Powers beyond depth+1 add no observation of length <= depth.
    Command c = g.command();
    std::vector<Command> powers;
    for (int i = 0; i <= g.depth() + 1; ++i) powers.push_back(power(c, i));
    return LawInstance{mk_fin(c), mk_choice(std::move(powers))};
  }, 3)));
  v.push_back(conjunctive(law("iteration-split", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{mk_seq(mk_omega(c), d), mk_choice(mk_seq(mk_fin(c), d), mk_inf(c))};
  })));
  v.push_back(conjunctive(law("iteration-split-step", "iteration", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{seq({c, mk_omega(c), d}), mk_choice(seq({c, mk_fin(c), d}), mk_inf(c))};
  })));

  // Parallel composition.
  v.push_back(law("par-assoc-abort-free", "parallel", R::Equal, [](Gen& g) {
    Command c = g.abort_free(3), d = g.abort_free(3), e = g.abort_free(3);
    return LawInstance{mk_par(mk_par(c, d), e), mk_par(c, mk_par(d, e))};
  }));
  v.push_back(law("par-comm", "parallel", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{mk_par(c, d), mk_par(d, c)};
  }));
  v.push_back(law("par-skip-identity", "parallel", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_par(c, skip(g.model())), c};
  }));
  v.push_back(law("par-magic-annihilates", "parallel", R::Equal, [](Gen& g) {
    return LawInstance{mk_par(g.command(), mk_magic()), mk_magic()};
  }));
  v.push_back(law("par-distr-choice", "parallel", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_par(c, mk_choice(d, e)), mk_choice(mk_par(c, d), mk_par(c, e))};
  }));
  v.push_back(law("skip-refines-nil", "parallel", R::Refines, [](Gen& g) {
    return LawInstance{skip(g.model()), mk_nil()};
  }, 1));
  v.push_back(law("nil-par-nil", "parallel", R::Equal, [](Gen&) {
    return LawInstance{mk_par(mk_nil(), mk_nil()), mk_nil()};
  }, 1));

  // Tests.
  v.push_back(law("test-seq-test", "tests", R::Equal, [](Gen& g) {
    Command t = ts(g), u = ts(g);
    return LawInstance{mk_seq(t, u), mk_join(t, u)};
  }, 1));
  v.push_back(law("test-par-test", "tests", R::Equal, [](Gen& g) {
    Command t = ts(g), u = ts(g);
    return LawInstance{mk_par(t, u), mk_join(t, u)};
  }, 1));
  v.push_back(law("test-join-conjunction", "tests", R::Equal, [](Gen& g) {
    StateSet t = g.test(), u = g.test();
    const Model& m = g.model();
    return LawInstance{mk_join(mk_test(m, t), mk_test(m, u)), mk_test(m, t & u)};
  }, 1));
  v.push_back(law("test-choice-disjunction", "tests", R::Equal, [](Gen& g) {
    StateSet t = g.test(), u = g.test();
    const Model& m = g.model();
    return LawInstance{mk_choice(mk_test(m, t), mk_test(m, u)), mk_test(m, t | u)};
  }, 1));
  v.push_back(law("test-excluded-middle", "tests", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    StateSet t = g.test();
    return LawInstance{mk_choice(mk_test(m, t), mk_test(m, m.all_states().minus(t))), mk_nil()};
  }, 1));
  v.push_back(law("test-contradiction", "tests", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    StateSet t = g.test();
    return LawInstance{mk_join(mk_test(m, t), mk_test(m, m.all_states().minus(t))), mk_magic()};
  }, 1));
  v.push_back(law("test-interchange-par", "tests", R::Equal, [](Gen& g) {
    Command t = ts(g), u = ts(g), c = g.command(), d = g.command();
    return LawInstance{mk_par(mk_seq(t, c), mk_seq(u, d)), mk_seq(mk_join(t, u), mk_par(c, d))};
  }));
  v.push_back(law("test-interchange-join", "tests", R::Equal, [](Gen& g) {
    Command t = ts(g), u = ts(g), c = g.command(), d = g.command();
    return LawInstance{mk_join(mk_seq(t, c), mk_seq(u, d)), mk_seq(mk_join(t, u), mk_join(c, d))};
  }));
  v.push_back(law("assertion-expansion", "tests", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    StateSet t = g.test();
    Command c = g.command();
    Command rhs = mk_choice(mk_seq(mk_test(m, t), c),
                            mk_seq(mk_test(m, m.all_states().minus(t)), mk_abort()));
    return LawInstance{mk_seq(assertion(m, t), c), rhs};
  }));

  // Atomic steps.
  v.push_back(law("atomic-interchange", "atomic", R::Equal, [](Gen& g) {
    Atom a = g.atom(), b = g.atom();
    Command c = g.command(), d = g.command();
    const Model& m = g.model();
    return LawInstance{mk_par(mk_seq(atom_of(g, a), c), mk_seq(atom_of(g, b), d)),
                       mk_seq(atom_of(g, m.sync(a, b)), mk_par(c, d))};
  }));
  v.push_back(law("atomic-par-nil", "atomic", R::Equal, [](Gen& g) {
    return LawInstance{mk_par(mk_seq(at(g), g.command()), mk_nil()), mk_magic()};
  }));
  v.push_back(law("atomic-inf-par", "atomic", R::Equal, [](Gen& g) {
    Atom a = g.atom(), b = g.atom();
    return LawInstance{mk_par(mk_inf(atom_of(g, a)), mk_inf(atom_of(g, b))),
                       mk_inf(atom_of(g, g.model().sync(a, b)))};
  }, 1));
  v.push_back(law("atomic-join-interchange", "atomic", R::Equal, [](Gen& g) {
    Atom a = g.atom(), b = g.atom();
    Command c = g.command(), d = g.command();
    return LawInstance{mk_join(mk_seq(atom_of(g, a), c), mk_seq(atom_of(g, b), d)),
                       mk_seq(atom_of(g, g.model().join(a, b)), mk_join(c, d))};
  }));
  v.push_back(law("atomic-join-nil", "atomic", R::Equal, [](Gen& g) {
    return LawInstance{mk_join(mk_seq(at(g), g.command()), mk_nil()), mk_magic()};
  }));
  v.push_back(law("atomic-inf-join", "atomic", R::Equal, [](Gen& g) {
    Atom a = g.atom(), b = g.atom();
    return LawInstance{mk_join(mk_inf(atom_of(g, a)), mk_inf(atom_of(g, b))),
                       mk_inf(atom_of(g, g.model().join(a, b)))};
  }, 1));

  // Weak conjunction.
  v.push_back(law("conj-abort", "weak-conjunction", R::Equal, [](Gen& g) {
    return LawInstance{mk_conj(g.command(), mk_abort()), mk_abort()};
  }));
  v.push_back(law("conj-atomic", "weak-conjunction", R::Equal, [](Gen& g) {
    Command a = at(g), b = at(g);
    return LawInstance{mk_conj(a, b), mk_join(a, b)};
  }, 1));
  v.push_back(law("conj-test", "weak-conjunction", R::Equal, [](Gen& g) {
    Command t = ts(g), u = ts(g);
    return LawInstance{mk_conj(t, u), mk_join(t, u)};
  }, 1));
  v.push_back(law("conj-interchange", "weak-conjunction", R::Equal, [](Gen& g) {
    Command a = at(g), b = at(g), c = g.command(), d = g.command();
    return LawInstance{mk_conj(mk_seq(a, c), mk_seq(b, d)), mk_seq(mk_conj(a, b), mk_conj(c, d))};
  }));
  v.push_back(law("conj-atomic-nil", "weak-conjunction", R::Equal, [](Gen& g) {
    return LawInstance{mk_conj(mk_seq(at(g), g.command()), mk_nil()), mk_magic()};
  }));
  v.push_back(law("conj-atomic-inf", "weak-conjunction", R::Equal, [](Gen& g) {
    Command a = at(g), b = at(g);
    return LawInstance{mk_conj(mk_inf(a), mk_inf(b)), mk_inf(mk_conj(a, b))};
  }, 1));
  v.push_back(law("conj-assoc", "weak-conjunction", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_conj(mk_conj(c, d), e), mk_conj(c, mk_conj(d, e))};
  }));
  v.push_back(law("conj-comm", "weak-conjunction", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command();
    return LawInstance{mk_conj(c, d), mk_conj(d, c)};
  }));
  v.push_back(law("conj-idem", "weak-conjunction", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_conj(c, c), c};
  }));
  v.push_back(law("conj-distr-choice", "weak-conjunction", R::Equal, [](Gen& g) {
    Command c = g.command(), d = g.command(), e = g.command();
    return LawInstance{mk_conj(c, mk_choice(d, e)), mk_choice(mk_conj(c, d), mk_conj(c, e))};
  }));

  // Lemmas on iterated atomic steps.
  v.push_back(conjunctive(law("atomic-iteration-finite", "lemma", R::Equal, [](Gen& g) {
    Atom a = g.atom(), b = g.atom();
    Command ca = atom_of(g, a), cb = atom_of(g, b), c = g.command(), d = g.command();
    Command lhs = mk_par(mk_seq(mk_fin(ca), c), mk_seq(mk_fin(cb), d));
    Command rhs = mk_seq(mk_fin(atom_of(g, g.model().sync(a, b))),
                         choice({mk_par(c, d), mk_par(c, seq({cb, mk_fin(cb), d})),
                                 mk_par(seq({ca, mk_fin(ca), c}), d)}));
    return LawInstance{lhs, rhs};
  }, 3)));
  v.push_back(conjunctive(law("atomic-iteration-finite-infinite", "lemma", R::Equal, [](Gen& g) {
    Atom a = g.atom(), b = g.atom();
    Command ca = atom_of(g, a), cb = atom_of(g, b), c = g.command();
    return LawInstance{mk_par(mk_seq(mk_fin(ca), c), mk_inf(cb)),
                       mk_seq(mk_fin(atom_of(g, g.model().sync(a, b))), mk_par(c, mk_inf(cb)))};
  }, 3)));
  v.push_back(conjunctive(law("atomic-iteration-either", "lemma", R::Equal, [](Gen& g) {
    Atom a = g.atom(), b = g.atom();
    Command ca = atom_of(g, a), cb = atom_of(g, b), c = g.command(), d = g.command();
    Command lhs = mk_par(mk_seq(mk_omega(ca), c), mk_seq(mk_omega(cb), d));
    Command rhs = mk_seq(mk_omega(atom_of(g, g.model().sync(a, b))),
                         choice({mk_par(c, d), mk_par(c, seq({cb, mk_omega(cb), d})),
                                 mk_par(seq({ca, mk_omega(ca), c}), d)}));
    return LawInstance{lhs, rhs};
  }, 3)));
  v.push_back(law("atomic-identity-iteration", "lemma", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_par(mk_omega(mk_atomic(g.model(), g.model().env_id())), c), c};
  }));
  v.push_back(conjunctive(law("atomic-interleaving", "lemma", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    Atom a = g.atom(), b = g.atom();
    Command sa = stutter(m, atom_of(g, a)), sb = stutter(m, atom_of(g, b));
    return LawInstance{mk_par(sa, sb),
                       choice({stutter(m, atom_of(g, m.sync(a, b))), mk_seq(sa, sb), mk_seq(sb, sa)})};
  }, 1)));
  v.push_back(conjunctive(law("atomic-iteration-conjunction", "lemma", R::Equal, [](Gen& g) {
    Command a = at(g), b = at(g);
    return LawInstance{mk_conj(mk_omega(a), mk_omega(b)), mk_omega(mk_conj(a, b))};
  }, 1)));
  v.push_back(law("atomic-infinite-distribution", "lemma", R::Equal, [](Gen& g) {
    Command a = mk_omega(at(g)), c = g.command(), d = g.command();
    return LawInstance{mk_conj(a, mk_seq(c, d)), mk_seq(mk_conj(a, c), mk_conj(a, d))};
  }));
  v.push_back(conjunctive(law("atom-inf-conj-test", "lemma", R::Equal, [](Gen& g) {
    Command t = ts(g);
    return LawInstance{mk_conj(mk_omega(at(g)), t), t};
  }, 1)));
  v.push_back(conjunctive(law("atom-inf-conj-test-abort", "lemma", R::Equal, [](Gen& g) {
    Command t = mk_seq(ts(g), mk_abort());
    return LawInstance{mk_conj(mk_omega(at(g)), t), t};
  }, 1)));
  v.push_back(law("chaos-conj-identity", "lemma", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_conj(chaos(g.model()), c), c};
  }));
  v.push_back(law("assume-merge", "lemma", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    Atom a = g.atom(), b = g.atom();
    return LawInstance{mk_conj(assume(m, a), assume(m, b)), assume(m, m.join(a, b))};
  }, 1));
  v.push_back(law("assume-iteration", "lemma", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    Atom a = g.atom();
    Command w = mk_omega(atom_of(g, a));
    return LawInstance{mk_omega(assume(m, a)),
                       mk_choice(w, seq({w, atom_of(g, m.negate(a)), mk_abort()}))};
  }, 1));
  v.push_back(conjunctive(law("assume-iteration-distribution", "lemma", R::Equal, [](Gen& g) {
    Command r = mk_omega(assume(g.model(), g.atom())), c = g.command(), d = g.command();
    return LawInstance{mk_conj(r, mk_seq(c, d)), mk_seq(mk_conj(r, c), mk_conj(r, d))};
  })));

  // Rely and guarantee.
  v.push_back(only(law("guard-merge", "rely-guarantee", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    Rel g1 = g.rel(), g2 = g.rel();
    return LawInstance{mk_conj(guard(m, g1), guard(m, g2)), guard(m, g1 & g2)};
  }, 1), {rel}));
  v.push_back(only(law("guar-strengthen", "rely-guarantee", R::Refines, [](Gen& g) {
    const Model& m = g.model();
    Rel g2 = g.rel();
    Rel g1 = g2 & g.rel();
    return LawInstance{guar(m, g2), guar(m, g1)};
  }, 1), {rel}));
  v.push_back(only(law("guar-distribution", "rely-guarantee", R::Equal, [](Gen& g) {
    Command gu = guar(g.model(), g.rel()), c = g.command(), d = g.command();
    return LawInstance{mk_conj(gu, mk_seq(c, d)), mk_seq(mk_conj(gu, c), mk_conj(gu, d))};
  }), {rel}));
  v.push_back(only(law("eassume-merge", "rely-guarantee", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    Rel r1 = g.rel(), r2 = g.rel();
    return LawInstance{mk_conj(eassume(m, r1), eassume(m, r2)), eassume(m, r1 & r2)};
  }, 1), {rel}));
  v.push_back(only(conjunctive(law("rely-distribution", "rely-guarantee", R::Equal, [](Gen& g) {
    Command r = rely(g.model(), g.rel()), c = g.command(), d = g.command();
    return LawInstance{mk_conj(r, mk_seq(c, d)), mk_seq(mk_conj(r, c), mk_conj(r, d))};
  })), {rel}));
  v.push_back(only(law("rely-universal", "rely-guarantee", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    return LawInstance{eassume(m, Rel::univ(m.num_states())), mk_atomic(m, m.alpha())};
  }, 1), {rel}));

  // Canonical representation.
  v.push_back(law("canonical-representation", "canonical", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{c, reassemble(g.model(), head_normal(g.model(), c))};
  }, 6));
  v.push_back(law("canonical-depth", "canonical", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{c, normalize_to_depth(g.model(), c, g.depth())};
  }, 5));

  // Event communication.
  v.push_back(only(law("ccs-sync-or-interleave", "ccs", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    auto [a, abar] = ccs_pair(g);
    Command x = atev(m, a), y = atev(m, abar);
    return LawInstance{mk_par(x, y), choice({atev(m, kSilent), mk_seq(x, y), mk_seq(y, x)})};
  }, 1), {ModelKind::Ccs}));
  v.push_back(only(law("ccs-restrict-forces-sync", "ccs", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    auto [a, abar] = ccs_pair(g);
    return LawInstance{ccs_restrict(m, {a, abar}, mk_par(atev(m, a), atev(m, abar))),
                       atev(m, kSilent)};
  }, 1), {ModelKind::Ccs}));
  v.push_back(only(law("ccs-restrict-empty", "ccs", R::Equal, [](Gen& g) {
    Command p = g.abort_free(4);
    return LawInstance{ccs_restrict(g.model(), {}, p), p};
  }), {ModelKind::Ccs}));
  v.push_back(only(law("csp-prefix-sync-alphabetised", "csp", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    auto [a, alphabet] = csp_event(g);
    Command p1 = g.process(g.uniform(1, 4)), p2 = g.process(g.uniform(1, 4));
    return LawInstance{
        csp_par(m, alphabet, prefix(m, a, p1), prefix(m, a, p2)),
        csp_alphabetise(m, alphabet, prefix(m, a, csp_par(m, alphabet, p1, p2)))};
  }, 1), {ModelKind::Csp}));
  v.push_back(only(law("csp-hide-distributes", "csp", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    auto [a, alphabet] = csp_event(g);
    Command c = g.command(), d = g.command();
    std::vector<std::string> h{a};
    return LawInstance{
        csp_hide(m, h, mk_choice(mk_seq(c, d), d), g.depth()),
        mk_choice(mk_seq(csp_hide(m, h, c, g.depth()), csp_hide(m, h, d, g.depth())),
                  csp_hide(m, h, d, g.depth()))};
  }), {ModelKind::Csp, ModelKind::Ccs}));
  v.push_back(only(law("sccs-sync-or-interleave", "sccs", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    const auto& ps = m.events().particles;
    std::string a = ps[static_cast<std::size_t>(g.uniform(0, static_cast<int>(ps.size()) - 1))];
    Command x = atev(m, a), y = atev(m, a + "^-1");
    return LawInstance{mk_par(x, y), choice({atev(m, "1"), mk_seq(x, y), mk_seq(y, x)})};
  }, 1), {ModelKind::Sccs}));
  return v;
}

std::vector<LawCase> build_disputed() {
  std::vector<LawCase> v;
  v.push_back(disputed(law("par-assoc", "parallel", R::Equal, [](Gen& g) {
    Command c = g.command(3), d = g.command(3), e = g.command(3);
    return LawInstance{mk_par(mk_par(c, d), e), mk_par(c, mk_par(d, e))};
  }),
      "not satisfiable together with c || top = top, skip || bot = bot and the interchange laws"));
  v.push_back(disputed(only(law("csp-prefix-sync", "csp", R::Equal, [](Gen& g) {
    const Model& m = g.model();
    auto [a, alphabet] = csp_event(g);
    Command p1 = g.process(g.uniform(1, 4)), p2 = g.process(g.uniform(1, 4));
    return LawInstance{csp_par(m, alphabet, prefix(m, a, p1), prefix(m, a, p2)),
                       prefix(m, a, csp_par(m, alphabet, p1, p2))};
  }, 1), {ModelKind::Csp}),
      "the leading idle steps of the right-hand prefix admit environment a-steps"));
  return v;
}

std::vector<LawCase> build_corrupted() {
  std::vector<LawCase> v;
  v.push_back(law("corrupt-atomic-interchange", "corrupted", R::Equal, [](Gen& g) {
    Command a = mk_atomic(g.model(), g.feasible_atom()), b = mk_atomic(g.model(), g.feasible_atom());
    Command c = g.command(), d = g.command();
    return LawInstance{mk_par(mk_seq(a, c), mk_seq(b, d)), mk_seq(a, mk_par(c, mk_seq(b, d)))};
  }, 2));
  v.push_back(law("corrupt-omega-unfold", "corrupted", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_omega(c), mk_seq(c, mk_omega(c))};
  }, 2));
  v.push_back(law("corrupt-conj-abort", "corrupted", R::Equal, [](Gen& g) {
    Command c = g.command();
    return LawInstance{mk_conj(c, mk_abort()), c};
  }, 2));
  return v;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

const std::vector<LawCase>& law_catalogue() {
  static const std::vector<LawCase> v = build_catalogue();
  return v;
}

const std::vector<LawCase>& disputed_laws() {
  static const std::vector<LawCase> v = build_disputed();
  return v;
}

const std::vector<LawCase>& corrupted_laws() {
  static const std::vector<LawCase> v = build_corrupted();
  return v;
}

const LawCase* find_law(const std::string& name) {
  for (const auto* list : {&law_catalogue(), &disputed_laws(), &corrupted_laws()})
    for (const auto& l : *list)
      if (l.name == name) return &l;
  return nullptr;
}

LawResult run_law(const Model& m, const LawCase& law, int trials, std::uint64_t seed, int depth) {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (!law.applies_to(m.kind()))
    throw ConfigError("law " + law.name + " is not stated for the " +
                      std::string(to_string(m.kind())) + " model");
  LawResult r;
  r.name = law.name;
  r.ref = law.ref;
  Engine engine(m, depth);
  const std::uint64_t salt = fnv1a(law.name);
  for (int i = 0; i < trials; ++i) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32),
                     static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(sq);
    Gen g(m, rng, law.size, depth);
    LawInstance inst = law.instantiate(g);
    Verdict v = law.relation == LawCase::Relation::Equal ? engine.check_equal(inst.lhs, inst.rhs)
                                                         : engine.check_refines(inst.lhs, inst.rhs);
    r.trials = i + 1;
    if (!v.holds) {
      r.passed = false;
      Counterexample cx;
      cx.lhs = print(m, inst.lhs);
      cx.rhs = print(m, inst.rhs);
      cx.witness = format_behavior(m, *v.witness);
      cx.failed = v.direction == Verdict::Direction::Forward ? "lhs [= rhs" : "rhs [= lhs";
      r.counterexample = std::move(cx);
      break;
    }
  }
  return r;
}

std::vector<LawResult> run_suite(const Model& m, int trials, std::uint64_t seed, int depth) {
  std::vector<LawResult> out;
  for (const auto& l : law_catalogue())
    if (l.applies_to(m.kind())) out.push_back(run_law(m, l, trials, seed, depth));
  return out;
}

std::string format_result(const LawResult& r) {
  std::ostringstream os;
  os << r.name << ' ' << r.ref << ' ' << (r.passed ? "PASS" : "FAIL") << " trials=" << r.trials
     << '\n';
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    os << "  lhs: " << cx.lhs << '\n'
       << "  rhs: " << cx.rhs << '\n'
       << "  failed: " << cx.failed << '\n'
       << "  witness: " << cx.witness << '\n';
  }
  return os.str();
}

std::string format_result_json(const LawResult& r) {
  nlohmann::ordered_json j;
  j["law"] = r.name;
  j["ref"] = r.ref;
  j["status"] = r.passed ? "PASS" : "FAIL";
  j["trials"] = r.trials;
  if (r.counterexample) {
    j["witness"] = r.counterexample->witness;
    j["failed"] = r.counterexample->failed;
    j["lhs"] = r.counterexample->lhs;
    j["rhs"] = r.counterexample->rhs;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump() + '\n';
}

}  // namespace cra
