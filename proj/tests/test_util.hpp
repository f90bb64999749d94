#pragma once

#include <random>
#include <string>

#include "cra/command.hpp"
#include "cra/model.hpp"

namespace cra::testing {

inline Command random_term(const Model& m, std::mt19937_64& rng, int size) {
  auto atom = [&] {
    // sparse atoms keep the explicit oracle fast
    std::uint64_t bits = 0;
    for (std::size_t s = 0; s < m.num_steps(); ++s)
      if (rng() % 3 == 0) bits |= std::uint64_t{1} << s;
    return mk_atomic(m, Atom(bits));
  };
  if (size <= 1) {
    switch (rng() % 8) {
      case 0: return mk_abort();
      case 1: return mk_magic();
      case 2: return mk_nil();
      case 3: return mk_test(m, StateSet(rng() % (1U << m.num_states())));
      default: return atom();
    }
  }
  int l = 1 + static_cast<int>(rng() % static_cast<unsigned>(size - 1));
  switch (rng() % 9) {
    case 0: return mk_choice(random_term(m, rng, l), random_term(m, rng, size - l));
    case 1: return mk_join(random_term(m, rng, l), random_term(m, rng, size - l));
    case 2:
    case 3: return mk_seq(random_term(m, rng, l), random_term(m, rng, size - l));
    case 4: return mk_par(random_term(m, rng, l), random_term(m, rng, size - l));
    case 5: return mk_conj(random_term(m, rng, l), random_term(m, rng, size - l));
    case 6: return mk_fin(random_term(m, rng, size - 1));
    case 7: return mk_omega(random_term(m, rng, size - 1));
    default: return mk_inf(random_term(m, rng, size - 1));
  }
}

inline std::string dbg(const Command& c) {
  static const char* names[] = {"abort", "magic", "nil", "test", "atom", "choice", "join",
                                "seq", "par", "conj", "fin", "omega", "inf"};
  std::string out = names[static_cast<int>(c.op())];
  if (c.op() == Op::Test) out += "{" + std::to_string(c.test().bits()) + "}";
  if (c.op() == Op::Atomic) out += "{" + std::to_string(c.atom().bits()) + "}";
  if (!c.children().empty()) {
    out += "(";
    for (std::size_t i = 0; i < c.children().size(); ++i)
      out += (i ? ", " : "") + dbg(c.children()[i]);
    out += ")";
  }
  return out;
}

}  // namespace cra::testing
