#include "cra/relational.hpp"

#include <bit>
#include <string>

#include "cra/errors.hpp"

namespace cra {

namespace {

std::uint64_t full_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void require_relational(const Model& m, const Rel& r) {
  if (m.kind() != ModelKind::Relational)
    throw DomainError("relations only exist in the relational model");
  if (r.num_states() != m.num_states())
    throw DomainError("relation over " + std::to_string(r.num_states()) +
                      " states used in a model with " +
                      std::to_string(m.num_states()) + " states");
}

}  // namespace

Rel::Rel(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxStates) throw DomainError("relation state count out of range");
  if ((bits & ~full_mask(n * n)) != 0) throw DomainError("relation pair outside state space");
}

Rel Rel::univ(int n) { return Rel(n, full_mask(n * n)); }

Rel Rel::id(int n) {
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) bits |= std::uint64_t{1} << (i * n + i);
  return Rel(n, bits);
}

Rel Rel::of(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::uint64_t bits = 0;
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw DomainError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside the state space of " + std::to_string(n) + " states");
    bits |= std::uint64_t{1} << (i * n + j);
  }
  return Rel(n, bits);
}

int Rel::size() const { return std::popcount(bits_); }

std::vector<std::pair<int, int>> Rel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for_each_bit(bits_, [&](int b) { out.emplace_back(b / n_, b % n_); });
  return out;
}

void Rel::same_space(const Rel& o) const {
  if (n_ != o.n_) throw DomainError("relations over different state spaces");
}

Rel Rel::operator|(const Rel& o) const {
  same_space(o);
  return Rel(n_, bits_ | o.bits_);
}

Rel Rel::operator&(const Rel& o) const {
  same_space(o);
  return Rel(n_, bits_ & o.bits_);
}

Rel Rel::complement() const { return Rel(n_, full_mask(n_ * n_) & ~bits_); }

Rel Rel::compose(const Rel& o) const {
  same_space(o);
  std::uint64_t out = 0;
  for (auto [i, j] : pairs())
    for (int k = 0; k < n_; ++k)
      if (o.contains(j, k)) out |= std::uint64_t{1} << (i * n_ + k);
  return Rel(n_, out);
}

bool Rel::subset_of(const Rel& o) const {
  same_space(o);
  return (bits_ & ~o.bits_) == 0;
}

Model relational_model(int states) {
  if (states < 1 || states > 5)
    throw ConfigError("relational model supports 1..5 states, got " + std::to_string(states));
  const int n = states;
  const int pairs = n * n;
  std::vector<StepInfo> steps;
  steps.reserve(2 * pairs);
  for (int kind = 0; kind < 2; ++kind) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        StepInfo s;
        s.pre = i;
        s.post = j;
        s.kind = kind == 0 ? StepKind::Program : StepKind::Environment;
        s.name = (kind == 0 ? "pi:" : "eps:") + std::to_string(i) + "->" + std::to_string(j);
        steps.push_back(std::move(s));
      }
    }
  }
  // pi(x) || eps(x) = pi(x); eps(x) || eps(x) = eps(x); two program steps never sync.
  const std::size_t total = steps.size();
  std::vector<std::optional<StepId>> table(total * total);
  for (int p = 0; p < pairs; ++p) {
    const auto pi = static_cast<StepId>(p);
    const auto eps = static_cast<StepId>(pairs + p);
    table[pi * total + eps] = pi;
    table[eps * total + pi] = pi;
    table[eps * total + eps] = eps;
  }
  Atom env_id(full_mask(pairs) << pairs);
  return Model(ModelKind::Relational, n, std::move(steps), env_id, EventInfo{}, table);
}

Atom pgm(const Model& m, const Rel& g) {
  require_relational(m, g);
  return Atom(g.bits());
}

Atom env(const Model& m, const Rel& r) {
  require_relational(m, r);
  return Atom(r.bits() << (m.num_states() * m.num_states()));
}

Rel pgm_part(const Model& m, Atom a) {
  const int n = m.num_states();
  return Rel(n, a.bits() & full_mask(n * n));
}

Rel env_part(const Model& m, Atom a) {
  const int n = m.num_states();
  return Rel(n, (a.bits() >> (n * n)) & full_mask(n * n));
}

}  // namespace cra
