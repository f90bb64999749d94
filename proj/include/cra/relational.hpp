#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cra/model.hpp"

namespace cra {

/// A binary relation over the states 0..n-1, n <= 8.
class Rel {
 public:
  static constexpr int kMaxStates = 8;

  Rel() = default;
  Rel(int n, std::uint64_t bits);

  static Rel empty(int n) { return Rel(n, 0); }
  static Rel univ(int n);
  static Rel id(int n);
  static Rel of(int n, const std::vector<std::pair<int, int>>& pairs);

  int num_states() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int i, int j) const { return (bits_ >> (i * n_ + j)) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  int size() const;
  std::vector<std::pair<int, int>> pairs() const;

  Rel operator|(const Rel& o) const;
  Rel operator&(const Rel& o) const;
  Rel complement() const;
  /// Relational composition: (i,k) when (i,j) in this and (j,k) in o.
  Rel compose(const Rel& o) const;
  bool subset_of(const Rel& o) const;

  bool operator==(const Rel&) const = default;

 private:
  void same_space(const Rel& o) const;

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Relational model over `states` states (1..5). Concrete steps are the
/// program steps "pi:i->j" followed by the environment steps "eps:i->j".
Model relational_model(int states);

/// π(g): program steps in g.
Atom pgm(const Model& m, const Rel& g);
/// ε(r): environment steps in r.
Atom env(const Model& m, const Rel& r);
/// The (p, e) pair of a relational atom.
Rel pgm_part(const Model& m, Atom a);
Rel env_part(const Model& m, Atom a);

}  // namespace cra
