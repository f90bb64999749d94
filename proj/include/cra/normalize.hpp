#pragma once

#include <cstddef>
#include <vector>

#include "cra/command.hpp"
#include "cra/model.hpp"

namespace cra {

inline constexpr std::size_t kDefaultRewriteBudget = 200'000;

struct Branch {
  Atom atom;
  Command rest;

  bool operator==(const Branch&) const = default;
};

/// t ⊓ t′;⊥ ⊓ ⨅ b_i;c_i
struct CanonicalHead {
  StateSet t;
  StateSet t_abort;
  /// Feasible atoms only, sorted by (atom, rest), no duplicates.
  std::vector<Branch> branches;

  bool operator==(const CanonicalHead&) const = default;
};

/// Factors `c` into its canonical head. Iterations are unfolded once.
/// Throws UnfoldBudgetExceeded after `budget` rewrite steps.
CanonicalHead head_normal(const Model& m, const Command& c,
                          std::size_t budget = kDefaultRewriteBudget);

/// Choice{Test(t), Test(t′);⊥, b_i;c_i ...}; the abort part is omitted when t′ is empty.
Command reassemble(const Model& m, const CanonicalHead& h);

/// Repeats head normalisation through branch continuations k times.
Command normalize_to_depth(const Model& m, const Command& c, int k,
                           std::size_t budget = kDefaultRewriteBudget);

}  // namespace cra
