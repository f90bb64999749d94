#include "cra/normalize.hpp"

#include <algorithm>

#include "cra/errors.hpp"

namespace cra {

namespace {

class HeadNormaliser {
 public:
  HeadNormaliser(const Model& m, std::size_t budget) : m_(m), budget_(budget) {}

  CanonicalHead run(const Command& c) {
    if (++steps_ > budget_) throw UnfoldBudgetExceeded(budget_);
    const StateSet all = m_.all_states();
    CanonicalHead h;
    switch (c.op()) {
      case Op::Abort: h.t_abort = all; break;
      case Op::Magic: break;
      case Op::Nil: h.t = all; break;
      case Op::Test: h.t = c.test(); break;
      case Op::Atomic: add(h, c.atom(), mk_nil()); break;
      case Op::Choice:
        for (const auto& k : c.children()) {
          CanonicalHead x = run(k);
          h.t = h.t | x.t;
          h.t_abort = h.t_abort | x.t_abort;
          for (auto& b : x.branches) add(h, b.atom, b.rest);
        }
        break;
      case Op::Join: {
        // Where one side aborts the join behaves as the other side.
        CanonicalHead x = run(c.lhs());
        CanonicalHead y = run(c.rhs());
        h.t = (x.t & y.t) | (x.t_abort & y.t) | (x.t & y.t_abort);
        h.t_abort = x.t_abort & y.t_abort;
        for (const auto& b : x.branches) add(h, m_.guard(y.t_abort, b.atom), b.rest);
        for (const auto& b : y.branches) add(h, m_.guard(x.t_abort, b.atom), b.rest);
        for (const auto& b0 : x.branches)
          for (const auto& b1 : y.branches) add(h, m_.join(b0.atom, b1.atom), mk_join(b0.rest, b1.rest));
        break;
      }
      case Op::Conj: {
        CanonicalHead x = run(c.lhs());
        CanonicalHead y = run(c.rhs());
        h.t = x.t & y.t;
        h.t_abort = x.t_abort | y.t_abort;
        for (const auto& b0 : x.branches)
          for (const auto& b1 : y.branches) add(h, m_.join(b0.atom, b1.atom), mk_conj(b0.rest, b1.rest));
        break;
      }
      case Op::Seq: {
        CanonicalHead x = run(c.lhs());
        CanonicalHead y = run(c.rhs());
        h.t = x.t & y.t;
        h.t_abort = x.t_abort | (x.t & y.t_abort);
        for (const auto& b : y.branches) add(h, m_.guard(x.t, b.atom), b.rest);
        for (const auto& b : x.branches) add(h, b.atom, seq(b.rest, c.rhs()));
        break;
      }
      case Op::Par: {
        // An abort on one side shows only where the other side can still
        // terminate, abort or offer a synchronisable step.
        CanonicalHead x = run(c.lhs());
        CanonicalHead y = run(c.rhs());
        h.t = x.t & y.t;
        h.t_abort = (x.t_abort & alive(y)) | (y.t_abort & alive(x));
        for (const auto& b0 : x.branches)
          for (const auto& b1 : y.branches)
            add(h, m_.sync(b0.atom, b1.atom), mk_par(b0.rest, b1.rest));
        break;
      }
      case Op::Fin: {
        // c^* = nil ⊓ c;c^*, greatest fixpoint: immediate termination of the
        // body adds nothing.
        CanonicalHead x = run(c.body());
        h.t = all;
        h.t_abort = x.t_abort;
        for (const auto& b : x.branches) add(h, b.atom, seq(b.rest, c));
        break;
      }
      case Op::Omega:
      case Op::Inf: {
        // Least fixpoint: immediate termination of the body diverges (⊥).
        CanonicalHead x = run(c.body());
        h.t = c.op() == Op::Omega ? all : StateSet();
        h.t_abort = x.t | x.t_abort;
        for (const auto& b : x.branches) add(h, b.atom, seq(b.rest, c));
        break;
      }
    }
    finish(h);
    return h;
  }

 private:
  static Command seq(const Command& a, const Command& b) {
    if (a.op() == Op::Nil) return b;
    return mk_seq(a, b);
  }

  StateSet alive(const CanonicalHead& h) const {
    Atom steps;
    for (const auto& b : h.branches) steps = steps | b.atom;
    return h.t | h.t_abort | m_.pre_states(steps & m_.partnered());
  }

  void add(CanonicalHead& h, Atom a, Command rest) const {
    if (m_.is_infeasible(a)) return;
    h.branches.push_back({a, std::move(rest)});
  }

  static void finish(CanonicalHead& h) {
    auto& bs = h.branches;
    std::sort(bs.begin(), bs.end(), [](const Branch& x, const Branch& y) {
      if (x.atom != y.atom) return x.atom < y.atom;
      return x.rest < y.rest;
    });
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  }

  const Model& m_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

}  // namespace

CanonicalHead head_normal(const Model& m, const Command& c, std::size_t budget) {
  return HeadNormaliser(m, budget).run(c);
}

Command reassemble(const Model& m, const CanonicalHead& h) {
  std::vector<Command> parts{mk_test(m, h.t)};
  if (!h.t_abort.empty()) parts.push_back(mk_seq(mk_test(m, h.t_abort), mk_abort()));
  for (const auto& b : h.branches) parts.push_back(mk_seq(mk_atomic(m, b.atom), b.rest));
  return mk_choice(std::move(parts));
}

Command normalize_to_depth(const Model& m, const Command& c, int k, std::size_t budget) {
  if (k < 0) throw DomainError("normalisation depth must be non-negative");
  if (k == 0) return c;
  CanonicalHead h = head_normal(m, c, budget);
  for (auto& b : h.branches) b.rest = normalize_to_depth(m, b.rest, k - 1, budget);
  return reassemble(m, h);
}

}  // namespace cra
