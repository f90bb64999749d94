// Acceptance run: one PASS/FAIL line per criterion.
//
//   cra_acceptance                 all criteria, exit 1 if any fails
//   cra_acceptance --criterion N   a single criterion
//
// Every check is exact: verdicts are decided by the depth-bounded oracle and
// compared for equality, so no numeric tolerance applies.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <CLI11.hpp>

#include "cra/encodings.hpp"
#include "cra/events.hpp"
#include "cra/laws.hpp"
#include "cra/normalize.hpp"
#include "cra/relational.hpp"
#include "cra/semantics.hpp"
#include "cra/syntax.hpp"

using namespace cra;

namespace {

struct Report {
  bool pass = true;
  std::string detail;
  std::vector<std::string> info;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

Model model_of(ModelKind k, int states = 3) {
  SyntaxConfig cfg;
  cfg.kind = k;
  cfg.states = states;
  return parse_model("", cfg);
}

// 1. Law suite at the reference configuration.
Report law_suite() {
  auto t0 = Clock::now();
  auto results = run_suite(model_of(ModelKind::Relational, 3), 200, 1, 6);
  double secs = seconds_since(t0);
  Report o;
  int failed = 0;
  for (const auto& r : results)
    if (!r.passed) {
      ++failed;
      o.info.push_back(format_result(r));
    }
  o.pass = failed == 0 && secs <= 300;
  o.detail = std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
             " laws pass, 200 trials, states=3 k=6 seed=1, " + fmt_seconds(secs) + " (limit 300s)";
  for (const auto& l : disputed_laws()) {
    if (!l.applies_to(ModelKind::Relational)) continue;
    LawResult r = run_law(model_of(ModelKind::Relational, 3), l, 200, 1, 6);
    o.info.push_back("outside the suite: " + l.name + " " + (r.passed ? "PASS" : "FAIL") + " (" +
                     l.note + ")");
  }
  return o;
}

// 2. Canonical form agrees with the term.
Report canonical_form() {
  Model m = model_of(ModelKind::Relational, 2);
  Engine e(m, 5);
  std::mt19937_64 rng(2);
  Gen g(m, rng, 8, 5);
  int failures = 0;
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    Command c = g.command(g.uniform(1, 8));
    Verdict v = e.check_equal(c, normalize_to_depth(m, c, 5));
    if (!v.holds) {
      if (failures++ == 0) first = print(m, c);
    }
  }
  Report o;
  o.pass = failures == 0;
  o.detail = std::to_string(1000 - failures) + "/1000 terms equal their depth-5 normal form, |Σ|=2";
  if (!first.empty()) o.info.push_back("first failure: " + first);
  return o;
}

// 3. Exhaustive single-state model.
Report micro_model() {
  Model m = relational_model(1);
  auto atoms = m.enumerate();
  long checks = 0, bad = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++bad;
  };
  for (Atom a : atoms) {
    expect(m.negate(m.negate(a)) == a);
    expect(m.meet(a, m.negate(a)) == m.alpha());
    expect(m.join(a, m.negate(a)) == m.magic_atom());
    expect(m.sync(a, m.magic_atom()) == m.magic_atom());
    for (Atom b : atoms) {
      expect(m.negate(m.meet(a, b)) == m.join(m.negate(a), m.negate(b)));
      expect(m.negate(m.join(a, b)) == m.meet(m.negate(a), m.negate(b)));
      expect(m.meet(a, m.join(a, b)) == a);
      expect(m.join(a, m.meet(a, b)) == a);
      expect(m.meet(a, b) == m.meet(b, a));
      expect(m.join(a, b) == m.join(b, a));
      expect(m.sync(a, b) == m.sync(b, a));
      for (Atom c : atoms) {
        expect(m.meet(a, m.join(b, c)) == m.join(m.meet(a, b), m.meet(a, c)));
        expect(m.join(a, m.meet(b, c)) == m.meet(m.join(a, b), m.join(a, c)));
        expect(m.sync(m.sync(a, b), c) == m.sync(a, m.sync(b, c)));
        expect(m.sync(a, m.meet(b, c)) == m.meet(m.sync(a, b), m.sync(a, c)));
      }
    }
  }
  Engine e(m, 3);
  int pairs = 0, pair_bad = 0;
  for (Atom a : atoms)
    for (Atom b : atoms) {
      ++pairs;
      Command lhs = mk_par(mk_seq(mk_atomic(m, a), mk_nil()), mk_seq(mk_atomic(m, b), mk_nil()));
      Command rhs = mk_seq(mk_atomic(m, m.sync(a, b)), mk_par(mk_nil(), mk_nil()));
      if (!e.check_equal(lhs, rhs).holds) ++pair_bad;
    }
  Report o;
  o.pass = bad == 0 && pair_bad == 0;
  o.detail = std::to_string(atoms.size()) + " atoms, " + std::to_string(checks - bad) + "/" +
             std::to_string(checks) + " atom law instances, " + std::to_string(pairs - pair_bad) +
             "/" + std::to_string(pairs) + " atomic-interchange pairs at k=3";
  return o;
}

Report run_named(const Model& m, const std::vector<std::string>& names, int trials, int depth,
                  const std::string& what) {
  Report o;
  std::string parts;
  for (const auto& n : names) {
    LawResult r = run_law(m, *find_law(n), trials, 1, depth);
    o.pass = o.pass && r.passed;
    parts += (parts.empty() ? "" : ", ") + n + " " + (r.passed ? "PASS" : "FAIL") + " " +
             std::to_string(r.trials) + "/" + std::to_string(trials);
    if (!r.passed) o.info.push_back(format_result(r));
  }
  o.detail = what + ": " + parts;
  return o;
}

// 4. Rely/guarantee merges and distribution.
Report rely_guarantee() {
  return run_named(model_of(ModelKind::Relational, 3),
                   {"guard-merge", "eassume-merge", "guar-distribution", "rely-distribution"},
                   200, 6, "k=6");
}

// 5. CCS synchronisation and restriction.
Report ccs() {
  Model m = ccs_model({"a", "abar"}, {{"a", "abar"}});
  Engine e(m, 6);
  Command a = atev(m, "a"), abar = atev(m, "abar");
  Command par = mk_par(a, abar);
  Command rhs = mk_choice(std::vector<Command>{atev(m, kSilent), mk_seq(a, abar), mk_seq(abar, a)});
  bool sync = e.check_equal(par, rhs).holds;
  bool res = e.check_equal(ccs_restrict(m, {"a", "abar"}, par), atev(m, kSilent)).holds;
  Report o;
  o.pass = sync && res;
  o.detail = std::string("k=6 over {a,abar,tau}: sync-or-interleave ") + (sync ? "holds" : "fails") +
             ", restriction to tau " + (res ? "holds" : "fails");
  return o;
}

// 6. CSP prefix synchronisation and hiding.
Report csp() {
  Model m = csp_model({"a", "b"});
  // 100 independent instances, each its own seed, so every failure is counted
  auto count = [&](const char* name, std::optional<LawResult>& first) {
    int held = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      LawResult r = run_law(m, *find_law(name), 1, seed, 5);
      if (r.passed) {
        ++held;
      } else if (!first) {
        first = r;
      }
    }
    return held;
  };
  std::optional<LawResult> lit_cx, alph_cx;
  int lit = count("csp-prefix-sync", lit_cx);
  int alph = count("csp-prefix-sync-alphabetised", alph_cx);
  Atom pa = pi_event(m, "a"), pb = pi_event(m, "b"), tau = pi_event(m, kSilent);
  int hide_ok = 0;
  hide_ok += hide_atom(m, {"a"}, pa) == tau;
  hide_ok += hide_atom(m, {"a"}, pb) == pb;
  hide_ok += hide_atom(m, {"a"}, tau) == tau;
  hide_ok += hide_atom(m, {"a"}, m.env_id()) == m.env_id();
  hide_ok += csp_hide(m, {"a"}, mk_atomic(m, pa), 5) == mk_atomic(m, tau);
  hide_ok += csp_hide(m, {"a"}, mk_atomic(m, pb), 5) == mk_atomic(m, pb);
  Report o;
  o.pass = lit == 100 && hide_ok == 6;
  o.detail = "k=5: prefix law as stated holds for " + std::to_string(lit) +
             "/100 random p1,p2, hiding table " + std::to_string(hide_ok) + "/6";
  if (lit_cx) o.info.push_back(format_result(*lit_cx));
  o.info.push_back("alphabetised right-hand side (a->(p1 [|A|] p2))_A holds for " +
                   std::to_string(alph) + "/100");
  return o;
}

// 7. SCCS group laws and asynchronous synchronisation.
Report sccs() {
  Model m = sccs_model({"a", "b"}, 2);
  EventInfo info = m.events();
  std::vector<EventLabel> labels;
  for (StepId s = 0; s < m.num_steps(); ++s) labels.push_back(label_of(m, s));
  EventLabel unit = label_of(m, *m.find_step("idle"));
  long checks = 0, bad = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++bad;
  };
  for (const auto& x : labels) {
    EventLabel inv = x;
    for (int& v : inv.exponents) v = -v;
    expect(*sync_labels(x, unit, info) == x);
    expect(*sync_labels(x, inv, info) == unit);
    for (const auto& y : labels) {
      expect(*sync_labels(x, y, info) == *sync_labels(y, x, info));
      for (const auto& z : labels)
        expect(*sync_labels(*sync_labels(x, y, info), z, info) ==
               *sync_labels(x, *sync_labels(y, z, info), info));
    }
  }
  long atom_checks = 0, atom_bad = 0;
  for (StepId x = 0; x < m.num_steps(); ++x) {
    Atom ax = Atom::single(x);
    ++atom_checks;
    if (m.sync(ax, m.env_id()) != ax) ++atom_bad;
    for (StepId y = 0; y < m.num_steps(); ++y) {
      Atom ay = Atom::single(y);
      ++atom_checks;
      if (m.sync(ax, ay) != m.sync(ay, ax) || m.is_infeasible(m.sync(ax, ay))) ++atom_bad;
      for (StepId z = 0; z < m.num_steps(); ++z) {
        Atom az = Atom::single(z);
        ++atom_checks;
        if (m.sync(m.sync(ax, ay), az) != m.sync(ax, m.sync(ay, az))) ++atom_bad;
      }
    }
  }
  Command a = atev(m, "a"), ainv = atev(m, "a^-1");
  bool unit_branch = refines(m, mk_par(a, ainv), atev(m, "1"), 4).holds;
  Report o;
  o.pass = bad == 0 && atom_bad == 0 && unit_branch;
  o.detail = "particles {a,b}, exponents in [-2,2]: " + std::to_string(checks - bad) + "/" +
             std::to_string(checks) + " label group laws, " + std::to_string(atom_checks - atom_bad) +
             "/" + std::to_string(atom_checks) + " step sync laws, <a>||<a^-1> contains <1> at k=4 " +
             (unit_branch ? "yes" : "no");
  return o;
}

std::string run_cli(const std::string& args, int& status) {
  std::string cmd = std::string(CRA_CLI_PATH) + " " + args;
  std::FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int rc = pclose(p);
  status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

// 8. Golden counterexamples for the corrupted laws.
Report goldens() {
  Report o;
  int ok = 0, total = 0;
  for (const auto& l : corrupted_laws()) {
    ++total;
    std::ifstream in(std::string(CRA_GOLDEN_DIR) + "/" + l.name + ".txt", std::ios::binary);
    std::stringstream want;
    want << in.rdbuf();
    int status = 0;
    std::string got =
        run_cli("laws --law " + l.name + " --states 2 --depth 3 --trials 50 --seed 1", status);
    bool match = in && status == 1 && got == want.str();
    ok += match;
    if (!match) o.info.push_back(l.name + ": exit " + std::to_string(status) + "\n" + got);
  }
  o.pass = ok == total && total == 3;
  o.detail = std::to_string(ok) + "/" + std::to_string(total) +
             " corrupted laws exit 1 with the stored witness";
  return o;
}

// 9. Verdicts do not depend on the depth.
Report depth_stability() {
  auto t0 = Clock::now();
  Model m = model_of(ModelKind::Relational, 3);
  std::map<std::string, std::array<bool, 3>> verdicts;
  const int depths[3] = {4, 6, 8};
  for (int i = 0; i < 3; ++i) {
    for (const auto& r : run_suite(m, 200, 1, depths[i])) verdicts[r.name][i] = r.passed;
    for (const auto& l : disputed_laws())
      if (l.applies_to(m.kind())) verdicts[l.name][i] = run_law(m, l, 200, 1, depths[i]).passed;
  }
  double secs = seconds_since(t0);
  int same = 0;
  Report o;
  for (const auto& [name, v] : verdicts) {
    if (v[0] == v[1] && v[1] == v[2]) {
      ++same;
    } else {
      o.info.push_back(name + " changes verdict across k=4,6,8");
    }
  }
  o.pass = same == static_cast<int>(verdicts.size()) && secs <= 900;
  o.detail = std::to_string(same) + "/" + std::to_string(verdicts.size()) +
             " verdicts equal at k=4,6,8 (disputed laws included), " + fmt_seconds(secs) +
             " (limit 900s)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Report()>>> criteria = {
      {"law suite", law_suite},
      {"canonical form", canonical_form},
      {"exhaustive micro-model", micro_model},
      {"rely/guarantee", rely_guarantee},
      {"ccs", ccs},
      {"csp", csp},
      {"sccs", sccs},
      {"counterexample integrity", goldens},
      {"depth stability", depth_stability},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Report o = criteria[i].second();
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " "
              << criteria[i].first << ": " << o.detail << " [tolerance: exact]\n";
    for (const auto& line : o.info) {
      std::istringstream is(line);
      for (std::string l; std::getline(is, l);) std::cout << "    " << l << '\n';
    }
  }
  return all ? 0 : 1;
}
