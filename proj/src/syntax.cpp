#include "cra/syntax.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "cra/encodings.hpp"
#include "cra/errors.hpp"
#include "cra/events.hpp"
#include "cra/relational.hpp"
#include "cra/rely_guarantee.hpp"

namespace cra {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Splits on commas; an empty (all-space) input yields no items.
std::vector<std::pair<std::string, std::size_t>> split_list(std::string_view s, std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.emplace_back(trim(s.substr(start, i - start)), base + start);
      start = i + 1;
    }
  }
  return out;
}

enum class Low { Choice, Join, Conj };

const char* low_token(Low l) {
  switch (l) {
    case Low::Choice: return "|~|";
    case Low::Join: return "/\\";
    case Low::Conj: return "&&";
  }
  return "?";
}

class Parser {
 public:
  Parser(const Model& m, std::string_view src, std::size_t pos, int depth)
      : m_(m), src_(src), pos_(pos), depth_(depth) {}

  std::size_t pos() const { return pos_; }

  void ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    ws();
    return src_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool at_end() {
    ws();
    return pos_ >= src_.size();
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

  std::optional<std::string> ident() {
    ws();
    if (pos_ >= src_.size() || !ident_start(src_[pos_])) return std::nullopt;
    std::size_t b = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(b, pos_ - b));
  }

  /// Raw text between `open` and the matching `close`.
  std::pair<std::string_view, std::size_t> braced(char open, char close) {
    ws();
    if (pos_ >= src_.size() || src_[pos_] != open) fail(std::string("expected '") + open + "'");
    std::size_t b = ++pos_;
    int depth = 0;
    while (pos_ < src_.size() && (src_[pos_] != close || depth > 0)) {
      if (open != close && src_[pos_] == open) ++depth;
      if (open != close && src_[pos_] == close) --depth;
      ++pos_;
    }
    if (pos_ >= src_.size()) fail(std::string("unterminated '") + open + "'");
    auto body = src_.substr(b, pos_ - b);
    ++pos_;
    return {body, b};
  }

  Command expr() {
    Command first = par();
    std::optional<Low> op;
    std::vector<Command> items{first};
    while (true) {
      std::size_t at = (ws(), pos_);
      std::optional<Low> next;
      if (accept("|~|")) next = Low::Choice;
      else if (accept("/\\")) next = Low::Join;
      else if (accept("&&")) next = Low::Conj;
      if (!next) break;
      if (op && *op != *next) throw AmbiguousPrecedence(at, low_token(*op), low_token(*next));
      op = next;
      items.push_back(par());
    }
    if (!op) return first;
    if (*op == Low::Choice) return mk_choice(std::move(items));
    Command out = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;)
      out = *op == Low::Join ? mk_join(items[i], out) : mk_conj(items[i], out);
    return out;
  }

  Command par() {
    Command lhs = seq();
    ws();
    if (accept("||")) return mk_par(lhs, par());
    if (peek("[|")) {
      pos_ += 1;
      auto [body, at] = braced('|', '|');
      expect("]");
      auto events = event_list(body, at);
      return csp_par(m_, events, lhs, par());
    }
    return lhs;
  }

  Command seq() {
    Command lhs = post();
    if (accept(";")) return mk_seq(lhs, seq());
    return lhs;
  }

  Command post() {
    Command c = prim();
    while (true) {
      if (accept("^*")) c = mk_fin(c);
      else if (accept("^inf")) c = mk_inf(c);
      else if (accept("^w")) c = mk_omega(c);
      else break;
    }
    return c;
  }

  Command prim() {
    ws();
    std::size_t at = pos_;
    if (accept("(")) {
      Command c = expr();
      expect(")");
      return c;
    }
    auto id = ident();
    if (!id) fail(pos_ >= src_.size() ? "unexpected end of input" : "expected a command");
    const std::string& w = *id;
    if (w == "bot") return mk_abort();
    if (w == "top") return mk_magic();
    if (w == "nil") return mk_nil();
    if (w == "skip") return skip(m_);
    if (w == "chaos") return chaos(m_);
    if (w == "alpha") return mk_atomic(m_, m_.alpha());
    if (w == "env") return mk_atomic(m_, m_.env_id());
    if (w == "test" || w == "assert") {
      auto [body, b] = braced('{', '}');
      StateSet t = states(body, b);
      return w == "test" ? mk_test(m_, t) : assertion(m_, t);
    }
    if (w == "atom" || w == "assume") {
      auto [body, b] = braced('{', '}');
      Atom a = step_list(body, b);
      return w == "atom" ? mk_atomic(m_, a) : assume(m_, a);
    }
    if (w == "pi" || w == "eps") {
      auto [body, b] = braced('{', '}');
      if (m_.kind() == ModelKind::Relational) {
        Rel r = relation(body, b);
        return mk_atomic(m_, w == "pi" ? pgm(m_, r) : env(m_, r));
      }
      auto events = event_list(body, b, true);
      return mk_atomic(m_, w == "pi" ? pi_events(m_, events) : eps_events(m_, events));
    }
    if (w == "guar" || w == "rely") {
      auto [body, b] = braced('{', '}');
      relational_only(at, w);
      Rel r = relation(body, b);
      return w == "guar" ? guar(m_, r) : rely(m_, r);
    }
    if (w == "choice") {
      auto [body, b] = braced('(', ')');
      Parser inner(m_, src_.substr(0, b + body.size()), b, depth_);
      Command c = inner.expr();
      if (!inner.at_end()) inner.fail("unexpected input in choice(...)");
      return mk_choice(std::vector<Command>{c});
    }
    if (w == "ev") {
      auto [body, b] = braced('(', ')');
      event_only(at, w);
      std::string e = trim(body);
      wrap_alphabet(b, [&] { require_event(m_, e, true); });
      return atev(m_, e);
    }
    if (w == "res" || w == "alph" || w == "hide") {
      auto [body, b] = braced('{', '}');
      event_only(at, w);
      auto events = event_list(body, b);
      Command p = post();
      if (w == "res") return ccs_restrict(m_, events, p);
      if (w == "alph") return csp_alphabetise(m_, events, p);
      return csp_hide(m_, events, p, depth_);
    }
    // `a -> p`
    if (accept("->")) {
      event_only(at, w);
      wrap_alphabet(at, [&] { require_event(m_, w, true); });
      return prefix(m_, w, post());
    }
    pos_ = at;
    fail("unknown keyword '" + w + "'");
  }

 private:
  template <class F>
  void wrap_alphabet(std::size_t at, F&& f) {
    try {
      f();
    } catch (const AlphabetError& e) {
      throw ParseError(at, e.what());
    }
  }

  void relational_only(std::size_t at, const std::string& w) {
    if (m_.kind() != ModelKind::Relational)
      throw ParseError(at, "'" + w + "' needs the relational model");
  }

  void event_only(std::size_t at, const std::string& w) {
    if (m_.kind() == ModelKind::Relational)
      throw ParseError(at, "'" + w + "' needs an event model (--model ccs|csp|sccs)");
  }

  int number(const std::string& s, std::size_t at) {
    if (s.empty() || s.size() > 3) throw ParseError(at, "expected a state number");
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(at, "expected a state number");
    int v = std::stoi(s);
    if (v >= m_.num_states())
      throw ParseError(at, "state " + s + " outside the state space of " +
                               std::to_string(m_.num_states()) + " states");
    return v;
  }

  StateSet states(std::string_view body, std::size_t base) {
    std::uint64_t bits = 0;
    for (auto& [item, at] : split_list(body, base)) bits |= std::uint64_t{1} << number(item, at);
    return StateSet(bits);
  }

  Rel relation(std::string_view body, std::size_t base) {
    const int n = m_.num_states();
    Rel r = Rel::empty(n);
    for (auto& [item, at] : split_list(body, base)) {
      if (item == "univ") {
        r = r | Rel::univ(n);
      } else if (item == "id") {
        r = r | Rel::id(n);
      } else if (item == "empty") {
      } else if (item.size() >= 2 && item.front() == '(' && item.back() == ')') {
        auto parts = split_list(std::string_view(item).substr(1, item.size() - 2), at + 1);
        if (parts.size() != 2) throw ParseError(at, "expected a pair (i,j)");
        r = r | Rel::of(n, {{number(parts[0].first, parts[0].second),
                             number(parts[1].first, parts[1].second)}});
      } else {
        throw ParseError(at, "expected a pair (i,j), univ, id or empty");
      }
    }
    return r;
  }

  Atom step_list(std::string_view body, std::size_t base) {
    Atom a;
    for (auto& [item, at] : split_list(body, base)) {
      if (item == "alpha") {
        a = a | m_.alpha();
      } else if (item == "env") {
        a = a | m_.env_id();
      } else if (auto s = m_.find_step(item)) {
        a = a | Atom::single(*s);
      } else {
        throw ParseError(at, "unknown step '" + item + "'");
      }
    }
    return a;
  }

  std::vector<std::string> event_list(std::string_view body, std::size_t base,
                                      bool allow_silent = false) {
    std::vector<std::string> out;
    for (auto& [item, at] : split_list(body, base)) {
      wrap_alphabet(at, [&] { require_event(m_, item, allow_silent); });
      out.push_back(item);
    }
    return out;
  }

  const Model& m_;
  std::string_view src_;
  std::size_t pos_;
  int depth_;
};

Model default_model(const SyntaxConfig& cfg) {
  switch (cfg.kind) {
    case ModelKind::Relational: return relational_model(cfg.states);
    case ModelKind::Ccs: return ccs_model({"a", "abar"}, {{"a", "abar"}});
    case ModelKind::Csp: return csp_model({"a", "b"});
    case ModelKind::Sccs: return sccs_model({"a", "b"}, 2);
  }
  throw ConfigError("unknown model");
}

// Precedence levels used by the printer.
constexpr int kLow = 1, kPar = 2, kSeq = 3, kPost = 4, kLeaf = 5;

int level_of_op(Op op) {
  switch (op) {
    case Op::Choice:
    case Op::Join:
    case Op::Conj: return kLow;
    case Op::Par: return kPar;
    case Op::Seq: return kSeq;
    case Op::Fin:
    case Op::Omega:
    case Op::Inf: return kPost;
    default: return kLeaf;
  }
}

int level(const Command& c) {
  if (c.op() == Op::Choice && c.children().size() == 1) return kLeaf;
  return level_of_op(c.op());
}

std::string join_names(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out;
}

std::string print_rel(const Rel& r) {
  std::string out;
  for (auto [i, j] : r.pairs()) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

std::string print_atom(const Model& m, Atom a) {
  if (a == m.alpha()) return "alpha";
  if (a == m.env_id()) return "env";
  if (m.kind() == ModelKind::Relational && !a.empty()) {
    Rel p = pgm_part(m, a);
    Rel e = env_part(m, a);
    if (e.is_empty()) return "pi{" + print_rel(p) + "}";
    if (p.is_empty()) return "eps{" + print_rel(e) + "}";
  }
  std::vector<std::string> names;
  for (StepId s : a.steps()) names.push_back(m.step(s).name);
  return "atom{" + join_names(names) + "}";
}

std::string print_at(const Model& m, const Command& c, int min_level, std::optional<Op> same);

std::string wrap(const Model& m, const Command& c, int min_level, std::optional<Op> same) {
  return print_at(m, c, min_level, same);
}

std::string print_at(const Model& m, const Command& c, int min_level, std::optional<Op> same) {
  std::string out;
  const int lv = level(c);
  switch (c.op()) {
    case Op::Abort: out = "bot"; break;
    case Op::Magic: out = "top"; break;
    case Op::Nil: out = "nil"; break;
    case Op::Test: {
      std::vector<std::string> xs;
      for (int s : c.test().members()) xs.push_back(std::to_string(s));
      out = "test{" + join_names(xs) + "}";
      break;
    }
    case Op::Atomic: out = print_atom(m, c.atom()); break;
    case Op::Choice:
      if (c.children().size() == 1) {
        out = "choice(" + print_at(m, c.children()[0], kLow, std::nullopt) + ")";
      } else {
        for (std::size_t i = 0; i < c.children().size(); ++i)
          out += (i ? " |~| " : "") + wrap(m, c.children()[i], kPar, std::nullopt);
      }
      break;
    case Op::Join:
    case Op::Conj: {
      const char* tok = c.op() == Op::Join ? " /\\ " : " && ";
      out = wrap(m, c.lhs(), kPar, std::nullopt) + tok + wrap(m, c.rhs(), kLow, c.op());
      break;
    }
    case Op::Par: out = wrap(m, c.lhs(), kSeq, std::nullopt) + " || " + wrap(m, c.rhs(), kPar, std::nullopt); break;
    case Op::Seq: out = wrap(m, c.lhs(), kPost, std::nullopt) + " ; " + wrap(m, c.rhs(), kSeq, std::nullopt); break;
    case Op::Fin: out = wrap(m, c.body(), kPost, std::nullopt) + "^*"; break;
    case Op::Omega: out = wrap(m, c.body(), kPost, std::nullopt) + "^w"; break;
    case Op::Inf: out = wrap(m, c.body(), kPost, std::nullopt) + "^inf"; break;
  }
  // A right operand of /\ or && chains without parentheses only with the same operator.
  bool parens = lv < min_level || (lv == kLow && same && c.op() != *same);
  return parens ? "(" + out + ")" : out;
}

}  // namespace

Model parse_model(std::string_view src, const SyntaxConfig& cfg, std::size_t* consumed) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  };
  auto word_at = [&](std::string_view w) {
    skip_ws();
    if (src.substr(pos, w.size()) != w) return false;
    std::size_t e = pos + w.size();
    return e >= src.size() || !ident_char(src[e]);
  };
  auto clause = [&](std::string_view w) {
    pos += w.size();
    std::size_t b = pos;
    while (pos < src.size() && src[pos] != ';') ++pos;
    if (pos >= src.size()) throw ParseError(b, "declaration must end with ';'");
    auto body = src.substr(b, pos - b);
    ++pos;
    return split_list(body, b);
  };
  std::vector<std::string> events, particles;
  std::vector<std::pair<std::string, std::string>> complements;
  bool declared = false;
  int bound = 2;
  while (true) {
    if (word_at("events")) {
      for (auto& [e, at] : clause("events")) {
        if (e.empty()) throw ParseError(at, "empty event name");
        events.push_back(e);
      }
    } else if (word_at("complement")) {
      for (auto& [p, at] : clause("complement")) {
        auto t = p.find('~');
        if (t == std::string::npos) throw ParseError(at, "expected a~b");
        complements.emplace_back(trim(p.substr(0, t)), trim(p.substr(t + 1)));
      }
    } else if (word_at("particles")) {
      for (auto& [e, at] : clause("particles")) particles.push_back(e);
    } else if (word_at("bound")) {
      auto items = clause("bound");
      if (items.size() != 1) throw ParseError(pos, "expected one exponent bound");
      try {
        bound = std::stoi(items[0].first);
      } catch (const std::exception&) {
        throw ParseError(items[0].second, "expected a number");
      }
    } else {
      break;
    }
    declared = true;
  }
  skip_ws();
  if (consumed) *consumed = pos;
  if (!declared) return default_model(cfg);
  switch (cfg.kind) {
    case ModelKind::Relational:
      throw ParseError(0, "alphabet declarations need an event model");
    case ModelKind::Ccs:
      if (!particles.empty()) throw ParseError(0, "'particles' is SCCS only");
      return ccs_model(events, complements);
    case ModelKind::Csp:
      if (!particles.empty() || !complements.empty())
        throw ParseError(0, "CSP takes only an 'events' declaration");
      return csp_model(events);
    case ModelKind::Sccs:
      if (!events.empty() || !complements.empty())
        throw ParseError(0, "SCCS takes 'particles' and 'bound' declarations");
      return sccs_model(particles, bound);
  }
  throw ConfigError("unknown model");
}

Command parse(const Model& m, std::string_view src, int depth) {
  Parser p(m, src, 0, depth);
  Command c = p.expr();
  if (!p.at_end()) p.fail("unexpected input");
  return c;
}

Program parse_program(std::string_view src, const SyntaxConfig& cfg) {
  std::size_t at = 0;
  Model m = parse_model(src, cfg, &at);
  Parser p(m, src, at, cfg.depth);
  Command c = p.expr();
  if (!p.at_end()) p.fail("unexpected input");
  return {m, c};
}

Query parse_query(std::string_view src, const SyntaxConfig& cfg) {
  std::size_t at = 0;
  Model m = parse_model(src, cfg, &at);
  Parser p(m, src, at, cfg.depth);
  Query q{m, p.expr(), Query::Relation::Refines, mk_magic()};
  if (p.accept("[=")) {
    q.relation = Query::Relation::Refines;
  } else if (p.accept("=")) {
    q.relation = Query::Relation::Equal;
  } else {
    p.fail("expected '[=' or '='");
  }
  q.rhs = p.expr();
  if (!p.at_end()) p.fail("unexpected input");
  return q;
}


std::string print(const Model& m, const Command& c) { return print_at(m, c, kLow, std::nullopt); }

std::string print_declarations(const Model& m) {
  const auto& ev = m.events();
  switch (m.kind()) {
    case ModelKind::Relational: return "";
    case ModelKind::Ccs: {
      std::string out = "events " + join_names(ev.events) + ";";
      std::vector<std::string> pairs;
      for (const auto& [a, b] : ev.complement)
        if (a < b) pairs.push_back(a + "~" + b);
      if (!pairs.empty()) out += " complement " + join_names(pairs) + ";";
      return out;
    }
    case ModelKind::Csp: return "events " + join_names(ev.events) + ";";
    case ModelKind::Sccs:
      return "particles " + join_names(ev.particles) + "; bound " +
             std::to_string(ev.exponent_bound) + ";";
  }
  return "";
}

}  // namespace cra
