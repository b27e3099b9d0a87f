#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edtop/conditions.hpp"
#include "edtop/enumerate.hpp"
#include "edtop/topology.hpp"

namespace edtop {

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

enum class ExprKind {
  variable,
  empty,
  full,
  complement,
  closure,
  interior,
  union_op,
  intersection,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  std::string name;     // variable only
  ExprPtr left, right;  // unary operators use left
};

inline ExprPtr make_variable(std::string name) {
  return std::make_shared<Expr>(Expr{ExprKind::variable, std::move(name), nullptr, nullptr});
}
inline ExprPtr make_empty() {
  return std::make_shared<Expr>(Expr{ExprKind::empty, {}, nullptr, nullptr});
}
inline ExprPtr make_full() {
  return std::make_shared<Expr>(Expr{ExprKind::full, {}, nullptr, nullptr});
}
inline ExprPtr make_complement(ExprPtr e) {
  return std::make_shared<Expr>(Expr{ExprKind::complement, {}, std::move(e), nullptr});
}
inline ExprPtr make_closure(ExprPtr e) {
  return std::make_shared<Expr>(Expr{ExprKind::closure, {}, std::move(e), nullptr});
}
inline ExprPtr make_interior(ExprPtr e) {
  return std::make_shared<Expr>(Expr{ExprKind::interior, {}, std::move(e), nullptr});
}
inline ExprPtr make_union(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{ExprKind::union_op, {}, std::move(a), std::move(b)});
}
inline ExprPtr make_intersection(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{ExprKind::intersection, {}, std::move(a), std::move(b)});
}

inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  return structurally_equal(a->left, b->left) && structurally_equal(a->right, b->right);
}

// Quantifier sorts: open sets, closed sets (complements of opens, enumerated
// in normalized opens order), or arbitrary subsets (ascending mask).
enum class VarSort { open_set, closed_set, any_set };

inline const char* to_string(VarSort s) {
  switch (s) {
    case VarSort::open_set: return "open";
    case VarSort::closed_set: return "closed";
    case VarSort::any_set: return "set";
  }
  return "?";
}

struct Binding {
  VarSort sort;
  std::string name;

  friend bool operator==(const Binding&, const Binding&) = default;
};

struct Relation {
  ExprPtr lhs;
  RelationOp op = RelationOp::equals;
  ExprPtr rhs;
};

inline bool structurally_equal(const Relation& a, const Relation& b) {
  return a.op == b.op && structurally_equal(a.lhs, b.lhs) &&
         structurally_equal(a.rhs, b.rhs);
}

// A universally quantified identity: sorted bindings, optional side
// conditions, and a body relation. Assignments that violate a side
// condition are skipped, never counterexamples.
struct Claim {
  std::vector<Binding> bindings;
  std::vector<Relation> side_conditions;
  Relation body;
};

inline bool structurally_equal(const Claim& a, const Claim& b) {
  if (a.bindings != b.bindings) return false;
  if (a.side_conditions.size() != b.side_conditions.size()) return false;
  for (std::size_t i = 0; i < a.side_conditions.size(); ++i)
    if (!structurally_equal(a.side_conditions[i], b.side_conditions[i])) return false;
  return structurally_equal(a.body, b.body);
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct SourcePos {
  int line = 1;
  int column = 1;
};

class claim_error : public std::runtime_error {
 public:
  claim_error(SourcePos pos, const std::string& what)
      : std::runtime_error(std::to_string(pos.line) + ":" +
                           std::to_string(pos.column) + ": " + what),
        pos_(pos) {}
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

class parse_error : public claim_error {
 public:
  parse_error(SourcePos pos, const std::string& expected, const std::string& found)
      : claim_error(pos, "expected " + expected + ", found " + found),
        expected_(expected) {}
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

class unbound_variable : public claim_error {
 public:
  unbound_variable(SourcePos pos, std::string name)
      : claim_error(pos, "unbound variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class duplicate_binding : public claim_error {
 public:
  duplicate_binding(SourcePos pos, std::string name)
      : claim_error(pos, "duplicate binding '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------
//
//   claim    = "forall" binding {"," binding} ["with" relation {"," relation}] ":" relation
//   binding  = ("open" | "closed" | "set") ident
//   relation = expr ("=" | "<=") expr
//   expr     = inter {"|" inter}
//   inter    = unary {"&" unary}
//   unary    = ("cl" | "int" | "cmp") "(" expr ")" | atom
//   atom     = ident | "empty" | "X" | "(" expr ")"
//   ident    = letter {letter | digit} , not a keyword

namespace detail {

enum class Tok {
  kw_forall, kw_open, kw_closed, kw_set, kw_with,
  kw_cl, kw_int, kw_cmp, kw_empty, kw_full,
  ident, comma, colon, equals, subset, amp, pipe, lparen, rparen, eof,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

inline const char* describe(Tok k) {
  switch (k) {
    case Tok::kw_forall: return "'forall'";
    case Tok::kw_open: return "'open'";
    case Tok::kw_closed: return "'closed'";
    case Tok::kw_set: return "'set'";
    case Tok::kw_with: return "'with'";
    case Tok::kw_cl: return "'cl'";
    case Tok::kw_int: return "'int'";
    case Tok::kw_cmp: return "'cmp'";
    case Tok::kw_empty: return "'empty'";
    case Tok::kw_full: return "'X'";
    case Tok::ident: return "identifier";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::equals: return "'='";
    case Tok::subset: return "'<='";
    case Tok::amp: return "'&'";
    case Tok::pipe: return "'|'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::eof: return "end of input";
  }
  return "?";
}

inline bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::vector<Token> lex_claim(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto pos = [&]() { return SourcePos{line, col}; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
    const SourcePos p = pos();
    if (is_letter(c)) {
      std::size_t j = i;
      while (j < text.size() && (is_letter(text[j]) || is_digit(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      Tok k = Tok::ident;
      if (word == "forall") k = Tok::kw_forall;
      else if (word == "open") k = Tok::kw_open;
      else if (word == "closed") k = Tok::kw_closed;
      else if (word == "set") k = Tok::kw_set;
      else if (word == "with") k = Tok::kw_with;
      else if (word == "cl") k = Tok::kw_cl;
      else if (word == "int") k = Tok::kw_int;
      else if (word == "cmp") k = Tok::kw_cmp;
      else if (word == "empty") k = Tok::kw_empty;
      else if (word == "X") k = Tok::kw_full;
      out.push_back({k, std::move(word), p});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case ',': out.push_back({Tok::comma, ",", p}); break;
      case ':': out.push_back({Tok::colon, ":", p}); break;
      case '=': out.push_back({Tok::equals, "=", p}); break;
      case '&': out.push_back({Tok::amp, "&", p}); break;
      case '|': out.push_back({Tok::pipe, "|", p}); break;
      case '(': out.push_back({Tok::lparen, "(", p}); break;
      case ')': out.push_back({Tok::rparen, ")", p}); break;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          out.push_back({Tok::subset, "<=", p});
          ++i; ++col;
          break;
        }
        throw parse_error(p, "'<='", "'<'");
      default:
        throw parse_error(p, "a token", "'" + std::string(1, c) + "'");
    }
    ++i; ++col;
  }
  out.push_back({Tok::eof, "", pos()});
  return out;
}

class ClaimParser {
 public:
  explicit ClaimParser(std::string_view text) : toks_(lex_claim(text)) {}

  Claim parse() {
    Claim c;
    expect(Tok::kw_forall);
    c.bindings.push_back(parse_binding(c.bindings));
    while (accept(Tok::comma)) c.bindings.push_back(parse_binding(c.bindings));
    if (accept(Tok::kw_with)) {
      c.side_conditions.push_back(parse_relation(c.bindings));
      while (accept(Tok::comma)) c.side_conditions.push_back(parse_relation(c.bindings));
    }
    expect(Tok::colon);
    c.body = parse_relation(c.bindings);
    expect(Tok::eof);
    return c;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& advance() { return toks_[at_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  Token expect(Tok k) {
    if (peek().kind != k)
      throw parse_error(peek().pos, describe(k), found());
    return advance();
  }

  std::string found() const {
    const Token& t = peek();
    if (t.kind == Tok::eof) return "end of input";
    return "'" + t.text + "'";
  }

  Binding parse_binding(const std::vector<Binding>& so_far) {
    VarSort sort;
    if (accept(Tok::kw_open)) sort = VarSort::open_set;
    else if (accept(Tok::kw_closed)) sort = VarSort::closed_set;
    else if (accept(Tok::kw_set)) sort = VarSort::any_set;
    else throw parse_error(peek().pos, "'open', 'closed' or 'set'", found());
    const Token name = expect(Tok::ident);
    for (const Binding& b : so_far)
      if (b.name == name.text) throw duplicate_binding(name.pos, name.text);
    return Binding{sort, name.text};
  }

  Relation parse_relation(const std::vector<Binding>& bound) {
    Relation r;
    r.lhs = parse_expr(bound);
    if (accept(Tok::equals)) r.op = RelationOp::equals;
    else if (accept(Tok::subset)) r.op = RelationOp::subset_of;
    else throw parse_error(peek().pos, "'=' or '<='", found());
    r.rhs = parse_expr(bound);
    return r;
  }

  ExprPtr parse_expr(const std::vector<Binding>& bound) {
    ExprPtr e = parse_inter(bound);
    while (accept(Tok::pipe)) e = make_union(std::move(e), parse_inter(bound));
    return e;
  }

  ExprPtr parse_inter(const std::vector<Binding>& bound) {
    ExprPtr e = parse_unary(bound);
    while (accept(Tok::amp)) e = make_intersection(std::move(e), parse_unary(bound));
    return e;
  }

  ExprPtr parse_unary(const std::vector<Binding>& bound) {
    if (peek().kind == Tok::kw_cl || peek().kind == Tok::kw_int ||
        peek().kind == Tok::kw_cmp) {
      const Tok op = advance().kind;
      expect(Tok::lparen);
      ExprPtr inner = parse_expr(bound);
      expect(Tok::rparen);
      if (op == Tok::kw_cl) return make_closure(std::move(inner));
      if (op == Tok::kw_int) return make_interior(std::move(inner));
      return make_complement(std::move(inner));
    }
    return parse_atom(bound);
  }

  ExprPtr parse_atom(const std::vector<Binding>& bound) {
    if (peek().kind == Tok::ident) {
      const Token t = advance();
      for (const Binding& b : bound)
        if (b.name == t.text) return make_variable(t.text);
      throw unbound_variable(t.pos, t.text);
    }
    if (accept(Tok::kw_empty)) return make_empty();
    if (accept(Tok::kw_full)) return make_full();
    if (accept(Tok::lparen)) {
      ExprPtr e = parse_expr(bound);
      expect(Tok::rparen);
      return e;
    }
    throw parse_error(peek().pos,
                      "an identifier, 'empty', 'X', '(', 'cl', 'int' or 'cmp'",
                      found());
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace detail

// Total over the grammar; everything else is rejected with a
// position-annotated parse_error / unbound_variable / duplicate_binding.
inline Claim parse_claim(std::string_view text) {
  return detail::ClaimParser(text).parse();
}

// ---------------------------------------------------------------------------
// Pretty-printing (reparses to a structurally identical claim)
// ---------------------------------------------------------------------------

namespace detail {

// precedence: union 1, intersection 2, atoms 3
inline void print_expr(const ExprPtr& e, int parent_prec, std::string& out) {
  switch (e->kind) {
    case ExprKind::variable: out += e->name; return;
    case ExprKind::empty: out += "empty"; return;
    case ExprKind::full: out += "X"; return;
    case ExprKind::complement:
    case ExprKind::closure:
    case ExprKind::interior: {
      out += e->kind == ExprKind::complement ? "cmp"
             : e->kind == ExprKind::closure  ? "cl"
                                             : "int";
      out += "(";
      print_expr(e->left, 0, out);
      out += ")";
      return;
    }
    case ExprKind::union_op: {
      const bool parens = parent_prec > 1;
      if (parens) out += "(";
      print_expr(e->left, 1, out);
      out += " | ";
      print_expr(e->right, 2, out);  // right operand must not re-associate
      if (parens) out += ")";
      return;
    }
    case ExprKind::intersection: {
      const bool parens = parent_prec > 2;
      if (parens) out += "(";
      print_expr(e->left, 2, out);
      out += " & ";
      print_expr(e->right, 3, out);
      if (parens) out += ")";
      return;
    }
  }
}

inline void print_relation(const Relation& r, std::string& out) {
  print_expr(r.lhs, 0, out);
  out += " ";
  out += to_string(r.op);
  out += " ";
  print_expr(r.rhs, 0, out);
}

}  // namespace detail

inline std::string to_string(const ExprPtr& e) {
  std::string out;
  detail::print_expr(e, 0, out);
  return out;
}

inline std::string to_string(const Claim& c) {
  std::string out = "forall ";
  for (std::size_t i = 0; i < c.bindings.size(); ++i) {
    if (i) out += ", ";
    out += to_string(c.bindings[i].sort);
    out += " ";
    out += c.bindings[i].name;
  }
  if (!c.side_conditions.empty()) {
    out += " with ";
    for (std::size_t i = 0; i < c.side_conditions.size(); ++i) {
      if (i) out += ", ";
      detail::print_relation(c.side_conditions[i], out);
    }
  }
  out += " : ";
  detail::print_relation(c.body, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

using Environment = std::vector<WitnessBinding>;

inline PointSet eval_expr(const Topology& t, const ExprPtr& e, const Environment& env) {
  switch (e->kind) {
    case ExprKind::variable:
      for (const auto& b : env)
        if (b.name == e->name) return b.value;
      throw std::logic_error("unbound variable at evaluation: " + e->name);
    case ExprKind::empty: return t.empty_set();
    case ExprKind::full: return t.full_set();
    case ExprKind::complement: return eval_expr(t, e->left, env).complement();
    case ExprKind::closure: return t.closure(eval_expr(t, e->left, env));
    case ExprKind::interior: return t.interior(eval_expr(t, e->left, env));
    case ExprKind::union_op:
      return eval_expr(t, e->left, env) | eval_expr(t, e->right, env);
    case ExprKind::intersection:
      return eval_expr(t, e->left, env) & eval_expr(t, e->right, env);
  }
  throw std::logic_error("unreachable expression kind");
}

inline bool eval_relation(const Topology& t, const Relation& r, const Environment& env,
                          PointSet* lhs_out = nullptr, PointSet* rhs_out = nullptr) {
  const PointSet lhs = eval_expr(t, r.lhs, env);
  const PointSet rhs = eval_expr(t, r.rhs, env);
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return r.op == RelationOp::equals ? lhs == rhs : lhs.subset_of(rhs);
}

// Exhaustively evaluates the claim on one topology. Bindings are enumerated
// left to right, the leftmost being the outermost loop; set sorts ascend by
// mask, open/closed sorts follow normalized opens order. Returns the first
// counterexample in that order, so failing verdicts are reproducible.
inline Verdict eval_claim(const Topology& t, const Claim& c) {
  const int n = t.point_count();
  std::vector<std::vector<PointSet>> domains;
  domains.reserve(c.bindings.size());
  for (const Binding& b : c.bindings) {
    switch (b.sort) {
      case VarSort::open_set:
        domains.push_back(t.opens());
        break;
      case VarSort::closed_set:
        domains.push_back(t.closed_sets());
        break;
      case VarSort::any_set: {
        std::vector<PointSet> all;
        const PointSet::mask_type limit = PointSet::universe_mask(n);
        all.reserve(std::size_t{1} << n);
        for (PointSet::mask_type m = 0;; ++m) {
          all.push_back(PointSet::from_mask(n, m));
          if (m == limit) break;
        }
        domains.push_back(std::move(all));
        break;
      }
    }
  }

  Environment env;
  env.reserve(c.bindings.size());
  for (const Binding& b : c.bindings) env.push_back({b.name, t.empty_set()});

  Verdict verdict{true, std::nullopt, std::nullopt};
  std::function<bool(std::size_t)> sweep = [&](std::size_t depth) -> bool {
    if (depth == c.bindings.size()) {
      for (const Relation& side : c.side_conditions)
        if (!eval_relation(t, side, env)) return true;  // filtered out
      PointSet lhs, rhs;
      if (eval_relation(t, c.body, env, &lhs, &rhs)) return true;
      verdict = Verdict{false, Witness{env, lhs, rhs, c.body.op}, std::nullopt};
      return false;
    }
    for (const PointSet& value : domains[depth]) {
      env[depth].value = value;
      if (!sweep(depth + 1)) return false;
    }
    return true;
  };
  sweep(0);
  return verdict;
}

// ---------------------------------------------------------------------------
// Built-in statements
// ---------------------------------------------------------------------------

struct BuiltinClaim {
  ConditionId id;
  const char* text;
};

inline std::span<const BuiltinClaim> builtin_claims() {
  static const BuiltinClaim table[] = {
      {ConditionId::a, "forall open A : cl(A) = int(cl(A))"},
      {ConditionId::b, "forall open A, open B : cl(A) & cl(B) = cl(A & B)"},
      {ConditionId::c,
       "forall open A, open B with A & B = empty : cl(A) & cl(B) = empty"},
      {ConditionId::d,
       "forall set K, open A with K & A = empty : cl(int(cl(K))) & cl(A) = empty"},
      {ConditionId::e,
       "forall set K, open A : int(cl(K)) & cl(A) = int(cl(K & A))"},
      {ConditionId::f,
       "forall open A, open B : int(cl(A)) | int(cl(B)) = int(cl(A | B))"},
      {ConditionId::g, "forall closed G, closed H : int(G) | int(H) = int(G | H)"},
      {ConditionId::lemma1,
       "forall set A, open B : int(cl(A)) & int(cl(B)) = int(cl(A & B))"},
      {ConditionId::corollary2,
       "forall open A, open B : int(cl(A)) & int(cl(B)) = int(cl(A & B))"},
      {ConditionId::hint, "forall set A, open B : A & int(cl(B)) <= cl(A & B)"},
      {ConditionId::hint_open,
       "forall open A, open B : A & int(cl(B)) <= cl(A & B)"},
      {ConditionId::e_disjoint,
       "forall set K, open A with K & A = empty : int(cl(K)) & cl(A) = int(cl(K & A))"},
  };
  return table;
}

inline Claim builtin_claim(ConditionId id) {
  for (const BuiltinClaim& b : builtin_claims())
    if (b.id == id) return parse_claim(b.text);
  throw std::invalid_argument("no builtin claim for this id");
}

// ---------------------------------------------------------------------------
// Model checking across enumerated topologies
// ---------------------------------------------------------------------------

enum class TopologyFilter { all, ed_only, non_ed_only };

inline const char* to_string(TopologyFilter f) {
  switch (f) {
    case TopologyFilter::all: return "all";
    case TopologyFilter::ed_only: return "ed";
    case TopologyFilter::non_ed_only: return "non-ed";
  }
  return "?";
}

struct ClaimFailure {
  int n = 0;
  std::size_t index = 0;  // position in the labeled enumeration for this n
  std::vector<PointSet> opens;
  Witness witness;
};

struct SweepStats {
  int n = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t checked = 0;  // passed the filter
  std::uint64_t ed_count = 0;
  std::uint64_t failures = 0;
};

// Aggregate of one model sweep. The failure list is capped; totals are exact.
struct Report {
  std::vector<SweepStats> per_n;
  std::vector<ClaimFailure> failures;
  std::uint64_t failures_total = 0;
  std::size_t failure_cap = 0;
  std::chrono::milliseconds duration{0};
};

inline Report model_check(const Claim& c, int n_max, TopologyFilter filter,
                          bool extended = false, std::size_t failure_cap = 100) {
  detail::check_enum_cap(n_max, extended);
  const auto started = std::chrono::steady_clock::now();
  Report report;
  report.failure_cap = failure_cap;
  for (int n = 0; n <= n_max; ++n) {
    SweepStats stats;
    stats.n = n;
    enumerate_topologies(
        n,
        [&](std::size_t index, const Topology& t) {
          ++stats.enumerated;
          const bool ed = is_extremally_disconnected(t);
          if (ed) ++stats.ed_count;
          if (filter == TopologyFilter::ed_only && !ed) return true;
          if (filter == TopologyFilter::non_ed_only && ed) return true;
          ++stats.checked;
          Verdict v = eval_claim(t, c);
          if (!v.holds) {
            ++stats.failures;
            ++report.failures_total;
            if (report.failures.size() < failure_cap)
              report.failures.push_back(
                  ClaimFailure{n, index, t.opens(), *v.witness});
          }
          return true;
        },
        extended);
    report.per_n.push_back(stats);
  }
  report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace edtop
