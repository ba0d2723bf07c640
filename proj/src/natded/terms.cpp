#include "natded/syntax.hpp"

namespace deriv::natded {

SchemeTerm SchemeTerm::hyp(Prop a) {
  SchemeTerm t;
  t.kind = Kind::Hyp;
  t.prop = std::move(a);
  return t;
}

SchemeTerm SchemeTerm::hyp_full(Context gamma, Prop a) {
  SchemeTerm t;
  t.kind = Kind::HypFull;
  t.ctx = std::move(gamma);
  t.prop = std::move(a);
  return t;
}

SchemeTerm SchemeTerm::lam(Prop a, SchemeTerm body) {
  SchemeTerm t;
  t.kind = Kind::Lam;
  t.prop = std::move(a);
  t.subs.push_back(std::move(body));
  return t;
}

SchemeTerm SchemeTerm::pair(SchemeTerm l, SchemeTerm r) {
  SchemeTerm t;
  t.kind = Kind::Pair;
  t.subs.push_back(std::move(l));
  t.subs.push_back(std::move(r));
  return t;
}

SchemeTerm SchemeTerm::fst(SchemeTerm u) {
  SchemeTerm t;
  t.kind = Kind::Fst;
  t.subs.push_back(std::move(u));
  return t;
}

SchemeTerm SchemeTerm::snd(SchemeTerm u) {
  SchemeTerm t;
  t.kind = Kind::Snd;
  t.subs.push_back(std::move(u));
  return t;
}

VarTerm VarTerm::var(std::string x) {
  VarTerm t;
  t.kind = Kind::Var;
  t.name = std::move(x);
  return t;
}

VarTerm VarTerm::lam(std::string x, Prop a, VarTerm body) {
  VarTerm t;
  t.kind = Kind::Lam;
  t.name = std::move(x);
  t.prop = std::move(a);
  t.subs.push_back(std::move(body));
  return t;
}

VarTerm VarTerm::pair(VarTerm l, VarTerm r) {
  VarTerm t;
  t.kind = Kind::Pair;
  t.subs.push_back(std::move(l));
  t.subs.push_back(std::move(r));
  return t;
}

VarTerm VarTerm::fst(VarTerm u) {
  VarTerm t;
  t.kind = Kind::Fst;
  t.subs.push_back(std::move(u));
  return t;
}

VarTerm VarTerm::snd(VarTerm u) {
  VarTerm t;
  t.kind = Kind::Snd;
  t.subs.push_back(std::move(u));
  return t;
}

bool contains_hyp_full(const SchemeTerm& t) {
  if (t.kind == SchemeTerm::Kind::HypFull) return true;
  for (const auto& s : t.subs)
    if (contains_hyp_full(s)) return true;
  return false;
}

namespace {

using deriv::detail::Cursor;

bool is_keyword(const std::string& word) {
  return word == "fun" || word == "hyp" || word == "axiom" || word == "fst" || word == "snd";
}

std::string print_scheme(const SchemeTerm& t) {
  using K = SchemeTerm::Kind;
  switch (t.kind) {
    case K::Hyp: return "hyp [" + print_prop(t.prop) + "]";
    case K::HypFull: {
      std::string ctx = print_context(t.ctx);
      return "axiom {" + ctx + (ctx.empty() ? "| " : " | ") + print_prop(t.prop) + "}";
    }
    case K::Lam: return "fun [" + print_prop(t.prop) + "] " + print_scheme(t.subs[0]);
    case K::Pair: return "<" + print_scheme(t.subs[0]) + ", " + print_scheme(t.subs[1]) + ">";
    case K::Fst: return "fst(" + print_scheme(t.subs[0]) + ")";
    case K::Snd: return "snd(" + print_scheme(t.subs[0]) + ")";
  }
  return {};
}

std::string print_var(const VarTerm& t) {
  using K = VarTerm::Kind;
  switch (t.kind) {
    case K::Var: return t.name;
    case K::Lam: return "fun " + t.name + " : " + print_prop(t.prop) + " . " + print_var(t.subs[0]);
    case K::Pair: return "<" + print_var(t.subs[0]) + ", " + print_var(t.subs[1]) + ">";
    case K::Fst: return "fst(" + print_var(t.subs[0]) + ")";
    case K::Snd: return "snd(" + print_var(t.subs[0]) + ")";
  }
  return {};
}

Prop bracketed_prop(Cursor& in) {
  in.expect("[");
  Prop p = detail::parse_prop(in);
  in.expect("]");
  return p;
}

template <class Term, class Parse>
bool parse_common(Cursor& in, Parse&& parse, Term& out) {
  if (in.accept("<")) {
    Term l = parse(in);
    in.expect(",");
    Term r = parse(in);
    in.expect(">");
    out = Term::pair(std::move(l), std::move(r));
    return true;
  }
  for (bool first : {true, false}) {
    if (in.accept_keyword(first ? "fst" : "snd")) {
      in.expect("(");
      Term u = parse(in);
      in.expect(")");
      out = first ? Term::fst(std::move(u)) : Term::snd(std::move(u));
      return true;
    }
  }
  if (in.accept("(")) {
    out = parse(in);
    in.expect(")");
    return true;
  }
  return false;
}

SchemeTerm parse_scheme_term(Cursor& in) {
  SchemeTerm t;
  if (parse_common(in, parse_scheme_term, t)) return t;
  if (in.accept_keyword("fun")) {
    Prop a = bracketed_prop(in);
    return SchemeTerm::lam(std::move(a), parse_scheme_term(in));
  }
  if (in.accept_keyword("hyp")) return SchemeTerm::hyp(bracketed_prop(in));
  if (in.accept_keyword("axiom")) {
    in.expect("{");
    Context gamma = detail::parse_context(in, "|");
    in.expect("|");
    Prop a = detail::parse_prop(in);
    in.expect("}");
    return SchemeTerm::hyp_full(std::move(gamma), std::move(a));
  }
  in.fail("expected a scheme term");
}

VarTerm parse_var_term(Cursor& in) {
  VarTerm t;
  if (parse_common(in, parse_var_term, t)) return t;
  if (in.accept_keyword("fun")) {
    std::string x = in.identifier();
    if (is_keyword(x)) in.fail("'" + x + "' is a keyword");
    in.expect(":");
    Prop a = detail::parse_prop(in);
    in.expect(".");
    return VarTerm::lam(std::move(x), std::move(a), parse_var_term(in));
  }
  const std::size_t at = in.position();
  std::string x = in.identifier();
  if (is_keyword(x)) throw SyntaxError(at, "'" + x + "' is a keyword");
  return VarTerm::var(std::move(x));
}

}  // namespace

std::string print_term(const SchemeTerm& t) { return print_scheme(t); }
std::string print_term(const VarTerm& t) { return print_var(t); }

SchemeTerm parse_scheme(const std::string& text) {
  Cursor in(text);
  SchemeTerm t = parse_scheme_term(in);
  in.expect_end();
  return t;
}

VarTerm parse_var(const std::string& text) {
  Cursor in(text);
  VarTerm t = parse_var_term(in);
  in.expect_end();
  return t;
}

}  // namespace deriv::natded
