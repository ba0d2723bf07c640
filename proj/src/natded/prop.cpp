#include "natded/syntax.hpp"

namespace deriv::natded {

Prop Prop::make_atom(std::string name) {
  Prop p;
  p.kind = Kind::Atom;
  p.atom = std::move(name);
  return p;
}

Prop Prop::make_and(Prop a, Prop b) {
  Prop p;
  p.kind = Kind::And;
  p.args = {std::move(a), std::move(b)};
  return p;
}

Prop Prop::make_imp(Prop a, Prop b) {
  Prop p;
  p.kind = Kind::Imp;
  p.args = {std::move(a), std::move(b)};
  return p;
}

bool operator==(const Prop& a, const Prop& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Prop& a, const Prop& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (a.kind == Prop::Kind::Atom) return a.atom <=> b.atom;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

Context with(Context ctx, const Prop& p) {
  ctx.insert(p);
  return ctx;
}

namespace {

void print_operand(const Prop& operand, Prop::Kind parent, bool right, std::string& out);

void print_into(const Prop& p, std::string& out) {
  if (p.kind == Prop::Kind::Atom) {
    out += p.atom;
    return;
  }
  print_operand(p.left(), p.kind, false, out);
  out += p.is_and() ? " /\\ " : " => ";
  print_operand(p.right(), p.kind, true, out);
}

// Compound operands are parenthesized, except a right operand continuing
// a chain of the same connective.
void print_operand(const Prop& operand, Prop::Kind parent, bool right, std::string& out) {
  const bool bare = operand.kind == Prop::Kind::Atom || (right && operand.kind == parent);
  if (!bare) out += '(';
  print_into(operand, out);
  if (!bare) out += ')';
}

Prop parse_and(deriv::detail::Cursor& in);

Prop parse_primary(deriv::detail::Cursor& in) {
  if (in.accept("(")) {
    Prop p = detail::parse_prop(in);
    in.expect(")");
    return p;
  }
  return Prop::make_atom(in.identifier());
}

Prop parse_and(deriv::detail::Cursor& in) {
  Prop left = parse_primary(in);
  if (in.accept("/\\")) return Prop::make_and(std::move(left), parse_and(in));
  return left;
}

}  // namespace

namespace detail {

Prop parse_prop(deriv::detail::Cursor& in) {
  Prop left = parse_and(in);
  if (in.accept("=>")) return Prop::make_imp(std::move(left), parse_prop(in));
  return left;
}

Context parse_context(deriv::detail::Cursor& in, std::string_view stop) {
  Context ctx;
  if (in.starts_with(stop)) return ctx;
  do {
    ctx.insert(parse_prop(in));
  } while (in.accept(","));
  return ctx;
}

}  // namespace detail

std::string print_prop(const Prop& p) {
  std::string out;
  print_into(p, out);
  return out;
}

Prop parse_prop(const std::string& text) {
  deriv::detail::Cursor in(text);
  Prop p = detail::parse_prop(in);
  in.expect_end();
  return p;
}

std::string print_context(const Context& ctx) {
  std::string out;
  for (const auto& p : ctx) {
    if (!out.empty()) out += ", ";
    out += print_prop(p);
  }
  return out;
}

Context parse_context(const std::string& text) {
  deriv::detail::Cursor in(text);
  Context ctx;
  if (!in.at_end()) ctx = detail::parse_context(in, ",");
  in.expect_end();
  return ctx;
}

std::string print_sequent(const Sequent& s) {
  std::string ctx = print_context(s.ctx);
  return (ctx.empty() ? "" : ctx + " ") + "|- " + print_prop(s.concl);
}

Sequent parse_sequent(const std::string& text) {
  deriv::detail::Cursor in(text);
  Sequent s;
  s.ctx = detail::parse_context(in, "|-");
  in.expect("|-");
  s.concl = detail::parse_prop(in);
  in.expect_end();
  return s;
}

}  // namespace deriv::natded
