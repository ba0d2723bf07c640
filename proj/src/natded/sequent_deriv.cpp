#include <cctype>

#include "natded/syntax.hpp"

namespace deriv::natded {

namespace {

using deriv::detail::Cursor;

void print_into(const SequentDeriv& t, std::string& out) {
  out += '[';
  out += print_sequent(t.label.sequent);
  if (t.label.rule) {
    out += " :: ";
    out += rule_name(*t.label.rule);
  }
  out += ']';
  if (t.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ", ";
    print_into(t.children[i], out);
  }
  out += ')';
}

SequentDeriv parse_node(Cursor& in) {
  in.expect("[");
  SequentLabel label;
  label.sequent.ctx = detail::parse_context(in, "|-");
  in.expect("|-");
  label.sequent.concl = detail::parse_prop(in);
  if (in.accept("::")) {
    const std::size_t at = in.position();
    std::string name = in.take_while([](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-'; });
    label.rule = rule_from_name(name);
    if (!label.rule) throw SyntaxError(at, "unknown rule name '" + name + "'");
  }
  in.expect("]");
  SequentDeriv t(std::move(label));
  if (in.accept("(")) {
    do {
      t.children.push_back(parse_node(in));
    } while (in.accept(","));
    in.expect(")");
  }
  return t;
}

}  // namespace

std::string print_sequent_deriv(const SequentDeriv& t) {
  std::string out;
  print_into(t, out);
  return out;
}

SequentDeriv parse_sequent_deriv(const std::string& text) {
  Cursor in(text);
  SequentDeriv t = parse_node(in);
  in.expect_end();
  return t;
}

}  // namespace deriv::natded
