#include <cctype>

#include "core/cursor.hpp"
#include "deriv/element.hpp"
#include "deriv/tree.hpp"

namespace deriv {

namespace {

bool is_name_char(char c) {
  return c != '(' && c != ')' && c != ',' && !std::isspace(static_cast<unsigned char>(c));
}

void print_into(const NameTree& t, std::string& out) {
  out += t.label;
  if (t.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ", ";
    print_into(t.children[i], out);
  }
  out += ')';
}

NameTree parse_tree(detail::Cursor& in) {
  std::string name = in.take_while(is_name_char);
  if (name.empty()) in.fail("expected rule name");
  NameTree node(std::move(name));
  if (in.accept("(")) {
    // `f()` is accepted as a spelling of the nullary `f`.
    if (in.accept(")")) return node;
    do {
      node.children.push_back(parse_tree(in));
    } while (in.accept(","));
    in.expect(")");
  }
  return node;
}

}  // namespace

bool is_valid_rule_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!is_name_char(c)) return false;
  return true;
}

std::string print_name_tree(const NameTree& t) {
  std::string out;
  print_into(t, out);
  return out;
}

NameTree parse_name_tree(const std::string& text) {
  detail::Cursor in(text);
  NameTree t = parse_tree(in);
  in.expect_end();
  return t;
}

bool parse_natural(const std::string& text, Natural& out) {
  if (text.empty() || text.size() > 10000) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out = Natural(text);
  return true;
}

}  // namespace deriv
