#include "deriv/tree.hpp"

namespace deriv {

namespace {

void render(const DisplayTree& t, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  out += pad + "\\irule{";
  if (!t.children.empty()) {
    out += '\n';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) out += pad + "  ~~~~\n";
      render(t.children[i], indent + 2, out);
      out += '\n';
    }
    out += pad;
  }
  out += "}\n" + pad + "      {" + t.label.first + "}\n" + pad + "      {" + t.label.second + "}";
}

}  // namespace

std::string render_latex(const DisplayTree& t) {
  std::string out;
  render(t, 0, out);
  return out + "\n";
}

}  // namespace deriv
