#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace deriv {

using RuleName = std::string;

// A finite, ordered tree. Instantiated with elements, rule names, or both.
template <class L>
struct DerivTree {
  L label;
  std::vector<DerivTree> children;

  DerivTree() = default;
  explicit DerivTree(L l, std::vector<DerivTree> c = {})
      : label(std::move(l)), children(std::move(c)) {}

  friend bool operator==(const DerivTree&, const DerivTree&) = default;
};

template <class E>
struct FullLabel {
  E element;
  RuleName rule;

  friend bool operator==(const FullLabel&, const FullLabel&) = default;
};

template <class E>
using ElemTree = DerivTree<E>;
using NameTree = DerivTree<RuleName>;
template <class E>
using FullTree = DerivTree<FullLabel<E>>;

// A leaf has height 1.
template <class L>
std::size_t height(const DerivTree<L>& t) {
  std::size_t h = 0;
  for (const auto& c : t.children) h = std::max(h, height(c));
  return h + 1;
}

template <class L>
std::size_t node_count(const DerivTree<L>& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

template <class L, class F>
auto map_labels(const DerivTree<L>& t, F&& f) -> DerivTree<decltype(f(t.label))> {
  DerivTree<decltype(f(t.label))> out(f(t.label));
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(map_labels(c, f));
  return out;
}

template <class E>
ElemTree<E> erase_names(const FullTree<E>& t) {
  return map_labels(t, [](const FullLabel<E>& l) { return l.element; });
}

template <class E>
NameTree erase_elements(const FullTree<E>& t) {
  return map_labels(t, [](const FullLabel<E>& l) { return l.rule; });
}

// Linear form: NAME | NAME(tree, ..., tree). Nullary nodes print bare.
std::string print_name_tree(const NameTree& t);
NameTree parse_name_tree(const std::string& text);

bool is_valid_rule_name(const std::string& name);

// Inference-rule layout for teaching handouts: nested
// \irule{premises}{conclusion}{rule name}, premises separated by ~~~~.
// Labels are (conclusion, rule name); either part may be empty.
using DisplayTree = DerivTree<std::pair<std::string, std::string>>;
std::string render_latex(const DisplayTree& t);

}  // namespace deriv
