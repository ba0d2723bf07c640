#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deriv/outcome.hpp"
#include "deriv/rules.hpp"
#include "deriv/step.hpp"
#include "deriv/tree.hpp"

namespace deriv {

template <class E>
struct IterateResult {
  FiniteSet<E> set;
  // Smallest k <= i with F^k(empty) = F^(k+1)(empty), if one was observed.
  std::optional<std::size_t> fixed_point_at;

  bool reached_fixed_point() const noexcept { return fixed_point_at.has_value(); }
};

// F^i(empty). Stops early once a fixed point is observed.
template <Element E>
IterateResult<E> iterate(const RuleSystem<E>& sys, std::size_t i, const Limits& limits = {}) {
  if (i > limits.max_depth)
    throw Error(ErrorKind::ResourceLimit,
                "iteration depth " + std::to_string(i) + " exceeds " + std::to_string(limits.max_depth));
  IterateResult<E> result;
  for (std::size_t k = 0; k < i; ++k) {
    FiniteSet<E> next = step(sys, result.set, limits);
    if (next.size() > limits.max_cardinality)
      throw Error(ErrorKind::ResourceLimit, "F^" + std::to_string(k + 1) + " has more than " +
                                                std::to_string(limits.max_cardinality) + " elements");
    if (next == result.set) {
      result.fixed_point_at = k;
      break;
    }
    result.set = std::move(next);
  }
  return result;
}

template <class E>
struct MemberResult {
  std::size_t depth = 0;
  std::optional<FullTree<E>> witness;

  bool found() const noexcept { return witness.has_value(); }
};

// Decides a in F^depth(empty) and, when it is, returns a fully labeled
// derivation of minimal height. Among derivations of equal height the
// first rule in list order and then the first argument tuple (in element
// order) is chosen, so the witness is deterministic.
template <Element E>
MemberResult<E> member(const RuleSystem<E>& sys, const E& a, std::size_t depth, const Limits& limits = {}) {
  if (depth == 0) throw Error(ErrorKind::IllFormed, "member needs depth >= 1");
  if (depth > limits.max_depth)
    throw Error(ErrorKind::ResourceLimit,
                "depth " + std::to_string(depth) + " exceeds " + std::to_string(limits.max_depth));

  struct Justification {
    std::size_t rule;
    std::vector<E> premises;
  };
  std::map<E, Justification> memo;
  FiniteSet<E> level;

  MemberResult<E> result;
  result.depth = depth;
  for (std::size_t i = 1; i <= depth; ++i) {
    const std::vector<E> xs(level.begin(), level.end());
    FiniteSet<E> next;
    std::vector<E> args;
    bool found = false;
    for (std::size_t r = 0; r < sys.rules().size() && !found; ++r) {
      const auto& rule = sys.rules()[r];
      const std::uint64_t total = detail::tuple_count(xs.size(), rule.arity(), limits);
      args.assign(rule.arity(), E{});
      for (std::uint64_t t = 0; t < total; ++t) {
        detail::decode_tuple(t, xs, args);
        auto e = rule.apply(args);
        if (!e) continue;
        if (!memo.count(*e)) memo.emplace(*e, Justification{r, args});
        if (*e == a) {
          found = true;
          break;
        }
        next.insert(std::move(*e));
      }
    }
    if (found) break;
    if (next.size() > limits.max_cardinality)
      throw Error(ErrorKind::ResourceLimit, "F^" + std::to_string(i) + " has more than " +
                                                std::to_string(limits.max_cardinality) + " elements");
    if (next == level) break;
    level = std::move(next);
  }

  auto it = memo.find(a);
  if (it == memo.end()) return result;

  auto build = [&](auto&& self, const E& e) -> FullTree<E> {
    const Justification& j = memo.at(e);
    FullTree<E> node(FullLabel<E>{e, sys.rules()[j.rule].name()});
    for (const auto& p : j.premises) node.children.push_back(self(self, p));
    return node;
  };
  result.witness = build(build, a);
  return result;
}

namespace detail {

template <class L>
std::vector<const DerivTree<L>*> preorder(const DerivTree<L>& t) {
  std::vector<const DerivTree<L>*> out;
  auto walk = [&](auto&& self, const DerivTree<L>& n) -> void {
    out.push_back(&n);
    for (const auto& c : n.children) self(self, c);
  };
  walk(walk, t);
  return out;
}

template <class E>
std::string render_tuple(const std::vector<E>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_text(xs[i]);
  }
  return out + ")";
}

template <class L, class Visit>
std::optional<Rejection> check_preorder(const DerivTree<L>& t, Path& path, Visit&& visit) {
  if (auto r = visit(t, path)) return r;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(i);
    if (auto r = check_preorder(t.children[i], path, visit)) return r;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace detail

// Accepts iff every node is the image of its children under some rule.
// Rules are searched exhaustively, so names are not needed.
template <Element E>
Verdict check_elem_tree(const RuleSystem<E>& sys, const ElemTree<E>& t) {
  Path path;
  auto rejection = detail::check_preorder(t, path, [&](const ElemTree<E>& node, const Path& at) -> std::optional<Rejection> {
    std::vector<E> premises;
    premises.reserve(node.children.size());
    for (const auto& c : node.children) premises.push_back(c.label);
    for (const auto& rule : sys.rules()) {
      if (rule.arity() != premises.size()) continue;
      auto r = rule.apply(premises);
      if (r && *r == node.label) return std::nullopt;
    }
    return reject_at(at, RejectKind::NoRule,
                     "no rule derives " + to_text(node.label) + " from " + detail::render_tuple(premises));
  });
  if (rejection) return *rejection;
  return Accept{};
}

// Accepts iff at every node the named rule maps the children's elements to
// the node's element.
template <Element E>
Verdict check_full_tree(const RuleSystem<E>& sys, const FullTree<E>& t) {
  Path path;
  auto rejection = detail::check_preorder(t, path, [&](const FullTree<E>& node, const Path& at) -> std::optional<Rejection> {
    const Rule<E>* rule = sys.find(node.label.rule);
    if (!rule) return reject_at(at, RejectKind::UnknownRuleName, "unknown rule '" + node.label.rule + "'");
    if (rule->arity() != node.children.size())
      return reject_at(at, RejectKind::ArityMismatch,
                       "rule " + rule->name() + " has arity " + std::to_string(rule->arity()) + " but node has " +
                           std::to_string(node.children.size()) + " premises");
    std::vector<E> premises;
    for (const auto& c : node.children) premises.push_back(c.label.element);
    auto r = rule->apply(premises);
    if (!r)
      return reject_at(at, RejectKind::RuleUndefined,
                       "rule " + rule->name() + " is undefined on " + detail::render_tuple(premises));
    if (!(*r == node.label.element))
      return reject_at(at, RejectKind::WrongConclusion,
                       rule->name() + detail::render_tuple(premises) + " = " + to_text(*r) + ", not " +
                           to_text(node.label.element));
    return std::nullopt;
  });
  if (rejection) return *rejection;
  return Accept{};
}

// Conclusion inference: recomputes every element from the rule names,
// leaves first, and returns the fully labeled tree.
template <Element E>
Outcome<FullTree<E>> infer_full_tree(const RuleSystem<E>& sys, const NameTree& t) {
  Path path;
  std::optional<Rejection> failure;
  auto infer = [&](auto&& self, const NameTree& node) -> std::optional<FullTree<E>> {
    const Rule<E>* rule = sys.find(node.label);
    if (!rule) {
      failure = reject_at(path, RejectKind::UnknownRuleName, "unknown rule '" + node.label + "'");
      return std::nullopt;
    }
    if (rule->arity() != node.children.size()) {
      failure = reject_at(path, RejectKind::ArityMismatch,
                          "rule " + rule->name() + " has arity " + std::to_string(rule->arity()) +
                              " but node has " + std::to_string(node.children.size()) + " premises");
      return std::nullopt;
    }
    std::vector<FullTree<E>> children;
    std::vector<E> premises;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      path.push_back(i);
      auto c = self(self, node.children[i]);
      if (!c) return std::nullopt;
      path.pop_back();
      premises.push_back(c->label.element);
      children.push_back(std::move(*c));
    }
    auto r = rule->apply(premises);
    if (!r) {
      failure = reject_at(path, RejectKind::RuleUndefined,
                          "rule " + rule->name() + " is undefined on " + detail::render_tuple(premises));
      return std::nullopt;
    }
    return FullTree<E>(FullLabel<E>{std::move(*r), node.label}, std::move(children));
  };
  auto full = infer(infer, t);
  if (!full) return *failure;
  return std::move(*full);
}

template <Element E>
Outcome<E> infer_conclusion(const RuleSystem<E>& sys, const NameTree& t) {
  auto full = infer_full_tree(sys, t);
  if (!full) return full.rejection();
  return full.value().label.element;
}

}  // namespace deriv
