#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deriv/element.hpp"
#include "deriv/error.hpp"
#include "deriv/tree.hpp"

namespace deriv {

template <class E>
using FiniteSet = std::set<E>;

// A named partial function from arity-tuples of elements to an element.
// The function must be pure: the engine calls it from several threads.
template <Element E>
class Rule {
 public:
  using Function = std::function<std::optional<E>(std::span<const E>)>;

  Rule(RuleName name, std::size_t arity, Function fn)
      : name_(std::move(name)), arity_(arity), fn_(std::move(fn)) {
    if (!is_valid_rule_name(name_))
      throw Error(ErrorKind::IllFormed, "invalid rule name '" + name_ + "'");
  }

  const RuleName& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }

  std::optional<E> apply(std::span<const E> args) const {
    if (args.size() != arity_)
      throw Error(ErrorKind::ArityMismatch, "rule " + name_ + " has arity " +
                                                std::to_string(arity_) + " but got " +
                                                std::to_string(args.size()) + " arguments");
    return fn_(args);
  }

 private:
  RuleName name_;
  std::size_t arity_;
  Function fn_;
};

// Builds a rule from an extensional table (finite-domain systems).
template <Element E>
Rule<E> table_rule(RuleName name, std::size_t arity, std::map<std::vector<E>, E> table) {
  return Rule<E>(std::move(name), arity,
                 [table = std::move(table)](std::span<const E> args) -> std::optional<E> {
                   auto it = table.find(std::vector<E>(args.begin(), args.end()));
                   if (it == table.end()) return std::nullopt;
                   return it->second;
                 });
}

template <Element E>
class RuleSystem {
 public:
  RuleSystem(std::string domain, std::vector<Rule<E>> rules)
      : domain_(std::move(domain)), rules_(std::move(rules)) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!index_.emplace(rules_[i].name(), i).second)
        throw Error(ErrorKind::DuplicateRuleName, "duplicate rule name '" + rules_[i].name() + "'");
    }
  }

  const std::string& domain() const noexcept { return domain_; }
  const std::vector<Rule<E>>& rules() const noexcept { return rules_; }

  const Rule<E>* find(const RuleName& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &rules_[it->second];
  }

 private:
  std::string domain_;
  std::vector<Rule<E>> rules_;
  std::map<RuleName, std::size_t> index_;
};

template <Element E>
std::string render_set(const FiniteSet<E>& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : set) {
    if (!first) out += ", ";
    first = false;
    out += to_text(e);
  }
  return out + "}";
}

}  // namespace deriv
