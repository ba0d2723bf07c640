#pragma once

// Finite automata read as rule systems over their states. A transition
// s -a-> t is a unary rule a_k with premise t and conclusion s, a final
// state q is a nullary rule eps_j concluding q, and a word recognized in s
// is a name-labeled derivation of s with the indices erased.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deriv/rules.hpp"
#include "deriv/tree.hpp"

namespace deriv::automata {

using State = std::string;
using Letter = std::string;
using Word = std::vector<Letter>;

struct Transition {
  State from;
  Letter letter;
  State to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct Nfa {
  std::set<State> states;
  std::set<Letter> alphabet;
  std::set<Transition> transitions;
  std::set<State> finals;

  // Throws Error(InvalidAutomaton) on undeclared states or letters, on names
  // that are not identifiers, and on the reserved letter "eps".
  void validate() const;

  friend bool operator==(const Nfa&, const Nfa&) = default;
};

// The display form of one compiled rule.
struct CompiledRule {
  RuleName name;
  std::optional<State> premise;  // empty for eps_j
  State conclusion;
  Letter letter;                 // empty for eps_j
};

struct CompiledRules {
  RuleSystem<State> system;
  std::vector<CompiledRule> listing;
  std::map<RuleName, Letter> erasure;  // eps_j erases to ""
};

// Transitions are sorted by (letter, to, from) and numbered 1, 2, ... per
// letter; final states are numbered in name order.
CompiledRules compile(const Nfa& n);

// The word read from root to leaf of a chain ending in an eps rule.
// Throws Error(MalformedChain) otherwise.
Word erase(const CompiledRules& rules, const NameTree& t);

// Throws Error(UnknownState) or Error(UnknownLetter).
bool recognizes(const Nfa& n, const State& s, const Word& w);

// Every name tree erasing to w with conclusion s, in name order
// (indices compared numerically). Throws Error(ResourceLimit) past `limit`.
std::vector<NameTree> derivations_of(const Nfa& n, const State& s, const Word& w, std::size_t limit = 100000);

// No two transitions share (from, letter).
bool is_deterministic(const Nfa& n);

// Line-oriented text: `state S`, `final S`, `letter A`, `trans FROM A TO`, `#` comments.
Nfa parse_nfa(const std::string& text);
std::string print_nfa(const Nfa& n);
Nfa load_nfa(const std::string& path);

// Letters separated by commas or spaces, or one letter per character when
// there is no separator. The empty text is the empty word.
Word parse_word(const std::string& text);
std::string print_word(const Word& w);

// One line per rule, then the erasure table.
std::string print_rules(const CompiledRules& rules);

}  // namespace deriv::automata
