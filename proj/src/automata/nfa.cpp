#include <algorithm>
#include <cctype>
#include <tuple>

#include "deriv/automata.hpp"
#include "deriv/error.hpp"

namespace deriv::automata {

namespace {

constexpr const char* kEps = "eps";

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

void require_state(const Nfa& n, const State& s) {
  if (!n.states.count(s)) throw Error(ErrorKind::UnknownState, "unknown state '" + s + "'");
}

void require_word(const Nfa& n, const Word& w) {
  for (const auto& a : w)
    if (!n.alphabet.count(a)) throw Error(ErrorKind::UnknownLetter, "unknown letter '" + a + "'");
}

struct Edge {
  std::size_t index;
  State to;
};

// For each (from, letter), the outgoing edges with their rule indices, in index order.
using EdgeMap = std::map<std::pair<State, Letter>, std::vector<Edge>>;

struct Numbering {
  EdgeMap edges;
  std::map<State, std::size_t> finals;
};

std::vector<Transition> naming_order(const Nfa& n) {
  std::vector<Transition> ts(n.transitions.begin(), n.transitions.end());
  std::sort(ts.begin(), ts.end(), [](const Transition& x, const Transition& y) {
    return std::tie(x.letter, x.to, x.from) < std::tie(y.letter, y.to, y.from);
  });
  return ts;
}

Numbering number(const Nfa& n) {
  Numbering out;
  std::map<Letter, std::size_t> next;
  for (const auto& t : naming_order(n)) out.edges[{t.from, t.letter}].push_back({++next[t.letter], t.to});
  std::size_t j = 0;
  for (const auto& q : n.finals) out.finals[q] = ++j;
  return out;
}

std::string rule_name(const Letter& a, std::size_t k) { return a + "_" + std::to_string(k); }

}  // namespace

void Nfa::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidAutomaton, what); };
  for (const auto& s : states)
    if (!is_identifier(s)) bad("state '" + s + "' is not an identifier");
  for (const auto& a : alphabet) {
    if (!is_identifier(a)) bad("letter '" + a + "' is not an identifier");
    if (a == kEps) bad("the letter 'eps' is reserved for final-state rules");
  }
  for (const auto& q : finals)
    if (!states.count(q)) bad("final state '" + q + "' is not declared");
  for (const auto& t : transitions) {
    if (!states.count(t.from)) bad("transition from undeclared state '" + t.from + "'");
    if (!states.count(t.to)) bad("transition to undeclared state '" + t.to + "'");
    if (!alphabet.count(t.letter)) bad("transition on undeclared letter '" + t.letter + "'");
  }
}

CompiledRules compile(const Nfa& n) {
  n.validate();
  std::vector<Rule<State>> rules;
  std::vector<CompiledRule> listing;
  std::map<RuleName, Letter> erasure;
  std::map<Letter, std::size_t> next;
  for (const auto& t : naming_order(n)) {
    RuleName name = rule_name(t.letter, ++next[t.letter]);
    rules.push_back(table_rule<State>(name, 1, {{{t.to}, t.from}}));
    listing.push_back({name, t.to, t.from, t.letter});
    erasure[name] = t.letter;
  }
  std::size_t j = 0;
  for (const auto& q : n.finals) {
    RuleName name = rule_name(kEps, ++j);
    rules.push_back(table_rule<State>(name, 0, {{{}, q}}));
    listing.push_back({name, std::nullopt, q, ""});
    erasure[name] = "";
  }
  return {RuleSystem<State>("states", std::move(rules)), std::move(listing), std::move(erasure)};
}

Word erase(const CompiledRules& rules, const NameTree& t) {
  Word w;
  const NameTree* node = &t;
  while (true) {
    auto it = rules.erasure.find(node->label);
    if (it == rules.erasure.end())
      throw Error(ErrorKind::MalformedChain, "'" + node->label + "' is not a rule of this automaton");
    if (it->second.empty()) {
      if (!node->children.empty())
        throw Error(ErrorKind::MalformedChain, "'" + node->label + "' takes no premises");
      return w;
    }
    if (node->children.size() != 1)
      throw Error(ErrorKind::MalformedChain, "'" + node->label + "' takes exactly one premise");
    w.push_back(it->second);
    node = &node->children.front();
  }
}

bool recognizes(const Nfa& n, const State& s, const Word& w) {
  n.validate();
  require_state(n, s);
  require_word(n, w);
  std::set<State> current{s};
  for (const auto& a : w) {
    std::set<State> next;
    for (const auto& t : n.transitions)
      if (t.letter == a && current.count(t.from)) next.insert(t.to);
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [&](const State& q) { return n.finals.count(q) > 0; });
}

std::vector<NameTree> derivations_of(const Nfa& n, const State& s, const Word& w, std::size_t limit) {
  n.validate();
  require_state(n, s);
  require_word(n, w);
  const Numbering num = number(n);

  std::vector<NameTree> out;
  std::vector<RuleName> chain;
  // Edges are visited in index order at every depth, so chains come out in name order.
  auto search = [&](auto&& self, const State& q, std::size_t pos) -> void {
    if (pos == w.size()) {
      auto f = num.finals.find(q);
      if (f == num.finals.end()) return;
      if (out.size() == limit)
        throw Error(ErrorKind::ResourceLimit, "more than " + std::to_string(limit) + " derivations");
      NameTree t(rule_name(kEps, f->second), {});
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) t = NameTree(*it, {std::move(t)});
      out.push_back(std::move(t));
      return;
    }
    auto e = num.edges.find({q, w[pos]});
    if (e == num.edges.end()) return;
    for (const auto& edge : e->second) {
      chain.push_back(rule_name(w[pos], edge.index));
      self(self, edge.to, pos + 1);
      chain.pop_back();
    }
  };
  search(search, s, 0);
  return out;
}

bool is_deterministic(const Nfa& n) {
  std::set<std::pair<State, Letter>> seen;
  for (const auto& t : n.transitions)
    if (!seen.insert({t.from, t.letter}).second) return false;
  return true;
}

std::string print_rules(const CompiledRules& rules) {
  std::string out;
  for (const auto& r : rules.listing)
    out += r.name + "(" + r.premise.value_or("") + ") = " + r.conclusion + "\n";
  for (const auto& r : rules.listing)
    out += "|" + r.name + "| = " + (r.letter.empty() ? std::string(kEps) : r.letter) + "\n";
  return out;
}

}  // namespace deriv::automata
