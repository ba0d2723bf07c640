#include "doctest.h"

#include <algorithm>

#include "deriv/engine.hpp"
#include "deriv/even.hpp"
#include "generators.hpp"

using namespace deriv;
using namespace deriv::testing;

namespace {

bool subset(const FiniteSet<Natural>& a, const FiniteSet<Natural>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

NameTree random_name_tree(Rng& rng, const RuleSystem<Natural>& sys, std::size_t depth) {
  std::vector<const Rule<Natural>*> pool;
  for (const auto& r : sys.rules())
    if (depth > 1 || r.arity() == 0) pool.push_back(&r);
  // No nullary rule: emit an ill-formed leaf that inference must reject.
  if (pool.empty()) return NameTree{sys.rules()[0].name()};
  const auto& rule = *pool[uniform(rng, 0, pool.size() - 1)];
  NameTree t{rule.name()};
  for (std::size_t i = 0; i < rule.arity(); ++i) t.children.push_back(random_name_tree(rng, sys, depth - 1));
  return t;
}

std::string scatter_whitespace(Rng& rng, const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == ' ') continue;
    if (c == '(' || c == ')' || c == ',') {
      if (coin(rng)) out += ' ';
      out += c;
      if (coin(rng)) out += "\n ";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("step is monotone on random finite X subset Y") {
  Rng rng(1);
  for (int round = 0; round < 250; ++round) {
    const std::size_t domain = uniform(rng, 1, 10);
    auto sys = random_finite_system(rng, domain, uniform(rng, 1, 4));
    auto y = random_subset(rng, domain, 0.6);
    FiniteSet<Natural> x;
    for (const auto& e : y)
      if (coin(rng)) x.insert(e);
    CHECK(subset(step(sys, x), step(sys, y)));
  }
  auto even = even_system();
  for (int round = 0; round < 50; ++round) {
    auto y = random_subset(rng, 30);
    FiniteSet<Natural> x;
    for (const auto& e : y)
      if (coin(rng)) x.insert(e);
    CHECK(subset(step(even, x), step(even, y)));
  }
}

TEST_CASE("iterates form an increasing chain") {
  Rng rng(2);
  for (int round = 0; round < 200; ++round) {
    const std::size_t domain = uniform(rng, 1, 10);
    auto sys = random_finite_system(rng, domain, uniform(rng, 1, 4));
    FiniteSet<Natural> prev;
    for (std::size_t i = 1; i <= 6; ++i) {
      auto cur = iterate(sys, i).set;
      CHECK(subset(prev, cur));
      CHECK(cur == step(sys, prev));
      prev = std::move(cur);
    }
  }
}

TEST_CASE("member agrees with iterate and its witnesses check") {
  Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    const std::size_t domain = uniform(rng, 1, 8);
    auto sys = random_finite_system(rng, domain, uniform(rng, 1, 4));
    const std::size_t depth = uniform(rng, 1, 5);
    auto level = iterate(sys, depth).set;
    for (std::size_t e = 0; e < domain; ++e) {
      auto m = member(sys, Natural(e), depth);
      REQUIRE(m.found() == (level.count(Natural(e)) == 1));
      if (!m.found()) continue;
      CHECK(m.witness->label.element == Natural(e));
      CHECK(height(*m.witness) <= depth);
      CHECK(check_full_tree(sys, *m.witness).ok());
      // Minimal height: the element is absent one level below.
      CHECK(iterate(sys, height(*m.witness) - 1).set.count(Natural(e)) == 0);
    }
  }
}

TEST_CASE("accepted trees conclude members of the matching iterate and erase coherently") {
  Rng rng(4);
  int accepted = 0;
  for (int round = 0; round < 1200; ++round) {
    const std::size_t domain = uniform(rng, 1, 8);
    auto sys = random_finite_system(rng, domain, uniform(rng, 1, 4));
    auto names = random_name_tree(rng, sys, uniform(rng, 1, 4));
    auto full = infer_full_tree(sys, names);
    if (!full) continue;
    ++accepted;
    const auto& t = full.value();
    REQUIRE(check_full_tree(sys, t).ok());
    CHECK(iterate(sys, height(t)).set.count(t.label.element) == 1);
    CHECK(check_elem_tree(sys, erase_names(t)).ok());
    CHECK(erase_elements(t) == names);
    CHECK(infer_conclusion(sys, erase_elements(t)).value() == t.label.element);
  }
  CHECK(accepted >= 200);
}

TEST_CASE("even system: witnesses for every member of F^i") {
  auto even = even_system();
  for (std::size_t i = 1; i <= 12; ++i) {
    for (const auto& a : iterate(even, i).set) {
      auto m = member(even, a, i);
      REQUIRE(m.found());
      CHECK(check_full_tree(even, *m.witness).ok());
      CHECK(infer_conclusion(even, erase_elements(*m.witness)).value() == a);
    }
  }
}

TEST_CASE("name-tree printing and parsing round-trip") {
  Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    auto sys = random_finite_system(rng, 3, uniform(rng, 1, 5));
    auto t = random_name_tree(rng, sys, uniform(rng, 1, 5));
    const std::string text = print_name_tree(t);
    CHECK(parse_name_tree(text) == t);
    CHECK(print_name_tree(parse_name_tree(scatter_whitespace(rng, text))) == text);
  }
}
