#include "deriv/even.hpp"

namespace deriv {

RuleSystem<Natural> even_system() {
  std::vector<Rule<Natural>> rules;
  rules.emplace_back("f1", 0, [](std::span<const Natural>) -> std::optional<Natural> { return Natural(0); });
  rules.emplace_back("f2", 1, [](std::span<const Natural> a) -> std::optional<Natural> { return a[0] + 2; });
  return RuleSystem<Natural>("naturals", std::move(rules));
}

}  // namespace deriv
