#include "doctest.h"

#include <omp.h>

#include "deriv/engine.hpp"
#include "deriv/even.hpp"
#include "generators.hpp"

using namespace deriv;
using namespace deriv::testing;

TEST_CASE("parallel step agrees with the serial reference on random systems") {
  Rng rng(20261019);
  for (int round = 0; round < 100; ++round) {
    const std::size_t domain = uniform(rng, 1, 12);
    auto sys = random_finite_system(rng, domain, uniform(rng, 1, 5));
    auto x = random_subset(rng, domain);
    CHECK(step_parallel(sys, x) == step_serial(sys, x));
  }
}

TEST_CASE("parallel step agrees with the serial reference with several threads") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  Rng rng(7);
  for (int round = 0; round < 20; ++round) {
    auto sys = random_finite_system(rng, 40, 4);
    auto x = random_subset(rng, 40, 0.8);
    CHECK(step_parallel(sys, x) == step_serial(sys, x));
  }
  auto even = even_system();
  FiniteSet<Natural> big;
  for (int i = 0; i < 5000; ++i) big.insert(Natural(i));
  CHECK(step_parallel(even, big) == step_serial(even, big));
  CHECK(step(even, big) == step_serial(even, big));
  omp_set_num_threads(saved);
}

TEST_CASE("exceptions raised inside the parallel kernel reach the caller") {
  std::vector<Rule<Natural>> rules;
  rules.emplace_back("boom", 1, [](std::span<const Natural> a) -> std::optional<Natural> {
    if (a[0] == 3) throw Error(ErrorKind::IllFormed, "boom");
    return a[0];
  });
  RuleSystem<Natural> sys("n", std::move(rules));
  FiniteSet<Natural> x{0, 1, 2, 3, 4};
  CHECK_THROWS_AS(step_parallel(sys, x), Error);
  CHECK_THROWS_AS(step_serial(sys, x), Error);
}

TEST_CASE("tuple space is bounded") {
  std::vector<Rule<Natural>> rules;
  rules.emplace_back("wide", 3, [](std::span<const Natural> a) -> std::optional<Natural> { return a[0]; });
  RuleSystem<Natural> sys("n", std::move(rules));
  FiniteSet<Natural> x;
  for (int i = 0; i < 100; ++i) x.insert(Natural(i));
  Limits limits;
  limits.max_tuples = 999999;
  CHECK_THROWS_AS(step_serial(sys, x, limits), Error);
  CHECK_THROWS_AS(step_parallel(sys, x, limits), Error);
  limits.max_tuples = 1000000;
  CHECK(step_serial(sys, x, limits) == x);
}
