#pragma once

// The one-step operator F(X) = union over rules f of { f(a1..an) | ai in X }.
//
// Two kernels compute it: step_serial walks every rule's argument tuples in
// lexicographic order and is the reference; step_parallel flattens the
// tuple space of each rule and splits it across OpenMP threads. Both must
// return the same set for every input; tests and the benchmark compare them.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

#include "deriv/rules.hpp"

namespace deriv {

struct Limits {
  std::size_t max_cardinality = 100000;
  std::size_t max_depth = 100000;
  // Upper bound on |X|^arity for a single rule in one step.
  std::uint64_t max_tuples = std::uint64_t{1} << 32;
};

namespace detail {

inline std::uint64_t tuple_count(std::size_t n, std::size_t arity, const Limits& limits) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    if (n != 0 && total > limits.max_tuples / n)
      throw Error(ErrorKind::ResourceLimit, "argument tuple space exceeds " +
                                                std::to_string(limits.max_tuples));
    total *= n;
  }
  return total;
}

// Writes tuple number t (mixed radix, first argument most significant).
template <class E>
void decode_tuple(std::uint64_t t, const std::vector<E>& xs, std::vector<E>& args) {
  const std::uint64_t n = xs.size();
  for (std::size_t k = args.size(); k-- > 0;) {
    args[k] = xs[t % n];
    t /= n;
  }
}

}  // namespace detail

template <Element E>
FiniteSet<E> step_serial(const RuleSystem<E>& sys, const FiniteSet<E>& x, const Limits& limits = {}) {
  const std::vector<E> xs(x.begin(), x.end());
  FiniteSet<E> out;
  std::vector<E> args;
  for (const auto& rule : sys.rules()) {
    const std::uint64_t total = detail::tuple_count(xs.size(), rule.arity(), limits);
    args.assign(rule.arity(), E{});
    for (std::uint64_t t = 0; t < total; ++t) {
      detail::decode_tuple(t, xs, args);
      if (auto r = rule.apply(args)) out.insert(std::move(*r));
    }
  }
  return out;
}

template <Element E>
FiniteSet<E> step_parallel(const RuleSystem<E>& sys, const FiniteSet<E>& x, const Limits& limits = {}) {
  const std::vector<E> xs(x.begin(), x.end());
  FiniteSet<E> out;
  std::exception_ptr failure;
  for (const auto& rule : sys.rules()) {
    const std::uint64_t total = detail::tuple_count(xs.size(), rule.arity(), limits);
    if (total > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw Error(ErrorKind::ResourceLimit, "argument tuple space too large");
    const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
    {
      std::vector<E> local;
      std::vector<E> args(rule.arity());
#pragma omp for schedule(static)
      for (std::int64_t t = 0; t < count; ++t) {
        try {
          detail::decode_tuple(static_cast<std::uint64_t>(t), xs, args);
          if (auto r = rule.apply(args)) local.push_back(std::move(*r));
        } catch (...) {
#pragma omp critical(deriv_step_failure)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(deriv_step_merge)
      out.insert(std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

// Below this many rule applications per step the thread start-up cost
// dominates.
inline constexpr std::uint64_t kParallelStepThreshold = 4096;

template <Element E>
FiniteSet<E> step(const RuleSystem<E>& sys, const FiniteSet<E>& x, const Limits& limits = {}) {
  std::uint64_t work = 0;
  for (const auto& rule : sys.rules()) work += detail::tuple_count(x.size(), rule.arity(), limits);
  return work < kParallelStepThreshold ? step_serial(sys, x, limits) : step_parallel(sys, x, limits);
}

}  // namespace deriv
