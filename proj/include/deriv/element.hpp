#pragma once

#include <concepts>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace deriv {

// Arbitrary-precision natural numbers. Signedness is not enforced by the
// type; every producer in this library only builds nonnegative values.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_text(const Natural& n) { return n.str(); }
inline std::string to_text(const std::string& s) { return s; }

// Parses a decimal natural; returns false on anything else.
bool parse_natural(const std::string& text, Natural& out);

// An element domain: totally ordered (sets are kept sorted) and renderable.
template <class E>
concept Element = std::totally_ordered<E> && std::copyable<E> && requires(const E& e) {
  { deriv::to_text(e) } -> std::convertible_to<std::string>;
};

}  // namespace deriv
