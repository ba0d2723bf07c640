#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace deriv {

// Child indices from the root; the empty path is the root itself.
using Path = std::vector<std::size_t>;

std::string render_path(const Path& path);

enum class RejectKind {
  NoRule,           // no rule justifies the node
  WrongConclusion,  // the named rule yields a different element
  UnknownRuleName,
  ArityMismatch,
  RuleUndefined,
  HypNotInContext,
  ContextMismatch,
  ShapeMismatch,
  UnboundVariable,
  IllFormed,
};

const char* to_string(RejectKind kind);

struct Rejection {
  Path path;
  RejectKind kind;
  std::string reason;

  std::string describe() const;
  friend bool operator==(const Rejection&, const Rejection&) = default;
};

struct Accept {
  friend bool operator==(Accept, Accept) = default;
};

// Either a value or the first node at which a tree failed.
template <class T>
class Outcome {
 public:
  Outcome(T value) : data_(std::move(value)) {}
  Outcome(Rejection rejection) : data_(std::move(rejection)) {}

  bool ok() const noexcept { return data_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& { return std::get<0>(data_); }
  T&& value() && { return std::get<0>(std::move(data_)); }
  const Rejection& rejection() const { return std::get<1>(data_); }

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  std::variant<T, Rejection> data_;
};

using Verdict = Outcome<Accept>;

inline Rejection reject_at(Path path, RejectKind kind, std::string reason) {
  return Rejection{std::move(path), kind, std::move(reason)};
}

}  // namespace deriv
