#include "deriv/error.hpp"
#include "deriv/recfun.hpp"

namespace deriv::recfun {

namespace {

class Evaluator {
 public:
  Evaluator(std::uint64_t fuel, MuConvention mu) : fuel_(fuel), mu_(mu) {}

  std::uint64_t used() const noexcept { return used_; }

  // nullopt: fuel ran out.
  std::optional<Natural> run(const Program& p, std::span<const Natural> xs) {
    using K = Program::Kind;
    switch (p.kind) {
      case K::Zero: return Natural(0);
      case K::Succ: return xs[0] + 1;
      case K::Proj: return xs[p.i - 1];
      case K::Comp: {
        if (!charge()) return std::nullopt;
        std::vector<Natural> inner;
        inner.reserve(p.subs.size() - 1);
        for (std::size_t j = 1; j < p.subs.size(); ++j) {
          auto v = run(p.subs[j], xs);
          if (!v) return std::nullopt;
          inner.push_back(std::move(*v));
        }
        return run(p.subs[0], inner);
      }
      case K::Rec: {
        if (!charge()) return std::nullopt;
        // f(0, xs) = g(xs); f(y + 1, xs) = h(y, f(y, xs), xs)
        const Natural& y = xs[0];
        std::span<const Natural> rest = xs.subspan(1);
        auto acc = run(p.subs[0], rest);
        if (!acc) return std::nullopt;
        std::vector<Natural> args(xs.size() + 1);
        std::copy(rest.begin(), rest.end(), args.begin() + 2);
        for (Natural k = 0; k < y; ++k) {
          if (!charge()) return std::nullopt;
          args[0] = k;
          args[1] = std::move(*acc);
          acc = run(p.subs[1], args);
          if (!acc) return std::nullopt;
        }
        return acc;
      }
      case K::Mu: {
        if (!charge()) return std::nullopt;
        std::vector<Natural> args(xs.size() + 1);
        const std::size_t slot = mu_ == MuConvention::MinimizeLast ? xs.size() : 0;
        std::copy(xs.begin(), xs.end(), args.begin() + (slot == 0 ? 1 : 0));
        for (Natural y = 0;; ++y) {
          if (!charge()) return std::nullopt;
          args[slot] = y;
          auto v = run(p.subs[0], args);
          if (!v) return std::nullopt;
          if (*v == 0) return y;
        }
      }
    }
    throw Error(ErrorKind::IllFormed, "unknown constructor");
  }

 private:
  bool charge() {
    if (used_ == fuel_) return false;
    ++used_;
    return true;
  }

  std::uint64_t fuel_;
  std::uint64_t used_ = 0;
  MuConvention mu_;
};

}  // namespace

EvalResult eval(const Program& p, std::span<const Natural> args, const EvalOptions& options) {
  EvalResult result;
  auto arity = arity_of(p);
  if (!arity) {
    result.status = EvalResult::Status::IllFormed;
    result.ill_formed = arity.rejection();
    return result;
  }
  if (args.size() != arity.value())
    throw Error(ErrorKind::ArityMismatch, "program has arity " + std::to_string(arity.value()) + " but got " +
                                              std::to_string(args.size()) + " arguments");
  Evaluator ev(options.fuel, options.mu);
  auto v = ev.run(p, args);
  result.fuel_used = ev.used();
  if (v) {
    result.status = EvalResult::Status::Value;
    result.value = std::move(*v);
  } else {
    result.status = EvalResult::Status::Diverged;
  }
  return result;
}

std::string render(const EvalResult& r, std::uint64_t fuel) {
  switch (r.status) {
    case EvalResult::Status::Value: return "value " + r.value.str();
    case EvalResult::Status::Diverged: return "diverged (fuel " + std::to_string(fuel) + ")";
    case EvalResult::Status::IllFormed:
      return "ill-formed at " + render_path(r.ill_formed->path) + ": " + r.ill_formed->reason;
  }
  return {};
}

}  // namespace deriv::recfun
