#pragma once

// Partial recursive functions as programs: trees of rule names built from
// zero, successor and projections by composition, primitive recursion and
// minimization. Evaluation is bounded by an explicit fuel budget.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deriv/element.hpp"
#include "deriv/outcome.hpp"
#include "deriv/tree.hpp"

namespace deriv::recfun {

struct Program {
  enum class Kind { Zero, Succ, Proj, Comp, Rec, Mu };

  Kind kind = Kind::Zero;
  std::size_t n = 0;  // Zero, Proj: arity
  std::size_t i = 0;  // Proj: 1-based index
  // Comp: f, g1..gm. Rec: g, h. Mu: f.
  std::vector<Program> subs;

  static Program zero(std::size_t n);
  static Program succ();
  static Program proj(std::size_t n, std::size_t i);
  static Program comp(Program f, std::vector<Program> gs);
  static Program rec(Program g, Program h);
  static Program mu(Program f);

  friend bool operator==(const Program&, const Program&) = default;
};

std::size_t size(const Program& p);

// The arity, or an IllFormed rejection at the offending subprogram.
//   Proj(n, i): 1 <= i <= n.  Comp(f, gs): gs share arity m, arity(f) = |gs|.
//   Rec(g, h): arity(h) = arity(g) + 2.  Mu(f): arity(f) >= 1.
Outcome<std::size_t> arity_of(const Program& p);

// Which argument Mu minimizes over: Mu(f)(xs) = least y with f(xs, y) = 0
// (MinimizeLast) or f(y, xs) = 0 (MinimizeFirst).
enum class MuConvention { MinimizeLast, MinimizeFirst };

struct EvalOptions {
  std::uint64_t fuel = 10000;
  MuConvention mu = MuConvention::MinimizeLast;
};

struct EvalResult {
  enum class Status { Value, Diverged, IllFormed };

  Status status = Status::Diverged;
  Natural value;                       // Value only
  std::optional<Rejection> ill_formed;  // IllFormed only
  std::uint64_t fuel_used = 0;

  bool converged() const noexcept { return status == Status::Value; }
};

// One unit of fuel per Comp, Rec and Mu node entry, per recursion step and
// per minimization probe. Zero, Succ and Proj are free.
// Throws Error(ArityMismatch) if args.size() differs from the arity.
EvalResult eval(const Program& p, std::span<const Natural> args, const EvalOptions& options = {});

// `value N`, `diverged (fuel F)` or `ill-formed at PATH: reason`.
std::string render(const EvalResult& r, std::uint64_t fuel);

// Constructor-tagged numbering over the Cantor pairing <a, b> = (a+b)(a+b+1)/2 + b:
//   Zero(n) = <0, n>, Succ = <1, 0>, Proj(n, i) = <2, <n, i>>,
//   Comp(f, gs) = <3, <#f, list(gs)>>, Rec(g, h) = <4, <#g, #h>>, Mu(f) = <5, #f>,
//   list(a1..am) = <m, <#a1, <#a2, ... <#am, 0>>>>.
Natural pair(const Natural& a, const Natural& b);
std::pair<Natural, Natural> unpair(const Natural& z);
Natural godel(const Program& p);
// Throws Error(DecodeError) for codes that are not the number of a well-formed program.
Program ungodel(const Natural& code);

// k = comp(mu(proj^2_1); comp(h; proj^1_1, proj^1_1)). k(x) is defined iff h(x, x) = 0.
// Throws Error(ArityMismatch) unless h is binary.
Program diagonal(const Program& h);

// p := zero^N | succ | proj^N_I | comp(p; p, ..., p) | rec(p, p) | mu(p)
std::string print_program(const Program& p);
Program parse_program(const std::string& text);

// The same programs as rule-name trees: comp(f; g1, g2) is comp(f, g1, g2).
NameTree to_name_tree(const Program& p);
Program from_name_tree(const NameTree& t);

}  // namespace deriv::recfun
