#pragma once

// Seeded generators of propositions and proof terms.

#include <iterator>
#include <string>
#include <vector>

#include "deriv/natded.hpp"
#include "generators.hpp"

namespace deriv::testing {

using natded::Context;
using natded::Prop;
using natded::SchemeTerm;
using natded::VarTerm;
using natded::with;

inline Prop random_prop(Rng& rng, int depth) {
  static const char* atoms[] = {"P", "Q", "R"};
  if (depth == 0 || coin(rng, 0.4)) return Prop::make_atom(atoms[uniform(rng, 0, 2)]);
  Prop l = random_prop(rng, depth - 1);
  Prop r = random_prop(rng, depth - 1);
  return coin(rng) ? Prop::make_and(std::move(l), std::move(r)) : Prop::make_imp(std::move(l), std::move(r));
}

struct Proof {
  SchemeTerm term;
  Prop concl;
};

// Builds a scheme term that checks under ctx, tracking its conclusion.
inline Proof random_proof(Rng& rng, const Context& ctx, int depth) {
  if (depth <= 0 || (!ctx.empty() && coin(rng, 0.25))) {
    if (ctx.empty()) {
      Prop a = random_prop(rng, 1);
      return {SchemeTerm::lam(a, SchemeTerm::hyp(a)), Prop::make_imp(a, a)};
    }
    auto it = ctx.begin();
    std::advance(it, uniform(rng, 0, ctx.size() - 1));
    return {SchemeTerm::hyp(*it), *it};
  }
  switch (uniform(rng, 0, 3)) {
    case 0: {
      Prop a = random_prop(rng, 2);
      Proof body = random_proof(rng, with(ctx, a), depth - 1);
      return {SchemeTerm::lam(a, std::move(body.term)), Prop::make_imp(a, body.concl)};
    }
    case 1: {
      Proof l = random_proof(rng, ctx, depth - 1);
      Proof r = random_proof(rng, ctx, depth - 1);
      return {SchemeTerm::pair(std::move(l.term), std::move(r.term)), Prop::make_and(l.concl, r.concl)};
    }
    default: {
      Proof sub = random_proof(rng, ctx, depth - 1);
      if (!sub.concl.is_and()) {
        Proof other = random_proof(rng, ctx, depth - 1);
        sub = {SchemeTerm::pair(std::move(sub.term), std::move(other.term)), Prop::make_and(sub.concl, other.concl)};
      }
      const bool first = coin(rng);
      Prop c = first ? sub.concl.left() : sub.concl.right();
      return {first ? SchemeTerm::fst(std::move(sub.term)) : SchemeTerm::snd(std::move(sub.term)), std::move(c)};
    }
  }
}

// Closed variable terms over a two-name pool, so shadowing is common.
inline VarTerm random_var_term(Rng& rng, std::vector<std::string>& scope, int depth) {
  static const char* names[] = {"x", "y"};
  if (depth <= 0 || (!scope.empty() && coin(rng, 0.25))) {
    if (scope.empty()) {
      std::string x = names[uniform(rng, 0, 1)];
      return VarTerm::lam(x, random_prop(rng, 1), VarTerm::var(x));
    }
    return VarTerm::var(scope[uniform(rng, 0, scope.size() - 1)]);
  }
  switch (uniform(rng, 0, 3)) {
    case 0: {
      std::string x = names[uniform(rng, 0, 1)];
      scope.push_back(x);
      VarTerm body = random_var_term(rng, scope, depth - 1);
      scope.pop_back();
      return VarTerm::lam(x, random_prop(rng, 2), std::move(body));
    }
    case 1: {
      VarTerm l = random_var_term(rng, scope, depth - 1);
      return VarTerm::pair(std::move(l), random_var_term(rng, scope, depth - 1));
    }
    case 2: return VarTerm::fst(random_var_term(rng, scope, depth - 1));
    default: return VarTerm::snd(random_var_term(rng, scope, depth - 1));
  }
}

}  // namespace deriv::testing
