#include <map>

#include "deriv/natded.hpp"

namespace deriv::natded {

const char* rule_name(NdRule r) {
  switch (r) {
    case NdRule::Axiom: return "axiom";
    case NdRule::AndIntro: return "and-intro";
    case NdRule::AndElim1: return "and-elim1";
    case NdRule::AndElim2: return "and-elim2";
    case NdRule::ImpIntro: return "imp-intro";
  }
  return "?";
}

std::optional<NdRule> rule_from_name(const std::string& name) {
  for (NdRule r : {NdRule::Axiom, NdRule::AndIntro, NdRule::AndElim1, NdRule::AndElim2, NdRule::ImpIntro})
    if (name == rule_name(r)) return r;
  return std::nullopt;
}

namespace {

constexpr NdRule kAllRules[] = {NdRule::Axiom, NdRule::AndIntro, NdRule::AndElim1, NdRule::AndElim2,
                                NdRule::ImpIntro};

std::size_t premise_count(NdRule r) {
  switch (r) {
    case NdRule::Axiom: return 0;
    case NdRule::AndIntro: return 2;
    default: return 1;
  }
}

// Why node fails rule r, or nullopt if r justifies it.
std::optional<std::string> mismatch(NdRule r, const Sequent& node, const std::vector<const Sequent*>& kids) {
  if (kids.size() != premise_count(r))
    return std::string(rule_name(r)) + " takes " + std::to_string(premise_count(r)) + " premises, node has " +
           std::to_string(kids.size());
  const Prop& c = node.concl;
  switch (r) {
    case NdRule::Axiom:
      if (!node.ctx.count(c)) return print_prop(c) + " is not in the context";
      return std::nullopt;
    case NdRule::AndIntro:
      if (!c.is_and()) return "conclusion is not a conjunction";
      if (kids[0]->ctx != node.ctx || kids[1]->ctx != node.ctx) return "premise contexts differ from the conclusion's";
      if (kids[0]->concl != c.left()) return "first premise does not conclude " + print_prop(c.left());
      if (kids[1]->concl != c.right()) return "second premise does not conclude " + print_prop(c.right());
      return std::nullopt;
    case NdRule::AndElim1:
    case NdRule::AndElim2: {
      if (kids[0]->ctx != node.ctx) return "premise context differs from the conclusion's";
      const Prop& p = kids[0]->concl;
      if (!p.is_and()) return "premise is not a conjunction";
      const Prop& kept = r == NdRule::AndElim1 ? p.left() : p.right();
      if (kept != c) return "premise " + print_prop(p) + " does not project to " + print_prop(c);
      return std::nullopt;
    }
    case NdRule::ImpIntro:
      if (!c.is_imp()) return "conclusion is not an implication";
      if (kids[0]->ctx != with(node.ctx, c.left())) return "premise context is not the conclusion's extended with " + print_prop(c.left());
      if (kids[0]->concl != c.right()) return "premise does not conclude " + print_prop(c.right());
      return std::nullopt;
  }
  return "unknown rule";
}

Verdict check_node(const SequentDeriv& t, Path& path) {
  std::vector<const Sequent*> kids;
  for (const auto& c : t.children) kids.push_back(&c.label.sequent);
  const Sequent& s = t.label.sequent;
  if (t.label.rule) {
    if (auto why = mismatch(*t.label.rule, s, kids)) {
      auto kind = kids.size() != premise_count(*t.label.rule) ? RejectKind::ArityMismatch : RejectKind::WrongConclusion;
      return reject_at(path, kind, print_sequent(s) + ": " + *why);
    }
  } else {
    bool any = false;
    for (NdRule r : kAllRules) {
      if (!mismatch(r, s, kids)) {
        any = true;
        break;
      }
    }
    if (!any) return reject_at(path, RejectKind::NoRule, "no rule justifies " + print_sequent(s));
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(i);
    auto v = check_node(t.children[i], path);
    if (!v) return v;
    path.pop_back();
  }
  return Accept{};
}

SequentDeriv node(Sequent s, NdRule r, std::vector<SequentDeriv> kids = {}) {
  return SequentDeriv(SequentLabel{std::move(s), r}, std::move(kids));
}

// Pass 1 result: the context at every node, same shape as the term.
using ContextTree = DerivTree<Context>;

ContextTree assign_contexts(const SchemeTerm& t, const Context& ctx) {
  ContextTree out(ctx);
  const Context inner = t.kind == SchemeTerm::Kind::Lam ? with(ctx, t.prop) : ctx;
  for (const auto& s : t.subs) out.children.push_back(assign_contexts(s, inner));
  return out;
}

struct SchemeInference {
  Path path;
  std::optional<Rejection> failure;

  std::optional<SequentDeriv> fail(RejectKind kind, std::string reason) {
    failure = reject_at(path, kind, std::move(reason));
    return std::nullopt;
  }

  std::optional<SequentDeriv> run(const SchemeTerm& t, const ContextTree& ctxs) {
    using K = SchemeTerm::Kind;
    std::vector<SequentDeriv> kids;
    for (std::size_t i = 0; i < t.subs.size(); ++i) {
      path.push_back(i);
      auto k = run(t.subs[i], ctxs.children[i]);
      if (!k) return std::nullopt;
      path.pop_back();
      kids.push_back(std::move(*k));
    }
    const Context& ctx = ctxs.label;
    auto concl_of = [&](std::size_t i) -> const Prop& { return kids[i].label.sequent.concl; };
    switch (t.kind) {
      case K::Hyp:
        if (!ctx.count(t.prop))
          return fail(RejectKind::HypNotInContext, print_prop(t.prop) + " is not in the context {" + print_context(ctx) + "}");
        return node({ctx, t.prop}, NdRule::Axiom);
      case K::HypFull:
        if (with(t.ctx, t.prop) != ctx)
          return fail(RejectKind::ContextMismatch, "axiom context {" + print_context(with(t.ctx, t.prop)) +
                                                       "} differs from the inferred context {" + print_context(ctx) + "}");
        return node({ctx, t.prop}, NdRule::Axiom);
      case K::Lam: {
        Prop c = Prop::make_imp(t.prop, concl_of(0));
        return node({ctx, std::move(c)}, NdRule::ImpIntro, std::move(kids));
      }
      case K::Pair: {
        Prop c = Prop::make_and(concl_of(0), concl_of(1));
        return node({ctx, std::move(c)}, NdRule::AndIntro, std::move(kids));
      }
      case K::Fst:
      case K::Snd: {
        const Prop& p = concl_of(0);
        const char* which = t.kind == K::Fst ? "fst" : "snd";
        if (!p.is_and())
          return fail(RejectKind::ShapeMismatch, std::string(which) + " applied to a proof of " + print_prop(p) +
                                                     ", which is not a conjunction");
        Prop c = t.kind == K::Fst ? p.left() : p.right();
        return node({ctx, std::move(c)}, t.kind == K::Fst ? NdRule::AndElim1 : NdRule::AndElim2, std::move(kids));
      }
    }
    return fail(RejectKind::IllFormed, "unknown term");
  }
};

struct VarInference {
  Path path;
  std::optional<Rejection> failure;
  std::vector<std::pair<std::string, Prop>> binders;

  std::optional<SequentDeriv> fail(RejectKind kind, std::string reason) {
    failure = reject_at(path, kind, std::move(reason));
    return std::nullopt;
  }

  std::optional<SequentDeriv> run(const VarTerm& t, const Context& ctx) {
    using K = VarTerm::Kind;
    if (t.kind == K::Var) {
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        if (it->first == t.name) return node({ctx, it->second}, NdRule::Axiom);
      return fail(RejectKind::UnboundVariable, "unbound variable " + t.name);
    }
    const Context inner = t.kind == K::Lam ? with(ctx, t.prop) : ctx;
    if (t.kind == K::Lam) binders.emplace_back(t.name, t.prop);
    std::vector<SequentDeriv> kids;
    for (std::size_t i = 0; i < t.subs.size(); ++i) {
      path.push_back(i);
      auto k = run(t.subs[i], inner);
      if (!k) return std::nullopt;
      path.pop_back();
      kids.push_back(std::move(*k));
    }
    if (t.kind == K::Lam) binders.pop_back();
    auto concl_of = [&](std::size_t i) -> const Prop& { return kids[i].label.sequent.concl; };
    switch (t.kind) {
      case K::Lam: {
        Prop c = Prop::make_imp(t.prop, concl_of(0));
        return node({ctx, std::move(c)}, NdRule::ImpIntro, std::move(kids));
      }
      case K::Pair: {
        Prop c = Prop::make_and(concl_of(0), concl_of(1));
        return node({ctx, std::move(c)}, NdRule::AndIntro, std::move(kids));
      }
      case K::Fst:
      case K::Snd: {
        const Prop& p = concl_of(0);
        const char* which = t.kind == K::Fst ? "fst" : "snd";
        if (!p.is_and())
          return fail(RejectKind::ShapeMismatch, std::string(which) + " applied to a proof of " + print_prop(p) +
                                                     ", which is not a conjunction");
        Prop c = t.kind == K::Fst ? p.left() : p.right();
        return node({ctx, std::move(c)}, t.kind == K::Fst ? NdRule::AndElim1 : NdRule::AndElim2, std::move(kids));
      }
      case K::Var: break;
    }
    return fail(RejectKind::IllFormed, "unknown term");
  }
};

}  // namespace

bool rule_justifies(NdRule r, const Sequent& conclusion, std::span<const Sequent> premises) {
  std::vector<const Sequent*> kids;
  for (const auto& p : premises) kids.push_back(&p);
  return !mismatch(r, conclusion, kids);
}

Verdict check_sequent_deriv(const SequentDeriv& t) {
  Path path;
  return check_node(t, path);
}

std::optional<Sequent> conclude(const FunctionalRule& rule, std::span<const Sequent> premises) {
  if (premises.size() != premise_count(rule.rule)) return std::nullopt;
  switch (rule.rule) {
    case NdRule::Axiom:
      if (!rule.axiom_prop) return std::nullopt;
      return Sequent{with(rule.axiom_ctx, *rule.axiom_prop), *rule.axiom_prop};
    case NdRule::AndIntro:
      if (premises[0].ctx != premises[1].ctx) return std::nullopt;
      return Sequent{premises[0].ctx, Prop::make_and(premises[0].concl, premises[1].concl)};
    case NdRule::AndElim1:
    case NdRule::AndElim2: {
      const Prop& p = premises[0].concl;
      if (!p.is_and()) return std::nullopt;
      return Sequent{premises[0].ctx, rule.rule == NdRule::AndElim1 ? p.left() : p.right()};
    }
    case NdRule::ImpIntro: {
      if (!rule.discharged || !premises[0].ctx.count(*rule.discharged)) return std::nullopt;
      // Conclusion context is the premise context minus A.
      Context ctx = premises[0].ctx;
      ctx.erase(*rule.discharged);
      return Sequent{std::move(ctx), Prop::make_imp(*rule.discharged, premises[0].concl)};
    }
  }
  return std::nullopt;
}

Outcome<SequentDeriv> scheme_derivation(const SchemeTerm& t, const Context& root_ctx) {
  const ContextTree ctxs = assign_contexts(t, root_ctx);
  SchemeInference inference;
  auto d = inference.run(t, ctxs);
  if (!d) return *inference.failure;
  return std::move(*d);
}

Outcome<Sequent> check_scheme(const SchemeTerm& t, const Context& root_ctx) {
  auto d = scheme_derivation(t, root_ctx);
  if (!d) return d.rejection();
  return d.value().label.sequent;
}

Outcome<SequentDeriv> var_derivation(const VarTerm& t, const Context& root_ctx) {
  VarInference inference;
  auto d = inference.run(t, root_ctx);
  if (!d) return *inference.failure;
  return std::move(*d);
}

Outcome<Sequent> check_var(const VarTerm& t, const Context& root_ctx) {
  auto d = var_derivation(t, root_ctx);
  if (!d) return d.rejection();
  return d.value().label.sequent;
}

}  // namespace deriv::natded
