#pragma once

// Natural deduction for conjunction and implication, with three proof
// representations: sequent-labeled derivations, scheme terms (rule names
// only, lambda carrying the discharged proposition, [A] for hypotheses),
// and variable terms (lambda x : A with named hypothesis references).

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "deriv/outcome.hpp"
#include "deriv/tree.hpp"

namespace deriv::natded {

struct Prop {
  enum class Kind { Atom, And, Imp };

  Kind kind = Kind::Atom;
  std::string atom;        // Atom only
  std::vector<Prop> args;  // And, Imp: exactly two

  static Prop make_atom(std::string name);
  static Prop make_and(Prop a, Prop b);
  static Prop make_imp(Prop a, Prop b);

  const Prop& left() const { return args.at(0); }
  const Prop& right() const { return args.at(1); }
  bool is_and() const noexcept { return kind == Kind::And; }
  bool is_imp() const noexcept { return kind == Kind::Imp; }

  friend bool operator==(const Prop&, const Prop&);
  friend std::strong_ordering operator<=>(const Prop&, const Prop&);
};

using Context = std::set<Prop>;

Context with(Context ctx, const Prop& p);

struct Sequent {
  Context ctx;
  Prop concl;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// Concrete syntax: `/\` binds tighter than `=>`, both right-associative.
std::string print_prop(const Prop& p);
Prop parse_prop(const std::string& text);
std::string print_context(const Context& ctx);
Context parse_context(const std::string& text);
std::string print_sequent(const Sequent& s);
Sequent parse_sequent(const std::string& text);

// ---------------------------------------------------------------------------
// Sequent-labeled derivations

enum class NdRule { Axiom, AndIntro, AndElim1, AndElim2, ImpIntro };

const char* rule_name(NdRule r);
std::optional<NdRule> rule_from_name(const std::string& name);

struct SequentLabel {
  Sequent sequent;
  std::optional<NdRule> rule;

  friend bool operator==(const SequentLabel&, const SequentLabel&) = default;
};

using SequentDeriv = DerivTree<SequentLabel>;

// Each node must match its named rule, or any of the five when unnamed.
Verdict check_sequent_deriv(const SequentDeriv& t);

// One node: does rule r take premises to conclusion?
bool rule_justifies(NdRule r, const Sequent& conclusion, std::span<const Sequent> premises);

// [G |- C :: rule]([child], ...); the `:: rule` part is optional.
std::string print_sequent_deriv(const SequentDeriv& t);
SequentDeriv parse_sequent_deriv(const std::string& text);

// The rules made functional: imp-intro carries its discharged proposition
// and the axiom carries both its context and its proposition.
struct FunctionalRule {
  NdRule rule;
  std::optional<Prop> discharged;  // ImpIntro
  Context axiom_ctx;               // Axiom: conclusion is axiom_ctx, A |- A
  std::optional<Prop> axiom_prop;  // Axiom
};

// The unique conclusion of rule over premises, if any.
std::optional<Sequent> conclude(const FunctionalRule& rule, std::span<const Sequent> premises);

// ---------------------------------------------------------------------------
// Scheme terms

struct SchemeTerm {
  enum class Kind { Hyp, HypFull, Lam, Pair, Fst, Snd };

  Kind kind = Kind::Hyp;
  Prop prop;                     // Hyp, HypFull: the hypothesis; Lam: the discharged proposition
  Context ctx;                   // HypFull: the rest of the context
  std::vector<SchemeTerm> subs;  // Lam, Fst, Snd: one; Pair: two

  static SchemeTerm hyp(Prop a);
  static SchemeTerm hyp_full(Context gamma, Prop a);
  static SchemeTerm lam(Prop a, SchemeTerm body);
  static SchemeTerm pair(SchemeTerm l, SchemeTerm r);
  static SchemeTerm fst(SchemeTerm t);
  static SchemeTerm snd(SchemeTerm t);

  friend bool operator==(const SchemeTerm&, const SchemeTerm&) = default;
};

struct VarTerm {
  enum class Kind { Var, Lam, Pair, Fst, Snd };

  Kind kind = Kind::Var;
  std::string name;           // Var, Lam
  Prop prop;                  // Lam annotation
  std::vector<VarTerm> subs;

  static VarTerm var(std::string x);
  static VarTerm lam(std::string x, Prop a, VarTerm body);
  static VarTerm pair(VarTerm l, VarTerm r);
  static VarTerm fst(VarTerm t);
  static VarTerm snd(VarTerm t);

  friend bool operator==(const VarTerm&, const VarTerm&) = default;
};

// Conclusion inference in two passes: contexts root to leaves, then
// conclusions leaves to root. Returns the fully labeled derivation.
Outcome<SequentDeriv> scheme_derivation(const SchemeTerm& t, const Context& root_ctx = {});
Outcome<Sequent> check_scheme(const SchemeTerm& t, const Context& root_ctx = {});

// Variables resolve to the innermost binder of the same name.
Outcome<SequentDeriv> var_derivation(const VarTerm& t, const Context& root_ctx = {});
Outcome<Sequent> check_var(const VarTerm& t, const Context& root_ctx = {});

// Binders are named x1, x2, ... in preorder; hypotheses refer to the
// innermost binder annotated with their proposition.
VarTerm scheme_to_var(const SchemeTerm& t);
SchemeTerm var_to_scheme(const VarTerm& t);

std::string print_term(const SchemeTerm& t);
std::string print_term(const VarTerm& t);
SchemeTerm parse_scheme(const std::string& text);
VarTerm parse_var(const std::string& text);

bool contains_hyp_full(const SchemeTerm& t);

}  // namespace deriv::natded
