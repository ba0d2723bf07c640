#include "deriv/error.hpp"
#include "deriv/natded.hpp"

namespace deriv::natded {

namespace {

struct ToVar {
  std::size_t next = 1;
  std::vector<std::pair<std::string, Prop>> binders;

  VarTerm run(const SchemeTerm& t) {
    using K = SchemeTerm::Kind;
    switch (t.kind) {
      case K::Hyp:
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
          if (it->second == t.prop) return VarTerm::var(it->first);
        throw Error(ErrorKind::NoMatchingBinder, "no enclosing binder for hyp [" + print_prop(t.prop) + "]");
      case K::HypFull:
        throw Error(ErrorKind::IllFormed, "axiom {...} terms have no variable form");
      case K::Lam: {
        std::string x = "x" + std::to_string(next++);
        binders.emplace_back(x, t.prop);
        VarTerm body = run(t.subs[0]);
        binders.pop_back();
        return VarTerm::lam(std::move(x), t.prop, std::move(body));
      }
      case K::Pair: {
        VarTerm l = run(t.subs[0]);
        return VarTerm::pair(std::move(l), run(t.subs[1]));
      }
      case K::Fst: return VarTerm::fst(run(t.subs[0]));
      case K::Snd: return VarTerm::snd(run(t.subs[0]));
    }
    throw Error(ErrorKind::IllFormed, "unknown term");
  }
};

struct ToScheme {
  std::vector<std::pair<std::string, Prop>> binders;

  SchemeTerm run(const VarTerm& t) {
    using K = VarTerm::Kind;
    switch (t.kind) {
      case K::Var:
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
          if (it->first == t.name) return SchemeTerm::hyp(it->second);
        throw Error(ErrorKind::UnboundVariable, "unbound variable " + t.name);
      case K::Lam: {
        binders.emplace_back(t.name, t.prop);
        SchemeTerm body = run(t.subs[0]);
        binders.pop_back();
        return SchemeTerm::lam(t.prop, std::move(body));
      }
      case K::Pair: {
        SchemeTerm l = run(t.subs[0]);
        return SchemeTerm::pair(std::move(l), run(t.subs[1]));
      }
      case K::Fst: return SchemeTerm::fst(run(t.subs[0]));
      case K::Snd: return SchemeTerm::snd(run(t.subs[0]));
    }
    throw Error(ErrorKind::IllFormed, "unknown term");
  }
};

}  // namespace

VarTerm scheme_to_var(const SchemeTerm& t) { return ToVar{}.run(t); }

SchemeTerm var_to_scheme(const VarTerm& t) { return ToScheme{}.run(t); }

}  // namespace deriv::natded
