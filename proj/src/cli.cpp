#include "deriv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "deriv/automata.hpp"
#include "deriv/engine.hpp"
#include "deriv/even.hpp"
#include "deriv/natded.hpp"
#include "deriv/recfun.hpp"

namespace deriv::cli {

namespace {

constexpr const char* kSynopsis =
    "usage: deriv {even iterate|even member|infer|natded check|natded convert|"
    "recfun eval|recfun godel|recfun ungodel|recfun diagonal|nfa run|nfa derivations|nfa rules} ... "
    "(see deriv --help)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A term given literally or as @FILE.
std::string term_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read '" + arg.substr(1) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

Natural natural_arg(const std::string& text) {
  Natural n;
  if (!parse_natural(text, n)) throw SyntaxError(0, "expected a natural number, got '" + text + "'");
  return n;
}

template <class E>
DisplayTree display(const FullTree<E>& t) {
  return map_labels(t, [](const FullLabel<E>& l) { return std::make_pair(to_text(l.element), l.rule); });
}

std::string latex_sequent(const natded::Sequent& s) {
  std::string text = natded::print_sequent(s), out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "|-") == 0) {
      out += "\\vdash";
      ++i;
    } else if (text.compare(i, 2, "/\\") == 0) {
      out += "\\wedge";
      ++i;
    } else if (text.compare(i, 2, "=>") == 0) {
      out += "\\Rightarrow";
      ++i;
    } else {
      out += text[i];
    }
  }
  return out;
}

DisplayTree display(const natded::SequentDeriv& t) {
  return map_labels(t, [](const natded::SequentLabel& l) {
    return std::make_pair(latex_sequent(l.sequent), l.rule ? std::string(natded::rule_name(*l.rule)) : "");
  });
}

struct Options {
  bool latex = false;

  std::size_t steps = 0;
  std::string element;
  std::size_t depth = 0;

  std::string system;
  std::string term;
  std::string form = "scheme";
  std::string context;
  bool tree = false;
  std::string to;

  std::string program;
  std::vector<std::string> values;
  std::uint64_t fuel = 10000;
  std::string mu = "last";
  bool self_apply = false;

  std::string file;
  std::string state;
  std::string word;
};

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  int even_iterate(const Options& o) {
    out_ << render_set(iterate(even_system(), o.steps).set) << "\n";
    return 0;
  }

  int even_member(const Options& o) {
    const auto result = member(even_system(), natural_arg(o.element), o.depth);
    if (!result.found()) {
      out_ << o.element << " has no derivation of height <= " << o.depth << "\n";
      return 1;
    }
    if (o.latex)
      out_ << render_latex(display(*result.witness));
    else
      out_ << print_name_tree(erase_elements(*result.witness)) << "\n";
    return 0;
  }

  int infer(const Options& o) {
    const NameTree t = parse_name_tree(term_text(o.term));
    if (o.system == "even") return report_inference(even_system(), t, o.latex);
    return report_inference(automata::compile(automata::load_nfa(o.system)).system, t, o.latex);
  }

  int natded_check(const Options& o) {
    using namespace natded;
    const std::string text = term_text(o.term);
    const Context ctx = parse_context(o.context);
    Outcome<SequentDeriv> d = Rejection{};
    if (o.form == "scheme") {
      d = scheme_derivation(parse_scheme(text), ctx);
    } else if (o.form == "var") {
      d = var_derivation(parse_var(text), ctx);
    } else {
      SequentDeriv t = parse_sequent_deriv(text);
      if (auto v = check_sequent_deriv(t); !v) {
        d = v.rejection();
      } else {
        d = std::move(t);
      }
    }
    if (!d) {
      out_ << d.rejection().describe() << "\n";
      return 1;
    }
    if (o.latex)
      out_ << render_latex(display(d.value()));
    else if (o.tree)
      out_ << print_sequent_deriv(d.value()) << "\n";
    else
      out_ << print_sequent(d.value().label.sequent) << "\n";
    return 0;
  }

  int natded_convert(const Options& o) {
    using namespace natded;
    const std::string text = term_text(o.term);
    if (o.to == "var")
      out_ << print_term(scheme_to_var(parse_scheme(text))) << "\n";
    else
      out_ << print_term(var_to_scheme(parse_var(text))) << "\n";
    return 0;
  }

  int recfun_eval(const Options& o) {
    const auto p = recfun::parse_program(term_text(o.program));
    std::vector<Natural> args;
    for (const auto& v : o.values) args.push_back(natural_arg(v));
    const auto r = recfun::eval(p, args, {o.fuel, mu(o)});
    out_ << recfun::render(r, o.fuel) << "\n";
    return r.converged() ? 0 : 1;
  }

  int recfun_godel(const Options& o) {
    const auto p = recfun::parse_program(term_text(o.program));
    if (auto a = recfun::arity_of(p); !a) {
      out_ << a.rejection().describe() << "\n";
      return 1;
    }
    out_ << recfun::godel(p).str() << "\n";
    return 0;
  }

  int recfun_ungodel(const Options& o) {
    out_ << recfun::print_program(recfun::ungodel(natural_arg(o.program))) << "\n";
    return 0;
  }

  int recfun_diagonal(const Options& o) {
    const auto k = recfun::diagonal(recfun::parse_program(term_text(o.program)));
    out_ << recfun::print_program(k) << "\n";
    if (!o.self_apply) return 0;
    const Natural code = recfun::godel(k);
    const auto r = recfun::eval(k, std::span<const Natural>(&code, 1), {o.fuel, mu(o)});
    out_ << recfun::render(r, o.fuel) << "\n";
    return r.converged() ? 0 : 1;
  }

  int nfa_run(const Options& o) {
    const bool yes = automata::recognizes(automata::load_nfa(o.file), o.state, automata::parse_word(o.word));
    out_ << (yes ? "recognized" : "not recognized") << "\n";
    return yes ? 0 : 1;
  }

  int nfa_derivations(const Options& o) {
    const auto n = automata::load_nfa(o.file);
    const auto ds = automata::derivations_of(n, o.state, automata::parse_word(o.word));
    const auto rules = automata::compile(n);
    for (const auto& d : ds) {
      if (o.latex)
        out_ << render_latex(display(infer_full_tree(rules.system, d).value()));
      else
        out_ << print_name_tree(d) << "\n";
    }
    return ds.empty() ? 1 : 0;
  }

  int nfa_rules(const Options& o) {
    out_ << automata::print_rules(automata::compile(automata::load_nfa(o.file)));
    return 0;
  }

 private:
  static recfun::MuConvention mu(const Options& o) {
    return o.mu == "first" ? recfun::MuConvention::MinimizeFirst : recfun::MuConvention::MinimizeLast;
  }

  template <class E>
  int report_inference(const RuleSystem<E>& sys, const NameTree& t, bool latex) {
    auto full = infer_full_tree(sys, t);
    if (!full) {
      out_ << full.rejection().describe() << "\n";
      return 1;
    }
    if (latex)
      out_ << render_latex(display(full.value()));
    else
      out_ << to_text(full.value().label.element) << "\n";
    return 0;
  }

  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  Runner runner(out);
  std::function<int()> action;
  auto bind = [&](CLI::App* cmd, int (Runner::*fn)(const Options&)) {
    cmd->callback([&action, &runner, &o, fn] { action = [&runner, &o, fn] { return (runner.*fn)(o); }; });
  };

  CLI::App app("Inductive definitions, derivation trees and their checkers.", "deriv");
  app.require_subcommand(1);

  auto* even = app.add_subcommand("even", "The even numbers as an inductive definition");
  even->require_subcommand(1);
  auto* iterate_cmd = even->add_subcommand("iterate", "Print F^I of the empty set");
  iterate_cmd->add_option("--steps", o.steps, "Number of iterations")->required();
  bind(iterate_cmd, &Runner::even_iterate);
  auto* member_cmd = even->add_subcommand("member", "Find a derivation of N");
  member_cmd->add_option("N", o.element, "The element")->required();
  member_cmd->add_option("--depth", o.depth, "Maximal height")->required();
  member_cmd->add_flag("--latex", o.latex, "Print the derivation as LaTeX");
  bind(member_cmd, &Runner::even_member);

  auto* infer_cmd = app.add_subcommand("infer", "Infer the conclusion of a rule-name tree");
  infer_cmd->add_option("--system", o.system, "'even' or an automaton file")->required();
  infer_cmd->add_option("TREE", o.term, "Name tree or @FILE")->required();
  infer_cmd->add_flag("--latex", o.latex, "Print the labeled derivation as LaTeX");
  bind(infer_cmd, &Runner::infer);

  auto* natded_cmd = app.add_subcommand("natded", "Natural deduction proofs");
  natded_cmd->require_subcommand(1);
  auto* check_cmd = natded_cmd->add_subcommand("check", "Check a proof and print its sequent");
  check_cmd->add_option("--form", o.form, "scheme, var or sequent")
      ->check(CLI::IsMember({"scheme", "var", "sequent"}));
  check_cmd->add_option("--context", o.context, "Hypotheses available at the root");
  check_cmd->add_flag("--tree", o.tree, "Print the whole labeled derivation");
  check_cmd->add_flag("--latex", o.latex, "Print the derivation as LaTeX");
  check_cmd->add_option("TERM", o.term, "Term or @FILE")->required();
  bind(check_cmd, &Runner::natded_check);
  auto* convert_cmd = natded_cmd->add_subcommand("convert", "Convert between scheme and variable terms");
  convert_cmd->add_option("--to", o.to, "var or scheme")->required()->check(CLI::IsMember({"var", "scheme"}));
  convert_cmd->add_option("TERM", o.term, "Term or @FILE")->required();
  bind(convert_cmd, &Runner::natded_convert);

  auto* recfun_cmd = app.add_subcommand("recfun", "Partial recursive programs");
  recfun_cmd->require_subcommand(1);
  auto add_mu = [&](CLI::App* cmd) {
    cmd->add_option("--mu", o.mu, "Minimized argument: last or first")->check(CLI::IsMember({"last", "first"}));
  };
  auto* eval_cmd = recfun_cmd->add_subcommand("eval", "Evaluate a program");
  eval_cmd->add_option("PROG", o.program, "Program or @FILE")->required();
  eval_cmd->add_option("ARGS", o.values, "Arguments");
  eval_cmd->add_option("--fuel", o.fuel, "Evaluation budget");
  add_mu(eval_cmd);
  bind(eval_cmd, &Runner::recfun_eval);
  auto* godel_cmd = recfun_cmd->add_subcommand("godel", "Print the number of a program");
  godel_cmd->add_option("PROG", o.program, "Program or @FILE")->required();
  bind(godel_cmd, &Runner::recfun_godel);
  auto* ungodel_cmd = recfun_cmd->add_subcommand("ungodel", "Print the program with a number");
  ungodel_cmd->add_option("CODE", o.program, "A natural number")->required();
  bind(ungodel_cmd, &Runner::recfun_ungodel);
  auto* diagonal_cmd = recfun_cmd->add_subcommand("diagonal", "Build k from a binary program h");
  diagonal_cmd->add_option("HPROG", o.program, "Program or @FILE")->required();
  diagonal_cmd->add_flag("--self-apply", o.self_apply, "Also evaluate k at its own number");
  diagonal_cmd->add_option("--fuel", o.fuel, "Evaluation budget");
  add_mu(diagonal_cmd);
  bind(diagonal_cmd, &Runner::recfun_diagonal);

  auto* nfa_cmd = app.add_subcommand("nfa", "Finite automata as rule systems");
  nfa_cmd->require_subcommand(1);
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("FILE", o.file, "Automaton file")->required();
    cmd->add_option("--state", o.state, "Start state")->required();
    cmd->add_option("--word", o.word, "Word, e.g. aab or a,b")->required();
  };
  auto* run_cmd = nfa_cmd->add_subcommand("run", "Is the word recognized in the state?");
  add_run_options(run_cmd);
  bind(run_cmd, &Runner::nfa_run);
  auto* derivations_cmd = nfa_cmd->add_subcommand("derivations", "All derivations reading the word");
  add_run_options(derivations_cmd);
  derivations_cmd->add_flag("--latex", o.latex, "Print the derivations as LaTeX");
  bind(derivations_cmd, &Runner::nfa_derivations);
  auto* rules_cmd = nfa_cmd->add_subcommand("rules", "Print the compiled rules and erasure table");
  rules_cmd->add_option("FILE", o.file, "Automaton file")->required();
  bind(rules_cmd, &Runner::nfa_rules);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace deriv::cli
