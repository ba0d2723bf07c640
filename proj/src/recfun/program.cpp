#include <cctype>
#include <charconv>

#include "core/cursor.hpp"
#include "deriv/error.hpp"
#include "deriv/recfun.hpp"

namespace deriv::recfun {

Program Program::zero(std::size_t n) {
  Program p;
  p.kind = Kind::Zero;
  p.n = n;
  return p;
}

Program Program::succ() {
  Program p;
  p.kind = Kind::Succ;
  return p;
}

Program Program::proj(std::size_t n, std::size_t i) {
  Program p;
  p.kind = Kind::Proj;
  p.n = n;
  p.i = i;
  return p;
}

Program Program::comp(Program f, std::vector<Program> gs) {
  Program p;
  p.kind = Kind::Comp;
  p.subs.reserve(gs.size() + 1);
  p.subs.push_back(std::move(f));
  for (auto& g : gs) p.subs.push_back(std::move(g));
  return p;
}

Program Program::rec(Program g, Program h) {
  Program p;
  p.kind = Kind::Rec;
  p.subs = {std::move(g), std::move(h)};
  return p;
}

Program Program::mu(Program f) {
  Program p;
  p.kind = Kind::Mu;
  p.subs = {std::move(f)};
  return p;
}

std::size_t size(const Program& p) {
  std::size_t s = 1;
  for (const auto& q : p.subs) s += size(q);
  return s;
}

namespace {

struct ArityChecker {
  Path path;
  std::optional<Rejection> failure;

  std::optional<std::size_t> fail(std::string reason) {
    failure = reject_at(path, RejectKind::IllFormed, std::move(reason));
    return std::nullopt;
  }

  std::optional<std::size_t> sub(const Program& p, std::size_t index) {
    path.push_back(index);
    auto a = run(p.subs[index]);
    if (a) path.pop_back();
    return a;
  }

  std::optional<std::size_t> run(const Program& p) {
    using K = Program::Kind;
    switch (p.kind) {
      case K::Zero: return p.n;
      case K::Succ: return 1;
      case K::Proj:
        if (p.i < 1 || p.i > p.n)
          return fail("proj^" + std::to_string(p.n) + "_" + std::to_string(p.i) + " needs 1 <= index <= arity");
        return p.n;
      case K::Comp: {
        if (p.subs.size() < 2) return fail("comp needs at least one inner program");
        auto f = sub(p, 0);
        if (!f) return std::nullopt;
        std::optional<std::size_t> m;
        for (std::size_t j = 1; j < p.subs.size(); ++j) {
          auto g = sub(p, j);
          if (!g) return std::nullopt;
          if (m && *g != *m)
            return fail("inner programs of comp have arities " + std::to_string(*m) + " and " + std::to_string(*g));
          m = g;
        }
        if (*f != p.subs.size() - 1)
          return fail("outer program of comp has arity " + std::to_string(*f) + " but receives " +
                      std::to_string(p.subs.size() - 1) + " arguments");
        return m;
      }
      case K::Rec: {
        if (p.subs.size() != 2) return fail("rec takes two programs");
        auto g = sub(p, 0);
        if (!g) return std::nullopt;
        auto h = sub(p, 1);
        if (!h) return std::nullopt;
        if (*h != *g + 2)
          return fail("rec step has arity " + std::to_string(*h) + ", expected " + std::to_string(*g + 2));
        return *g + 1;
      }
      case K::Mu: {
        if (p.subs.size() != 1) return fail("mu takes one program");
        auto f = sub(p, 0);
        if (!f) return std::nullopt;
        if (*f == 0) return fail("mu needs a program of arity at least 1");
        return *f - 1;
      }
    }
    return fail("unknown constructor");
  }
};

void print_into(const Program& p, std::string& out) {
  using K = Program::Kind;
  switch (p.kind) {
    case K::Zero: out += "zero^" + std::to_string(p.n); return;
    case K::Succ: out += "succ"; return;
    case K::Proj: out += "proj^" + std::to_string(p.n) + "_" + std::to_string(p.i); return;
    case K::Comp:
      out += "comp(";
      print_into(p.subs[0], out);
      for (std::size_t j = 1; j < p.subs.size(); ++j) {
        out += j == 1 ? "; " : ", ";
        print_into(p.subs[j], out);
      }
      out += ')';
      return;
    case K::Rec:
      out += "rec(";
      print_into(p.subs[0], out);
      out += ", ";
      print_into(p.subs[1], out);
      out += ')';
      return;
    case K::Mu:
      out += "mu(";
      print_into(p.subs[0], out);
      out += ')';
      return;
  }
}

using deriv::detail::Cursor;

std::size_t number(Cursor& in) {
  const std::size_t at = in.position();
  std::string digits = in.take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw SyntaxError(at, "expected a decimal number");
  return value;
}

Program parse_prog(Cursor& in) {
  const std::size_t at = in.position();
  if (in.accept_keyword("succ")) return Program::succ();
  if (in.accept_keyword("zero")) {
    in.expect("^");
    return Program::zero(number(in));
  }
  if (in.accept_keyword("proj")) {
    in.expect("^");
    const std::size_t n = number(in);
    in.expect("_");
    return Program::proj(n, number(in));
  }
  if (in.accept_keyword("comp")) {
    in.expect("(");
    Program f = parse_prog(in);
    in.expect(";");
    std::vector<Program> gs;
    do {
      gs.push_back(parse_prog(in));
    } while (in.accept(","));
    in.expect(")");
    return Program::comp(std::move(f), std::move(gs));
  }
  if (in.accept_keyword("rec")) {
    in.expect("(");
    Program g = parse_prog(in);
    in.expect(",");
    Program h = parse_prog(in);
    in.expect(")");
    return Program::rec(std::move(g), std::move(h));
  }
  if (in.accept_keyword("mu")) {
    in.expect("(");
    Program f = parse_prog(in);
    in.expect(")");
    return Program::mu(std::move(f));
  }
  throw SyntaxError(at, "expected a program");
}

}  // namespace

Outcome<std::size_t> arity_of(const Program& p) {
  ArityChecker checker;
  auto a = checker.run(p);
  if (!a) return *checker.failure;
  return *a;
}

std::string print_program(const Program& p) {
  std::string out;
  print_into(p, out);
  return out;
}

Program parse_program(const std::string& text) {
  Cursor in(text);
  Program p = parse_prog(in);
  in.expect_end();
  return p;
}

NameTree to_name_tree(const Program& p) {
  using K = Program::Kind;
  std::string name;
  switch (p.kind) {
    case K::Zero: name = "zero^" + std::to_string(p.n); break;
    case K::Succ: name = "succ"; break;
    case K::Proj: name = "proj^" + std::to_string(p.n) + "_" + std::to_string(p.i); break;
    case K::Comp: name = "comp"; break;
    case K::Rec: name = "rec"; break;
    case K::Mu: name = "mu"; break;
  }
  NameTree t{name};
  for (const auto& q : p.subs) t.children.push_back(to_name_tree(q));
  return t;
}

Program from_name_tree(const NameTree& t) {
  std::vector<Program> subs;
  for (const auto& c : t.children) subs.push_back(from_name_tree(c));
  auto want = [&](std::size_t count) {
    if (subs.size() != count)
      throw Error(ErrorKind::IllFormed, t.label + " takes " + std::to_string(count) + " arguments, got " +
                                            std::to_string(subs.size()));
  };
  if (t.label == "comp") {
    if (subs.size() < 2) throw Error(ErrorKind::IllFormed, "comp takes at least two arguments");
    Program f = std::move(subs.front());
    subs.erase(subs.begin());
    return Program::comp(std::move(f), std::move(subs));
  }
  if (t.label == "rec") {
    want(2);
    return Program::rec(std::move(subs[0]), std::move(subs[1]));
  }
  if (t.label == "mu") {
    want(1);
    return Program::mu(std::move(subs[0]));
  }
  want(0);
  // Leaves share the program grammar.
  try {
    return parse_program(t.label);
  } catch (const SyntaxError&) {
    throw Error(ErrorKind::IllFormed, "'" + t.label + "' names no program constructor");
  }
}

Program diagonal(const Program& h) {
  auto a = arity_of(h);
  if (!a || a.value() != 2)
    throw Error(ErrorKind::ArityMismatch, "diagonal needs a binary program, got " +
                                              (a ? "arity " + std::to_string(a.value()) : a.rejection().describe()));
  return Program::comp(Program::mu(Program::proj(2, 1)),
                       {Program::comp(h, {Program::proj(1, 1), Program::proj(1, 1)})});
}

}  // namespace deriv::recfun
