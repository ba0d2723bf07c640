#include "doctest.h"

#include "deriv/engine.hpp"
#include "deriv/even.hpp"

using namespace deriv;

namespace {

FiniteSet<Natural> nats(std::initializer_list<int> xs) {
  FiniteSet<Natural> s;
  for (int x : xs) s.insert(Natural(x));
  return s;
}

ElemTree<Natural> elem_chain(std::initializer_list<int> leaf_to_root) {
  std::optional<ElemTree<Natural>> t;
  for (int x : leaf_to_root) {
    ElemTree<Natural> node{Natural(x)};
    if (t) node.children.push_back(std::move(*t));
    t = std::move(node);
  }
  return *t;
}

FullTree<Natural> full_chain(std::initializer_list<std::pair<int, const char*>> leaf_to_root) {
  std::optional<FullTree<Natural>> t;
  for (auto [x, name] : leaf_to_root) {
    FullTree<Natural> node{FullLabel<Natural>{Natural(x), name}};
    if (t) node.children.push_back(std::move(*t));
    t = std::move(node);
  }
  return *t;
}

}  // namespace

TEST_CASE("apply_rule on the even-number rules") {
  auto sys = even_system();
  const Rule<Natural>& f1 = *sys.find("f1");
  const Rule<Natural>& f2 = *sys.find("f2");
  std::vector<Natural> four{4};
  CHECK(f2.apply(four) == Natural(6));
  CHECK(f1.apply(std::span<const Natural>{}) == Natural(0));
  std::vector<Natural> two_args{1, 2};
  CHECK_THROWS_AS(f2.apply(two_args), Error);
  try {
    f2.apply(two_args);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArityMismatch);
  }
}

TEST_CASE("rule systems reject duplicate names") {
  std::vector<Rule<Natural>> rules;
  rules.emplace_back("f", 0, [](std::span<const Natural>) -> std::optional<Natural> { return Natural(0); });
  rules.emplace_back("f", 0, [](std::span<const Natural>) -> std::optional<Natural> { return Natural(1); });
  CHECK_THROWS_AS(RuleSystem<Natural>("n", std::move(rules)), Error);
  CHECK_THROWS_AS(Rule<Natural>("bad name", 0, nullptr), Error);
  CHECK_THROWS_AS(Rule<Natural>("f(x)", 0, nullptr), Error);
}

TEST_CASE("step reproduces the worked values") {
  auto sys = even_system();
  CHECK(step(sys, nats({4, 5, 6})) == nats({0, 6, 7, 8}));
  CHECK(step(sys, nats({})) == nats({0}));
  CHECK(step(sys, nats({0})) == nats({0, 2}));
}

TEST_CASE("iterate") {
  auto sys = even_system();
  CHECK(iterate(sys, 0).set.empty());
  CHECK(iterate(sys, 1).set == nats({0}));
  CHECK(iterate(sys, 2).set == nats({0, 2}));
  CHECK(iterate(sys, 3).set == nats({0, 2, 4}));
  CHECK_FALSE(iterate(sys, 3).reached_fixed_point());
  CHECK(render_set(iterate(sys, 3).set) == "{0, 2, 4}");
  CHECK(render_set(FiniteSet<Natural>{}) == "{}");

  SUBCASE("fixed point of a finite system") {
    std::vector<Rule<Natural>> rules;
    rules.emplace_back("z", 0, [](std::span<const Natural>) -> std::optional<Natural> { return Natural(0); });
    rules.emplace_back("s", 1, [](std::span<const Natural> a) -> std::optional<Natural> {
      if (a[0] >= 2) return std::nullopt;
      return a[0] + 1;
    });
    RuleSystem<Natural> bounded("n", std::move(rules));
    auto r = iterate(bounded, 10);
    CHECK(r.set == nats({0, 1, 2}));
    REQUIRE(r.reached_fixed_point());
    CHECK(*r.fixed_point_at == 3);
  }

  SUBCASE("limits") {
    Limits tight;
    tight.max_cardinality = 3;
    CHECK(iterate(sys, 3, tight).set.size() == 3);
    CHECK_THROWS_AS(iterate(sys, 4, tight), Error);
    tight.max_depth = 2;
    CHECK_THROWS_AS(iterate(sys, 3, tight), Error);
  }
}

TEST_CASE("member") {
  auto sys = even_system();
  auto found = member(sys, Natural(4), 3);
  REQUIRE(found.found());
  CHECK(*found.witness == full_chain({{0, "f1"}, {2, "f2"}, {4, "f2"}}));
  CHECK(check_full_tree(sys, *found.witness).ok());

  CHECK_FALSE(member(sys, Natural(5), 10).found());
  // F^2(empty) = {0, 2} by hand.
  CHECK_FALSE(member(sys, Natural(4), 2).found());
  CHECK(member(sys, Natural(0), 1).found());
  CHECK_THROWS_AS(member(sys, Natural(0), 0), Error);
}

TEST_CASE("check_elem_tree") {
  auto sys = even_system();
  CHECK(check_elem_tree(sys, elem_chain({0, 2, 4})).ok());
  CHECK(check_elem_tree(sys, elem_chain({0})).ok());
  auto bad = check_elem_tree(sys, elem_chain({0, 3}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.rejection().path == Path{});
  CHECK(bad.rejection().kind == RejectKind::NoRule);

  auto deep = check_elem_tree(sys, elem_chain({1, 3, 5}));
  REQUIRE_FALSE(deep.ok());
  CHECK(deep.rejection().path == Path{0, 0});
}

TEST_CASE("check_full_tree") {
  auto sys = even_system();
  CHECK(check_full_tree(sys, full_chain({{0, "f1"}, {2, "f2"}, {4, "f2"}})).ok());

  auto arity = check_full_tree(sys, full_chain({{0, "f2"}}));
  REQUIRE_FALSE(arity.ok());
  CHECK(arity.rejection().kind == RejectKind::ArityMismatch);
  CHECK(arity.rejection().path == Path{});

  // f2(0) = 2, not 3.
  auto wrong = check_full_tree(sys, full_chain({{0, "f1"}, {3, "f2"}}));
  REQUIRE_FALSE(wrong.ok());
  CHECK(wrong.rejection().kind == RejectKind::WrongConclusion);
  CHECK(wrong.rejection().path == Path{});

  auto unknown = check_full_tree(sys, full_chain({{0, "g"}, {2, "f2"}}));
  REQUIRE_FALSE(unknown.ok());
  CHECK(unknown.rejection().kind == RejectKind::UnknownRuleName);
  CHECK(unknown.rejection().path == Path{0});
}

TEST_CASE("infer_conclusion") {
  auto sys = even_system();
  CHECK(infer_conclusion(sys, parse_name_tree("f2(f2(f1))")).value() == Natural(4));
  CHECK(infer_conclusion(sys, parse_name_tree("f1")).value() == Natural(0));
  CHECK(infer_conclusion(sys, parse_name_tree("f2(f2(f2(f1)))")).value() == Natural(6));

  auto unknown = infer_conclusion(sys, parse_name_tree("f2(g)"));
  REQUIRE_FALSE(unknown.ok());
  CHECK(unknown.rejection().kind == RejectKind::UnknownRuleName);
  CHECK(unknown.rejection().path == Path{0});

  auto arity = infer_conclusion(sys, parse_name_tree("f1(f1)"));
  REQUIRE_FALSE(arity.ok());
  CHECK(arity.rejection().kind == RejectKind::ArityMismatch);

  std::vector<Rule<Natural>> rules;
  rules.emplace_back("one", 0, [](std::span<const Natural>) -> std::optional<Natural> { return Natural(1); });
  rules.emplace_back("half", 1, [](std::span<const Natural> a) -> std::optional<Natural> {
    if (a[0] % 2 != 0) return std::nullopt;
    return a[0] / 2;
  });
  RuleSystem<Natural> partial("n", std::move(rules));
  auto undefined = infer_conclusion(partial, parse_name_tree("half(one)"));
  REQUIRE_FALSE(undefined.ok());
  CHECK(undefined.rejection().kind == RejectKind::RuleUndefined);
  CHECK(undefined.rejection().path == Path{});
}

TEST_CASE("erasure keeps shape and projects labels") {
  auto full = full_chain({{0, "f1"}, {2, "f2"}, {4, "f2"}});
  CHECK(erase_names(full) == elem_chain({0, 2, 4}));
  CHECK(erase_elements(full) == parse_name_tree("f2(f2(f1))"));
  FullTree<Natural> single{FullLabel<Natural>{Natural(0), "f1"}};
  CHECK(erase_names(single) == ElemTree<Natural>{Natural(0)});
  CHECK(erase_elements(single) == NameTree{"f1"});
}

TEST_CASE("linear form of name trees") {
  NameTree chain{"f2", {NameTree{"f2", {NameTree{"f1"}}}}};
  CHECK(parse_name_tree("f2(f2(f1))") == chain);
  CHECK(print_name_tree(chain) == "f2(f2(f1))");
  CHECK(parse_name_tree("f1") == NameTree{"f1"});
  CHECK(parse_name_tree("f1()") == NameTree{"f1"});
  CHECK(print_name_tree(NameTree{"f1"}) == "f1");
  CHECK(parse_name_tree("  g ( a ,b( c ) )  ") == parse_name_tree("g(a, b(c))"));
  CHECK(print_name_tree(parse_name_tree("g(a,b(c))")) == "g(a, b(c))");

  try {
    parse_name_tree("f2(f2(f1)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_name_tree(""), SyntaxError);
  CHECK_THROWS_AS(parse_name_tree("f(,)"), SyntaxError);
  CHECK_THROWS_AS(parse_name_tree("f g"), SyntaxError);
}

TEST_CASE("latex layout") {
  DisplayTree t{{"4", "f2"}, {DisplayTree{{"2", "f2"}, {DisplayTree{{"0", "f1"}}}}}};
  const std::string out = render_latex(t);
  CHECK(out.find("{4}") != std::string::npos);
  CHECK(out.find("{f1}") != std::string::npos);
  CHECK(out.rfind("\\irule{", 0) == 0);
}
