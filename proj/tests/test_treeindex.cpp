#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpspace/treeindex.hpp"

using namespace lpspace;

TEST_CASE("dyadic strings round-trip through the index bijection") {
  CHECK(DyadicString::from_index(1).to_string() == "1");
  CHECK(DyadicString::from_index(6).to_string() == "110");
  CHECK(DyadicString::from_string("101").index() == 5);
  for (std::uint64_t n = 1; n <= 64; ++n)
    CHECK(DyadicString::from_index(n).index() == n);
  CHECK_THROWS_AS(DyadicString::from_string("102"), DomainError);
  CHECK_THROWS_AS(DyadicString::from_string("01").index(), DomainError);
  CHECK_THROWS_AS(DyadicString::from_index(0), DomainError);
  CHECK(concat(DyadicString::from_string("10"), DyadicString::from_string("11")).to_string() ==
        "1011");
  CHECK(strict_prefix(DyadicString::from_string("10"), DyadicString::from_string("101")));
  CHECK_FALSE(strict_prefix(DyadicString::from_string("10"), DyadicString::from_string("10")));
  CHECK_FALSE(strict_prefix(DyadicString::from_string("11"), DyadicString::from_string("101")));
}

TEST_CASE("level function") {
  CHECK(lambda_of(1) == 0);
  CHECK(lambda_of(2) == 1);
  CHECK(lambda_of(3) == 1);
  CHECK(lambda_of(5) == 2);
  CHECK(lambda_of(1024) == 10);
  CHECK(lambda_of(1023) == 9);
  CHECK_THROWS_AS(lambda_of(0), DomainError);
}

TEST_CASE("prefix order and branches") {
  CHECK(dotprec(1, 2));
  CHECK(dotprec(1, 3));
  CHECK(dotprec(3, 6));
  CHECK(dotprec(3, 7));
  CHECK_FALSE(dotprec(2, 6));  // 6 = 110 extends 11 = 3, not 10 = 2
  CHECK_FALSE(dotprec(3, 3));
  CHECK_FALSE(dotprec(2, 3));  // same level
  CHECK(dotpreceq(3, 3));
  CHECK(branch(6) == std::set<std::uint64_t>{1, 3, 6});
  CHECK(branch(1) == std::set<std::uint64_t>{1});
  // branch agrees with the dyadic-string prefix order
  for (std::uint64_t n = 1; n <= 32; ++n) {
    const DyadicString dn = DyadicString::from_index(n);
    for (std::uint64_t m = 1; m <= 32; ++m) {
      const bool via_strings = strict_prefix(DyadicString::from_index(m), dn);
      CHECK(dotprec(m, n) == via_strings);
    }
  }
}

TEST_CASE("level, left, and right sets") {
  CHECK(level_set(5) == std::set<std::uint64_t>{4, 5, 6, 7});
  CHECK(tree_upto(5) == std::set<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(left_set(5) == std::set<std::uint64_t>{1, 2, 4, 5});
  CHECK(right_set(5) == std::set<std::uint64_t>{1, 2, 3, 5, 6, 7});
  // B_n = L_n intersect R_n intersect T_n
  for (std::uint64_t n = 1; n <= 40; ++n) {
    std::set<std::uint64_t> expect;
    const std::set<std::uint64_t> l = left_set(n), r = right_set(n), t = tree_upto(n);
    for (std::uint64_t m : l)
      if (r.count(m) && t.count(m)) expect.insert(m);
    CHECK(branch(n) == expect);
  }
}

TEST_CASE("ordinal index of finite relations") {
  // A chain 1 <| 2 <| ... <| n empties in n steps.
  for (std::uint64_t n : {1, 2, 5, 10}) {
    FiniteRelation r;
    for (std::uint64_t v = 1; v <= n; ++v) r.vertices.insert(v);
    for (std::uint64_t v = 1; v < n; ++v) r.edges.insert({v, v + 1});
    const HIndexResult res = h_index(r);
    CHECK(res.h == n);
    CHECK(res.well_founded());
    CHECK(res.history.size() == n + 1);
  }
  // A self-loop is stable from the start.
  FiniteRelation loop;
  loop.vertices = {1};
  loop.edges = {{1, 1}};
  const HIndexResult res = h_index(loop);
  CHECK(res.h == 0);
  CHECK_FALSE(res.well_founded());
  CHECK(res.stable == std::set<std::uint64_t>{1});
  // Bad edge rejected.
  FiniteRelation bad;
  bad.vertices = {1};
  bad.edges = {{1, 2}};
  CHECK_THROWS_AS(h_index(bad), DomainError);
}

TEST_CASE("relation-preserving maps nest the H stages") {
  FiniteRelation small;
  small.vertices = {1, 2};
  small.edges = {{1, 2}};
  FiniteRelation big;
  big.vertices = {10, 20, 30};
  big.edges = {{10, 20}, {20, 30}};
  const RelationMapReport good = relation_map_check(small, big, {{1, 10}, {2, 20}});
  CHECK(good.preserves);
  CHECK(good.levels_nested);
  CHECK(good.h_source <= good.h_target);
  // A non-preserving map is flagged.
  const RelationMapReport badmap = relation_map_check(small, big, {{1, 20}, {2, 10}});
  CHECK_FALSE(badmap.preserves);
  CHECK_THROWS_AS(relation_map_check(small, big, {{1, 10}}), DomainError);
}

TEST_CASE("tree embedding into dyadic strings") {
  CfreTree single;
  single.nodes = {7};
  auto code = embed_cfre(single);
  CHECK(code.at(7).to_string() == "11");

  CfreTree chain;  // 0 -> 1 -> 2
  chain.nodes = {0, 1, 2};
  chain.parent = {{1, 0}, {2, 1}};
  code = embed_cfre(chain);
  CHECK(code.at(0).to_string() == "11");
  CHECK(code.at(1).to_string() == "111");
  CHECK(code.at(2).to_string() == "1111");

  CfreTree fork;  // root 0 with children 1, 2; 2 has child 3; extra root 9
  fork.nodes = {0, 1, 2, 3, 9};
  fork.parent = {{1, 0}, {2, 0}, {3, 2}};
  code = embed_cfre(fork);
  CHECK(code.size() == 5);
  // Injective codes, ancestor iff strict prefix.
  std::set<std::string> seen;
  for (const auto& [n, c] : code) CHECK(seen.insert(c.to_string()).second);
  for (std::uint64_t a : fork.nodes)
    for (std::uint64_t d : fork.nodes)
      if (a != d) CHECK(fork.strict_ancestor(a, d) == strict_prefix(code.at(a), code.at(d)));
  // Cyclic parent links are rejected.
  CfreTree cyc;
  cyc.nodes = {0, 1};
  cyc.parent = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(embed_cfre(cyc), DomainError);
}

TEST_CASE("Cantor normal forms") {
  OrdinalCNF zero;
  CHECK(zero.is_zero());
  CHECK(OrdinalCNF::finite(3).is_successor());
  CHECK(OrdinalCNF::finite(3).predecessor().to_string() == "2");
  CHECK(OrdinalCNF::finite(1).predecessor().is_zero());

  OrdinalCNF omega;  // w
  omega.terms = {{1, 1}};
  CHECK(omega.is_limit());
  CHECK(omega.fundamental(4).to_string() == "4");

  OrdinalCNF a;  // w^2*2 + w + 3
  a.terms = {{2, 2}, {1, 1}, {0, 3}};
  CHECK_NOTHROW(a.validate());
  CHECK(a.to_string() == "w^2*2 + w + 3");
  CHECK(a.predecessor().to_string() == "w^2*2 + w + 2");

  OrdinalCNF b;  // w^2
  b.terms = {{2, 1}};
  CHECK(b.fundamental(3).to_string() == "w*3");

  OrdinalCNF bad;
  bad.terms = {{1, 1}, {2, 1}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(omega.predecessor(), DomainError);
  CHECK_THROWS_AS(OrdinalCNF::finite(2).fundamental(1), DomainError);
}

TEST_CASE("T_alpha approximants and tree rank") {
  CHECK(build_T_alpha(OrdinalCNF{}, 4, 4).nodes.empty());
  // Finite n gives a chain of n nodes, rank n, not truncated.
  for (std::uint64_t n : {1, 3, 7}) {
    const CfreTree t = build_T_alpha(OrdinalCNF::finite(n), 8, 4);
    CHECK(t.nodes.size() == n);
    CHECK_FALSE(t.truncated);
    CHECK(t.roots().size() == 1);
    CHECK(tree_rank(t) == n);
  }
  // T_omega truncated at width 4: disjoint chains of lengths 1..4.
  OrdinalCNF omega;
  omega.terms = {{1, 1}};
  const CfreTree tw = build_T_alpha(omega, 8, 4);
  CHECK(tw.truncated);
  CHECK(tw.roots().size() == 4);
  CHECK(tw.nodes.size() == 1 + 2 + 3 + 4);
  CHECK(tree_rank(tw) == 4);
  // omega + 1 stacks a root on top: rank 5.
  OrdinalCNF omega1;
  omega1.terms = {{1, 1}, {0, 1}};
  const CfreTree tw1 = build_T_alpha(omega1, 8, 4);
  CHECK(tw1.roots().size() == 1);
  CHECK(tree_rank(tw1) == 5);
  CHECK_THROWS_AS(build_T_alpha(omega, 0, 4), DomainError);
}
