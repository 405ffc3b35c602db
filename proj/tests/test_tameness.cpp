#include "doctest.h"
#include "oracles.hpp"
#include "tame/tameness.hpp"

using namespace tame;
using namespace tame::tameness;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal::make(n, std::move(ms));
}

MonomialIdeal squarefree(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<Monomial> ms;
  for (VertexSet s : sets) ms.push_back(Monomial::from_set(n, s));
  return MonomialIdeal::make(n, std::move(ms));
}

void check_equivalence(const MonomialIdeal& i) {
  const auto structural = is_tame_squarefree(i);
  const auto general = is_tame_general(i);
  REQUIRE(structural.tame == general.tame);
  CHECK(facets_pairwise_cover(stanley_reisner_complex(i)) == structural.tame);
  if (structural.tame) CHECK(i.min_degree() == i.max_degree());
  if (i.min_degree() == i.max_degree()) {
    const Clutter c = ideal_to_clutter(i);
    CHECK(complete_d_partite(c).parts.has_value() == structural.tame);
  }
}

}  // namespace

TEST_CASE("(x, y*z) is not tame and the product ideal is") {
  const auto i = ideal(3, {{1, 0, 0}, {0, 1, 1}});
  const auto s = is_tame_squarefree(i);
  CHECK_FALSE(s.tame);
  REQUIRE(s.intersecting_primes.has_value());
  CHECK(s.intersecting_primes->first == vset::of({0, 1}));
  CHECK(s.intersecting_primes->second == vset::of({0, 2}));
  const auto g = is_tame_general(i);
  CHECK_FALSE(g.tame);
  REQUIRE(g.failing_chart.has_value());
  CHECK(g.charts[*g.failing_chart].center == 0);
  CHECK(g.charts[*g.failing_chart].minimal.size() == 4);

  const auto product = ideal(3, {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 1, 1}, {0, 2, 2}});
  const auto r = decide(product);
  CHECK(r.tame);
  CHECK(r.method == Method::Charts);
  CHECK(r.charts.size() == 5);
}

TEST_CASE("squarefree tame ideals factor into disjoint primes") {
  const auto i = squarefree(5, {vset::of({0, 2}), vset::of({0, 3}), vset::of({1, 2}), vset::of({1, 3})});
  const auto r = is_tame_squarefree(i);
  CHECK(r.tame);
  CHECK(r.primes == std::vector<VertexSet>{vset::of({0, 1}), vset::of({2, 3})});
  CHECK(r.isolated == vset::of({4}));
}

TEST_CASE("structural and chart verdicts agree on all clutters with n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& a : oracle::antichains(n, 16)) check_equivalence(squarefree(n, a));
  }
}

TEST_CASE("structural and chart verdicts agree on random squarefree ideals") {
  std::mt19937 rng(41);
  for (int round = 0; round < 150; ++round) check_equivalence(oracle::random_squarefree(rng, 2 + rng() % 5, 6));
}

TEST_CASE("partition recovery") {
  const auto c = oracle::complete_partite({2, 1, 3}, 1);
  const auto check = complete_d_partite(c);
  REQUIRE(check.parts.has_value());
  CHECK(*check.parts == std::vector<VertexSet>{vset::of({0, 1}), vset::of({2}), vset::of({3, 4, 5})});

  const Clutter mixed(3, {vset::of({0}), vset::of({1, 2})});
  CHECK(complete_d_partite(mixed).failed_check.rfind("(a)", 0) == 0);

  // Path a-b-c-d: not complete bipartite, a missing edge is found.
  const Clutter path(4, {vset::of({0, 1}), vset::of({1, 2}), vset::of({2, 3})});
  const auto p = complete_d_partite(path);
  CHECK_FALSE(p.parts.has_value());

  // Complete bipartite minus one edge: the counterexample is the missing edge.
  const Clutter k22(4, {vset::of({0, 2}), vset::of({0, 3}), vset::of({1, 2})});
  const auto q = complete_d_partite(k22);
  CHECK(q.failed_check.rfind("(d)", 0) == 0);
  REQUIRE(q.counterexample.has_value());
  CHECK(*q.counterexample == vset::of({1, 3}));
}

TEST_CASE("complete d-partite iff tame for uniform clutters") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::antichains(n, 6)) {
      const Clutter c(n, a);
      if (!c.is_uniform() || c.isolated() != 0) continue;
      REQUIRE(complete_d_partite(c).parts.has_value() == is_tame_squarefree(clutter_to_ideal(c)).tame);
    }
  }
}

TEST_CASE("degree <= 2 normal forms") {
  const auto sq = classify_deg2(ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  REQUIRE(std::holds_alternative<PrimeSquare>(sq));
  CHECK(std::get<PrimeSquare>(sq).f == vset::of({0, 1}));

  const auto star = classify_deg2(ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  REQUIRE(std::holds_alternative<LoopedStar>(star));
  CHECK(std::get<LoopedStar>(star).center == 0);

  const auto lin = classify_deg2(ideal(3, {{1, 0, 0}, {0, 0, 1}}));
  REQUIRE(std::holds_alternative<LinearPrime>(lin));

  const auto bip = classify_deg2(ideal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
  REQUIRE(std::holds_alternative<BipartiteProduct>(bip));

  CHECK_FALSE(is_tame(classify_deg2(ideal(3, {{1, 0, 0}, {0, 1, 1}}))));
  CHECK_FALSE(is_tame(classify_deg2(ideal(2, {{2, 0}, {0, 2}}))));
  CHECK_THROWS_AS(classify_deg2(ideal(2, {{3, 0}})), Error);
}

TEST_CASE("classify_deg2 agrees with charts on looped graphs with n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const oracle::LoopedGraphs graphs(n);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << graphs.slots.size()); ++mask) {
      const auto i = graphs.ideal(mask);
      const auto c = classify_deg2(i);
      REQUIRE(is_tame(c) == is_tame_general(i).tame);
      if (is_tame(c)) CHECK(reconstruct(c, n) == i);
    }
  }
}

TEST_CASE("classify_deg2 agrees with charts on mixed degree ideals") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const oracle::LoopedGraphs graphs(n);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << graphs.slots.size()); ++mask) {
      for (VertexSet lin = 1; lin < (VertexSet{1} << n); ++lin) {
        std::vector<Monomial> gens;
        for (std::size_t v : vset::members(lin)) gens.push_back(Monomial::variable(n, v));
        const auto quads = graphs.ideal(mask);
        for (const auto& g : quads.generators()) gens.push_back(g);
        const auto i = MonomialIdeal::make(n, gens);
        REQUIRE(is_tame(classify_deg2(i)) == is_tame_general(i).tame);
      }
    }
  }
}

TEST_CASE("polarization reduction") {
  // (x1^2, x1 x2, x2^2) is tame but its polarization is not.
  CHECK_FALSE(tame_via_polarization(ideal(2, {{2, 0}, {1, 1}, {0, 2}})).has_value());
  // x1 (x1, x2) = (x1^2, x1 x2): polarization (x1 y1, x1 x2) = x1 (y1, x2) is tame.
  const auto f = tame_via_polarization(ideal(2, {{2, 0}, {1, 1}}));
  REQUIRE(f.has_value());
  CHECK(f->factor == Monomial({1, 0}));
  CHECK(f->quotient == ideal(2, {{1, 0}, {0, 1}}));

  std::mt19937 rng(43);
  int successes = 0;
  for (int round = 0; round < 300; ++round) {
    const auto i = oracle::random_ideal(rng, 1 + rng() % 3, 3, 3);
    if (auto r = tame_via_polarization(i)) {
      ++successes;
      REQUIRE(is_tame_general(i).tame);
      CHECK(i == r->quotient.scaled(r->factor));
    }
  }
  CHECK(successes > 0);
}

TEST_CASE("decide selects the cheapest method") {
  CHECK(decide(ideal(2, {{1, 1}})).method == Method::SquarefreeStructural);
  CHECK(decide(ideal(2, {{2, 0}, {1, 1}})).method == Method::Degree2);
  CHECK(decide(ideal(2, {{3, 0}, {1, 1}})).method == Method::Charts);
  CHECK(decide(ideal(2, {{1, 1}}), {true, {}}).method == Method::Charts);
}
