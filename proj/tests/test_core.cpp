#include "doctest.h"
#include "oracles.hpp"
#include "tame/core.hpp"

using namespace tame;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(mono(std::move(g)));
  return MonomialIdeal::make(n, std::move(ms));
}

MonomialIdeal squarefree(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<Monomial> ms;
  for (VertexSet s : sets) ms.push_back(Monomial::from_set(n, s));
  return MonomialIdeal::make(n, std::move(ms));
}

}  // namespace

TEST_CASE("vertex sets order lexicographically on member sequences") {
  CHECK(vset::lex_less(vset::of({0, 2}), vset::of({0, 3})));
  CHECK(vset::lex_less(vset::of({0, 3}), vset::of({1, 2})));
  CHECK(vset::lex_less(vset::of({0}), vset::of({0, 1})));
  CHECK_FALSE(vset::lex_less(vset::of({1, 2}), vset::of({1, 2})));
  std::vector<VertexSet> sets{vset::of({1, 2}), vset::of({0, 3}), vset::of({0, 2}), vset::of({0, 3})};
  vset::sort_unique(sets);
  CHECK(sets == std::vector<VertexSet>{vset::of({0, 2}), vset::of({0, 3}), vset::of({1, 2})});
  CHECK(vset::minimal_elements({vset::of({0, 1}), vset::of({0}), vset::of({2, 3}), vset::of({1, 2, 3})}) ==
        std::vector<VertexSet>{vset::of({0}), vset::of({2, 3})});
}

TEST_CASE("monomial arithmetic") {
  const auto a = mono({2, 0, 1});
  const auto b = mono({1, 0, 0});
  CHECK(a.degree() == 3);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.quotient(b) == mono({1, 0, 1}));
  CHECK(a * b == mono({3, 0, 1}));
  CHECK(a.support() == vset::of({0, 2}));
  CHECK_FALSE(a.is_squarefree());
  CHECK(Monomial::from_set(3, vset::of({0, 2})) == mono({1, 0, 1}));
  CHECK_THROWS_AS(mono({-1, 0}), Error);
}

TEST_CASE("ideal construction minimalizes and sorts") {
  const auto i = ideal(2, {{0, 2}, {1, 1}, {2, 0}, {2, 1}, {1, 1}});
  REQUIRE(i.size() == 3);
  CHECK(i.generators()[0] == mono({2, 0}));
  CHECK(i.generators()[1] == mono({1, 1}));
  CHECK(i.generators()[2] == mono({0, 2}));
  CHECK(i.contains(mono({3, 5})));
  CHECK_FALSE(i.contains(mono({0, 1})));
  CHECK(i.index_of(mono({1, 1})) == 1);
  CHECK_FALSE(i.index_of(mono({2, 1})).has_value());
}

TEST_CASE("ideal construction errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error");
    return ErrorCode::Unsupported;
  };
  CHECK(code([] { MonomialIdeal::make(2, {}); }) == ErrorCode::EmptyGeneratorSet);
  CHECK(code([] { ideal(2, {{1, 0, 0}}); }) == ErrorCode::LengthMismatch);
  CHECK(code([] { ideal(2, {{0, 0}, {1, 0}}); }) == ErrorCode::UnitIdeal);
  CHECK(code([] { Clutter(3, {vset::of({0}), vset::of({0, 1})}); }) == ErrorCode::InvalidClutter);
  CHECK(code([] { Clutter(2, {vset::of({0, 3})}); }) == ErrorCode::InvalidClutter);
  CHECK(code([] { Clutter(2, {0}); }) == ErrorCode::InvalidClutter);
  CHECK(code([] { ideal_to_clutter(ideal(2, {{2, 0}})); }) == ErrorCode::NotSquarefree);
  CHECK(code([] { minimal_primes(ideal(2, {{1, 1}, {0, 3}})); }) == ErrorCode::NotSquarefree);
}

TEST_CASE("ideal sum and product") {
  const auto x = ideal(3, {{1, 0, 0}});
  const auto yz = ideal(3, {{0, 1, 1}});
  const auto sum = x + yz;
  CHECK(sum.size() == 2);
  const auto xy = ideal(3, {{1, 0, 0}, {0, 1, 0}});
  const auto xz = ideal(3, {{1, 0, 0}, {0, 0, 1}});
  const auto product = sum * xy * xz;
  CHECK(product == ideal(3, {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 1, 1}, {0, 2, 2}}));
  CHECK(x.scaled(mono({0, 2, 0})) == ideal(3, {{1, 2, 0}}));
}

TEST_CASE("clutter neighborhoods and isolated vertices") {
  const Clutter c(5, {vset::of({0, 2}), vset::of({0, 3}), vset::of({1, 2}), vset::of({1, 3})});
  CHECK(c.isolated() == vset::of({4}));
  CHECK(c.is_uniform());
  CHECK(c.open_neighborhood(vset::of({0})) == vset::of({2, 3}));
  CHECK(c.open_neighborhood(vset::of({2})) == vset::of({0, 1}));
  CHECK(c.index_of(vset::of({1, 2})) == 2);
}

TEST_CASE("minimal transversals agree with subset enumeration for n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::antichains(n, n <= 4 ? 16 : 6)) {
      auto got = minimal_transversals(a);
      auto want = oracle::transversals(n, a);
      vset::sort_unique(want);
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("minimal primes intersect back to the ideal and form an antichain of transversals") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::antichains(n, 6)) {
      const auto i = squarefree(n, a);
      const auto primes = minimal_primes(i);
      for (VertexSet p : primes) {
        CHECK(oracle::meets_all(p, a));
        for (VertexSet q : primes) CHECK((p == q || !vset::is_subset(p, q)));
      }
      for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        const Monomial m = Monomial::from_set(n, s);
        REQUIRE(i.contains(m) == oracle::in_prime_intersection(m, primes));
      }
    }
  }
}

TEST_CASE("ideal and clutter round trip") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& a : oracle::antichains(n, 16)) {
      const Clutter c(n, a);
      CHECK(ideal_to_clutter(clutter_to_ideal(c)) == c);
      const auto i = squarefree(n, a);
      CHECK(clutter_to_ideal(ideal_to_clutter(i)) == i);
    }
  }
}

TEST_CASE("Stanley-Reisner complex") {
  const auto i = squarefree(4, {vset::of({0, 2}), vset::of({0, 3}), vset::of({1, 2}), vset::of({1, 3})});
  const auto complex = stanley_reisner_complex(i);
  CHECK(complex.facets == std::vector<VertexSet>{vset::of({2, 3}), vset::of({0, 1})});
  CHECK(stanley_reisner_ideal(complex) == i);

  // A linear generator leaves its vertex in no facet.
  const auto lin = squarefree(3, {vset::of({0}), vset::of({1, 2})});
  const auto lc = stanley_reisner_complex(lin);
  for (VertexSet f : lc.facets) CHECK_FALSE(vset::contains(f, 0));
  CHECK(stanley_reisner_ideal(lc) == lin);

  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& a : oracle::antichains(n, 16)) {
      const auto sq = squarefree(n, a);
      REQUIRE(stanley_reisner_ideal(stanley_reisner_complex(sq)) == sq);
    }
  }
}

TEST_CASE("polarization of (x1^2, x1 x2, x2^2)") {
  const auto i = ideal(2, {{2, 0}, {1, 1}, {0, 2}});
  const auto p = polarize(i);
  CHECK(p.source_ambient == 2);
  CHECK(p.ideal.ambient() == 4);
  CHECK(p.var_map == std::vector<std::pair<std::size_t, int>>{{0, 2}, {1, 2}});
  CHECK(p.ideal == ideal(4, {{1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, 1}}));
}

TEST_CASE("polarization invariants") {
  std::mt19937 rng(7);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 4;
    const auto i = oracle::random_ideal(rng, n, 5, 3);
    const auto p = polarize(i);
    REQUIRE(p.ideal.is_squarefree());
    CHECK(p.ideal.size() == i.size());
    int deg_i = 0, deg_p = 0;
    for (const auto& g : i.generators()) deg_i += g.degree();
    for (const auto& g : p.ideal.generators()) deg_p += g.degree();
    CHECK(deg_i == deg_p);
    std::vector<Monomial> back;
    for (const auto& g : p.ideal.generators()) back.push_back(depolarize(p, g));
    std::sort(back.begin(), back.end());
    std::vector<Monomial> orig = i.generators();
    std::sort(orig.begin(), orig.end());
    CHECK(back == orig);
    // Slots are grouped by variable, then by slot index.
    for (std::size_t k = 1; k < p.var_map.size(); ++k) CHECK(p.var_map[k - 1] < p.var_map[k]);
  }
}

TEST_CASE("variables missing from every generator get no slots") {
  const auto i = ideal(3, {{2, 0, 0}, {1, 1, 0}});
  const auto p = polarize(i);
  CHECK(p.var_map == std::vector<std::pair<std::size_t, int>>{{0, 2}});
  CHECK(p.ideal.ambient() == 4);
}
