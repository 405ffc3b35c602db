// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "tame/cli.hpp"
#include "tame/expression.hpp"
#include "tame/newton.hpp"
#include "tame/tameness.hpp"

using namespace tame;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

json run_json(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  std::vector<std::string> a = args;
  a.push_back("--json");
  const int rc = cli::run_cli(a, out, err);
  if (code) *code = rc;
  if (rc != 0) throw std::runtime_error("exit " + std::to_string(rc) + ": " + err.str());
  return json::parse(out.str());
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

using Exps = std::set<std::vector<int>>;

Outcome introduction_examples() {
  Outcome o;
  for (const auto& [ideal, verdict, method] :
       {std::tuple{"(x,y*z)", "NOT TAME", ""}, std::tuple{"(x,y*z)*(x,y)*(x,z)", "TAME", "charts"}}) {
    const auto t = std::chrono::steady_clock::now();
    const auto j = run_json({"check", ideal});
    const double s = seconds_since(t);
    if (j["verdict"] != verdict) fail(o, std::string(ideal) + " gave " + j["verdict"].get<std::string>());
    if (*method && j["method"] != method) fail(o, std::string(ideal) + " used " + j["method"].get<std::string>());
    if (s >= 1.0) fail(o, std::string(ideal) + " took " + std::to_string(s) + " s");
  }
  std::ostringstream out, err;
  cli::run_cli({"check", "(x,y*z)"}, out, err);
  if (out.str().rfind("NOT TAME; failing vertex chart: x; |U'| = 4 > n = 3\n", 0) != 0) {
    fail(o, "unexpected report line");
  }
  return o;
}

Outcome chart_example() {
  Outcome o;
  const auto j = run_json({"check", "x^2, y^3, x*y"});
  if (j["verdict"] != "TAME") fail(o, "verdict " + j["verdict"].get<std::string>());
  std::set<Exps> got;
  for (const auto& c : j["witness"]["charts"]) got.insert(c["minimal_exponents"].get<Exps>());
  const std::set<Exps> want{Exps{{1, 0}, {-1, 1}}, Exps{{0, 1}, {1, -2}}, Exps{{-1, 2}, {1, -1}}};
  if (got != want) fail(o, "chart generator sets differ");
  return o;
}

Outcome rees_example() {
  Outcome o;
  const std::string ideal = "(x1,x2)*(y1,y2)*(z)";
  const auto j = run_json({"rees", ideal});
  std::vector<rees::ReesBinomial> got;
  for (const auto& b : j["witness"]["binomials"]) got.push_back(cli::binomial_from_json(b, 5, 4));
  std::sort(got.begin(), got.end());

  // x1 x2 y1 y2 z; T1 = x1y1z, T2 = x1y2z, T3 = x2y1z, T4 = x2y2z
  auto t = [](std::vector<int> x, std::vector<std::size_t> ts) {
    rees::ReesTerm r{1, Monomial(std::move(x)), {}};
    for (std::size_t k : ts) ++r.t[k - 1];
    return r;
  };
  std::vector<rees::ReesBinomial> want{
      rees::make_binomial(t({0, 1, 0, 0, 0}, {1}), t({1, 0, 0, 0, 0}, {3})),
      rees::make_binomial(t({0, 1, 0, 0, 0}, {2}), t({1, 0, 0, 0, 0}, {4})),
      rees::make_binomial(t({0, 0, 1, 0, 0}, {4}), t({0, 0, 0, 1, 0}, {3})),
      rees::make_binomial(t({0, 0, 0, 1, 0}, {1}), t({0, 0, 1, 0, 0}, {2})),
      rees::make_binomial(t({0, 0, 0, 0, 0}, {2, 3}), t({0, 0, 0, 0, 0}, {1, 4})),
  };
  std::sort(want.begin(), want.end());
  if (got.size() != 5) fail(o, std::to_string(got.size()) + " binomials");
  if (got != want) fail(o, "binomials differ from the expected list");
  const auto v = run_json({"verify-rees", ideal});
  if (v["verdict"] != "VERIFIED") fail(o, "verify-rees failed");
  const auto sys = rees::rees_equations(expr::parse_ideal(ideal).ideal);
  if (!rees::verify_rees(got, sys.images)) fail(o, "substitution check failed");
  return o;
}

Outcome polarization_example() {
  Outcome o;
  const std::string ideal = "x1^2, x1*x2, x2^2";
  const auto c = run_json({"classify-deg2", ideal});
  if (c["witness"]["classification"]["form"] != "PrimeSquare") fail(o, "classification is not PrimeSquare");
  const auto p = run_json({"polarize", ideal});
  const auto chk = run_json({"check", p["witness"]["polarization"].get<std::string>()});
  if (chk["verdict"] != "NOT TAME") fail(o, "polarization reported tame");
  return o;
}

MonomialIdeal squarefree(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<Monomial> ms;
  for (VertexSet s : sets) ms.push_back(Monomial::from_set(n, s));
  return MonomialIdeal::make(n, std::move(ms));
}

Outcome structural_vs_charts() {
  Outcome o;
  std::size_t cases = 0, disagreements = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::antichain_classes(n, 6)) {
      const auto i = squarefree(n, a);
      ++cases;
      if (tameness::is_tame_squarefree(i).tame != tameness::is_tame_general(i).tame) ++disagreements;
    }
  }
  std::mt19937 rng(20260101);
  for (int round = 0; round < 1000; ++round) {
    const auto i = oracle::random_squarefree(rng, 1 + rng() % 7, 8);
    ++cases;
    if (tameness::is_tame_squarefree(i).tame != tameness::is_tame_general(i).tame) ++disagreements;
  }
  o.detail = std::to_string(cases) + " ideals, " + std::to_string(disagreements) + " disagreements";
  o.pass = disagreements == 0;
  return o;
}

Outcome degree2_vs_charts() {
  Outcome o;
  std::size_t cases = 0, disagreements = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const oracle::LoopedGraphs graphs(n);
    for (std::uint32_t mask : graphs.classes()) {
      const auto i = graphs.ideal(mask);
      ++cases;
      if (tameness::is_tame(tameness::classify_deg2(i)) != tameness::is_tame_general(i).tame) ++disagreements;
    }
  }
  o.detail = std::to_string(cases) + " graph classes, " + std::to_string(disagreements) + " disagreements";
  o.pass = disagreements == 0;
  return o;
}

Outcome rees_soundness() {
  Outcome o;
  std::size_t clutters = 0, binomials = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    std::vector<std::size_t> shape(d, 1);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == d) {
        const auto pc = rees::PartitionedClutter::from_clutter(oracle::complete_partite(shape));
        const auto gens = rees::rees_generators(pc);
        ++clutters;
        binomials += gens.size();
        if (!rees::verify_rees(gens, pc)) fail(o, "a generator does not vanish");
        for (VertexSet e : pc.clutter().circuits()) {
          if (!rees::chart_contained_in_dehomogenization(pc, e)) fail(o, "chart ideal not contained");
        }
        try {
          const auto split = rees::fiber_type_split(gens);
          if (split.linear.size() + split.fiber.size() != gens.size()) fail(o, "fiber split lost generators");
        } catch (const Error&) {
          fail(o, "fiber split raised");
        }
        return;
      }
      for (std::size_t s = 1; s <= 3; ++s) {
        shape[k] = s;
        rec(k + 1);
      }
    };
    rec(0);
  }
  if (o.pass) o.detail = std::to_string(clutters) + " clutters, " + std::to_string(binomials) + " binomials";
  return o;
}

Outcome vertex_oracle() {
  Outcome o;
  std::mt19937 rng(8128);
  std::size_t ideals = 0, tests = 0, witnesses = 0;
  while (ideals < 600) {
    const std::size_t n = 1 + rng() % 3;
    const auto i = oracle::random_ideal(rng, n, 4, 3);
    ++ideals;
    for (std::size_t j = 0; j < i.size(); ++j) {
      ++tests;
      const auto cert = newton::is_vertex(i, i.generators()[j]);
      if (cert.is_vertex() == oracle::truncated_not_vertex(i, j, 6, 6)) {
        fail(o, "disagreement on " + expr::print_ideal(i, expr::default_names(n)) + " at generator " +
                    std::to_string(j + 1));
      }
      if (!cert.is_vertex()) {
        ++witnesses;
        if (!newton::verify_certificate(i, cert)) fail(o, "witness does not re-verify");
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(ideals) + " ideals, " + std::to_string(tests) + " tests, " + std::to_string(witnesses) +
               " witnesses";
  }
  return o;
}

VertexSet looped_neighborhood(const MonomialIdeal& g, std::size_t i) {
  VertexSet out = 0;
  for (const auto& m : g.generators()) {
    if (m[i] == 2) out |= m.support();
    if (m[i] == 1) out |= m.support() & ~vset::single(i);
  }
  return out;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(99);
  // |U'| >= n, order independence, deleted elements re-verify.
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 2;
    const auto i = oracle::random_ideal(rng, n, 4, 3);
    for (std::size_t v : newton::vertex_generators(i)) {
      const auto algebra = charts::chart(i, i.generators()[v]);
      const auto kept = charts::minimal_algebra_generators(algebra);
      if (kept.size() < n) fail(o, "|U'| < n");
      const auto& gens = algebra.generators();
      for (const auto& g : gens) {
        if (std::find(kept.begin(), kept.end(), g) == kept.end() && !charts::cone_membership(g, kept)) {
          fail(o, "deleted element not generated by U'");
        }
      }
      std::vector<std::size_t> order(gens.size());
      std::iota(order.begin(), order.end(), 0);
      for (int p = 0; p < 20; ++p) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<bool> alive(gens.size(), true);
        for (std::size_t k : order) {
          std::vector<charts::LaurentMonomial> others;
          for (std::size_t m = 0; m < gens.size(); ++m) {
            if (m != k && alive[m]) others.push_back(gens[m]);
          }
          if (charts::cone_membership(gens[k], others)) alive[k] = false;
        }
        std::vector<charts::LaurentMonomial> left;
        for (std::size_t m = 0; m < gens.size(); ++m) {
          if (alive[m]) left.push_back(gens[m]);
        }
        std::sort(left.begin(), left.end());
        if (left != kept) fail(o, "reduction depends on order");
      }
    }
  }
  // Loop charts, n <= 5 (up to relabeling).
  for (std::size_t n = 1; n <= 5; ++n) {
    const oracle::LoopedGraphs graphs(n);
    for (std::uint32_t mask : graphs.classes()) {
      const auto g = graphs.ideal(mask);
      for (std::size_t i = 0; i < n; ++i) {
        const Monomial loop = Monomial::variable(n, i, 2);
        if (!g.index_of(loop)) continue;
        const VertexSet nb = looped_neighborhood(g, i);
        const bool cond = std::all_of(g.generators().begin(), g.generators().end(),
                                      [nb](const Monomial& e) { return vset::is_subset(e.support(), nb); });
        if (charts::is_chart_regular(g, loop).regular != cond) fail(o, "loop chart property fails");
      }
    }
  }
  // Linear generators beside >= 2 quadrics: x_i-charts are irregular.
  for (std::size_t n = 4; n <= 5; ++n) {
    for (VertexSet lin = 1; lin < (VertexSet{1} << n); ++lin) {
      if (vset::size(lin) < 2) continue;
      const auto rest = vset::members(vset::full(n) & ~lin);
      std::vector<Monomial> quads;
      for (std::size_t a = 0; a < rest.size(); ++a) {
        for (std::size_t b = a; b < rest.size(); ++b) {
          quads.push_back(Monomial::variable(n, rest[a]) * Monomial::variable(n, rest[b]));
        }
      }
      for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << quads.size()); ++pick) {
        if (std::popcount(pick) < 2) continue;
        std::vector<Monomial> gens;
        for (std::size_t v : vset::members(lin)) gens.push_back(Monomial::variable(n, v));
        for (std::size_t q = 0; q < quads.size(); ++q) {
          if ((pick >> q) & 1U) gens.push_back(quads[q]);
        }
        const auto i = MonomialIdeal::make(n, gens);
        for (std::size_t v : vset::members(lin)) {
          if (charts::is_chart_regular(i, Monomial::variable(n, v)).regular) fail(o, "regular linear chart");
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, const char*, double, std::function<Outcome()>>> criteria{
      {1, "introduction examples", 0, introduction_examples},
      {2, "chart generators of (x^2, y^3, xy)", 0, chart_example},
      {3, "Rees equations of (x1,x2)(y1,y2)(z)", 0, rees_example},
      {4, "polarization of (x1^2, x1x2, x2^2)", 0, polarization_example},
      {5, "structural vs chart deciders", 300, structural_vs_charts},
      {6, "degree <= 2 classifier vs charts", 120, degree2_vs_charts},
      {7, "Rees soundness", 120, rees_soundness},
      {8, "vertex test vs convex-combination oracle", 0, vertex_oracle},
      {9, "property suites", 0, property_suites},
  };
  int failures = 0;
  for (const auto& [id, name, limit, f] : criteria) {
    const auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t);
    if (limit > 0 && s > limit) fail(o, "exceeded " + std::to_string(static_cast<int>(limit)) + " s");
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name, s,
                o.detail.empty() ? "" : "; ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
