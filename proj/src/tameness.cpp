#include "tame/tameness.hpp"

#include <algorithm>

#include "tame/newton.hpp"

namespace tame::tameness {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Charts: return "charts";
    case Method::SquarefreeStructural: return "squarefree-structural";
    case Method::Degree2: return "degree2";
    case Method::PolarizationReduction: return "polarization-reduction";
  }
  return "unknown";
}

namespace {

VertexSet support_union(const MonomialIdeal& ideal) {
  VertexSet s = 0;
  for (const auto& g : ideal.generators()) s |= g.support();
  return s;
}

MonomialIdeal product_of_primes(std::size_t n, const std::vector<VertexSet>& supports) {
  MonomialIdeal out = MonomialIdeal::prime(n, supports.front());
  for (std::size_t i = 1; i < supports.size(); ++i) out = out * MonomialIdeal::prime(n, supports[i]);
  return out;
}

}  // namespace

bool is_tame(const Deg2Classification& c) { return !std::holds_alternative<NotTameDeg2>(c); }

MonomialIdeal reconstruct(const Deg2Classification& c, std::size_t n) {
  if (const auto* p = std::get_if<LinearPrime>(&c)) return MonomialIdeal::prime(n, p->f);
  if (const auto* p = std::get_if<PrimeSquare>(&c)) {
    const auto prime = MonomialIdeal::prime(n, p->f);
    return prime * prime;
  }
  if (const auto* p = std::get_if<LoopedStar>(&c)) {
    return MonomialIdeal::prime(n, p->f).scaled(Monomial::variable(n, p->center));
  }
  if (const auto* p = std::get_if<BipartiteProduct>(&c)) {
    return MonomialIdeal::prime(n, p->f1) * MonomialIdeal::prime(n, p->f2);
  }
  if (const auto* p = std::get_if<NestedProduct>(&c)) {
    return MonomialIdeal::prime(n, p->f1) * MonomialIdeal::prime(n, p->f2);
  }
  throw Error(ErrorCode::NotTame, "a non-tame classification names no ideal");
}

TamenessReport is_tame_general(const MonomialIdeal& ideal, const charts::SearchBudget& budget) {
  TamenessReport report;
  report.method = Method::Charts;
  if (ideal.ambient() <= kMaxVertices) report.isolated = vset::full(ideal.ambient()) & ~support_union(ideal);
  for (std::size_t v : newton::vertex_generators(ideal)) {
    auto verdict = charts::regularity_at_vertex(ideal, v, budget);
    report.charts.push_back(ChartRecord{v, verdict.regular, std::move(verdict.minimal)});
    if (!verdict.regular && !report.failing_chart) report.failing_chart = report.charts.size() - 1;
  }
  report.tame = !report.failing_chart.has_value();
  return report;
}

TamenessReport is_tame_squarefree(const MonomialIdeal& ideal) {
  const Clutter clutter = ideal_to_clutter(ideal);
  TamenessReport report;
  report.method = Method::SquarefreeStructural;
  report.isolated = clutter.isolated();
  report.primes = minimal_transversals(clutter.circuits());
  for (std::size_t i = 0; i < report.primes.size() && !report.intersecting_primes; ++i) {
    for (std::size_t j = i + 1; j < report.primes.size(); ++j) {
      if ((report.primes[i] & report.primes[j]) != 0) {
        report.intersecting_primes = std::pair{report.primes[i], report.primes[j]};
        break;
      }
    }
  }
  report.tame = !report.intersecting_primes.has_value();
  if (report.tame && product_of_primes(ideal.ambient(), report.primes) != ideal) {
    throw Error(ErrorCode::VerificationFailed, "disjoint minimal primes do not multiply back to the ideal");
  }
  return report;
}

bool facets_pairwise_cover(const SimplicialComplex& complex) {
  const VertexSet all = vset::full(complex.n);
  for (std::size_t i = 0; i < complex.facets.size(); ++i) {
    for (std::size_t j = i + 1; j < complex.facets.size(); ++j) {
      if ((complex.facets[i] | complex.facets[j]) != all) return false;
    }
  }
  return true;
}

PartitionCheck complete_d_partite(const Clutter& clutter) {
  if (clutter.size() == 0) throw Error(ErrorCode::InvalidClutter, "complete_d_partite needs a circuit");
  PartitionCheck out;
  const auto& circuits = clutter.circuits();
  const VertexSet e0 = circuits.front();
  const std::size_t d = vset::size(e0);

  for (VertexSet c : circuits) {
    if (vset::size(c) != d) {
      out.failed_check = "(a) circuits differ in size";
      out.counterexample = c;
      return out;
    }
  }

  std::vector<VertexSet> parts;
  for (std::size_t v : vset::members(e0)) {
    parts.push_back(vset::single(v) | clutter.open_neighborhood(e0 & ~vset::single(v)));
  }
  std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) { return vset::lowest(a) < vset::lowest(b); });

  VertexSet seen = 0;
  for (VertexSet p : parts) {
    if ((seen & p) != 0) {
      out.failed_check = "(b) neighborhood parts overlap";
      return out;
    }
    seen |= p;
  }
  if (seen != clutter.non_isolated()) {
    out.failed_check = "(b) parts do not cover the non-isolated vertices";
    return out;
  }

  for (VertexSet c : circuits) {
    for (VertexSet p : parts) {
      if (vset::size(c & p) != 1) {
        out.failed_check = "(c) a circuit does not meet every part exactly once";
        out.counterexample = c;
        return out;
      }
    }
  }

  std::size_t expected = 1;
  for (VertexSet p : parts) expected *= vset::size(p);
  if (circuits.size() != expected) {
    out.failed_check = "(d) circuit count differs from the product of part sizes";
    // Odometer over one vertex per part to find a missing transversal.
    std::vector<std::vector<std::size_t>> choices;
    for (VertexSet p : parts) choices.push_back(vset::members(p));
    std::vector<std::size_t> pos(parts.size(), 0);
    for (;;) {
      VertexSet t = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) t |= vset::single(choices[i][pos[i]]);
      if (!clutter.index_of(t)) {
        out.counterexample = t;
        break;
      }
      std::size_t i = 0;
      while (i < pos.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
      if (i == pos.size()) break;
    }
    return out;
  }
  out.parts = std::move(parts);
  return out;
}

Deg2Classification classify_deg2(const MonomialIdeal& ideal) {
  if (ideal.max_degree() > 2) {
    throw Error(ErrorCode::DegreeTooHigh, "classify_deg2 needs generators of degree at most 2");
  }
  if (ideal.ambient() > kMaxVertices) throw Error(ErrorCode::TooManyVariables, "at most 64 variables");
  if (ideal.min_degree() != ideal.max_degree()) {
    return NotTameDeg2{"generators of degree 1 and 2 are mixed"};
  }
  const VertexSet vertices = support_union(ideal);
  if (ideal.max_degree() == 1) return LinearPrime{vertices};

  VertexSet loops = 0;
  std::vector<VertexSet> edges;
  for (const auto& g : ideal.generators()) {
    if (g.is_squarefree()) {
      edges.push_back(g.support());
    } else {
      loops |= g.support();
    }
  }

  if (loops == 0) {
    const auto check = complete_d_partite(Clutter(ideal.ambient(), edges));
    if (check.parts && check.parts->size() == 2) return BipartiteProduct{(*check.parts)[0], (*check.parts)[1]};
    return NotTameDeg2{"simple graph is not complete bipartite: " + check.failed_check};
  }

  auto has_edge = [&edges](std::size_t a, std::size_t b) {
    return std::find(edges.begin(), edges.end(), vset::single(a) | vset::single(b)) != edges.end();
  };
  const auto verts = vset::members(vertices);

  if (loops == vertices) {
    bool complete = true;
    for (std::size_t i = 0; i < verts.size() && complete; ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (!has_edge(verts[i], verts[j])) {
          complete = false;
          break;
        }
      }
    }
    if (complete) return PrimeSquare{vertices};
  }

  if (vset::size(loops) == 1) {
    const std::size_t c = vset::lowest(loops);
    const bool star = std::all_of(edges.begin(), edges.end(), [c](VertexSet e) { return vset::contains(e, c); }) &&
                      edges.size() + 1 == verts.size();
    if (star) return LoopedStar{vertices, c};
  }
  if (vset::size(loops) >= 2 && loops != vertices &&
      MonomialIdeal::prime(ideal.ambient(), loops) * MonomialIdeal::prime(ideal.ambient(), vertices) == ideal) {
    return NestedProduct{loops, vertices};
  }
  return NotTameDeg2{"looped graph is not a looped star, a looped complete graph or a nested prime product"};
}

std::optional<PolarizationFactorization> tame_via_polarization(const MonomialIdeal& ideal) {
  const auto pol = polarize(ideal);
  if (!is_tame_squarefree(pol.ideal).tame) return std::nullopt;

  const std::size_t n = ideal.ambient();
  std::vector<int> alpha(n, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) alpha[i] = std::max(alpha[i], g[i]);
  }
  std::vector<int> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = std::max(alpha[i] - 1, 0);
  Monomial factor(std::move(u));

  std::vector<Monomial> rest;
  for (const auto& g : ideal.generators()) {
    if (!factor.divides(g)) {
      throw Error(ErrorCode::VerificationFailed, "polarization is tame but u does not divide a generator");
    }
    rest.push_back(g.quotient(factor));
  }
  MonomialIdeal quotient = MonomialIdeal::make(n, std::move(rest));
  if (!quotient.is_squarefree() || quotient.scaled(factor) != ideal) {
    throw Error(ErrorCode::VerificationFailed, "I != u I' for the polarization factorization");
  }
  return PolarizationFactorization{std::move(factor), std::move(quotient)};
}

TamenessReport decide(const MonomialIdeal& ideal, const DecideOptions& options) {
  if (options.force_charts) return is_tame_general(ideal, options.budget);
  if (ideal.is_squarefree()) return is_tame_squarefree(ideal);
  if (ideal.max_degree() <= 2) {
    TamenessReport report;
    report.method = Method::Degree2;
    auto c = classify_deg2(ideal);
    report.tame = is_tame(c);
    report.isolated = vset::full(ideal.ambient()) & ~support_union(ideal);
    if (report.tame && reconstruct(c, ideal.ambient()) != ideal) {
      throw Error(ErrorCode::VerificationFailed, "degree 2 normal form does not reconstruct the ideal");
    }
    report.classification = std::move(c);
    return report;
  }
  return is_tame_general(ideal, options.budget);
}

}  // namespace tame::tameness
