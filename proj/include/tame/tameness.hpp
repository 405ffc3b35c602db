#pragma once

// Tameness deciders: vertex charts (general), disjoint minimal primes
// (squarefree), the degree <= 2 classification, and the polarization
// reduction.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tame/charts.hpp"
#include "tame/core.hpp"

namespace tame::tameness {

enum class Method { Charts, SquarefreeStructural, Degree2, PolarizationReduction };

std::string_view to_string(Method method);

struct ChartRecord {
  std::size_t center = 0;  // index into G(I)
  bool regular = false;
  std::vector<charts::LaurentMonomial> minimal;  // U'
};

// Degree <= 2 normal forms.
struct LinearPrime { VertexSet f = 0; };                    // I = P_F
struct PrimeSquare { VertexSet f = 0; };                    // I = P_F^2
struct LoopedStar { VertexSet f = 0; std::size_t center = 0; };  // I = x_i P_F
struct BipartiteProduct { VertexSet f1 = 0, f2 = 0; };      // I = P_F1 P_F2, F1, F2 disjoint
// I = P_F1 P_F2 with F1 a proper subset of F2 and |F1| >= 2. Every vertex
// chart of such an ideal is regular, so it is tame without being one of the
// four forms above; P_F^2 and x_i P_F are its boundary cases.
struct NestedProduct { VertexSet f1 = 0, f2 = 0; };
struct NotTameDeg2 { std::string reason; };

using Deg2Classification =
    std::variant<LinearPrime, PrimeSquare, LoopedStar, BipartiteProduct, NestedProduct, NotTameDeg2>;

bool is_tame(const Deg2Classification& c);
/// The ideal named by a tame normal form.
MonomialIdeal reconstruct(const Deg2Classification& c, std::size_t n);

struct PolarizationFactorization {
  Monomial factor;          // u = prod x_i^(alpha_i - 1)
  MonomialIdeal quotient;   // squarefree I' with I = u I'
};

struct TamenessReport {
  bool tame = false;
  Method method = Method::Charts;
  VertexSet isolated = 0;

  // SquarefreeStructural: the minimal prime supports; pairwise disjoint on
  // success, with I = P_F1 ... P_Fd re-verified.
  std::vector<VertexSet> primes;
  std::optional<std::pair<VertexSet, VertexSet>> intersecting_primes;

  // Charts: every vertex chart with |U'|; the first irregular one on failure.
  std::vector<ChartRecord> charts;
  std::optional<std::size_t> failing_chart;  // index into `charts`

  std::optional<Deg2Classification> classification;
  std::optional<PolarizationFactorization> factorization;
};

/// Tame iff the chart at every vertex generator is regular.
TamenessReport is_tame_general(const MonomialIdeal& ideal, const charts::SearchBudget& budget = {});

/// Tame iff the minimal prime supports are pairwise disjoint.
TamenessReport is_tame_squarefree(const MonomialIdeal& ideal);

/// Stanley-Reisner form of the same test: facets pairwise union to [n].
bool facets_pairwise_cover(const SimplicialComplex& complex);

struct PartitionCheck {
  std::optional<std::vector<VertexSet>> parts;
  std::string failed_check;            // empty on success
  std::optional<VertexSet> counterexample;  // a circuit violating the check
};

/// Recovers the d-partition of a complete d-partite clutter (ignoring
/// isolated vertices) from the smallest circuit e0: V_i = {v_i} + N(e0 - v_i).
PartitionCheck complete_d_partite(const Clutter& clutter);

/// Throws DegreeTooHigh if some generator has degree > 2.
Deg2Classification classify_deg2(const MonomialIdeal& ideal);

/// When the polarization is tame, returns I = u I' with I' squarefree.
std::optional<PolarizationFactorization> tame_via_polarization(const MonomialIdeal& ideal);

struct DecideOptions {
  bool force_charts = false;
  charts::SearchBudget budget;
};

/// Picks the structural decider for squarefree ideals, the classifier for
/// degree <= 2, and vertex charts otherwise.
TamenessReport decide(const MonomialIdeal& ideal, const DecideOptions& options = {});

}  // namespace tame::tameness
