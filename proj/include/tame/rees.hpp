#pragma once

// Binomial defining equations of the Rees algebra of a complete d-partite
// d-uniform circuit ideal, chart ideals, dehomogenization and verification by
// substitution T_e -> x_e t.

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "tame/core.hpp"
#include "tame/tameness.hpp"

namespace tame::rees {

/// A clutter together with an ordered d-partition that makes it complete
/// d-partite. Circuit k is T-variable T_{k+1}.
class PartitionedClutter {
 public:
  /// Throws InvalidPartition unless every circuit meets every part exactly
  /// once and the circuit count is the product of the part sizes.
  PartitionedClutter(Clutter clutter, std::vector<VertexSet> parts);

  /// Recovers the partition with complete_d_partite; throws NotTame.
  static PartitionedClutter from_clutter(const Clutter& clutter);

  const Clutter& clutter() const { return clutter_; }
  const std::vector<VertexSet>& parts() const { return parts_; }
  std::size_t ambient() const { return clutter_.ambient(); }

  /// Index of the part holding v; throws VertexNotPartitioned.
  std::size_t part_of(std::size_t v) const;
  /// v_e(j): the vertex of e in the part of j.
  std::size_t representative(VertexSet e, std::size_t j) const;
  /// Index of circuit e; throws CircuitNotInClutter.
  std::size_t index(VertexSet e) const;

 private:
  Clutter clutter_;
  std::vector<VertexSet> parts_;
};

struct ReesTerm {
  int sign = 1;
  Monomial x;
  std::map<std::size_t, int> t;  // circuit index -> exponent, zero entries absent

  int t_degree() const;
};

/// Two-term relation lead - trail. Canonical: lead is the larger term under
/// (T-exponents lex in circuit order, then x-exponents lex); signs +1 / -1.
struct ReesBinomial {
  ReesTerm lead;
  ReesTerm trail;

  bool is_trivial() const;
  friend bool operator==(const ReesBinomial& a, const ReesBinomial& b);
  friend std::strong_ordering operator<=>(const ReesBinomial& a, const ReesBinomial& b);
};

std::strong_ordering compare_terms(const ReesTerm& a, const ReesTerm& b);

/// Orders the two terms canonically and fixes the signs.
ReesBinomial make_binomial(ReesTerm a, ReesTerm b);

/// e(j) = (e - v_e(j)) + j. Throws VertexNotPartitioned.
VertexSet swap_circuit(const PartitionedClutter& pc, VertexSet e, std::size_t j);

/// Default v(e, e'): the vertex of e - e' in the smallest part where they
/// differ.
std::size_t default_swap_vertex(const PartitionedClutter& pc, VertexSet e, VertexSet e_prime);

/// G1 = { T_e x_i - x_{v_e(i)} T_{e(i)} } and G2 = { T_e T_e' - T_{e(j')} T_{e'(j)} },
/// canonicalized, deduplicated, trivial relations dropped, sorted.
/// G2 is taken over every admissible swap vertex: a single choice per pair
/// leaves the degree 2 fibers disconnected once three parts have size >= 2,
/// e.g. T111 T222 and T112 T221 for (x1,x2)(y1,y2)(z1,z2).
std::vector<ReesBinomial> rees_generators(const PartitionedClutter& pc);

/// Same as rees_generators but with v(e, e') chosen by `choose`.
template <class Choose>
std::vector<ReesBinomial> rees_generators_with(const PartitionedClutter& pc, Choose choose);

/// Generators of the chart ideal J_e (no T_e appears).
std::vector<ReesBinomial> chart_ideal(const PartitionedClutter& pc, VertexSet e);

/// Sets T_e = 1 in every generator.
std::vector<ReesBinomial> dehomogenize(std::span<const ReesBinomial> gens, std::size_t circuit_index);

/// chart_ideal(pc, e) is contained in dehomogenize(rees_generators(pc), e).
bool chart_contained_in_dehomogenization(const PartitionedClutter& pc, VertexSet e);

/// True iff every binomial vanishes under T_k -> images[k] * t.
bool verify_rees(std::span<const ReesBinomial> gens, std::span<const Monomial> images);
bool verify_rees(std::span<const ReesBinomial> gens, const PartitionedClutter& pc);

/// True iff the binomial vanishes under T_e' -> x_e' / x_e.
bool vanishes_on_chart(const ReesBinomial& b, const PartitionedClutter& pc, VertexSet e);

struct FiberSplit {
  std::vector<ReesBinomial> linear;  // T-degree 1 in each term
  std::vector<ReesBinomial> fiber;   // x-degree 0 in each term
};

/// Throws MixedGenerator for a binomial that fits neither class.
FiberSplit fiber_type_split(std::span<const ReesBinomial> gens);

/// Rees equations of a tame ideal with a supported normal form: squarefree
/// (complete d-partite plus isolated vertices) or a looped star x_i P_F.
struct ReesSystem {
  PartitionedClutter pc;
  std::vector<Monomial> images;  // T_k -> images[k]
  std::vector<ReesBinomial> generators;
};

/// Throws NotTame, or Unsupported for P_F^2 and non-squarefree ideals outside
/// the degree <= 2 forms.
ReesSystem rees_equations(const MonomialIdeal& ideal);

// ---------------------------------------------------------------------------

namespace detail {
ReesTerm term(const Monomial& x, std::initializer_list<std::size_t> ts);
std::vector<ReesBinomial> finish(std::vector<ReesBinomial> out);
std::vector<ReesBinomial> linear_generators(const PartitionedClutter& pc);
}  // namespace detail

template <class Choose>
std::vector<ReesBinomial> rees_generators_with(const PartitionedClutter& pc, Choose choose) {
  std::vector<ReesBinomial> out = detail::linear_generators(pc);
  const auto& circuits = pc.clutter().circuits();
  const std::size_t n = pc.ambient();
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      const VertexSet e = circuits[a], f = circuits[b];
      if (vset::size(f & ~e) <= 1) continue;
      const std::size_t j = choose(pc, e, f);
      const std::size_t jp = pc.representative(f, j);
      const std::size_t lhs1 = pc.index(swap_circuit(pc, e, jp));
      const std::size_t lhs2 = pc.index(swap_circuit(pc, f, j));
      const Monomial one = Monomial::one(n);
      out.push_back(make_binomial(detail::term(one, {a, b}), detail::term(one, {lhs1, lhs2})));
    }
  }
  return detail::finish(std::move(out));
}

}  // namespace tame::rees
