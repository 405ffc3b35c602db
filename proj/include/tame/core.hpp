#pragma once

// Exact monomials, monomial ideals, clutters and simplicial complexes, plus
// the squarefree conversions between them.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tame/error.hpp"

namespace tame {

/// A subset of {0, ..., 63} stored as a bit mask. Vertex v is bit v.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

namespace vset {

constexpr VertexSet single(std::size_t v) { return VertexSet{1} << v; }

constexpr VertexSet full(std::size_t n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, std::size_t v) { return (s >> v) & 1U; }

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

constexpr std::size_t size(VertexSet s) { return static_cast<std::size_t>(std::popcount(s)); }

constexpr std::size_t lowest(VertexSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }

VertexSet of(std::initializer_list<std::size_t> vertices);

std::vector<std::size_t> members(VertexSet s);

/// Lexicographic order on the increasing member sequences; a proper prefix
/// sorts first. {0,2} < {0,3} < {1,2}, and {0} < {0,1}.
bool lex_less(VertexSet a, VertexSet b);

/// Sorts by lex_less and removes duplicates.
void sort_unique(std::vector<VertexSet>& sets);

/// Keeps the inclusion-minimal members of `sets`, sorted by lex_less.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);

}  // namespace vset

/// A monomial x^a with a nonnegative exponent vector of fixed length.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, int exponent = 1);
  /// The squarefree monomial x_F.
  static Monomial from_set(std::size_t n, VertexSet f);

  std::size_t size() const { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  VertexSet support() const;
  /// True when this monomial divides `other` (componentwise <=).
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// this / divisor; throws unless divisor divides this.
  Monomial quotient(const Monomial& divisor) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

/// A proper nonzero monomial ideal, held through its minimal generating set.
/// Generators are sorted in decreasing lexicographic order of exponent
/// vectors, so x1^2 precedes x1*x2 precedes x2^2.
class MonomialIdeal {
 public:
  /// Minimalizes `raw` under divisibility. Throws EmptyGeneratorSet,
  /// LengthMismatch or UnitIdeal.
  static MonomialIdeal make(std::size_t n, std::vector<Monomial> raw);
  /// The prime P_F = (x_i : i in F).
  static MonomialIdeal prime(std::size_t n, VertexSet f);

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  int min_degree() const;
  int max_degree() const;

  MonomialIdeal operator*(const MonomialIdeal& other) const;
  /// The ideal sum I + J.
  MonomialIdeal operator+(const MonomialIdeal& other) const;
  /// u * I.
  MonomialIdeal scaled(const Monomial& u) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens)
      : n_(n), gens_(std::move(gens)) {}

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// An antichain of nonempty subsets (circuits) of {0, ..., n-1}, sorted by
/// vset::lex_less.
class Clutter {
 public:
  /// Throws InvalidClutter on an empty circuit, an out-of-range vertex or a
  /// comparable pair. Duplicates are merged.
  Clutter(std::size_t n, std::vector<VertexSet> circuits);

  std::size_t ambient() const { return n_; }
  const std::vector<VertexSet>& circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }

  std::optional<std::size_t> index_of(VertexSet circuit) const;
  VertexSet non_isolated() const;
  VertexSet isolated() const { return vset::full(n_) & ~non_isolated(); }
  bool is_uniform() const;

  /// N(A) = { v not in A : some circuit contains A + v }.
  VertexSet open_neighborhood(VertexSet a) const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  std::size_t n_;
  std::vector<VertexSet> circuits_;
};

/// Facets kept in the order they were produced; only the antichain property
/// is enforced (a vertex may lie in no facet).
struct SimplicialComplex {
  std::size_t n = 0;
  std::vector<VertexSet> facets;
};

struct PolarizationResult {
  MonomialIdeal ideal;
  std::size_t source_ambient = 0;
  /// For new variable source_ambient + k: (original variable, slot j >= 2).
  std::vector<std::pair<std::size_t, int>> var_map;
};

Clutter ideal_to_clutter(const MonomialIdeal& ideal);
MonomialIdeal clutter_to_ideal(const Clutter& clutter);

/// Inclusion-minimal sets meeting every member of `sets`, by Berge's
/// incremental expansion. Sorted by vset::lex_less.
std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> sets);

/// Supports F of the minimal primes P_F of a squarefree ideal.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal);

/// Facets [n] \ F for each minimal prime support F, in prime order.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// The squarefree ideal generated by x_G for the non-faces G of the complex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

VertexSet open_neighborhood(const Clutter& clutter, VertexSet a);

PolarizationResult polarize(const MonomialIdeal& ideal);

/// Substitutes every slot variable by its original variable.
Monomial depolarize(const PolarizationResult& polarization, const Monomial& m);

}  // namespace tame
