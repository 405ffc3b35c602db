#pragma once

// Blowup charts k[U], U = {x_1..x_n} + {u'/u : u' != u in G(I)}, and their
// unique minimal monomial generating sets U'.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tame/core.hpp"

namespace tame::charts {

/// A Laurent monomial, stored as its (possibly negative) exponent vector.
class LaurentMonomial {
 public:
  LaurentMonomial() = default;
  explicit LaurentMonomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {}

  static LaurentMonomial unit(std::size_t n, std::size_t i);
  /// numerator / denominator.
  static LaurentMonomial ratio(const Monomial& numerator, const Monomial& denominator);

  std::size_t size() const { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }
  int degree() const;
  bool is_zero() const;

  friend auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;

 private:
  std::vector<int> exponents_;
};

/// Generators of a chart coordinate ring: always the n unit vectors plus the
/// chart ratios, deduplicated and sorted lexicographically.
class ChartAlgebra {
 public:
  ChartAlgebra(std::size_t n, std::vector<LaurentMonomial> gens);

  std::size_t ambient() const { return n_; }
  const std::vector<LaurentMonomial>& generators() const { return gens_; }

 private:
  std::size_t n_;
  std::vector<LaurentMonomial> gens_;
};

struct SearchBudget {
  /// Cap on search nodes per cone-membership query.
  std::size_t max_nodes = 1'000'000;
};

/// The u-chart algebra of I. Throws NotAGenerator unless u is in G(I).
ChartAlgebra chart(const MonomialIdeal& ideal, const Monomial& u);

/// Nonnegative integer multiplicities m with sum m_b * b = target, or nullopt
/// when none exists. Throws SearchBudgetExceeded when the search could not be
/// completed within the budget.
std::optional<std::vector<int>> cone_membership(const LaurentMonomial& target,
                                                std::span<const LaurentMonomial> basis,
                                                const SearchBudget& budget = {});

/// The unique minimal U' with k[U'] = k[U]: an element is dropped iff it is a
/// nonnegative integer combination of the other elements. Sorted
/// lexicographically. Throws UniquenessViolation if a dropped element is not
/// generated by the survivors.
std::vector<LaurentMonomial> minimal_algebra_generators(const ChartAlgebra& algebra,
                                                        const SearchBudget& budget = {});

struct ChartVerdict {
  bool regular = false;
  std::size_t center = 0;   // index into G(I)
  ChartAlgebra algebra;
  std::vector<LaurentMonomial> minimal;
};

/// Regularity of the u-chart at a vertex u: |U'| == n. Throws NotAVertex if u
/// is not a vertex of N(I).
ChartVerdict is_chart_regular(const MonomialIdeal& ideal, const Monomial& u,
                              const SearchBudget& budget = {});

/// Same as is_chart_regular but trusts the caller that u is a vertex.
ChartVerdict regularity_at_vertex(const MonomialIdeal& ideal, std::size_t center,
                                  const SearchBudget& budget = {});

}  // namespace tame::charts
