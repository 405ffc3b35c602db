#pragma once

// Exact rational feasibility for systems { A z = b, z >= 0 }.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace tame::lp {

using Rational = mpq_class;
using Matrix = std::vector<std::vector<Rational>>;

/// Runs phase one of the simplex method with Bland's rule in exact rational
/// arithmetic. Returns a feasible z, or nullopt when the system has none.
/// Rows with negative right-hand side are negated internally.
std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a, const std::vector<Rational>& b);

/// An integer vector w with w . v >= 1 for every vector v, when one exists
/// (the vectors span a pointed cone and none is zero).
std::optional<std::vector<long>> positive_grading(const std::vector<std::vector<int>>& vectors,
                                                   std::size_t dimension);

}  // namespace tame::lp
