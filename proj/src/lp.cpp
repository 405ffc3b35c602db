#include "tame/lp.hpp"

#include <cstddef>
#include <stdexcept>

#include "tame/error.hpp"

namespace tame::lp {

std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error(ErrorCode::LengthMismatch, "lp: row count mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw Error(ErrorCode::LengthMismatch, "lp: ragged matrix");
  }

  // Tableau over the original columns followed by one artificial per row.
  const std::size_t total = cols + rows;
  Matrix tab(rows, std::vector<Rational>(total + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < cols; ++c) tab[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
    tab[r][cols + r] = 1;
    tab[r][total] = flip ? Rational(-b[r]) : b[r];
    basis[r] = cols + r;
  }
  // Reduced costs of the phase-one objective sum(artificials).
  std::vector<Rational> cost(total + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) cost[c] -= tab[r][c];
    cost[total] -= tab[r][total];
  }

  for (;;) {
    std::size_t entering = total;
    for (std::size_t c = 0; c < total; ++c) {
      if (cost[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == total) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][entering] <= 0) continue;
      Rational ratio = tab[r][total] / tab[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leaving == rows) throw Error(ErrorCode::VerificationFailed, "lp: unbounded phase one");

    const Rational pivot = tab[leaving][entering];
    for (auto& v : tab[leaving]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || tab[r][entering] == 0) continue;
      const Rational factor = tab[r][entering];
      for (std::size_t c = 0; c <= total; ++c) tab[r][c] -= factor * tab[leaving][c];
    }
    if (cost[entering] != 0) {
      const Rational factor = cost[entering];
      for (std::size_t c = 0; c <= total; ++c) cost[c] -= factor * tab[leaving][c];
    }
    basis[leaving] = entering;
  }

  // cost[total] holds minus the objective value.
  if (cost[total] != 0) return std::nullopt;
  std::vector<Rational> z(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < cols) z[basis[r]] = tab[r][total];
  }
  return z;
}

std::optional<std::vector<long>> positive_grading(const std::vector<std::vector<int>>& vectors,
                                                   std::size_t dimension) {
  // Unknowns: w+ (dimension), w- (dimension), one surplus per vector.
  // Rows: (w+ - w-) . v - s_v = 1.
  const std::size_t m = vectors.size();
  const std::size_t cols = 2 * dimension + m;
  Matrix a(m, std::vector<Rational>(cols));
  std::vector<Rational> b(m, Rational(1));
  for (std::size_t r = 0; r < m; ++r) {
    if (vectors[r].size() != dimension) throw Error(ErrorCode::LengthMismatch, "grading: dimension mismatch");
    for (std::size_t k = 0; k < dimension; ++k) {
      a[r][k] = vectors[r][k];
      a[r][dimension + k] = -vectors[r][k];
    }
    a[r][2 * dimension + r] = -1;
  }
  auto z = find_feasible_point(a, b);
  if (!z) return std::nullopt;

  // Clear denominators; scaling by a positive integer keeps w . v >= 1.
  mpz_class common = 1;
  std::vector<Rational> w(dimension);
  for (std::size_t k = 0; k < dimension; ++k) {
    w[k] = (*z)[k] - (*z)[dimension + k];
    mpz_class den = w[k].get_den();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<long> out(dimension);
  for (std::size_t k = 0; k < dimension; ++k) {
    Rational scaled = w[k] * common;
    scaled.canonicalize();
    if (!scaled.get_num().fits_slong_p()) throw Error(ErrorCode::SearchBudgetExceeded, "grading overflow");
    out[k] = scaled.get_num().get_si();
  }
  return out;
}

}  // namespace tame::lp
