#include "tame/charts.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_set>

#include "tame/lp.hpp"
#include "tame/newton.hpp"

namespace tame::charts {

LaurentMonomial LaurentMonomial::unit(std::size_t n, std::size_t i) {
  std::vector<int> e(n, 0);
  e.at(i) = 1;
  return LaurentMonomial(std::move(e));
}

LaurentMonomial LaurentMonomial::ratio(const Monomial& numerator, const Monomial& denominator) {
  if (numerator.size() != denominator.size()) {
    throw Error(ErrorCode::LengthMismatch, "ratio of monomials in different rings");
  }
  std::vector<int> e(numerator.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = numerator[i] - denominator[i];
  return LaurentMonomial(std::move(e));
}

int LaurentMonomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool LaurentMonomial::is_zero() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

ChartAlgebra::ChartAlgebra(std::size_t n, std::vector<LaurentMonomial> gens) : n_(n) {
  for (std::size_t i = 0; i < n; ++i) gens.push_back(LaurentMonomial::unit(n, i));
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorCode::LengthMismatch, "chart generator has the wrong length");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens_ = std::move(gens);
}

ChartAlgebra chart(const MonomialIdeal& ideal, const Monomial& u) {
  if (!ideal.index_of(u)) throw Error(ErrorCode::NotAGenerator, "chart center must be a minimal generator");
  std::vector<LaurentMonomial> ratios;
  for (const auto& g : ideal.generators()) {
    if (g != u) ratios.push_back(LaurentMonomial::ratio(g, u));
  }
  return ChartAlgebra(ideal.ambient(), std::move(ratios));
}

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Depth-first search over basis elements in fixed order. With a positive
// grading w, every element lowers the residual grade by at least one, so the
// search is finite and complete. Without one, multiplicities are capped and a
// failed search that hit the cap is reported as budget exhaustion.
class ConeSearch {
 public:
  ConeSearch(std::span<const LaurentMonomial> basis, const std::vector<long>* grading,
             const SearchBudget& budget)
      : basis_(basis), grading_(grading), budget_(budget) {
    const std::size_t m = basis_.size();
    dim_ = m == 0 ? 0 : basis_.front().size();
    pos_.assign(m + 1, std::vector<char>(dim_, 0));
    neg_.assign(m + 1, std::vector<char>(dim_, 0));
    for (std::size_t i = m; i-- > 0;) {
      for (std::size_t k = 0; k < dim_; ++k) {
        pos_[i][k] = pos_[i + 1][k] || basis_[i][k] > 0;
        neg_[i][k] = neg_[i + 1][k] || basis_[i][k] < 0;
      }
    }
    grade_.resize(m);
    all_nonnegative_degree_ = true;
    for (std::size_t i = 0; i < m; ++i) {
      grade_[i] = grade_of(basis_[i].exponents());
      if (basis_[i].degree() < 0) all_nonnegative_degree_ = false;
    }
  }

  std::optional<std::vector<int>> run(const LaurentMonomial& target) {
    if (target.size() != dim_ && !basis_.empty()) {
      throw Error(ErrorCode::LengthMismatch, "cone target has the wrong length");
    }
    multiplicity_.assign(basis_.size(), 0);
    if (basis_.empty()) {
      if (target.is_zero()) return multiplicity_;
      return std::nullopt;
    }
    cap_ = 0;
    for (int e : target.exponents()) cap_ += std::abs(e);
    int widest = 0;
    for (const auto& b : basis_) {
      int w = 0;
      for (int e : b.exponents()) w += std::abs(e);
      widest = std::max(widest, w);
    }
    cap_ += widest;

    std::vector<int> residual = target.exponents();
    const long grade = grade_of(residual);
    if (grading_ && grade < 0) return std::nullopt;
    if (dfs(0, residual, grade, target.degree())) return multiplicity_;
    if (truncated_) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "cone membership search hit its multiplicity cap without a positive grading");
    }
    return std::nullopt;
  }

 private:
  long grade_of(const std::vector<int>& v) const {
    if (!grading_) return 0;
    long g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) g += (*grading_)[k] * v[k];
    return g;
  }

  bool feasible_signs(std::size_t idx, const std::vector<int>& residual) const {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (residual[k] > 0 && !pos_[idx][k]) return false;
      if (residual[k] < 0 && !neg_[idx][k]) return false;
    }
    return true;
  }

  static bool is_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  }

  bool dfs(std::size_t idx, std::vector<int>& residual, long grade, int degree) {
    if (++nodes_ > budget_.max_nodes) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "cone membership search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
    if (is_zero(residual)) {
      std::fill(multiplicity_.begin() + static_cast<std::ptrdiff_t>(idx), multiplicity_.end(), 0);
      return true;
    }
    if (idx == basis_.size()) return false;
    if (grading_ && grade <= 0) return false;
    if (!grading_ && all_nonnegative_degree_ && degree < 0) return false;
    if (!feasible_signs(idx, residual)) return false;

    std::vector<int> key(residual);
    key.push_back(static_cast<int>(idx));
    if (failed_.count(key) != 0) return false;

    const auto& b = basis_[idx].exponents();
    int upper;
    if (grading_) {
      upper = static_cast<int>(grade / grade_[idx]);
    } else if (all_nonnegative_degree_ && basis_[idx].degree() > 0) {
      upper = degree / basis_[idx].degree();
    } else {
      upper = cap_;
      truncated_ = true;
    }

    for (int m = upper; m >= 0; --m) {
      for (std::size_t k = 0; k < dim_; ++k) residual[k] -= m * b[k];
      multiplicity_[idx] = m;
      const bool found = dfs(idx + 1, residual, grade - m * (grading_ ? grade_[idx] : 0),
                             degree - m * basis_[idx].degree());
      for (std::size_t k = 0; k < dim_; ++k) residual[k] += m * b[k];
      if (found) return true;
    }
    multiplicity_[idx] = 0;
    failed_.insert(std::move(key));
    return false;
  }

  std::span<const LaurentMonomial> basis_;
  const std::vector<long>* grading_;
  SearchBudget budget_;
  std::size_t dim_ = 0;
  std::vector<std::vector<char>> pos_, neg_;
  std::vector<long> grade_;
  bool all_nonnegative_degree_ = true;
  int cap_ = 0;
  bool truncated_ = false;
  std::size_t nodes_ = 0;
  std::vector<int> multiplicity_;
  std::unordered_set<std::vector<int>, StateHash> failed_;
};

std::optional<std::vector<long>> grading_for(std::span<const LaurentMonomial> vectors) {
  if (vectors.empty()) return std::nullopt;
  std::vector<std::vector<int>> raw;
  raw.reserve(vectors.size());
  for (const auto& v : vectors) raw.push_back(v.exponents());
  return lp::positive_grading(raw, vectors.front().size());
}

std::optional<std::vector<int>> search(const LaurentMonomial& target, std::span<const LaurentMonomial> basis,
                                       const std::vector<long>* grading, const SearchBudget& budget) {
  ConeSearch s(basis, grading, budget);
  return s.run(target);
}

}  // namespace

std::optional<std::vector<int>> cone_membership(const LaurentMonomial& target,
                                                std::span<const LaurentMonomial> basis,
                                                const SearchBudget& budget) {
  auto grading = grading_for(basis);
  return search(target, basis, grading ? &*grading : nullptr, budget);
}

std::vector<LaurentMonomial> minimal_algebra_generators(const ChartAlgebra& algebra,
                                                        const SearchBudget& budget) {
  const auto& gens = algebra.generators();
  // A grading positive on all of U is positive on every subset.
  auto grading = grading_for(gens);
  const std::vector<long>* w = grading ? &*grading : nullptr;

  std::vector<LaurentMonomial> kept, dropped;
  std::vector<LaurentMonomial> others;
  others.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (search(gens[i], others, w, budget)) {
      dropped.push_back(gens[i]);
    } else {
      kept.push_back(gens[i]);
    }
  }
  for (const auto& d : dropped) {
    if (!search(d, kept, w, budget)) {
      throw Error(ErrorCode::UniquenessViolation,
                  "a redundant chart generator is not generated by the surviving set");
    }
  }
  if (w && kept.size() < algebra.ambient()) {
    throw Error(ErrorCode::VerificationFailed, "minimal chart generating set is smaller than n");
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

ChartVerdict regularity_at_vertex(const MonomialIdeal& ideal, std::size_t center,
                                  const SearchBudget& budget) {
  ChartAlgebra algebra = chart(ideal, ideal.generators().at(center));
  auto minimal = minimal_algebra_generators(algebra, budget);
  const bool regular = minimal.size() == ideal.ambient();
  return ChartVerdict{regular, center, std::move(algebra), std::move(minimal)};
}

ChartVerdict is_chart_regular(const MonomialIdeal& ideal, const Monomial& u, const SearchBudget& budget) {
  const auto cert = newton::is_vertex(ideal, u);
  if (!cert.is_vertex()) {
    throw Error(ErrorCode::NotAVertex, "the chart regularity criterion only applies at vertices of N(I)");
  }
  return regularity_at_vertex(ideal, cert.generator, budget);
}

}  // namespace tame::charts
