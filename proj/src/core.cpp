#include "tame/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace tame {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotAGenerator: return "NotAGenerator";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::CircuitNotInClutter: return "CircuitNotInClutter";
    case ErrorCode::VertexNotPartitioned: return "VertexNotPartitioned";
    case ErrorCode::InvalidClutter: return "InvalidClutter";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotTame: return "NotTame";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::MixedGenerator: return "MixedGenerator";
    case ErrorCode::UniquenessViolation: return "UniquenessViolation";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::MixedGenerator:
    case ErrorCode::UniquenessViolation:
    case ErrorCode::VerificationFailed:
    case ErrorCode::OracleDisagreement:
      return true;
    default:
      return false;
  }
}

namespace vset {

VertexSet of(std::initializer_list<std::size_t> vertices) {
  VertexSet s = 0;
  for (std::size_t v : vertices) s |= single(v);
  return s;
}

std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  out.reserve(size(s));
  while (s != 0) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (diff == 0) return false;
  const std::size_t t = lowest(diff);
  // Below t both sequences agree; the one holding t continues with t.
  const VertexSet above = t + 1 >= kMaxVertices ? 0 : ~vset::full(t + 1);
  if (contains(a, t)) return (b & above) != 0;
  return (a & above) == 0;
}

void sort_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    const auto sa = size(a), sb = size(b);
    return sa != sb ? sa < sb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](VertexSet k) { return is_subset(k, s); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

}  // namespace vset

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw Error(ErrorCode::NegativeExponent, "monomial exponents must be nonnegative");
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i, int exponent) {
  std::vector<int> e(n, 0);
  e.at(i) = exponent;
  return Monomial(std::move(e));
}

Monomial Monomial::from_set(std::size_t n, VertexSet f) {
  if (n < kMaxVertices && (f >> n) != 0) {
    throw Error(ErrorCode::LengthMismatch, "vertex set exceeds the ambient variable count");
  }
  std::vector<int> e(n, 0);
  for (std::size_t v : vset::members(f)) e[v] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  if (exponents_.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVariables, "vertex sets hold at most 64 variables");
  }
  VertexSet s = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) s |= vset::single(i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw Error(ErrorCode::LengthMismatch, "monomial length mismatch");
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error(ErrorCode::VerificationFailed, "monomial does not divide");
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::make(std::size_t n, std::vector<Monomial> raw) {
  if (n == 0) throw Error(ErrorCode::LengthMismatch, "ambient variable count must be positive");
  if (raw.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "an ideal needs at least one generator");
  for (const Monomial& m : raw) {
    if (m.size() != n) {
      throw Error(ErrorCode::LengthMismatch,
                  "generator has " + std::to_string(m.size()) + " exponents, expected " +
                      std::to_string(n));
    }
    if (m.is_one()) throw Error(ErrorCode::UnitIdeal, "the monomial 1 generates the unit ideal");
  }
  // Sorting by degree first means a divisor is always seen before its
  // multiples.
  std::sort(raw.begin(), raw.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Monomial> kept;
  for (Monomial& m : raw) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&m](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return MonomialIdeal(n, std::move(kept));
}

MonomialIdeal MonomialIdeal::prime(std::size_t n, VertexSet f) {
  std::vector<Monomial> gens;
  for (std::size_t v : vset::members(f)) {
    if (v >= n) throw Error(ErrorCode::LengthMismatch, "prime support exceeds ambient size");
    gens.push_back(Monomial::variable(n, v));
  }
  return make(n, std::move(gens));
}

std::optional<std::size_t> MonomialIdeal::index_of(const Monomial& m) const {
  auto it = std::find(gens_.begin(), gens_.end(), m);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&m](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

int MonomialIdeal::min_degree() const {
  int d = gens_.front().degree();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return d;
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::LengthMismatch, "ideals live in different rings");
  std::vector<Monomial> prod;
  prod.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) prod.push_back(a * b);
  }
  return make(n_, std::move(prod));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::LengthMismatch, "ideals live in different rings");
  std::vector<Monomial> all(gens_);
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return make(n_, std::move(all));
}

MonomialIdeal MonomialIdeal::scaled(const Monomial& u) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g * u);
  return make(n_, std::move(out));
}

// ---------------------------------------------------------------------------
// Clutter

Clutter::Clutter(std::size_t n, std::vector<VertexSet> circuits) : n_(n) {
  if (n == 0 || n > kMaxVertices) {
    throw Error(ErrorCode::InvalidClutter, "clutter vertex count must be in [1, 64]");
  }
  const VertexSet all = vset::full(n);
  for (VertexSet c : circuits) {
    if (c == 0) throw Error(ErrorCode::InvalidClutter, "circuits must be nonempty");
    if (!vset::is_subset(c, all)) throw Error(ErrorCode::InvalidClutter, "circuit vertex out of range");
  }
  vset::sort_unique(circuits);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && vset::is_subset(circuits[i], circuits[j])) {
        throw Error(ErrorCode::InvalidClutter, "circuits must be pairwise incomparable");
      }
    }
  }
  circuits_ = std::move(circuits);
}

std::optional<std::size_t> Clutter::index_of(VertexSet circuit) const {
  auto it = std::lower_bound(circuits_.begin(), circuits_.end(), circuit, vset::lex_less);
  if (it == circuits_.end() || *it != circuit) return std::nullopt;
  return static_cast<std::size_t>(it - circuits_.begin());
}

VertexSet Clutter::non_isolated() const {
  VertexSet s = 0;
  for (VertexSet c : circuits_) s |= c;
  return s;
}

bool Clutter::is_uniform() const {
  if (circuits_.empty()) return true;
  const auto d = vset::size(circuits_.front());
  return std::all_of(circuits_.begin(), circuits_.end(),
                     [d](VertexSet c) { return vset::size(c) == d; });
}

VertexSet Clutter::open_neighborhood(VertexSet a) const {
  VertexSet out = 0;
  for (VertexSet c : circuits_) {
    if (vset::is_subset(a, c)) out |= c;
  }
  return out & ~a & vset::full(n_);
}

VertexSet open_neighborhood(const Clutter& clutter, VertexSet a) { return clutter.open_neighborhood(a); }

// ---------------------------------------------------------------------------
// Squarefree conversions

namespace {

void require_squarefree(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) {
    throw Error(ErrorCode::NotSquarefree, "operation requires a squarefree monomial ideal");
  }
  if (ideal.ambient() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVariables, "squarefree operations support at most 64 variables");
  }
}

}  // namespace

Clutter ideal_to_clutter(const MonomialIdeal& ideal) {
  require_squarefree(ideal);
  std::vector<VertexSet> circuits;
  circuits.reserve(ideal.size());
  for (const auto& g : ideal.generators()) circuits.push_back(g.support());
  return Clutter(ideal.ambient(), std::move(circuits));
}

MonomialIdeal clutter_to_ideal(const Clutter& clutter) {
  std::vector<Monomial> gens;
  gens.reserve(clutter.size());
  for (VertexSet c : clutter.circuits()) gens.push_back(Monomial::from_set(clutter.ambient(), c));
  return MonomialIdeal::make(clutter.ambient(), std::move(gens));
}

std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> sets) {
  std::vector<VertexSet> covers{0};
  for (VertexSet e : sets) {
    std::vector<VertexSet> next;
    next.reserve(covers.size() * 2);
    for (VertexSet c : covers) {
      if ((c & e) != 0) {
        next.push_back(c);
        continue;
      }
      for (std::size_t v : vset::members(e)) next.push_back(c | vset::single(v));
    }
    covers = vset::minimal_elements(std::move(next));
  }
  vset::sort_unique(covers);
  return covers;
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal) {
  const Clutter clutter = ideal_to_clutter(ideal);
  return minimal_transversals(clutter.circuits());
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  SimplicialComplex complex{ideal.ambient(), {}};
  const VertexSet all = vset::full(ideal.ambient());
  for (VertexSet f : minimal_primes(ideal)) complex.facets.push_back(all & ~f);
  return complex;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  // A set is a non-face iff it meets the complement of every facet.
  const VertexSet all = vset::full(complex.n);
  std::vector<VertexSet> complements;
  for (VertexSet f : complex.facets) complements.push_back(all & ~f);
  std::vector<Monomial> gens;
  for (VertexSet g : minimal_transversals(complements)) gens.push_back(Monomial::from_set(complex.n, g));
  return MonomialIdeal::make(complex.n, std::move(gens));
}

PolarizationResult polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  std::vector<int> alpha(n, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) alpha[i] = std::max(alpha[i], g[i]);
  }
  // Slot (i, j) for j = 2..alpha_i gets index offset[i] + (j - 2).
  std::vector<std::size_t> offset(n, 0);
  std::vector<std::pair<std::size_t, int>> var_map;
  std::size_t next = n;
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = next;
    for (int j = 2; j <= alpha[i]; ++j) {
      var_map.emplace_back(i, j);
      ++next;
    }
  }
  const std::size_t extended = next;
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(extended, 0);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = std::min(g[i], 1);
      for (int j = 2; j <= g[i]; ++j) e[offset[i] + static_cast<std::size_t>(j - 2)] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  PolarizationResult out{MonomialIdeal::make(extended, std::move(gens)), n, std::move(var_map)};
  if (out.ideal.size() != ideal.size()) {
    throw Error(ErrorCode::VerificationFailed, "polarization changed the generator count");
  }
  return out;
}

Monomial depolarize(const PolarizationResult& polarization, const Monomial& m) {
  const std::size_t n = polarization.source_ambient;
  if (m.size() != n + polarization.var_map.size()) {
    throw Error(ErrorCode::LengthMismatch, "monomial is not in the polarized ring");
  }
  std::vector<int> e(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = 0; k < polarization.var_map.size(); ++k) {
    e[polarization.var_map[k].first] += m[n + k];
  }
  return Monomial(std::move(e));
}

}  // namespace tame
