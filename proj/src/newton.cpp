#include "tame/newton.hpp"

#include <algorithm>

namespace tame::newton {

namespace {

VertexCertificate test_generator(const MonomialIdeal& ideal, std::size_t j) {
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.ambient();
  const std::size_t s = gens.size();
  VertexCertificate cert;
  cert.generator = j;
  if (s == 1) return cert;

  // Columns: lambda_i for i != j (s - 1 of them), then mu_k.
  const std::size_t cols = (s - 1) + n;
  lp::Matrix a(n + 1, std::vector<lp::Rational>(cols));
  std::vector<lp::Rational> b(n + 1);
  std::size_t col = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (i == j) continue;
    for (std::size_t k = 0; k < n; ++k) a[k][col] = gens[i][k];
    a[n][col] = 1;
    ++col;
  }
  for (std::size_t k = 0; k < n; ++k) {
    a[k][(s - 1) + k] = 1;
    b[k] = gens[j][k];
  }
  b[n] = 1;

  auto z = lp::find_feasible_point(a, b);
  if (!z) return cert;

  cert.verdict = Verdict::NotVertex;
  cert.lambda.assign(s, lp::Rational(0));
  col = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (i == j) continue;
    cert.lambda[i] = (*z)[col++];
  }
  cert.mu.assign(z->begin() + static_cast<std::ptrdiff_t>(s - 1), z->end());
  return cert;
}

}  // namespace

VertexCertificate is_vertex(const MonomialIdeal& ideal, const Monomial& g) {
  auto j = ideal.index_of(g);
  if (!j) throw Error(ErrorCode::NotAGenerator, "monomial is not a minimal generator of the ideal");
  return test_generator(ideal, *j);
}

bool verify_certificate(const MonomialIdeal& ideal, const VertexCertificate& cert) {
  if (cert.is_vertex()) return true;
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.ambient();
  if (cert.lambda.size() != gens.size() || cert.mu.size() != n) return false;
  if (cert.lambda[cert.generator] != 0) return false;
  lp::Rational total = 0;
  for (const auto& l : cert.lambda) {
    if (l < 0) return false;
    total += l;
  }
  if (total != 1) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (cert.mu[k] < 0) return false;
    lp::Rational coord = cert.mu[k];
    for (std::size_t i = 0; i < gens.size(); ++i) coord += cert.lambda[i] * gens[i][k];
    if (coord != gens[cert.generator][k]) return false;
  }
  return true;
}

std::vector<std::size_t> vertex_generators(const MonomialIdeal& ideal, bool force_lp) {
  const auto& gens = ideal.generators();
  std::vector<std::size_t> out;
  if (!force_lp && ideal.is_squarefree()) {
    for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(i);
    return out;
  }
  if (!force_lp && ideal.max_degree() <= 2) {
    const std::size_t n = ideal.ambient();
    std::vector<bool> square(n, false);
    for (const auto& g : gens) {
      for (std::size_t k = 0; k < n; ++k) {
        if (g[k] == 2) square[k] = true;
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& g = gens[i];
      if (g.degree() == 2 && g.is_squarefree()) {
        const auto vars = vset::members(g.support());
        if (square[vars[0]] && square[vars[1]]) continue;
      }
      out.push_back(i);
    }
    return out;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (test_generator(ideal, i).is_vertex()) out.push_back(i);
  }
  return out;
}

}  // namespace tame::newton
