#pragma once

// Vertex tests against the Newton polyhedron N(I) = conv(exponents of G(I)) +
// the nonnegative orthant.

#include <vector>

#include "tame/core.hpp"
#include "tame/lp.hpp"

namespace tame::newton {

enum class Verdict { Vertex, NotVertex };

struct VertexCertificate {
  Verdict verdict = Verdict::Vertex;
  std::size_t generator = 0;
  /// NotVertex only: weights over G(I), zero at `generator`, summing to one.
  std::vector<lp::Rational> lambda;
  /// NotVertex only: multipliers of the n coordinate rays.
  std::vector<lp::Rational> mu;

  bool is_vertex() const { return verdict == Verdict::Vertex; }
};

/// Decides whether `g` is a vertex of N(I) by exact LP feasibility of
///   sum_{i != j} lambda_i a_i + mu = a_j,  sum lambda_i = 1,  lambda, mu >= 0.
/// Throws NotAGenerator unless g is in G(I).
VertexCertificate is_vertex(const MonomialIdeal& ideal, const Monomial& g);

/// Substitutes a NotVertex witness back into the system exactly.
bool verify_certificate(const MonomialIdeal& ideal, const VertexCertificate& cert);

/// Indices into G(I) of the generators that are vertices of N(I). Uses the
/// squarefree and degree <= 2 shortcuts unless `force_lp` is set.
std::vector<std::size_t> vertex_generators(const MonomialIdeal& ideal, bool force_lp = false);

}  // namespace tame::newton
