#include "tame/rees.hpp"

#include <algorithm>

namespace tame::rees {

PartitionedClutter::PartitionedClutter(Clutter clutter, std::vector<VertexSet> parts)
    : clutter_(std::move(clutter)), parts_(std::move(parts)) {
  VertexSet seen = 0;
  for (VertexSet p : parts_) {
    if (p == 0 || (seen & p) != 0) throw Error(ErrorCode::InvalidPartition, "parts must be nonempty and disjoint");
    seen |= p;
  }
  if (seen != clutter_.non_isolated()) {
    throw Error(ErrorCode::InvalidPartition, "parts must cover exactly the non-isolated vertices");
  }
  std::size_t expected = 1;
  for (VertexSet p : parts_) expected *= vset::size(p);
  for (VertexSet c : clutter_.circuits()) {
    for (VertexSet p : parts_) {
      if (vset::size(c & p) != 1) {
        throw Error(ErrorCode::InvalidPartition, "every circuit must meet every part exactly once");
      }
    }
  }
  if (clutter_.size() != expected) {
    throw Error(ErrorCode::InvalidPartition, "clutter is not complete for the partition");
  }
}

PartitionedClutter PartitionedClutter::from_clutter(const Clutter& clutter) {
  auto check = tameness::complete_d_partite(clutter);
  if (!check.parts) {
    throw Error(ErrorCode::NotTame, "clutter is not complete d-partite: " + check.failed_check);
  }
  return PartitionedClutter(clutter, std::move(*check.parts));
}

std::size_t PartitionedClutter::part_of(std::size_t v) const {
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    if (vset::contains(parts_[p], v)) return p;
  }
  throw Error(ErrorCode::VertexNotPartitioned, "vertex " + std::to_string(v + 1) + " lies in no part");
}

std::size_t PartitionedClutter::representative(VertexSet e, std::size_t j) const {
  const VertexSet hit = e & parts_[part_of(j)];
  if (vset::size(hit) != 1) throw Error(ErrorCode::InvalidPartition, "set does not meet the part exactly once");
  return vset::lowest(hit);
}

std::size_t PartitionedClutter::index(VertexSet e) const {
  auto k = clutter_.index_of(e);
  if (!k) throw Error(ErrorCode::CircuitNotInClutter, "set is not a circuit of the clutter");
  return *k;
}

int ReesTerm::t_degree() const {
  int d = 0;
  for (const auto& [k, e] : t) d += e;
  return d;
}

std::strong_ordering compare_terms(const ReesTerm& a, const ReesTerm& b) {
  auto ia = a.t.begin(), ib = b.t.begin();
  // Dense comparison over circuit indices; absent keys are zero.
  while (ia != a.t.end() || ib != b.t.end()) {
    if (ib == b.t.end() || (ia != a.t.end() && ia->first < ib->first)) return std::strong_ordering::greater;
    if (ia == a.t.end() || ib->first < ia->first) return std::strong_ordering::less;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
    ++ia;
    ++ib;
  }
  return a.x.exponents() <=> b.x.exponents();
}

bool ReesBinomial::is_trivial() const { return compare_terms(lead, trail) == 0; }

bool operator==(const ReesBinomial& a, const ReesBinomial& b) {
  return compare_terms(a.lead, b.lead) == 0 && compare_terms(a.trail, b.trail) == 0;
}

std::strong_ordering operator<=>(const ReesBinomial& a, const ReesBinomial& b) {
  if (auto c = compare_terms(a.lead, b.lead); c != 0) return c;
  return compare_terms(a.trail, b.trail);
}

ReesBinomial make_binomial(ReesTerm a, ReesTerm b) {
  if (compare_terms(a, b) < 0) std::swap(a, b);
  a.sign = 1;
  b.sign = -1;
  return ReesBinomial{std::move(a), std::move(b)};
}

namespace detail {

ReesTerm term(const Monomial& x, std::initializer_list<std::size_t> ts) {
  ReesTerm out{1, x, {}};
  for (std::size_t k : ts) ++out.t[k];
  return out;
}

std::vector<ReesBinomial> finish(std::vector<ReesBinomial> out) {
  out.erase(std::remove_if(out.begin(), out.end(), [](const ReesBinomial& b) { return b.is_trivial(); }),
            out.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ReesBinomial> linear_generators(const PartitionedClutter& pc) {
  std::vector<ReesBinomial> out;
  const auto& circuits = pc.clutter().circuits();
  const std::size_t n = pc.ambient();
  const VertexSet active = pc.clutter().non_isolated();
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    const VertexSet e = circuits[a];
    for (std::size_t i : vset::members(active & ~e)) {
      const std::size_t r = pc.representative(e, i);
      const std::size_t swapped = pc.index(swap_circuit(pc, e, i));
      out.push_back(make_binomial(term(Monomial::variable(n, i), {a}), term(Monomial::variable(n, r), {swapped})));
    }
  }
  return out;
}

}  // namespace detail

VertexSet swap_circuit(const PartitionedClutter& pc, VertexSet e, std::size_t j) {
  const std::size_t v = pc.representative(e, j);
  return (e & ~vset::single(v)) | vset::single(j);
}

std::size_t default_swap_vertex(const PartitionedClutter& pc, VertexSet e, VertexSet e_prime) {
  for (VertexSet p : pc.parts()) {
    if ((e & p) != (e_prime & p)) return vset::lowest(e & p);
  }
  throw Error(ErrorCode::InvalidPartition, "circuits agree on every part");
}

std::vector<ReesBinomial> rees_generators(const PartitionedClutter& pc) {
  std::vector<ReesBinomial> out;
  for (std::size_t pick = 0; pick < pc.parts().size(); ++pick) {
    auto choose = [pick](const PartitionedClutter& p, VertexSet e, VertexSet f) {
      std::vector<std::size_t> admissible;
      for (VertexSet part : p.parts()) {
        if ((e & part) != (f & part)) admissible.push_back(vset::lowest(e & part));
      }
      return admissible[pick % admissible.size()];
    };
    auto gens = rees_generators_with(pc, choose);
    out.insert(out.end(), gens.begin(), gens.end());
  }
  return detail::finish(std::move(out));
}

std::vector<ReesBinomial> chart_ideal(const PartitionedClutter& pc, VertexSet e) {
  const std::size_t self = pc.index(e);
  const std::size_t n = pc.ambient();
  const Monomial one = Monomial::one(n);
  std::vector<ReesBinomial> out;
  for (std::size_t i : vset::members(pc.clutter().non_isolated() & ~e)) {
    const std::size_t r = pc.representative(e, i);
    out.push_back(make_binomial(detail::term(Monomial::variable(n, i), {}),
                                detail::term(Monomial::variable(n, r), {pc.index(swap_circuit(pc, e, i))})));
  }
  const auto& circuits = pc.clutter().circuits();
  for (std::size_t b = 0; b < circuits.size(); ++b) {
    const VertexSet f = circuits[b];
    if (b == self || vset::size(f & ~e) <= 1) continue;
    const std::size_t j = default_swap_vertex(pc, e, f);
    const std::size_t jp = pc.representative(f, j);
    out.push_back(make_binomial(
        detail::term(one, {b}),
        detail::term(one, {pc.index(swap_circuit(pc, e, jp)), pc.index(swap_circuit(pc, f, j))})));
  }
  return detail::finish(std::move(out));
}

std::vector<ReesBinomial> dehomogenize(std::span<const ReesBinomial> gens, std::size_t circuit_index) {
  std::vector<ReesBinomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    ReesTerm a = g.lead, b = g.trail;
    a.t.erase(circuit_index);
    b.t.erase(circuit_index);
    out.push_back(make_binomial(std::move(a), std::move(b)));
  }
  return detail::finish(std::move(out));
}

bool chart_contained_in_dehomogenization(const PartitionedClutter& pc, VertexSet e) {
  const auto chart = chart_ideal(pc, e);
  const auto gens = rees_generators(pc);
  const auto dehom = dehomogenize(gens, pc.index(e));
  return std::all_of(chart.begin(), chart.end(), [&dehom](const ReesBinomial& b) {
    return std::binary_search(dehom.begin(), dehom.end(), b);
  });
}

namespace {

bool term_image(const ReesTerm& term, std::span<const Monomial> images, std::vector<int>& out) {
  out = term.x.exponents();
  for (const auto& [k, e] : term.t) {
    if (k >= images.size() || images[k].size() != out.size()) return false;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += e * images[k][i];
  }
  return true;
}

std::vector<Monomial> circuit_images(const PartitionedClutter& pc) {
  std::vector<Monomial> images;
  for (VertexSet c : pc.clutter().circuits()) images.push_back(Monomial::from_set(pc.ambient(), c));
  return images;
}

}  // namespace

bool verify_rees(std::span<const ReesBinomial> gens, std::span<const Monomial> images) {
  std::vector<int> a, b;
  for (const auto& g : gens) {
    if (g.lead.x.size() != g.trail.x.size()) return false;
    if (!term_image(g.lead, images, a) || !term_image(g.trail, images, b)) return false;
    if (a != b || g.lead.t_degree() != g.trail.t_degree()) return false;
  }
  return true;
}

bool verify_rees(std::span<const ReesBinomial> gens, const PartitionedClutter& pc) {
  const auto images = circuit_images(pc);
  return verify_rees(gens, images);
}

bool vanishes_on_chart(const ReesBinomial& b, const PartitionedClutter& pc, VertexSet e) {
  const auto& circuits = pc.clutter().circuits();
  const VertexSet base = circuits[pc.index(e)];
  auto image = [&](const ReesTerm& term) {
    std::vector<int> out(term.x.exponents());
    for (const auto& [k, m] : term.t) {
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += m * (static_cast<int>(vset::contains(circuits.at(k), i)) - static_cast<int>(vset::contains(base, i)));
      }
    }
    return out;
  };
  return image(b.lead) == image(b.trail);
}

FiberSplit fiber_type_split(std::span<const ReesBinomial> gens) {
  FiberSplit out;
  for (const auto& g : gens) {
    if (g.lead.t_degree() == 1 && g.trail.t_degree() == 1) {
      out.linear.push_back(g);
    } else if (g.lead.x.degree() == 0 && g.trail.x.degree() == 0) {
      out.fiber.push_back(g);
    } else {
      throw Error(ErrorCode::MixedGenerator, "binomial is neither T-linear nor a pure T relation");
    }
  }
  return out;
}

ReesSystem rees_equations(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  if (ideal.is_squarefree()) {
    const Clutter clutter = ideal_to_clutter(ideal);
    PartitionedClutter pc = PartitionedClutter::from_clutter(clutter);
    auto images = circuit_images(pc);
    auto gens = rees_generators(pc);
    if (!verify_rees(gens, images)) throw Error(ErrorCode::VerificationFailed, "emitted Rees relation does not vanish");
    return ReesSystem{std::move(pc), std::move(images), std::move(gens)};
  }
  if (ideal.max_degree() > 2) {
    throw Error(ErrorCode::Unsupported, "Rees equations are emitted for squarefree and degree <= 2 tame ideals only");
  }
  const auto c = tameness::classify_deg2(ideal);
  VertexSet f = 0;
  std::size_t center = 0;
  if (const auto* star = std::get_if<tameness::LoopedStar>(&c)) {
    f = star->f;
    center = star->center;
  } else if (const auto* sq = std::get_if<tameness::PrimeSquare>(&c); sq && vset::size(sq->f) == 1) {
    // (x_i^2) = x_i P_{i}
    f = sq->f;
    center = vset::lowest(f);
  } else if (std::holds_alternative<tameness::PrimeSquare>(c)) {
    throw Error(ErrorCode::Unsupported, "Rees equations of P_F^2 are not emitted");
  } else if (std::holds_alternative<tameness::NestedProduct>(c)) {
    throw Error(ErrorCode::Unsupported, "Rees equations of nested prime products are not emitted");
  } else if (tameness::is_tame(c)) {
    throw Error(ErrorCode::Unsupported, "Rees equations are emitted for squarefree ideals and looped stars only");
  } else {
    throw Error(ErrorCode::NotTame, "ideal is not tame: " + std::get<tameness::NotTameDeg2>(c).reason);
  }
  // x_i P_F shares the relations of P_F; T_k stands for x_i x_{j_k}.
  std::vector<VertexSet> singletons;
  for (std::size_t v : vset::members(f)) singletons.push_back(vset::single(v));
  PartitionedClutter pc(Clutter(n, singletons), {f});
  std::vector<Monomial> images;
  for (VertexSet s : pc.clutter().circuits()) {
    images.push_back(Monomial::from_set(n, s) * Monomial::variable(n, center));
  }
  auto gens = rees_generators(pc);
  if (!verify_rees(gens, images)) throw Error(ErrorCode::VerificationFailed, "emitted Rees relation does not vanish");
  return ReesSystem{std::move(pc), std::move(images), std::move(gens)};
}

}  // namespace tame::rees
