#include "starlab/order.hpp"

#include <algorithm>

namespace starlab {

namespace {

using Side = AnnihilatorResult::Side;

ElementId id(std::size_t i) { return ElementId{static_cast<std::uint32_t>(i)}; }

// Least element of `set` under the relation whose up-sets are `up`.
std::optional<ElementId> least_of(const Bits& set, const std::vector<Bits>& up) {
  for (auto u = set.find_first(); u != Bits::npos; u = set.find_next(u))
    if (set.is_subset_of(up[u])) return id(u);
  return std::nullopt;
}

Relation transpose(const Relation& rel) {
  const auto n = rel.size();
  Relation out{std::vector<Bits>(n, Bits(n))};
  for (std::size_t a = 0; a < n; ++a)
    for (auto b = rel.rows[a].find_first(); b != Bits::npos; b = rel.rows[a].find_next(b))
      out.rows[b].set(a);
  return out;
}

OrderDiagnostics diagnose(const Relation& leq) {
  const auto n = leq.size();
  OrderDiagnostics diag;
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq.rows[a].test(a)) {
      diag.reflexive = CheckResult::fail({id(a)});
      break;
    }
  }
  for (std::size_t a = 0; a < n && diag.antisymmetric; ++a) {
    const auto& up = leq.rows[a];
    for (auto b = up.find_first(); b != Bits::npos; b = up.find_next(b)) {
      if (b != a && leq.rows[b].test(a)) {
        diag.antisymmetric = CheckResult::fail({id(a), id(b)});
        break;
      }
    }
  }
  for (std::size_t a = 0; a < n && diag.transitive; ++a) {
    const auto& up = leq.rows[a];
    for (auto b = up.find_first(); b != Bits::npos; b = up.find_next(b)) {
      const auto c = (leq.rows[b] - up).find_first();
      if (c != Bits::npos) {
        diag.transitive = CheckResult::fail({id(a), id(b), id(c)});
        break;
      }
    }
  }
  return diag;
}

}  // namespace

bool leq_bruteforce(const StarRing& ring, ElementId a, ElementId b) {
  return std::ranges::all_of(
      ring.elements(), [&](ElementId r) { return ring.mul(a, r, b) == ring.mul(a, r, a); });
}

bool leq_star_bruteforce(const StarRing& ring, ElementId a, ElementId b) {
  const auto as = ring.star(a);
  return std::ranges::all_of(
      ring.elements(), [&](ElementId r) { return ring.mul(as, r, b) == ring.mul(as, r, a); });
}

bool leq_cover(const StarRing& ring, const CentralCoverTable& covers, ElementId a, ElementId b) {
  return a == ring.mul(covers.at(a), b);
}

bool orthogonal(const StarRing& ring, ElementId a, ElementId b) {
  return std::ranges::all_of(
      ring.elements(), [&](ElementId r) { return ring.mul(a, r, b) == ring.zero(); });
}

OrderStructure build_order(const StarRing& ring) {
  const auto n = ring.order();
  OrderStructure out;
  out.label = ring.label();
  out.order = n;
  out.leq.rows.assign(n, Bits(n));
  parallel_for(n, [&](std::size_t i) {
    const auto a = id(i);
    std::vector<ElementId> ar(n), ara(n);
    for (auto r : ring.elements()) {
      ar[r.index()] = ring.mul(a, r);
      ara[r.index()] = ring.mul(ar[r.index()], a);
    }
    for (auto b : ring.elements()) {
      bool below = true;
      for (std::size_t r = 0; r < n && below; ++r) below = ring.mul(ar[r], b) == ara[r];
      if (below) out.leq.rows[i].set(b.index());
    }
  });
  out.diagnostics = diagnose(out.leq);
  out.cub.rows.assign(n, Bits(n));
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      if (out.leq.rows[a].intersects(out.leq.rows[b])) out.cub.rows[a].set(b);
  });
  out.covers = cover_table(ring);
  return out;
}

ConradOrder::ConradOrder(const StarRing& ring)
    : ring_(ring), report_(classify(ring)), structure_(build_order(ring)) {
  const auto n = ring.order();
  lower_ = transpose(structure_.leq).rows;
  right_ideals_ = detail::principal_ideals(ring, Side::right);
  left_ideals_ = detail::principal_ideals(ring, Side::left);
  const auto right_single = detail::element_annihilators(ring, Side::right);
  orth_.assign(n, Bits(n));
  // a ⊥ b ⇔ b ∈ r(aR) = ∩_{s ∈ aR} r({s})
  parallel_for(n, [&](std::size_t a) {
    orth_[a].set();
    const auto& ideal = right_ideals_[a];
    for (auto s = ideal.find_first(); s != Bits::npos; s = ideal.find_next(s))
      orth_[a] &= right_single[s];
  });
}

void ConradOrder::require_pq_baer(const char* operation) const {
  if (!pq_baer()) {
    throw PreconditionError(std::string(operation) + " requires a p.q.-Baer * ring; " +
                            ring_.label() + " is not");
  }
}

void ConradOrder::require_covers(const char* operation) const {
  if (!covers().complete()) {
    throw PreconditionError(std::string(operation) + " requires central covers for every element");
  }
}

bool ConradOrder::has_cub(ElementId a, ElementId b) const {
  const bool formula = ring_.mul(a, cover(b)) == ring_.mul(b, cover(a));
  if (pq_baer() && formula != structure_.cub(a, b)) {
    throw TheoremViolation("a·C(b) = b·C(a) disagrees with common-upper-bound existence", {a, b});
  }
  return formula;
}

std::optional<ElementId> ConradOrder::greatest_lower_bound(ElementId a, ElementId b) const {
  return least_of(lower_[a.index()] & lower_[b.index()], lower_);
}

std::optional<ElementId> ConradOrder::least_upper_bound(ElementId a, ElementId b) const {
  return least_of(upper_set(a) & upper_set(b), structure_.leq.rows);
}

std::optional<ElementId> ConradOrder::meet(ElementId a, ElementId b) const {
  if (!has_cub(a, b)) return std::nullopt;
  const auto candidate = ring_.mul(a, cover(b));
  const Bits common = lower_[a.index()] & lower_[b.index()];
  if (!common.test(candidate.index()) || !common.is_subset_of(lower_[candidate.index()])) {
    throw TheoremViolation("a·C(b) is not the greatest lower bound", {a, b});
  }
  return candidate;
}

std::optional<ElementId> ConradOrder::join(ElementId a, ElementId b) const {
  if (!has_cub(a, b)) return std::nullopt;
  const auto candidate = ring_.sub(ring_.add(a, b), ring_.mul(a, cover(b)));
  const Bits common = upper_set(a) & upper_set(b);
  if (!common.test(candidate.index()) || !common.is_subset_of(upper_set(candidate))) {
    throw TheoremViolation("a + b − a·C(b) is not the least upper bound", {a, b});
  }
  return candidate;
}

bool ConradOrder::orthogonal(ElementId a, ElementId b) const {
  const bool direct = orth_[a.index()].test(b.index());
  if (pq_baer() && direct != (ring_.mul(cover(a), cover(b)) == ring_.zero())) {
    throw TheoremViolation("aRb = 0 disagrees with C(a)C(b) = 0", {a, b});
  }
  return direct;
}

CheckResult is_lattice(const ConradOrder& order) {
  order.require_covers("is_lattice");
  const auto& ring = order.ring();
  for (auto a : ring.elements())
    for (auto b : ring.elements())
      if (ring.mul(a, order.cover(b)) != ring.mul(b, order.cover(a))) return CheckResult::fail({a, b});
  return CheckResult::pass();
}

CheckResult is_lattice_by_order(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements())
    for (auto b : ring.elements())
      if (!order.greatest_lower_bound(a, b) || !order.least_upper_bound(a, b))
        return CheckResult::fail({a, b});
  return CheckResult::pass();
}

CheckResult is_pseudo_lattice(const ConradOrder& order) {
  order.require_covers("is_pseudo_lattice");
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      if (!order.structure().cub(a, b)) continue;
      if (!order.greatest_lower_bound(a, b) || !order.least_upper_bound(a, b))
        return CheckResult::fail({a, b});
    }
  }
  return CheckResult::pass();
}

SubtractivityResult subtractivity_check(const ConradOrder& order) {
  order.require_pq_baer("subtractivity_check");
  const auto& ring = order.ring();
  auto subtractive = [&](ElementId a, ElementId b) {
    return order.cover(ring.sub(b, a)) == ring.sub(order.cover(b), order.cover(a));
  };
  SubtractivityResult result;
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      if (order.leq(a, b) && !subtractive(a, b)) {
        result.forward = CheckResult::fail({a, b});
        break;
      }
    }
    if (!result.forward) break;
  }
  if (order.report().two_invertible) {
    result.biconditional = CheckResult::pass();
    for (auto a : ring.elements()) {
      for (auto b : ring.elements()) {
        if (order.leq(a, b) != subtractive(a, b)) {
          result.biconditional = CheckResult::fail({a, b});
          return result;
        }
      }
    }
  }
  return result;
}

OrthogonalityAxioms orthogonality_axioms(const ConradOrder& order) {
  const auto& ring = order.ring();
  OrthogonalityAxioms axioms;
  for (auto x : ring.elements()) {
    const auto& ox = order.orthogonal_set(x);
    for (auto y = ox.find_first(); y != Bits::npos; y = ox.find_next(y)) {
      if (!order.orthogonal_set(id(y)).test(x.index())) {
        axioms.symmetric = CheckResult::fail({x, id(y)});
        break;
      }
    }
    if (!axioms.symmetric) break;
  }
  for (auto x : ring.elements()) {
    const auto& up = order.upper_set(x);
    for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y)) {
      const auto z = (order.orthogonal_set(id(y)) - order.orthogonal_set(x)).find_first();
      if (z != Bits::npos) {
        axioms.downward_closed = CheckResult::fail({x, id(y), id(z)});
        break;
      }
    }
    if (!axioms.downward_closed) break;
  }
  const auto missing = (~order.orthogonal_set(ring.zero())).find_first();
  if (missing != Bits::npos) axioms.zero_orthogonal = CheckResult::fail({id(missing)});
  return axioms;
}

CheckResult ortho_join_check(const ConradOrder& order) {
  order.require_pq_baer("ortho_join_check");
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    const auto& oa = order.orthogonal_set(a);
    for (auto bi = oa.find_first(); bi != Bits::npos; bi = oa.find_next(bi)) {
      const auto b = id(bi);
      try {
        if (!order.has_cub(a, b) || order.meet(a, b) != ring.zero() ||
            order.join(a, b) != ring.add(a, b)) {
          return CheckResult::fail({a, b});
        }
      } catch (const TheoremViolation&) {
        return CheckResult::fail({a, b});
      }
    }
  }
  return CheckResult::pass();
}

ElementId orthomodular_decomposition(const ConradOrder& order, ElementId a, ElementId b) {
  if (!order.leq(a, b)) {
    throw PreconditionError("orthomodular_decomposition requires a ≤ b");
  }
  const auto& ring = order.ring();
  const auto c = ring.sub(b, a);
  if (!order.orthogonal_set(a).test(c.index()) || ring.add(a, c) != b ||
      order.least_upper_bound(a, c) != b) {
    throw TheoremViolation("b − a is not an orthogonal complement of a below b", {a, b});
  }
  return c;
}

QuasiOrthomodularResult quasi_orthomodular_check(const ConradOrder& order) {
  order.require_pq_baer("quasi_orthomodular_check");
  const auto& ring = order.ring();
  const auto n = ring.order();
  QuasiOrthomodularResult result;

  for (auto x : ring.elements()) {
    const auto& ox = order.orthogonal_set(x);
    for (auto y = ox.find_first(); y != Bits::npos; y = ox.find_next(y)) {
      if (!order.least_upper_bound(x, id(y))) {
        result.orthogonal_joins = CheckResult::fail({x, id(y)});
        break;
      }
    }
    if (!result.orthogonal_joins) break;
  }

  for (auto x : ring.elements()) {
    const auto& up = order.upper_set(x);
    const auto& ox = order.orthogonal_set(x);
    for (auto yi = up.find_first(); yi != Bits::npos; yi = up.find_next(yi)) {
      const auto y = id(yi);
      auto decomposes = [&](ElementId z) {
        return ox.test(z.index()) && order.least_upper_bound(x, z) == y;
      };
      // y − x is the expected witness; fall back to a full scan otherwise.
      bool found = decomposes(ring.sub(y, x));
      for (auto z = ox.find_first(); z != Bits::npos && !found; z = ox.find_next(z))
        found = decomposes(id(z));
      if (!found) {
        result.decomposition = CheckResult::fail({x, y});
        break;
      }
    }
    if (!result.decomposition) break;
  }

  std::vector<std::optional<ElementId>> joins(n);
  for (auto x : ring.elements()) {
    const auto& ox = order.orthogonal_set(x);
    for (auto z = ox.find_first(); z != Bits::npos; z = ox.find_next(z))
      joins[z] = order.least_upper_bound(x, id(z));
    for (auto y = ox.find_first(); y != Bits::npos; y = ox.find_next(y)) {
      for (auto z = ox.find_first(); z != Bits::npos; z = ox.find_next(z)) {
        if (joins[z] && order.leq(id(y), *joins[z]) && !order.leq(id(y), id(z))) {
          result.cancellation = CheckResult::fail({x, id(y), id(z)});
          return result;
        }
      }
    }
  }
  return result;
}

bool SegmentPoset::contains(ElementId a) const { return std::ranges::binary_search(elements, a); }

std::size_t SegmentPoset::position(ElementId a) const {
  return static_cast<std::size_t>(std::ranges::lower_bound(elements, a) - elements.begin());
}

std::optional<ElementId> SegmentPoset::join(ElementId a, ElementId b) const {
  const auto& up = leq.rows;
  if (auto i = least_of(up[position(a)] & up[position(b)], up)) return elements[i->index()];
  return std::nullopt;
}

std::optional<ElementId> SegmentPoset::meet(ElementId a, ElementId b) const {
  const auto down = transpose(leq).rows;
  if (auto i = least_of(down[position(a)] & down[position(b)], down)) return elements[i->index()];
  return std::nullopt;
}

SegmentPoset initial_segment(const ConradOrder& order, ElementId top) {
  order.require_covers("initial_segment");
  const auto& ring = order.ring();
  if (!ring.contains(top))
    throw PreconditionError("segment top " + std::to_string(top.index()) + " is not in " + ring.label());
  SegmentPoset seg;
  seg.top = top;
  seg.elements = detail::from_bits(order.lower_set(top));
  const auto s = seg.elements.size();
  seg.leq.rows.assign(s, Bits(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (order.leq(seg.elements[i], seg.elements[j])) seg.leq.rows[i].set(j);
  for (auto a : seg.elements) seg.complement.push_back(ring.sub(top, a));

  const auto& up = seg.leq.rows;
  const auto down = transpose(seg.leq).rows;
  auto pos = [&](ElementId a) { return seg.position(a); };
  auto below = [&](ElementId a, ElementId b) { return up[pos(a)].test(pos(b)); };
  auto join = [&](ElementId a, ElementId b) -> std::optional<ElementId> {
    if (auto i = least_of(up[pos(a)] & up[pos(b)], up)) return seg.elements[i->index()];
    return std::nullopt;
  };
  auto meet = [&](ElementId a, ElementId b) -> std::optional<ElementId> {
    if (auto i = least_of(down[pos(a)] & down[pos(b)], down)) return seg.elements[i->index()];
    return std::nullopt;
  };
  auto perp = [&](ElementId a) { return ring.sub(top, a); };

  auto orthocomplemented = [&]() -> CheckResult {
    if (!seg.contains(ring.zero()) || !seg.contains(top)) return CheckResult::fail({top});
    for (auto a : seg.elements)
      if (!seg.contains(perp(a))) return CheckResult::fail({a});
    for (auto a : seg.elements)
      if (!below(ring.zero(), a) || !below(a, top)) return CheckResult::fail({a});
    for (auto a : seg.elements) {
      if (meet(a, perp(a)) != ring.zero() || join(a, perp(a)) != top) return CheckResult::fail({a});
      if (perp(perp(a)) != a) return CheckResult::fail({a});
    }
    for (auto a : seg.elements)
      for (auto b : seg.elements)
        if (below(a, b) && !below(perp(b), perp(a))) return CheckResult::fail({a, b});
    return CheckResult::pass();
  };
  seg.orthocomplemented = orthocomplemented();

  auto orthomodular = [&]() -> CheckResult {
    if (!seg.orthocomplemented) return seg.orthocomplemented;
    for (auto a : seg.elements)
      for (auto b : seg.elements)
        if (below(a, perp(b)) && !join(a, b)) return CheckResult::fail({a, b});
    for (auto a : seg.elements) {
      for (auto b : seg.elements) {
        if (!below(a, b)) continue;
        const bool found = std::ranges::any_of(
            seg.elements, [&](ElementId c) { return below(c, perp(a)) && join(a, c) == b; });
        if (!found) return CheckResult::fail({a, b});
      }
    }
    return CheckResult::pass();
  };
  seg.orthomodular = orthomodular();

  auto locality = [&]() -> CheckResult {
    if (!seg.orthocomplemented) return seg.orthocomplemented;
    for (auto a : seg.elements)
      for (auto b : seg.elements)
        if (below(a, perp(b)) != order.orthogonal_set(a).test(b.index()))
          return CheckResult::fail({a, b});
    return CheckResult::pass();
  };
  seg.locality = locality();
  return seg;
}

Problem2Result problem2_check(const ConradOrder& order) {
  order.require_pq_baer("problem2_check");
  const auto& ring = order.ring();
  Problem2Result result;
  auto disjoint = [](const Bits& lhs, const Bits& rhs) { return (lhs & rhs).count() == 1; };
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      if (!disjoint(order.right_ideal(a), order.right_ideal(b))) continue;
      const Bits common = order.upper_set(a) & order.upper_set(b);
      const auto c = (common - order.upper_set(ring.add(a, b))).find_first();
      if (c == Bits::npos) continue;
      const std::vector<ElementId> witness{a, b, id(c)};
      if (result.theorem_form) result.theorem_form = CheckResult::fail(witness);
      if (result.full_form && disjoint(order.left_ideal(a), order.left_ideal(b)))
        result.full_form = CheckResult::fail(witness);
      if (!result.theorem_form && !result.full_form) return result;
    }
  }
  return result;
}

}  // namespace starlab
