#include "starlab/structure.hpp"

#include <algorithm>

namespace starlab {

namespace detail {

Bits to_bits(const ElementSet& set, std::size_t order) {
  Bits bits(order);
  for (auto e : set) bits.set(e.index());
  return bits;
}

ElementSet from_bits(const Bits& bits) {
  ElementSet out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
    out.emplace_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<Bits> element_annihilators(const StarRing& ring, AnnihilatorResult::Side side) {
  const auto n = ring.order();
  std::vector<Bits> rows(n, Bits(n));
  parallel_for(n, [&](std::size_t i) {
    const ElementId a{static_cast<std::uint32_t>(i)};
    for (auto x : ring.elements()) {
      const auto product = side == AnnihilatorResult::Side::right ? ring.mul(a, x) : ring.mul(x, a);
      if (product == ring.zero()) rows[i].set(x.index());
    }
  });
  return rows;
}

std::vector<Bits> principal_ideals(const StarRing& ring, AnnihilatorResult::Side side) {
  const auto n = ring.order();
  std::vector<Bits> rows(n, Bits(n));
  parallel_for(n, [&](std::size_t i) {
    const ElementId a{static_cast<std::uint32_t>(i)};
    for (auto r : ring.elements())
      rows[i].set((side == AnnihilatorResult::Side::right ? ring.mul(a, r) : ring.mul(r, a)).index());
  });
  return rows;
}

}  // namespace detail

namespace {

using Side = AnnihilatorResult::Side;

bool is_central(const StarRing& ring, ElementId z) {
  return std::ranges::all_of(ring.elements(),
                             [&](ElementId x) { return ring.mul(z, x) == ring.mul(x, z); });
}

std::optional<ElementId> first_noncommuting(const StarRing& ring, ElementId z) {
  for (auto x : ring.elements())
    if (ring.mul(z, x) != ring.mul(x, z)) return x;
  return std::nullopt;
}

// Finds a projection e whose principal ideal (eR or Re) equals `target`.
std::optional<ElementId> generating_projection(const ElementSet& projs,
                                               const std::vector<Bits>& ideals,
                                               const Bits& target) {
  for (auto e : projs)
    if (ideals[e.index()] == target) return e;
  return std::nullopt;
}

Bits annihilate_all(const StarRing& ring, const std::vector<Bits>& single,
                    std::span<const ElementId> set) {
  Bits acc(ring.order());
  acc.set();
  for (auto b : set) acc &= single.at(b.index());
  return acc;
}

void require_member(const StarRing& ring, ElementId a) {
  if (!ring.contains(a)) {
    throw RingError(RingErrorKind::foreign_element,
                    "element " + std::to_string(a.index()) + " is not in " + ring.label(), {a});
  }
}

AnnihilatorResult annihilator(const StarRing& ring, std::span<const ElementId> set, Side side) {
  for (auto b : set) require_member(ring, b);
  if (set.empty()) throw PreconditionError("annihilator of an empty set");
  const auto single = detail::element_annihilators(ring, side);
  const Bits bits = annihilate_all(ring, single, set);
  const auto ideals = detail::principal_ideals(ring, side);

  AnnihilatorResult result;
  result.side = side;
  auto text = format_tuple({set.begin(), set.end()});
  result.generators = "{" + text.substr(1, text.size() - 2) + "}";
  result.elements = detail::from_bits(bits);
  result.principal_projection = generating_projection(projections(ring), ideals, bits);
  return result;
}

}  // namespace

ElementSet idempotents(const StarRing& ring) {
  ElementSet out;
  for (auto e : ring.elements())
    if (ring.mul(e, e) == e) out.push_back(e);
  return out;
}

ElementSet projections(const StarRing& ring) {
  ElementSet out;
  for (auto e : ring.elements())
    if (ring.mul(e, e) == e && ring.star(e) == e) out.push_back(e);
  return out;
}

ElementSet center(const StarRing& ring) {
  ElementSet out;
  for (auto z : ring.elements())
    if (is_central(ring, z)) out.push_back(z);
  return out;
}

ElementSet central_projections(const StarRing& ring) {
  ElementSet out;
  for (auto e : projections(ring))
    if (is_central(ring, e)) out.push_back(e);
  return out;
}

ElementSet principal_right_ideal(const StarRing& ring, ElementId a) {
  Bits bits(ring.order());
  for (auto r : ring.elements()) bits.set(ring.mul(a, r).index());
  return detail::from_bits(bits);
}

ElementSet principal_left_ideal(const StarRing& ring, ElementId a) {
  Bits bits(ring.order());
  for (auto r : ring.elements()) bits.set(ring.mul(r, a).index());
  return detail::from_bits(bits);
}

ElementSet ideal_intersection(const ElementSet& lhs, const ElementSet& rhs) {
  ElementSet out;
  std::ranges::set_intersection(lhs, rhs, std::back_inserter(out));
  return out;
}

AnnihilatorResult right_annihilator(const StarRing& ring, std::span<const ElementId> set) {
  return annihilator(ring, set, Side::right);
}

AnnihilatorResult left_annihilator(const StarRing& ring, std::span<const ElementId> set) {
  return annihilator(ring, set, Side::left);
}

AnnihilatorResult right_ann_principal(const StarRing& ring, ElementId a) {
  auto result = right_annihilator(ring, principal_right_ideal(ring, a));
  result.generators = std::to_string(a.index()) + "R";
  return result;
}

ClassificationReport classify(const StarRing& ring) {
  const auto n = ring.order();
  ClassificationReport report;
  report.label = ring.label();
  report.order = n;

  for (auto a : ring.elements()) {
    if (a == ring.zero()) continue;
    const bool annihilated = std::ranges::all_of(
        ring.elements(), [&](ElementId r) { return ring.mul(a, r, a) == ring.zero(); });
    if (annihilated) {
      report.semiprime = CheckResult::fail({a});
      break;
    }
  }

  for (auto a : ring.elements()) {
    if (a != ring.zero() && ring.mul(a, a) == ring.zero()) {
      report.reduced = CheckResult::fail({a});
      break;
    }
  }

  for (auto e : idempotents(ring)) {
    if (auto x = first_noncommuting(ring, e)) {
      report.abelian = CheckResult::fail({e, *x});
      break;
    }
  }

  const auto projs = projections(ring);
  const auto right_ideals = detail::principal_ideals(ring, Side::right);
  const auto right_single = detail::element_annihilators(ring, Side::right);

  for (auto a : ring.elements()) {
    if (!generating_projection(projs, right_ideals, right_single[a.index()])) {
      report.rickart_star = CheckResult::fail({a});
      break;
    }
  }

  // r(aR) is the intersection of r({s}) over s ∈ aR.
  std::vector<std::optional<ElementId>> generator(n);
  parallel_for(n, [&](std::size_t i) {
    Bits acc(n);
    acc.set();
    const auto& ideal = right_ideals[i];
    for (auto s = ideal.find_first(); s != Bits::npos; s = ideal.find_next(s)) acc &= right_single[s];
    generator[i] = generating_projection(projs, right_ideals, acc);
  });
  for (auto a : ring.elements()) {
    if (!generator[a.index()]) {
      report.pq_baer_star = CheckResult::fail({a});
      break;
    }
  }
  if (report.pq_baer_star) {
    for (auto a : ring.elements()) report.pq_baer_witnesses.emplace_back(a, *generator[a.index()]);
  }

  const auto two = ring.add(ring.one(), ring.one());
  const bool invertible = std::ranges::any_of(
      ring.elements(), [&](ElementId u) { return ring.mul(two, u) == ring.one(); });
  if (!invertible) report.two_invertible = CheckResult::fail({two});

  return report;
}

ElementId CentralCoverTable::at(ElementId x) const {
  const auto& slot = cover_.at(x.index());
  if (!slot) {
    throw PreconditionError("central cover of element " + std::to_string(x.index()) +
                            " is absent");
  }
  return *slot;
}

bool CentralCoverTable::complete() const {
  return std::ranges::all_of(cover_, [](const auto& slot) { return slot.has_value(); });
}

namespace {

std::optional<ElementId> least_cover(const StarRing& ring, const ElementSet& central, ElementId x) {
  ElementSet candidates;
  for (auto h : central)
    if (ring.mul(h, x) == x) candidates.push_back(h);
  for (auto h : candidates) {
    const bool least = std::ranges::all_of(
        candidates, [&](ElementId f) { return ring.mul(h, f) == h; });
    if (least) return h;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ElementId> central_cover(const StarRing& ring, ElementId x) {
  require_member(ring, x);
  return least_cover(ring, central_projections(ring), x);
}

CentralCoverTable cover_table(const StarRing& ring) {
  const auto central = central_projections(ring);
  std::vector<std::optional<ElementId>> cover(ring.order());
  for (auto x : ring.elements()) cover[x.index()] = least_cover(ring, central, x);
  return CentralCoverTable(std::move(cover));
}

bool verify_cover_lemma(const StarRing& ring, ElementId x, ElementId e) {
  const auto central = central_projections(ring);
  if (!std::ranges::binary_search(central, e)) {
    throw PreconditionError("element " + std::to_string(e.index()) +
                            " is not a central projection");
  }
  if (ring.mul(x, e) != x) return false;
  for (auto y : ring.elements()) {
    const bool xry_zero = std::ranges::all_of(
        ring.elements(), [&](ElementId r) { return ring.mul(x, r, y) == ring.zero(); });
    if (xry_zero && ring.mul(e, y) != ring.zero()) return false;
  }
  if (least_cover(ring, central, x) != e) {
    throw TheoremViolation("cover lemma conditions hold but e is not the central cover", {x, e});
  }
  return true;
}

CheckResult verify_annihilator_identity(const StarRing& ring) {
  return verify_annihilator_identity(ring, classify(ring), cover_table(ring));
}

CheckResult verify_annihilator_identity(const StarRing& ring, const ClassificationReport& report,
                                        const CentralCoverTable& covers) {
  if (!report.pq_baer_star) throw PreconditionError(ring.label() + " is not p.q.-Baer *");
  const auto n = ring.order();
  const auto right_ideals = detail::principal_ideals(ring, Side::right);
  const auto left_ideals = detail::principal_ideals(ring, Side::left);
  const auto right_single = detail::element_annihilators(ring, Side::right);
  const auto left_single = detail::element_annihilators(ring, Side::left);

  auto intersect = [&](const Bits& generators, const std::vector<Bits>& single) {
    Bits acc(n);
    acc.set();
    for (auto s = generators.find_first(); s != Bits::npos; s = generators.find_next(s))
      acc &= single[s];
    return acc;
  };

  for (auto x : ring.elements()) {
    const auto cover = covers[x];
    if (!cover) return CheckResult::fail({x});
    const auto e = *cover;
    const auto complement = ring.sub(ring.one(), e);
    const Bits reference = intersect(right_ideals[x.index()], right_single);  // r(xR)
    const Bits others[] = {
        intersect(right_ideals[e.index()], right_single),  // r(eR)
        intersect(left_ideals[x.index()], left_single),    // l(Rx)
        intersect(left_ideals[e.index()], left_single),    // l(Re)
        right_ideals[complement.index()],                  // (1-e)R
        left_ideals[complement.index()],                   // R(1-e)
    };
    std::size_t first = Bits::npos;
    for (const auto& other : others) {
      const auto diff = (reference ^ other).find_first();
      if (diff != Bits::npos) first = std::min(first, diff);
    }
    if (first != Bits::npos) {
      return CheckResult::fail({x, ElementId{static_cast<std::uint32_t>(first)}});
    }
  }
  return CheckResult::pass();
}

}  // namespace starlab
