#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starlab/parallel.hpp"
#include "starlab/ring.hpp"

namespace starlab {

ElementSet idempotents(const StarRing& ring);
/// Self-adjoint idempotents.
ElementSet projections(const StarRing& ring);
ElementSet center(const StarRing& ring);
ElementSet central_projections(const StarRing& ring);

/// {a·r : r ∈ R}
ElementSet principal_right_ideal(const StarRing& ring, ElementId a);
/// {r·a : r ∈ R}
ElementSet principal_left_ideal(const StarRing& ring, ElementId a);
ElementSet ideal_intersection(const ElementSet& lhs, const ElementSet& rhs);

struct AnnihilatorResult {
  enum class Side { right, left };

  Side side = Side::right;
  std::string generators;
  ElementSet elements;
  /// Projection e with elements = eR (right) or Re (left), when one exists.
  std::optional<ElementId> principal_projection;
};

AnnihilatorResult right_annihilator(const StarRing& ring, std::span<const ElementId> set);
AnnihilatorResult left_annihilator(const StarRing& ring, std::span<const ElementId> set);
/// r_R(aR) = {x : a·r·x = 0 for all r}.
AnnihilatorResult right_ann_principal(const StarRing& ring, ElementId a);

struct ClassificationReport {
  std::string label;
  std::size_t order = 0;
  CheckResult semiprime;
  CheckResult reduced;
  CheckResult abelian;
  CheckResult rickart_star;
  CheckResult pq_baer_star;
  CheckResult two_invertible;
  /// a ↦ projection e with r_R(aR) = eR; filled only for p.q.-Baer * rings.
  std::vector<std::pair<ElementId, ElementId>> pq_baer_witnesses;
};

ClassificationReport classify(const StarRing& ring);

/// Per-element central covers; an empty slot means no least central
/// projection h with hx = x exists.
class CentralCoverTable {
 public:
  CentralCoverTable() = default;
  explicit CentralCoverTable(std::vector<std::optional<ElementId>> cover)
      : cover_(std::move(cover)) {}

  std::size_t size() const { return cover_.size(); }
  std::optional<ElementId> operator[](ElementId x) const { return cover_.at(x.index()); }
  /// Throws PreconditionError when the cover of x is absent.
  ElementId at(ElementId x) const;
  bool complete() const;
  const std::vector<std::optional<ElementId>>& entries() const { return cover_; }

 private:
  std::vector<std::optional<ElementId>> cover_;
};

/// Least element, under e ≤ f ⇔ e = ef, of the central projections h with
/// hx = x. Absent when the candidates have no least element.
std::optional<ElementId> central_cover(const StarRing& ring, ElementId x);
CentralCoverTable cover_table(const StarRing& ring);

/// True iff xe = x and every y with xRy = 0 has ey = 0. When true, throws
/// TheoremViolation unless e is the central cover of x.
/// Throws PreconditionError if e is not a central projection.
bool verify_cover_lemma(const StarRing& ring, ElementId x, ElementId e);

/// Checks, for every x with e = C(x), that r(xR), r(eR), l(Rx), l(Re),
/// (1-e)R and R(1-e) coincide. Witness: first (x, y) where membership of y
/// differs. Throws PreconditionError unless the ring is p.q.-Baer *.
CheckResult verify_annihilator_identity(const StarRing& ring);
CheckResult verify_annihilator_identity(const StarRing& ring, const ClassificationReport& report,
                                        const CentralCoverTable& covers);

/// Bitset helpers shared with the order analysis.
namespace detail {
Bits to_bits(const ElementSet& set, std::size_t order);
ElementSet from_bits(const Bits& bits);
/// rows[a] = {x : a·x = 0} (right) or {x : x·a = 0} (left).
std::vector<Bits> element_annihilators(const StarRing& ring, AnnihilatorResult::Side side);
/// rows[a] = aR (right) or Ra (left).
std::vector<Bits> principal_ideals(const StarRing& ring, AnnihilatorResult::Side side);
}  // namespace detail

}  // namespace starlab
