#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starlab/parallel.hpp"
#include "starlab/ring.hpp"
#include "starlab/structure.hpp"

namespace starlab {

/// Dense boolean relation; rows[a] holds every b with a R b.
struct Relation {
  std::vector<Bits> rows;

  bool operator()(ElementId a, ElementId b) const { return rows[a.index()].test(b.index()); }
  std::size_t size() const { return rows.size(); }
};

struct OrderDiagnostics {
  CheckResult reflexive;
  CheckResult antisymmetric;
  CheckResult transitive;

  bool partial_order() const { return reflexive && antisymmetric && transitive; }
};

struct OrderStructure {
  std::string label;
  std::size_t order = 0;
  Relation leq;
  OrderDiagnostics diagnostics;
  /// cub(a, b) ⇔ some c has a ≤ c and b ≤ c.
  Relation cub;
  CentralCoverTable covers;
};

/// a ≤ b ⇔ a·r·b = a·r·a for every r.
bool leq_bruteforce(const StarRing& ring, ElementId a, ElementId b);
/// a*·r·b = a*·r·a for every r.
bool leq_star_bruteforce(const StarRing& ring, ElementId a, ElementId b);
/// a = C(a)·b. Throws PreconditionError if C(a) is absent.
bool leq_cover(const StarRing& ring, const CentralCoverTable& covers, ElementId a, ElementId b);

/// The Conrad relation computed by brute force, diagnosed as a candidate
/// partial order. Never assumes the axioms hold.
OrderStructure build_order(const StarRing& ring);

/// a·r·b = 0 for every r.
bool orthogonal(const StarRing& ring, ElementId a, ElementId b);

/// Analysis context over one ring: classification, covers, the brute-force
/// Conrad relation and the orthogonality relation, computed once.
///
/// Formula-based answers (has_cub, meet, join, orthogonal) are cross-checked
/// against the brute-force relation on every call; a disagreement on a
/// p.q.-Baer * ring throws TheoremViolation. The ring must outlive this object.
class ConradOrder {
 public:
  explicit ConradOrder(const StarRing& ring);
  ConradOrder(const ConradOrder&) = delete;
  ConradOrder& operator=(const ConradOrder&) = delete;

  const StarRing& ring() const { return ring_; }
  const ClassificationReport& report() const { return report_; }
  const OrderStructure& structure() const { return structure_; }
  const CentralCoverTable& covers() const { return structure_.covers; }
  bool pq_baer() const { return report_.pq_baer_star.holds; }

  bool leq(ElementId a, ElementId b) const { return structure_.leq(a, b); }
  /// Throws PreconditionError when absent.
  ElementId cover(ElementId a) const { return structure_.covers.at(a); }

  /// a·C(b) = b·C(a).
  bool has_cub(ElementId a, ElementId b) const;
  /// a·C(b), or nullopt when a and b have no common upper bound.
  std::optional<ElementId> meet(ElementId a, ElementId b) const;
  /// a + b − a·C(b), or nullopt when a and b have no common upper bound.
  std::optional<ElementId> join(ElementId a, ElementId b) const;
  bool orthogonal(ElementId a, ElementId b) const;

  // Order-theoretic bounds found by scanning the relation.
  std::optional<ElementId> greatest_lower_bound(ElementId a, ElementId b) const;
  std::optional<ElementId> least_upper_bound(ElementId a, ElementId b) const;

  const Bits& upper_set(ElementId a) const { return structure_.leq.rows[a.index()]; }
  const Bits& lower_set(ElementId a) const { return lower_[a.index()]; }
  const Bits& orthogonal_set(ElementId a) const { return orth_[a.index()]; }
  const Bits& right_ideal(ElementId a) const { return right_ideals_[a.index()]; }
  const Bits& left_ideal(ElementId a) const { return left_ideals_[a.index()]; }

  void require_pq_baer(const char* operation) const;
  void require_covers(const char* operation) const;

 private:
  const StarRing& ring_;
  ClassificationReport report_;
  OrderStructure structure_;
  std::vector<Bits> lower_;
  std::vector<Bits> orth_;
  std::vector<Bits> right_ideals_;
  std::vector<Bits> left_ideals_;
};

/// ∀a, b: a·C(b) = b·C(a).
CheckResult is_lattice(const ConradOrder& order);
/// Every pair has an order-theoretic meet and join.
CheckResult is_lattice_by_order(const ConradOrder& order);
/// Every pair with a common upper bound has an order-theoretic meet and join.
CheckResult is_pseudo_lattice(const ConradOrder& order);

struct SubtractivityResult {
  /// a ≤ b ⇒ C(b−a) = C(b) − C(a).
  CheckResult forward;
  /// a ≤ b ⇔ C(b−a) = C(b) − C(a); only evaluated when 2 is invertible.
  std::optional<CheckResult> biconditional;
};

SubtractivityResult subtractivity_check(const ConradOrder& order);

struct OrthogonalityAxioms {
  CheckResult symmetric;        // x ⊥ y ⇒ y ⊥ x
  CheckResult downward_closed;  // x ≤ y, y ⊥ z ⇒ x ⊥ z
  CheckResult zero_orthogonal;  // 0 ⊥ x

  bool holds() const { return symmetric && downward_closed && zero_orthogonal; }
};

OrthogonalityAxioms orthogonality_axioms(const ConradOrder& order);

/// Orthogonal pairs have a common upper bound, meet 0 and join a + b.
CheckResult ortho_join_check(const ConradOrder& order);

/// For a ≤ b returns c = b − a, verified to satisfy a ⊥ c, b = a + c and
/// b = a ∨ c.
ElementId orthomodular_decomposition(const ConradOrder& order, ElementId a, ElementId b);

struct QuasiOrthomodularResult {
  CheckResult orthogonal_joins;  // x ⊥ y ⇒ x ∨ y exists
  CheckResult decomposition;     // x ≤ y ⇒ y = x ∨ z for some z ⊥ x
  CheckResult cancellation;      // x ⊥ y, x ⊥ z, y ≤ x ∨ z ⇒ y ≤ z

  bool holds() const { return orthogonal_joins && decomposition && cancellation; }
};

QuasiOrthomodularResult quasi_orthomodular_check(const ConradOrder& order);

/// The initial segment [0, m] with complement a ↦ m − a.
struct SegmentPoset {
  ElementId top;
  ElementSet elements;
  /// Induced order, indexed by position in `elements`.
  Relation leq;
  /// complement[i] = m − elements[i].
  std::vector<ElementId> complement;
  CheckResult orthocomplemented;
  CheckResult orthomodular;
  /// a ≤ m − b ⇔ a ⊥ b, for a, b in the segment.
  CheckResult locality;

  bool holds() const { return orthocomplemented && orthomodular && locality; }
  bool contains(ElementId a) const;
  /// Position of a in `elements`; a must be a member.
  std::size_t position(ElementId a) const;
  /// Order-theoretic join and meet within the segment.
  std::optional<ElementId> join(ElementId a, ElementId b) const;
  std::optional<ElementId> meet(ElementId a, ElementId b) const;
};

SegmentPoset initial_segment(const ConradOrder& order, ElementId top);

struct Problem2Result {
  /// a ≤ c, b ≤ c, aR ∩ bR = {0} ⇒ a + b ≤ c.
  CheckResult theorem_form;
  /// Same with the extra hypothesis Ra ∩ Rb = {0}.
  CheckResult full_form;
};

Problem2Result problem2_check(const ConradOrder& order);

}  // namespace starlab
