#pragma once

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "starlab/element.hpp"
#include "starlab/errors.hpp"

namespace starlab {

inline constexpr std::size_t kDefaultOrderCap = 4096;

struct BuildOptions {
  std::size_t order_cap = kDefaultOrderCap;
};

/// Raw operation tables as supplied by a user. Entries are signed so that
/// out-of-range input can be reported instead of silently wrapping.
struct TableSpec {
  std::int64_t order = 0;
  std::vector<std::vector<std::int64_t>> add;
  std::vector<std::vector<std::int64_t>> mul;
  std::vector<std::int64_t> star;
  std::int64_t zero = 0;
  std::int64_t one = 0;
};

/// A finite unital ring with involution, stored as dense operation tables.
///
/// Instances are immutable and only obtainable through the builders below,
/// each of which validates every ring and involution axiom over all element
/// triples before returning. All accessors are pure reads and may be shared
/// across threads.
class StarRing {
 public:
  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }

  ElementId zero() const { return ElementId{0}; }
  ElementId one() const { return ElementId{one_}; }

  bool contains(ElementId a) const { return a.index() < order_; }

  ElementId add(ElementId a, ElementId b) const { return ElementId{add_[slot(a, b)]}; }
  ElementId mul(ElementId a, ElementId b) const { return ElementId{mul_[slot(a, b)]}; }
  ElementId neg(ElementId a) const { return ElementId{neg_[checked(a)]}; }
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }
  ElementId star(ElementId a) const { return ElementId{star_[checked(a)]}; }

  /// a·r·b, the triple product every order-theoretic check is built on.
  ElementId mul(ElementId a, ElementId r, ElementId b) const { return mul(mul(a, r), b); }

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(order_)) |
           std::views::transform([](std::uint32_t i) { return ElementId{i}; });
  }

  /// Human-readable rendering: "3" for Z_n, "(1,2)" for products,
  /// "[[1,0],[0,1]]" for matrices.
  const std::string& name(ElementId a) const { return names_[checked(a)]; }

  bool is_commutative() const;

  // Flat row-major tables, mainly for serialization.
  std::span<const std::uint32_t> add_table() const { return add_; }
  std::span<const std::uint32_t> mul_table() const { return mul_; }
  std::span<const std::uint32_t> star_table() const { return star_; }

  /// Validates the tables and assembles a ring. Throws RingError with the
  /// first violated axiom and its lexicographically least witness.
  static StarRing create(std::size_t order, std::vector<std::uint32_t> add,
                         std::vector<std::uint32_t> mul, std::vector<std::uint32_t> star,
                         std::uint32_t one, std::string label,
                         std::vector<std::string> names = {});

 private:
  StarRing() = default;

  std::size_t checked(ElementId a) const {
    if (!contains(a)) {
      throw RingError(RingErrorKind::foreign_element,
                      "element " + std::to_string(a.index()) + " is not in " + label_, {a});
    }
    return a.index();
  }
  std::size_t slot(ElementId a, ElementId b) const { return checked(a) * order_ + checked(b); }

  std::size_t order_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> star_;
  std::uint32_t one_ = 0;
  std::string label_;
  std::vector<std::string> names_;
};

/// Z_n with the identity involution; element k is the residue k.
StarRing build_modular(std::int64_t n, const BuildOptions& options = {});

/// Componentwise product. Indexing is little-endian mixed radix: the tuple
/// (x_0, ..., x_{m-1}) has index x_0 + |R_0|·(x_1 + |R_1|·(...)).
StarRing build_product(std::span<const StarRing> parts, const BuildOptions& options = {});

/// k×k matrices over a commutative base with star(A) = transpose of the
/// entrywise star. Entry (i,j) is the digit of weight |base|^(i·k+j).
StarRing build_matrix(const StarRing& base, std::int64_t k, const BuildOptions& options = {});

/// Range-checks user tables, then validates all axioms. zero must be 0.
StarRing build_from_tables(const TableSpec& spec, const BuildOptions& options = {});

}  // namespace starlab
