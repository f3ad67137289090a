#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace starlab {

/// Index of an element inside one StarRing. Index 0 is always the ring zero.
class ElementId {
 public:
  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;

 private:
  std::uint32_t index_ = 0;
};

/// Ascending, duplicate-free list of elements.
using ElementSet = std::vector<ElementId>;

/// Outcome of an exhaustive check. A failing check carries the
/// lexicographically least violating tuple; a passing one carries none.
struct CheckResult {
  bool holds = true;
  std::vector<ElementId> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<ElementId> witness) { return {false, std::move(witness)}; }

  explicit operator bool() const { return holds; }
};

std::string format_tuple(const std::vector<ElementId>& ids);

}  // namespace starlab
