#pragma once

#include <random>
#include <vector>

#include "starlab/ring_spec.hpp"

namespace testing {

inline starlab::ElementId el(std::uint32_t i) { return starlab::ElementId{i}; }

inline std::vector<starlab::ElementId> ids(std::initializer_list<std::uint32_t> list) {
  std::vector<starlab::ElementId> out;
  for (auto i : list) out.push_back(el(i));
  return out;
}

inline starlab::StarRing z(std::int64_t n) { return starlab::build_modular(n); }

inline starlab::StarRing zz(std::initializer_list<std::int64_t> moduli) {
  std::vector<starlab::StarRing> parts;
  for (auto m : moduli) parts.push_back(starlab::build_modular(m));
  return starlab::build_product(parts);
}

inline starlab::StarRing m2(std::int64_t n) { return starlab::build_matrix(starlab::build_modular(n), 2); }

inline bool squarefree(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

/// Random nested spec of order at most `limit`, built from Z_m, products and
/// small matrix rings.
inline starlab::RingSpec random_spec(std::mt19937_64& rng, std::int64_t limit, int depth = 0) {
  using starlab::RingSpec;
  const auto choice = rng() % 4;
  if (depth < 2 && choice == 0 && limit >= 4) {
    std::vector<RingSpec> parts;
    std::int64_t left = limit;
    const auto count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count && left >= 1; ++i) {
      const auto m = 1 + static_cast<std::int64_t>(rng() % std::min<std::int64_t>(left, 6));
      parts.push_back(RingSpec::modular(m));
      left /= m;
    }
    return RingSpec::product(std::move(parts));
  }
  if (choice == 1 && limit >= 16) return RingSpec::matrix(RingSpec::modular(2), 2);
  return RingSpec::modular(1 + static_cast<std::int64_t>(rng() % std::min<std::int64_t>(limit, 40)));
}

}  // namespace testing
