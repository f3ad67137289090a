#include "starlab/ring.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace starlab {

std::string_view to_string(RingErrorKind kind) {
  switch (kind) {
    case RingErrorKind::cap_exceeded: return "cap-exceeded";
    case RingErrorKind::invalid_spec: return "invalid-spec";
    case RingErrorKind::axiom_violation: return "axiom-violation";
    case RingErrorKind::foreign_element: return "foreign-element";
    case RingErrorKind::non_commutative_base: return "non-commutative-base";
  }
  return "unknown";
}

std::string format_tuple(const std::vector<ElementId>& ids) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ',';
    out << ids[i].index();
  }
  out << ')';
  return out.str();
}

RingError::RingError(RingErrorKind kind, std::string detail, std::vector<ElementId> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail +
                         (witness.empty() ? std::string() : " at " + format_tuple(witness))),
      kind_(kind),
      detail_(std::move(detail)),
      witness_(std::move(witness)) {}

namespace {

struct Violation {
  std::string axiom;
  std::vector<ElementId> witness;
};

std::vector<ElementId> ids(std::initializer_list<std::size_t> list) {
  std::vector<ElementId> out;
  for (auto v : list) out.emplace_back(static_cast<std::uint32_t>(v));
  return out;
}

std::optional<Violation> find_violation(std::size_t n, const std::vector<std::uint32_t>& add,
                                        const std::vector<std::uint32_t>& mul,
                                        const std::vector<std::uint32_t>& star,
                                        std::uint32_t one) {
  auto A = [&](std::size_t x, std::size_t y) -> std::size_t { return add[x * n + y]; };
  auto M = [&](std::size_t x, std::size_t y) -> std::size_t { return mul[x * n + y]; };

  for (std::size_t x = 0; x < n; ++x)
    if (A(0, x) != x || A(x, 0) != x) return Violation{"additive-identity", ids({x})};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (A(x, y) != A(y, x)) return Violation{"additive-commutativity", ids({x, y})};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (A(A(x, y), z) != A(x, A(y, z)))
          return Violation{"additive-associativity", ids({x, y, z})};
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) found = A(x, y) == 0;
    if (!found) return Violation{"additive-inverse", ids({x})};
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (M(M(x, y), z) != M(x, M(y, z)))
          return Violation{"multiplicative-associativity", ids({x, y, z})};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (M(x, A(y, z)) != A(M(x, y), M(x, z)))
          return Violation{"left-distributivity", ids({x, y, z})};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (M(A(y, z), x) != A(M(y, x), M(z, x)))
          return Violation{"right-distributivity", ids({x, y, z})};
  for (std::size_t x = 0; x < n; ++x)
    if (M(one, x) != x || M(x, one) != x) return Violation{"multiplicative-identity", ids({x})};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (star[A(x, y)] != A(star[x], star[y]))
        return Violation{"involution-additive", ids({x, y})};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (star[M(x, y)] != M(star[y], star[x]))
        return Violation{"involution-anti-multiplicative", ids({x, y})};
  for (std::size_t x = 0; x < n; ++x)
    if (star[star[x]] != x) return Violation{"involution-period-two", ids({x})};
  return std::nullopt;
}

void check_cap(std::size_t order, const BuildOptions& options) {
  if (order > options.order_cap) {
    throw RingError(RingErrorKind::cap_exceeded, "order " + std::to_string(order) +
                                                     " exceeds cap " +
                                                     std::to_string(options.order_cap));
  }
}

// Multiplies `acc` by `factor`, failing once the running product passes the cap.
std::size_t capped_product(std::size_t acc, std::size_t factor, const BuildOptions& options) {
  if (factor != 0 && acc > options.order_cap / factor) {
    throw RingError(RingErrorKind::cap_exceeded,
                    "order exceeds cap " + std::to_string(options.order_cap));
  }
  return acc * factor;
}

}  // namespace

bool StarRing::is_commutative() const {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (mul_[x * order_ + y] != mul_[y * order_ + x]) return false;
  return true;
}

StarRing StarRing::create(std::size_t order, std::vector<std::uint32_t> add,
                          std::vector<std::uint32_t> mul, std::vector<std::uint32_t> star,
                          std::uint32_t one, std::string label, std::vector<std::string> names) {
  if (order == 0) throw RingError(RingErrorKind::invalid_spec, "order must be at least 1");
  if (add.size() != order * order || mul.size() != order * order || star.size() != order) {
    throw RingError(RingErrorKind::invalid_spec, "table dimensions do not match order");
  }
  auto in_range = [order](std::uint32_t v) { return v < order; };
  if (!std::ranges::all_of(add, in_range) || !std::ranges::all_of(mul, in_range) ||
      !std::ranges::all_of(star, in_range) || one >= order) {
    throw RingError(RingErrorKind::invalid_spec, "table entry out of range");
  }
  if (auto violation = find_violation(order, add, mul, star, one)) {
    throw RingError(RingErrorKind::axiom_violation, violation->axiom,
                    std::move(violation->witness));
  }

  StarRing ring;
  ring.order_ = order;
  ring.neg_.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (add[x * order + y] == 0) ring.neg_[x] = static_cast<std::uint32_t>(y);
  ring.add_ = std::move(add);
  ring.mul_ = std::move(mul);
  ring.star_ = std::move(star);
  ring.one_ = one;
  ring.label_ = std::move(label);
  if (names.size() != order) {
    names.clear();
    for (std::size_t i = 0; i < order; ++i) names.push_back(std::to_string(i));
  }
  ring.names_ = std::move(names);
  return ring;
}

StarRing build_modular(std::int64_t n, const BuildOptions& options) {
  if (n < 1) throw RingError(RingErrorKind::invalid_spec, "modular n must be at least 1");
  const auto order = static_cast<std::size_t>(n);
  check_cap(order, options);
  std::vector<std::uint32_t> add(order * order), mul(order * order), star(order);
  for (std::size_t x = 0; x < order; ++x) {
    star[x] = static_cast<std::uint32_t>(x);
    for (std::size_t y = 0; y < order; ++y) {
      add[x * order + y] = static_cast<std::uint32_t>((x + y) % order);
      mul[x * order + y] = static_cast<std::uint32_t>((x * y) % order);
    }
  }
  return StarRing::create(order, std::move(add), std::move(mul), std::move(star),
                          static_cast<std::uint32_t>(1 % order), "Z_" + std::to_string(n));
}

StarRing build_product(std::span<const StarRing> parts, const BuildOptions& options) {
  if (parts.empty()) throw RingError(RingErrorKind::invalid_spec, "product needs at least one part");
  std::size_t order = 1;
  for (const auto& part : parts) order = capped_product(order, part.order(), options);
  check_cap(order, options);

  // digits[i * m + j] = component j of element i.
  const std::size_t m = parts.size();
  std::vector<std::uint32_t> digits(order * m);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t rest = i;
    for (std::size_t j = 0; j < m; ++j) {
      digits[i * m + j] = static_cast<std::uint32_t>(rest % parts[j].order());
      rest /= parts[j].order();
    }
  }
  auto encode = [&](auto&& component) {
    std::size_t index = 0;
    for (std::size_t j = m; j-- > 0;) index = index * parts[j].order() + component(j);
    return static_cast<std::uint32_t>(index);
  };
  auto digit = [&](std::size_t i, std::size_t j) { return ElementId{digits[i * m + j]}; };

  std::vector<std::uint32_t> add(order * order), mul(order * order), star(order);
  for (std::size_t x = 0; x < order; ++x) {
    star[x] = encode([&](std::size_t j) { return parts[j].star(digit(x, j)).index(); });
    for (std::size_t y = 0; y < order; ++y) {
      add[x * order + y] =
          encode([&](std::size_t j) { return parts[j].add(digit(x, j), digit(y, j)).index(); });
      mul[x * order + y] =
          encode([&](std::size_t j) { return parts[j].mul(digit(x, j), digit(y, j)).index(); });
    }
  }
  const auto one = encode([&](std::size_t j) { return parts[j].one().index(); });

  std::string label;
  std::vector<std::string> names(order);
  for (std::size_t j = 0; j < m; ++j) label += (j ? " x " : "") + parts[j].label();
  for (std::size_t i = 0; i < order; ++i) {
    std::string s = "(";
    for (std::size_t j = 0; j < m; ++j) s += (j ? "," : "") + parts[j].name(digit(i, j));
    names[i] = s + ")";
  }
  return StarRing::create(order, std::move(add), std::move(mul), std::move(star), one,
                          std::move(label), std::move(names));
}

StarRing build_matrix(const StarRing& base, std::int64_t k, const BuildOptions& options) {
  if (k < 1) throw RingError(RingErrorKind::invalid_spec, "matrix dimension must be at least 1");
  if (!base.is_commutative()) {
    throw RingError(RingErrorKind::non_commutative_base,
                    "matrix base " + base.label() + " is not commutative");
  }
  const auto dim = static_cast<std::size_t>(k);
  const std::size_t entries = dim * dim;
  const std::size_t q = base.order();
  std::size_t order = 1;
  for (std::size_t p = 0; p < entries; ++p) order = capped_product(order, q, options);
  check_cap(order, options);

  std::vector<std::uint32_t> digits(order * entries);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t rest = i;
    for (std::size_t p = 0; p < entries; ++p) {
      digits[i * entries + p] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
  }
  auto entry = [&](std::size_t i, std::size_t row, std::size_t col) {
    return ElementId{digits[i * entries + row * dim + col]};
  };
  auto encode = [&](const std::vector<ElementId>& cells) {
    std::size_t index = 0;
    for (std::size_t p = entries; p-- > 0;) index = index * q + cells[p].index();
    return static_cast<std::uint32_t>(index);
  };

  std::vector<std::uint32_t> add(order * order), mul(order * order), star(order);
  std::vector<ElementId> cells(entries);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) cells[r * dim + c] = base.star(entry(x, c, r));
    star[x] = encode(cells);
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t p = 0; p < entries; ++p)
        cells[p] = base.add(ElementId{digits[x * entries + p]}, ElementId{digits[y * entries + p]});
      add[x * order + y] = encode(cells);
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          ElementId acc = base.zero();
          for (std::size_t t = 0; t < dim; ++t)
            acc = base.add(acc, base.mul(entry(x, r, t), entry(y, t, c)));
          cells[r * dim + c] = acc;
        }
      }
      mul[x * order + y] = encode(cells);
    }
  }
  for (std::size_t p = 0; p < entries; ++p)
    cells[p] = (p / dim == p % dim) ? base.one() : base.zero();
  const auto one = encode(cells);

  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::string s = "[";
    for (std::size_t r = 0; r < dim; ++r) {
      s += r ? ",[" : "[";
      for (std::size_t c = 0; c < dim; ++c) s += (c ? "," : "") + base.name(entry(i, r, c));
      s += "]";
    }
    names[i] = s + "]";
  }
  return StarRing::create(order, std::move(add), std::move(mul), std::move(star), one,
                          "M_" + std::to_string(k) + "(" + base.label() + ")", std::move(names));
}

StarRing build_from_tables(const TableSpec& spec, const BuildOptions& options) {
  if (spec.order < 1) throw RingError(RingErrorKind::invalid_spec, "order must be at least 1");
  const auto order = static_cast<std::size_t>(spec.order);
  check_cap(order, options);
  auto entry = [&](std::int64_t v, const char* what) {
    if (v < 0 || v >= spec.order) {
      throw RingError(RingErrorKind::invalid_spec,
                      std::string(what) + " entry " + std::to_string(v) + " out of range");
    }
    return static_cast<std::uint32_t>(v);
  };
  auto flatten = [&](const std::vector<std::vector<std::int64_t>>& table, const char* what) {
    if (table.size() != order) {
      throw RingError(RingErrorKind::invalid_spec, std::string(what) + " table must have " +
                                                       std::to_string(order) + " rows");
    }
    std::vector<std::uint32_t> flat;
    flat.reserve(order * order);
    for (const auto& row : table) {
      if (row.size() != order) {
        throw RingError(RingErrorKind::invalid_spec,
                        std::string(what) + " table is not square");
      }
      for (auto v : row) flat.push_back(entry(v, what));
    }
    return flat;
  };
  auto add = flatten(spec.add, "add");
  auto mul = flatten(spec.mul, "mul");
  if (spec.star.size() != order) {
    throw RingError(RingErrorKind::invalid_spec,
                    "star table must have " + std::to_string(order) + " entries");
  }
  std::vector<std::uint32_t> star;
  for (auto v : spec.star) star.push_back(entry(v, "star"));
  if (spec.zero != 0) throw RingError(RingErrorKind::invalid_spec, "zero must be element 0");
  const auto one = entry(spec.one, "one");
  return StarRing::create(order, std::move(add), std::move(mul), std::move(star), one,
                          "table(order=" + std::to_string(order) + ")");
}

}  // namespace starlab
