#include "oracles.hpp"

#include <array>
#include <set>

namespace oracle {

u32 Carrier::neg(u32 a) const {
  for (u32 b = 0; b < n; ++b)
    if (add(a, b) == 0) return b;
  return 0;
}

Carrier modular(u32 n) {
  Carrier c;
  c.n = n;
  c.one = 1 % n;
  c.add = [n](u32 a, u32 b) { return (a + b) % n; };
  c.mul = [n](u32 a, u32 b) { return static_cast<u32>((std::uint64_t{a} * b) % n); };
  c.star = [](u32 a) { return a; };
  return c;
}

namespace {

using Mat = std::array<u32, 4>;  // a00 a01 a10 a11

Mat decode(u32 x) { return {x & 1u, (x >> 1) & 1u, (x >> 2) & 1u, (x >> 3) & 1u}; }
u32 encode(const Mat& m) { return (m[0] & 1) | (m[1] & 1) << 1 | (m[2] & 1) << 2 | (m[3] & 1) << 3; }

}  // namespace

Carrier m2z2() {
  Carrier c;
  c.n = 16;
  c.one = encode({1, 0, 0, 1});
  c.add = [](u32 a, u32 b) { return a ^ b; };
  c.mul = [](u32 a, u32 b) {
    const auto x = decode(a);
    const auto y = decode(b);
    return encode({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                   x[2] * y[1] + x[3] * y[3]});
  };
  c.star = [](u32 a) {
    const auto x = decode(a);
    return encode({x[0], x[2], x[1], x[3]});
  };
  return c;
}

Carrier from_ring(const starlab::StarRing& ring) {
  Carrier c;
  c.n = static_cast<u32>(ring.order());
  c.one = ring.one().index();
  auto add = ring.add_table();
  auto mul = ring.mul_table();
  auto star = ring.star_table();
  const u32 n = c.n;
  c.add = [add, n](u32 a, u32 b) { return add[a * n + b]; };
  c.mul = [mul, n](u32 a, u32 b) { return mul[a * n + b]; };
  c.star = [star](u32 a) { return star[a]; };
  return c;
}

std::vector<u32> central_projections(const Carrier& c) {
  std::vector<u32> out;
  for (u32 e = 0; e < c.n; ++e) {
    if (c.mul(e, e) != e || c.star(e) != e) continue;
    bool central = true;
    for (u32 x = 0; x < c.n && central; ++x) central = c.mul(e, x) == c.mul(x, e);
    if (central) out.push_back(e);
  }
  return out;
}

std::optional<u32> central_cover(const Carrier& c, u32 x) {
  std::vector<u32> candidates;
  for (u32 h : central_projections(c))
    if (c.mul(h, x) == x) candidates.push_back(h);
  for (u32 h : candidates) {
    bool least = true;
    for (u32 g : candidates) least = least && c.mul(h, g) == h;
    if (least) return h;
  }
  return std::nullopt;
}

bool leq(const Carrier& c, u32 a, u32 b) {
  for (u32 r = 0; r < c.n; ++r)
    if (c.mul(c.mul(a, r), b) != c.mul(c.mul(a, r), a)) return false;
  return true;
}

bool orthogonal(const Carrier& c, u32 a, u32 b) {
  for (u32 r = 0; r < c.n; ++r)
    if (c.mul(c.mul(a, r), b) != 0) return false;
  return true;
}

bool has_cub(const Carrier& c, u32 a, u32 b) {
  for (u32 x = 0; x < c.n; ++x)
    if (leq(c, a, x) && leq(c, b, x)) return true;
  return false;
}

std::optional<u32> glb(const Carrier& c, u32 a, u32 b) {
  std::vector<u32> lower;
  for (u32 x = 0; x < c.n; ++x)
    if (leq(c, x, a) && leq(c, x, b)) lower.push_back(x);
  for (u32 m : lower) {
    bool greatest = true;
    for (u32 x : lower) greatest = greatest && leq(c, x, m);
    if (greatest) return m;
  }
  return std::nullopt;
}

std::optional<u32> lub(const Carrier& c, u32 a, u32 b) {
  std::vector<u32> upper;
  for (u32 x = 0; x < c.n; ++x)
    if (leq(c, a, x) && leq(c, b, x)) upper.push_back(x);
  for (u32 j : upper) {
    bool least = true;
    for (u32 x : upper) least = least && leq(c, j, x);
    if (least) return j;
  }
  return std::nullopt;
}

bool semiprime(const Carrier& c) {
  for (u32 a = 1; a < c.n; ++a)
    if (orthogonal(c, a, a)) return false;
  return true;
}

bool reduced(const Carrier& c) {
  for (u32 a = 1; a < c.n; ++a) {
    u32 power = a;
    for (u32 k = 0; k < c.n + 1; ++k) power = c.mul(power, a);
    if (power == 0) return false;
  }
  return true;
}

bool abelian(const Carrier& c) {
  for (u32 e = 0; e < c.n; ++e) {
    if (c.mul(e, e) != e) continue;
    for (u32 x = 0; x < c.n; ++x)
      if (c.mul(e, x) != c.mul(x, e)) return false;
  }
  return true;
}

namespace {

std::set<u32> right_multiples(const Carrier& c, u32 e) {
  std::set<u32> out;
  for (u32 r = 0; r < c.n; ++r) out.insert(c.mul(e, r));
  return out;
}

bool generated_by_projection(const Carrier& c, const std::set<u32>& target) {
  for (u32 e = 0; e < c.n; ++e)
    if (c.mul(e, e) == e && c.star(e) == e && right_multiples(c, e) == target) return true;
  return false;
}

}  // namespace

bool pq_baer(const Carrier& c) {
  for (u32 a = 0; a < c.n; ++a) {
    std::set<u32> ann;
    for (u32 x = 0; x < c.n; ++x)
      if (orthogonal(c, a, x)) ann.insert(x);
    if (!generated_by_projection(c, ann)) return false;
  }
  return true;
}

bool rickart(const Carrier& c) {
  for (u32 a = 0; a < c.n; ++a) {
    std::set<u32> ann;
    for (u32 x = 0; x < c.n; ++x)
      if (c.mul(a, x) == 0) ann.insert(x);
    if (!generated_by_projection(c, ann)) return false;
  }
  return true;
}

bool two_invertible(const Carrier& c) {
  const u32 two = c.add(c.one, c.one);
  for (u32 x = 0; x < c.n; ++x)
    if (c.mul(two, x) == c.one && c.mul(x, two) == c.one) return true;
  return false;
}

}  // namespace oracle
