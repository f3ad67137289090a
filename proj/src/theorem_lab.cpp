#include "starlab/theorem_lab.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace starlab {

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

ElementId id(std::size_t i) { return ElementId{static_cast<std::uint32_t>(i)}; }

enum class Gate { none, pq_baer, pq_baer_two_invertible };

struct Theorem {
  std::string_view id;
  Gate gate;
  std::function<CheckResult(const ConradOrder&)> check;
};

CheckResult first_failure(std::initializer_list<CheckResult> checks) {
  for (const auto& check : checks)
    if (!check) return check;
  return CheckResult::pass();
}

CheckResult check_cover_lemma(const ConradOrder& order) {
  const auto& ring = order.ring();
  const auto central = central_projections(ring);
  for (auto x : ring.elements()) {
    for (auto e : central) {
      try {
        verify_cover_lemma(ring, x, e);
      } catch (const TheoremViolation& violation) {
        return CheckResult::fail(violation.witness());
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_cover_remark(const ConradOrder& order) {
  const auto& ring = order.ring();
  const auto& covers = order.covers();
  const auto central = central_projections(ring);
  for (auto e : central)
    for (auto f : central)
      if (order.leq(e, f) != (e == ring.mul(e, f))) return CheckResult::fail({e, f});
  for (auto e : central)
    if (covers[e] != e) return CheckResult::fail({e});
  for (auto x : ring.elements()) {
    const auto cx = covers[x];
    if (!cx) continue;
    for (auto e : central)
      if (covers[ring.mul(e, x)] != ring.mul(e, *cx)) return CheckResult::fail({x, e});
    if (covers[ring.star(x)] != cx) return CheckResult::fail({x});
  }
  return CheckResult::pass();
}

CheckResult check_annihilator_identity(const ConradOrder& order) {
  return verify_annihilator_identity(order.ring(), order.report(), order.covers());
}

CheckResult check_cub_characterization(const ConradOrder& order) {
  const auto& ring = order.ring();
  const auto& cub = order.structure().cub;
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      const bool formula = ring.mul(a, order.cover(b)) == ring.mul(b, order.cover(a));
      if (cub(a, b) != formula || cub(a, b) != cub(b, a)) return CheckResult::fail({a, b});
    }
  }
  return CheckResult::pass();
}

CheckResult check_cub_consequences(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      if (!order.structure().cub(a, b)) continue;
      const auto ca = order.cover(a);
      const auto cb = order.cover(b);
      const auto as = ring.star(a);
      const auto bs = ring.star(b);
      for (auto r : ring.elements()) {
        const auto lhs2 = ring.mul(as, r, b);
        const auto lhs3 = ring.mul(a, r, bs);
        if (lhs2 != ring.mul(ca, ring.mul(bs, r, b)) || lhs2 != ring.mul(cb, ring.mul(as, r, a)) ||
            lhs3 != ring.mul(ca, ring.mul(b, r, bs)) || lhs3 != ring.mul(cb, ring.mul(a, r, as))) {
          return CheckResult::fail({a, b, r});
        }
      }
      const auto asb = ring.mul(as, b);
      const auto abs = ring.mul(a, bs);
      if (ring.star(asb) != asb || ring.star(abs) != abs) return CheckResult::fail({a, b});
    }
  }
  return CheckResult::pass();
}

CheckResult check_join_corollary(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      const auto lub = order.least_upper_bound(a, b);
      if (!lub) continue;
      const auto via_a = ring.add(a, ring.mul(b, ring.sub(ring.one(), order.cover(a))));
      const auto via_b = ring.add(b, ring.mul(a, ring.sub(ring.one(), order.cover(b))));
      if (*lub != via_a || *lub != via_b) return CheckResult::fail({a, b});
    }
  }
  return CheckResult::pass();
}

CheckResult check_lattice_characterization(const ConradOrder& order) {
  const auto by_formula = is_lattice(order);
  const auto by_order = is_lattice_by_order(order);
  if (by_formula.holds == by_order.holds) return CheckResult::pass();
  return CheckResult::fail(by_formula.holds ? by_order.witness : by_formula.witness);
}

CheckResult check_meet_join(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      try {
        const auto m = order.meet(a, b);
        const auto j = order.join(a, b);
        if (m.has_value() != order.structure().cub(a, b) || m.has_value() != j.has_value())
          return CheckResult::fail({a, b});
        if (m && *m != ring.mul(b, order.cover(a))) return CheckResult::fail({a, b});
      } catch (const TheoremViolation& violation) {
        return CheckResult::fail(violation.witness());
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_monotone_covers(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      if (!order.leq(a, b)) continue;
      const auto ca = order.cover(a);
      const auto cb = order.cover(b);
      if (ca != ring.mul(ca, cb) || a != ring.mul(a, cb) || a != ring.mul(b, ca))
        return CheckResult::fail({a, b});
    }
  }
  return CheckResult::pass();
}

CheckResult check_order_equivalence(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      const bool plain = order.leq(a, b);
      if (plain != leq_star_bruteforce(ring, a, b) || plain != leq_cover(ring, order.covers(), a, b))
        return CheckResult::fail({a, b});
    }
  }
  return CheckResult::pass();
}

CheckResult check_orthogonality_axioms(const ConradOrder& order) {
  const auto axioms = orthogonality_axioms(order);
  return first_failure({axioms.symmetric, axioms.downward_closed, axioms.zero_orthogonal});
}

CheckResult check_orthogonality_covers(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    for (auto b : ring.elements()) {
      const bool by_covers = ring.mul(order.cover(a), order.cover(b)) == ring.zero();
      if (order.orthogonal_set(a).test(b.index()) != by_covers) return CheckResult::fail({a, b});
    }
  }
  return CheckResult::pass();
}

CheckResult check_orthomodular_decomposition(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto a : ring.elements()) {
    const auto& up = order.upper_set(a);
    for (auto b = up.find_first(); b != Bits::npos; b = up.find_next(b)) {
      try {
        orthomodular_decomposition(order, a, id(b));
      } catch (const TheoremViolation& violation) {
        return CheckResult::fail(violation.witness());
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_problem2(const ConradOrder& order) {
  const auto result = problem2_check(order);
  return first_failure({result.theorem_form, result.full_form});
}

CheckResult check_quasi_orthomodular(const ConradOrder& order) {
  const auto result = quasi_orthomodular_check(order);
  return first_failure({result.orthogonal_joins, result.decomposition, result.cancellation});
}

CheckResult prefixed(ElementId top, const CheckResult& check) {
  if (check) return check;
  std::vector<ElementId> witness{top};
  witness.insert(witness.end(), check.witness.begin(), check.witness.end());
  return CheckResult::fail(std::move(witness));
}

CheckResult check_segment_orthomodular(const ConradOrder& order) {
  for (auto m : order.ring().elements()) {
    const auto seg = initial_segment(order, m);
    if (!seg.orthocomplemented) return prefixed(m, seg.orthocomplemented);
    if (!seg.orthomodular) return prefixed(m, seg.orthomodular);
  }
  return CheckResult::pass();
}

// Local orthogonality of every segment matches ring orthogonality, and
// orthogonality inside [0,p] persists in every [0,q] containing both elements.
CheckResult check_segment_locality(const ConradOrder& order) {
  const auto& ring = order.ring();
  for (auto p : ring.elements()) {
    const auto seg = initial_segment(order, p);
    if (!seg.locality) return prefixed(p, seg.locality);
    for (auto x : seg.elements) {
      for (auto y : seg.elements) {
        if (!order.leq(x, ring.sub(p, y))) continue;
        const Bits common = order.upper_set(x) & order.upper_set(y);
        for (auto q = common.find_first(); q != Bits::npos; q = common.find_next(q))
          if (!order.leq(x, ring.sub(id(q), y))) return CheckResult::fail({p, x, y, id(q)});
      }
    }
  }
  return CheckResult::pass();
}

const std::vector<Theorem>& registry() {
  static const std::vector<Theorem> theorems = [] {
    std::vector<Theorem> list{
        {"annihilator-identity", Gate::pq_baer, check_annihilator_identity},
        {"cover-lemma", Gate::none, check_cover_lemma},
        {"cover-remark-identities", Gate::none, check_cover_remark},
        {"cub-characterization", Gate::pq_baer, check_cub_characterization},
        {"cub-consequences", Gate::pq_baer, check_cub_consequences},
        {"join-corollary", Gate::pq_baer, check_join_corollary},
        {"lattice-characterization", Gate::pq_baer, check_lattice_characterization},
        {"meet-join", Gate::pq_baer, check_meet_join},
        {"monotone-covers", Gate::pq_baer, check_monotone_covers},
        // Evaluated specially; see evaluate_theorem.
        {"order-diagnostics", Gate::none, nullptr},
        {"order-equivalence", Gate::pq_baer, check_order_equivalence},
        {"ortho-join", Gate::pq_baer, [](const ConradOrder& o) { return ortho_join_check(o); }},
        {"orthogonality-axioms", Gate::pq_baer, check_orthogonality_axioms},
        {"orthogonality-covers", Gate::pq_baer, check_orthogonality_covers},
        {"orthomodular-cancellation", Gate::pq_baer,
         [](const ConradOrder& o) { return quasi_orthomodular_check(o).cancellation; }},
        {"orthomodular-decomposition", Gate::pq_baer, check_orthomodular_decomposition},
        {"pq-baer-semiprime", Gate::pq_baer,
         [](const ConradOrder& o) { return o.report().semiprime; }},
        {"problem-2", Gate::pq_baer, check_problem2},
        {"pseudo-lattice", Gate::pq_baer, [](const ConradOrder& o) { return is_pseudo_lattice(o); }},
        {"quasi-orthomodular", Gate::pq_baer, check_quasi_orthomodular},
        {"segment-locality", Gate::pq_baer, check_segment_locality},
        {"segment-orthomodular", Gate::pq_baer, check_segment_orthomodular},
        {"subtractivity-biconditional", Gate::pq_baer_two_invertible,
         [](const ConradOrder& o) { return *subtractivity_check(o).biconditional; }},
        {"subtractivity-forward", Gate::pq_baer,
         [](const ConradOrder& o) { return subtractivity_check(o).forward; }},
    };
    std::ranges::sort(list, {}, &Theorem::id);
    return list;
  }();
  return theorems;
}

std::optional<std::string> unmet_hypothesis(const ConradOrder& order, Gate gate) {
  if (gate == Gate::none) return std::nullopt;
  if (!order.pq_baer()) return "pq-baer-star";
  if (gate == Gate::pq_baer_two_invertible && !order.report().two_invertible)
    return "two-invertible";
  return std::nullopt;
}

// Conrad: the relation is a partial order precisely on semiprime rings. A
// failed axiom on a non-semiprime ring is expected; a semiprime ring with a
// failed axiom, or a non-semiprime ring whose relation is a partial order,
// contradicts the theorem.
TheoremVerdict order_diagnostics(const ConradOrder& order) {
  TheoremVerdict verdict;
  verdict.theorem = "order-diagnostics";
  const auto& diag = order.structure().diagnostics;
  const bool semiprime = order.report().semiprime.holds;
  if (!diag.partial_order()) {
    const auto failed = first_failure({diag.reflexive, diag.antisymmetric, diag.transitive});
    verdict.status = VerdictStatus::fail;
    verdict.witness = failed.witness;
    verdict.hypotheses_met = semiprime;
  } else if (!semiprime) {
    verdict.status = VerdictStatus::fail;
    verdict.witness = order.report().semiprime.witness;
  }
  return verdict;
}

TheoremVerdict evaluate(const ConradOrder& order, const Theorem& theorem) {
  if (theorem.id == "order-diagnostics") return order_diagnostics(order);
  TheoremVerdict verdict;
  verdict.theorem = std::string(theorem.id);
  if (auto reason = unmet_hypothesis(order, theorem.gate)) {
    verdict.status = VerdictStatus::skipped;
    verdict.skip_reason = std::move(reason);
    return verdict;
  }
  CheckResult result;
  try {
    result = theorem.check(order);
  } catch (const TheoremViolation& violation) {
    result = CheckResult::fail(violation.witness());
  } catch (const PreconditionError&) {
    result = CheckResult::fail({});
  }
  if (!result) {
    verdict.status = VerdictStatus::fail;
    verdict.witness = result.witness;
  }
  return verdict;
}

}  // namespace

const std::vector<std::string_view>& theorem_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& theorem : registry()) out.push_back(theorem.id);
    return out;
  }();
  return ids;
}

std::vector<TheoremVerdict> run_suite(const ConradOrder& order) {
  std::vector<TheoremVerdict> verdicts;
  for (const auto& theorem : registry()) verdicts.push_back(evaluate(order, theorem));
  return verdicts;
}

std::vector<TheoremVerdict> run_suite(const StarRing& ring) {
  const ConradOrder order(ring);
  return run_suite(order);
}

TheoremVerdict evaluate_theorem(const ConradOrder& order, std::string_view theorem) {
  const auto& list = registry();
  const auto it = std::ranges::find(list, theorem, &Theorem::id);
  if (it == list.end()) throw std::invalid_argument("unknown theorem id '" + std::string(theorem) + "'");
  return evaluate(order, *it);
}

TheoremVerdict replay(const RingSpec& spec, std::string_view theorem, const BuildOptions& options) {
  if (std::ranges::find(theorem_ids(), theorem) == theorem_ids().end())
    throw std::invalid_argument("unknown theorem id '" + std::string(theorem) + "'");
  const auto ring = materialize(spec, options);
  const ConradOrder order(ring);
  return evaluate_theorem(order, theorem);
}

// ---------------------------------------------------------------------------
// Corpora and fuzzing

std::string_view to_string(Family family) {
  switch (family) {
    case Family::modular: return "modular";
    case Family::product: return "product";
    case Family::matrix: return "matrix";
    case Family::random_table: return "random-table";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (auto family : {Family::modular, Family::product, Family::matrix, Family::random_table})
    if (to_string(family) == name) return family;
  return std::nullopt;
}

std::vector<RingSpec> curated_corpus() {
  std::vector<RingSpec> corpus;
  for (std::int64_t n = 1; n <= 30; ++n) corpus.push_back(RingSpec::modular(n));
  const std::int64_t primes[] = {2, 3, 5};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      corpus.push_back(RingSpec::product({RingSpec::modular(primes[i]), RingSpec::modular(primes[j])}));
      for (std::size_t k = j; k < 3; ++k) {
        corpus.push_back(RingSpec::product({RingSpec::modular(primes[i]), RingSpec::modular(primes[j]),
                                            RingSpec::modular(primes[k])}));
      }
    }
  }
  corpus.push_back(RingSpec::matrix(RingSpec::modular(2), 2));
  corpus.push_back(RingSpec::matrix(RingSpec::modular(3), 2));
  return corpus;
}

namespace {

struct Factor {
  RingSpec spec;
  std::size_t order;
};

std::vector<RingSpec> product_family(std::size_t max_order) {
  std::vector<Factor> factors;
  for (std::size_t m = 2; m * 2 <= max_order; ++m)
    factors.push_back({RingSpec::modular(static_cast<std::int64_t>(m)), m});
  if (16 * 2 <= max_order) factors.push_back({RingSpec::matrix(RingSpec::modular(2), 2), 16});
  if (81 * 2 <= max_order) factors.push_back({RingSpec::matrix(RingSpec::modular(3), 2), 81});

  std::vector<RingSpec> out;
  const auto f = factors.size();
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i; j < f; ++j)
      if (factors[i].order * factors[j].order <= max_order)
        out.push_back(RingSpec::product({factors[i].spec, factors[j].spec}));
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i; j < f; ++j)
      for (std::size_t k = j; k < f; ++k)
        if (factors[i].order * factors[j].order * factors[k].order <= max_order)
          out.push_back(RingSpec::product({factors[i].spec, factors[j].spec, factors[k].spec}));
  return out;
}

std::vector<RingSpec> matrix_family(std::size_t max_order) {
  std::vector<RingSpec> out;
  for (std::int64_t k = 2;; ++k) {
    bool any = false;
    for (std::size_t m = 2;; ++m) {
      std::size_t order = 1;
      for (std::int64_t e = 0; e < k * k && order <= max_order; ++e) order *= m;
      if (order > max_order) break;
      out.push_back(RingSpec::matrix(RingSpec::modular(static_cast<std::int64_t>(m)), k));
      any = true;
    }
    if (!any) break;
  }
  return out;
}

// Additive group types Z_{d0} x Z_{d1} x ... with d0 the largest factor.
const std::vector<std::vector<std::size_t>>& group_types() {
  static const std::vector<std::vector<std::size_t>> types{
      {1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {4, 2}, {2, 2, 2}};
  return types;
}

// Draws a unital bilinear multiplication and an additive involution on a
// random small abelian group, with 1 as the first generator. Returns nullopt
// when the draw violates an axiom.
std::optional<StarRing> random_ring_candidate(std::mt19937_64& rng, std::size_t max_order) {
  std::vector<const std::vector<std::size_t>*> eligible;
  for (const auto& type : group_types()) {
    std::size_t order = 1;
    for (auto d : type) order *= d;
    // Types with more generators have more structure constants to draw, so
    // they get proportionally more samples (weight k²).
    if (order <= max_order)
      for (std::size_t w = 0; w < type.size() * type.size(); ++w) eligible.push_back(&type);
  }
  const auto& dims = *eligible[rng() % eligible.size()];
  const std::size_t k = dims.size();
  std::size_t n = 1;
  for (auto d : dims) n *= d;

  auto decode = [&](std::size_t index) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = index % dims[i];
      index /= dims[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t index = 0;
    for (std::size_t i = k; i-- > 0;) index = index * dims[i] + c[i] % dims[i];
    return index;
  };
  auto plus = [&](std::size_t x, std::size_t y) {
    auto cx = decode(x);
    const auto cy = decode(y);
    for (std::size_t i = 0; i < k; ++i) cx[i] += cy[i];
    return encode(cx);
  };
  auto scale = [&](std::size_t times, std::size_t x) {
    std::size_t acc = 0;
    for (std::size_t t = 0; t < times; ++t) acc = plus(acc, x);
    return acc;
  };

  std::vector<std::size_t> basis(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> c(k, 0);
    c[i] = 1;
    basis[i] = encode(c);
  }
  // products[i][j] = basis_i · basis_j; basis_0 is the unit.
  std::vector<std::vector<std::size_t>> products(k, std::vector<std::size_t>(k));
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) products[i][j] = j == 0 ? basis[i] : rng() % n;
  for (std::size_t j = 0; j < k; ++j) products[0][j] = basis[j];

  std::vector<std::uint32_t> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto cx = decode(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto cy = decode(y);
      add[x * n + y] = static_cast<std::uint32_t>(plus(x, y));
      std::size_t p = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) p = plus(p, scale(cx[i] * cy[j], products[i][j]));
      mul[x * n + y] = static_cast<std::uint32_t>(p);
    }
  }
  // Cheap screen before involutions are drawn; create() re-validates everything.
  auto m = [&](std::size_t x, std::size_t y) { return std::size_t{mul[x * n + y]}; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m(m(x, y), z) != m(x, m(y, z)) || m(x, add[y * n + z]) != plus(m(x, y), m(x, z)) ||
            m(add[x * n + y], z) != plus(m(x, z), m(y, z)))
          return std::nullopt;

  // Relabel the nonzero elements so tables are not in canonical order.
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 2; --i) std::swap(perm[i - 1], perm[1 + rng() % (i - 1)]);
  std::vector<std::uint32_t> padd(n * n), pmul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      padd[perm[x] * n + perm[y]] = perm[add[x * n + y]];
      pmul[perm[x] * n + perm[y]] = perm[mul[x * n + y]];
    }
  }

  // star(1) = 1; the other generator images are drawn at random.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::size_t> stars(k, basis[0]);
    for (std::size_t i = 1; i < k; ++i) stars[i] = rng() % n;
    std::vector<std::uint32_t> pstar(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto cx = decode(x);
      std::size_t s = 0;
      for (std::size_t i = 0; i < k; ++i) s = plus(s, scale(cx[i], stars[i]));
      pstar[perm[x]] = perm[s];
    }
    try {
      return StarRing::create(n, padd, pmul, std::move(pstar), perm[basis[0] % n],
                              "random(order=" + std::to_string(n) + ")");
    } catch (const RingError&) {
    }
  }
  return std::nullopt;
}

std::vector<RingSpec> random_family(const FuzzConfig& config) {
  std::mt19937_64 rng(config.seed);
  const std::size_t limit = std::min<std::size_t>(8, config.max_order);
  const std::size_t max_attempts = config.budget * 2000;
  std::vector<RingSpec> out;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < config.budget; ++attempt) {
    if (auto ring = random_ring_candidate(rng, limit)) out.push_back(table_spec_of(*ring));
  }
  return out;
}

void validate(const FuzzConfig& config) {
  if (config.max_order < 1) throw std::invalid_argument("max_order must be at least 1");
  if (config.max_order > config.order_cap)
    throw std::invalid_argument("max_order exceeds the order cap");
  if (config.budget < 1) throw std::invalid_argument("budget must be at least 1");
  if (config.families.empty()) throw std::invalid_argument("no families selected");
}

bool selected(const FuzzConfig& config, Family family) {
  return std::ranges::find(config.families, family) != config.families.end();
}

struct RingOutcome {
  std::string label;
  std::vector<TheoremVerdict> verdicts;
  bool pq_baer = false;
  bool rickart = false;
  bool abelian = false;
  bool meet_without_cub = false;
};

RingOutcome examine(const RingSpec& spec, const BuildOptions& options) {
  const auto ring = materialize(spec, options);
  const ConradOrder order(ring);
  RingOutcome outcome;
  outcome.label = ring.label();
  outcome.verdicts = run_suite(order);
  outcome.pq_baer = order.pq_baer();
  outcome.rickart = order.report().rickart_star.holds;
  outcome.abelian = order.report().abelian.holds;
  if (outcome.pq_baer) {
    for (auto a : ring.elements()) {
      for (auto b : ring.elements()) {
        if (!order.structure().cub(a, b) && order.greatest_lower_bound(a, b)) {
          outcome.meet_without_cub = true;
          break;
        }
      }
      if (outcome.meet_without_cub) break;
    }
  }
  return outcome;
}

void count(VerdictCounts& counts, VerdictStatus status) {
  switch (status) {
    case VerdictStatus::pass: ++counts.pass; break;
    case VerdictStatus::fail: ++counts.fail; break;
    case VerdictStatus::skipped: ++counts.skipped; break;
  }
}

}  // namespace

std::vector<RingSpec> fuzz_corpus(const FuzzConfig& config) {
  validate(config);
  std::vector<RingSpec> corpus;
  auto take = [&](std::vector<RingSpec> family) {
    if (family.size() > config.budget) family.resize(config.budget);
    for (auto& spec : family) corpus.push_back(std::move(spec));
  };
  if (selected(config, Family::modular)) {
    std::vector<RingSpec> family;
    for (auto n = static_cast<std::int64_t>(config.max_order); n >= 1; --n)
      family.push_back(RingSpec::modular(n));
    take(std::move(family));
  }
  if (selected(config, Family::product)) take(product_family(config.max_order));
  if (selected(config, Family::matrix)) take(matrix_family(config.max_order));
  if (selected(config, Family::random_table)) take(random_family(config));
  return corpus;
}

FuzzReport fuzz(const FuzzConfig& config) {
  const auto corpus = fuzz_corpus(config);
  const BuildOptions options{config.order_cap};
  FuzzReport report;
  report.config = config;
  for (auto id : theorem_ids()) report.by_theorem[std::string(id)];

  // Rings are examined in parallel batches; the reduction walks them in
  // corpus order and stops at the first red alert.
  const std::size_t batch = 32;
  for (std::size_t start = 0; start < corpus.size() && !report.halted; start += batch) {
    const std::size_t end = std::min(corpus.size(), start + batch);
    std::vector<RingOutcome> outcomes(end - start);
    parallel_for(outcomes.size(),
                 [&](std::size_t i) { outcomes[i] = examine(corpus[start + i], options); }, 1);
    for (std::size_t i = 0; i < outcomes.size() && !report.halted; ++i) {
      const auto& outcome = outcomes[i];
      const auto& spec = corpus[start + i];
      ++report.rings_checked;
      for (const auto& verdict : outcome.verdicts) {
        count(report.totals, verdict.status);
        count(report.by_theorem[verdict.theorem], verdict.status);
        if (verdict.status != VerdictStatus::fail) continue;
        report.failures.push_back(
            {spec, outcome.label, verdict.theorem, *verdict.witness, verdict.red_alert()});
        if (verdict.red_alert()) {
          ++report.red_alerts;
          report.halted = true;
        }
      }
      auto& obs = report.observations;
      if (outcome.pq_baer) {
        ++obs.pq_baer;
        if (!outcome.rickart) {
          ++obs.pq_baer_not_rickart;
          if (outcome.abelian) {
            ++obs.abelian_pq_baer_not_rickart;
            if (!obs.first_abelian_pq_baer_not_rickart) obs.first_abelian_pq_baer_not_rickart = spec;
          }
        }
        if (outcome.meet_without_cub) ++obs.meet_without_cub;
      }
    }
  }
  return report;
}

}  // namespace starlab
