#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starlab/order.hpp"
#include "starlab/ring_spec.hpp"

namespace starlab {

enum class VerdictStatus { pass, fail, skipped };

std::string_view to_string(VerdictStatus status);

struct TheoremVerdict {
  std::string theorem;
  VerdictStatus status = VerdictStatus::pass;
  /// Name of the first unmet hypothesis; present iff status is skipped.
  std::optional<std::string> skip_reason;
  /// Present iff status is fail.
  std::optional<std::vector<ElementId>> witness;
  /// False when the theorem ran but the ring lies outside its hypotheses
  /// (only order-diagnostics does this). A fail with hypotheses met is a
  /// red alert.
  bool hypotheses_met = true;

  bool red_alert() const { return status == VerdictStatus::fail && hypotheses_met; }
};

/// Sorted list of every theorem id the suite knows.
const std::vector<std::string_view>& theorem_ids();

std::vector<TheoremVerdict> run_suite(const StarRing& ring);
std::vector<TheoremVerdict> run_suite(const ConradOrder& order);

/// Evaluates one theorem. Throws std::invalid_argument for an unknown id.
TheoremVerdict evaluate_theorem(const ConradOrder& order, std::string_view theorem);
TheoremVerdict replay(const RingSpec& spec, std::string_view theorem,
                      const BuildOptions& options = {});

enum class Family { modular, product, matrix, random_table };

std::string_view to_string(Family family);
/// Accepts "modular", "product", "matrix", "random-table".
std::optional<Family> family_from_string(std::string_view name);

struct FuzzConfig {
  std::size_t max_order = 16;
  std::vector<Family> families{Family::modular, Family::product, Family::matrix,
                               Family::random_table};
  std::uint64_t seed = 0;
  /// Maximum number of rings drawn from each family.
  std::size_t budget = 1000;
  std::size_t order_cap = kDefaultOrderCap;
};

struct VerdictCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct FuzzFailure {
  RingSpec spec;
  std::string label;
  std::string theorem;
  std::vector<ElementId> witness;
  bool red_alert = false;
};

struct FuzzObservations {
  std::size_t pq_baer = 0;
  std::size_t pq_baer_not_rickart = 0;
  std::size_t abelian_pq_baer_not_rickart = 0;
  std::optional<RingSpec> first_abelian_pq_baer_not_rickart;
  /// p.q.-Baer * rings where some pair without a common upper bound still
  /// has an order-theoretic meet.
  std::size_t meet_without_cub = 0;
};

struct FuzzReport {
  FuzzConfig config;
  std::size_t rings_checked = 0;
  VerdictCounts totals;
  std::map<std::string, VerdictCounts> by_theorem;
  std::vector<FuzzFailure> failures;
  std::size_t red_alerts = 0;
  /// The run stopped at the first red alert.
  bool halted = false;
  FuzzObservations observations;
};

/// Specs drawn for a configuration, in the order they are checked.
/// Throws std::invalid_argument for an invalid config.
std::vector<RingSpec> fuzz_corpus(const FuzzConfig& config);
FuzzReport fuzz(const FuzzConfig& config);

/// Z_n (n ≤ 30), products of up to three factors from {Z_2, Z_3, Z_5},
/// M_2(Z_2) and M_2(Z_3).
std::vector<RingSpec> curated_corpus();

}  // namespace starlab
