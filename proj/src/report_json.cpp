#include "starlab/report_json.hpp"

namespace starlab {

namespace {

Json index_list(const ElementSet& set) {
  Json out = Json::array();
  for (auto a : set) out.push_back(a.index());
  return out;
}

Json relation_json(const Relation& relation) {
  Json out = Json::array();
  for (const auto& row : relation.rows) {
    Json targets = Json::array();
    for (auto b = row.find_first(); b != Bits::npos; b = row.find_next(b)) targets.push_back(b);
    out.push_back(std::move(targets));
  }
  return out;
}

Json counts_json(const VerdictCounts& counts) {
  return Json{{"pass", counts.pass}, {"fail", counts.fail}, {"skipped", counts.skipped}};
}

}  // namespace

Json witness_json(const std::vector<ElementId>& witness) {
  Json out = Json::array();
  for (auto a : witness) out.push_back(a.index());
  return out;
}

Json check_json(const CheckResult& check) {
  Json out;
  out["holds"] = check.holds;
  out["witness"] = check.holds ? Json() : witness_json(check.witness);
  return out;
}

Json to_json(const CentralCoverTable& covers) {
  Json out = Json::array();
  for (const auto& cover : covers.entries()) out.push_back(cover ? Json(cover->index()) : Json());
  return out;
}

Json to_json(const ClassificationReport& report, const CentralCoverTable& covers) {
  const std::pair<const char*, const CheckResult*> flags[] = {
      {"semiprime", &report.semiprime},       {"reduced", &report.reduced},
      {"abelian", &report.abelian},           {"rickart_star", &report.rickart_star},
      {"pq_baer_star", &report.pq_baer_star}, {"two_invertible", &report.two_invertible},
  };
  Json out;
  out["label"] = report.label;
  out["order"] = report.order;
  Json flag_json = Json::object();
  Json witnesses = Json::object();
  for (const auto& [name, check] : flags) {
    flag_json[name] = check->holds;
    if (!check->holds) witnesses[name] = witness_json(check->witness);
  }
  out["flags"] = std::move(flag_json);
  out["witnesses"] = std::move(witnesses);
  out["covers"] = to_json(covers);
  Json projections = Json::array();
  for (const auto& [a, e] : report.pq_baer_witnesses) projections.push_back({a.index(), e.index()});
  out["pq_baer_projections"] = std::move(projections);
  return out;
}

Json to_json(const OrderStructure& order) {
  Json out;
  out["label"] = order.label;
  out["order"] = order.order;
  out["partial_order"] = order.diagnostics.partial_order();
  out["diagnostics"] = Json{{"reflexive", check_json(order.diagnostics.reflexive)},
                            {"antisymmetric", check_json(order.diagnostics.antisymmetric)},
                            {"transitive", check_json(order.diagnostics.transitive)}};
  out["leq"] = relation_json(order.leq);
  out["cub"] = relation_json(order.cub);
  out["covers"] = to_json(order.covers);
  return out;
}

Json to_json(const SegmentPoset& segment) {
  Json out;
  out["top"] = segment.top.index();
  out["elements"] = index_list(segment.elements);
  Json complement = Json::array();
  for (std::size_t i = 0; i < segment.elements.size(); ++i)
    complement.push_back({segment.elements[i].index(), segment.complement[i].index()});
  out["complement"] = std::move(complement);
  // Induced order in element indices rather than segment positions.
  Json leq = Json::array();
  for (std::size_t i = 0; i < segment.elements.size(); ++i) {
    Json above = Json::array();
    const auto& row = segment.leq.rows[i];
    for (auto j = row.find_first(); j != Bits::npos; j = row.find_next(j))
      above.push_back(segment.elements[j].index());
    leq.push_back(std::move(above));
  }
  out["leq"] = std::move(leq);
  out["orthocomplemented"] = check_json(segment.orthocomplemented);
  out["orthomodular"] = check_json(segment.orthomodular);
  out["locality"] = check_json(segment.locality);
  return out;
}

Json to_json(const TheoremVerdict& verdict) {
  Json out;
  out["theorem"] = verdict.theorem;
  out["status"] = to_string(verdict.status);
  out["skip_reason"] = verdict.skip_reason ? Json(*verdict.skip_reason) : Json();
  out["witness"] = verdict.witness ? witness_json(*verdict.witness) : Json();
  out["hypotheses_met"] = verdict.hypotheses_met;
  return out;
}

Json to_json(const std::vector<TheoremVerdict>& verdicts) {
  Json out = Json::array();
  for (const auto& verdict : verdicts) out.push_back(to_json(verdict));
  return out;
}

Json to_json(const FuzzConfig& config) {
  Json families = Json::array();
  for (auto family : config.families) families.push_back(to_string(family));
  return Json{{"max_order", config.max_order},
              {"families", std::move(families)},
              {"seed", config.seed},
              {"budget", config.budget},
              {"order_cap", config.order_cap}};
}

Json to_json(const FuzzReport& report) {
  Json out;
  out["config"] = to_json(report.config);
  out["rings_checked"] = report.rings_checked;
  Json counts = counts_json(report.totals);
  Json by_theorem = Json::object();
  for (const auto& [id, c] : report.by_theorem) by_theorem[id] = counts_json(c);
  counts["by_theorem"] = std::move(by_theorem);
  out["verdict_counts"] = std::move(counts);
  Json failures = Json::array();
  for (const auto& failure : report.failures) {
    failures.push_back(Json{{"spec", starlab::to_json(failure.spec)},
                            {"label", failure.label},
                            {"theorem", failure.theorem},
                            {"witness", witness_json(failure.witness)},
                            {"red_alert", failure.red_alert}});
  }
  out["failures"] = std::move(failures);
  out["red_alerts"] = report.red_alerts;
  out["halted"] = report.halted;
  const auto& obs = report.observations;
  out["observations"] = Json{
      {"pq_baer_star", obs.pq_baer},
      {"pq_baer_not_rickart", obs.pq_baer_not_rickart},
      {"abelian_pq_baer_not_rickart", obs.abelian_pq_baer_not_rickart},
      {"first_abelian_pq_baer_not_rickart",
       obs.first_abelian_pq_baer_not_rickart ? starlab::to_json(*obs.first_abelian_pq_baer_not_rickart)
                                             : Json()},
      {"meet_without_cub", obs.meet_without_cub}};
  return out;
}

}  // namespace starlab
