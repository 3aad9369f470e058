#include "hyperring/report_json.hpp"

#include "hyperring/io.hpp"

namespace hyperring {

using nlohmann::json;

json subset_json(const KrasnerHyperring& h, Subset s) {
  json out = json::array();
  for (Element e : s) out.push_back(h.element_name(e));
  return out;
}

json to_json(const AxiomReport& report) {
  json out{{"verdict", report.pass() ? "pass" : "fail"}, {"violations", json::array()}, {"notes", report.notes}};
  for (const auto& v : report.violations) {
    out["violations"].push_back(
        {{"axiom", v.axiom}, {"witness", v.witness}, {"observed", v.observed}, {"expected", v.expected}});
  }
  return out;
}

json to_json(const KrasnerHyperring& h, const Verdict& verdict) {
  json out{{"holds", verdict.holds}};
  if (!verdict.detail.empty()) out["detail"] = verdict.detail;
  if (!verdict.witness.empty()) {
    json w = json::array();
    for (Element e : verdict.witness) w.push_back(h.element_name(e));
    out["witness"] = w;
  }
  if (!verdict.ideal_witness.empty()) {
    json w = json::array();
    for (Subset s : verdict.ideal_witness) w.push_back(subset_json(h, s));
    out["ideal_witness"] = w;
  }
  return out;
}

json to_json(const KrasnerHyperring& h, const ClassificationReport& report) {
  json out{{"ideal", subset_json(h, report.ideal)}, {"proper", report.proper}, {"radicals_agree", report.radicals_agree}};
  if (report.radical) out["radical"] = subset_json(h, *report.radical);
  if (report.radical_by_powers) out["radical_by_powers"] = subset_json(h, *report.radical_by_powers);
  json phis = json::object();
  for (const auto& [name, value] : report.phi_values) {
    phis[name] = value.value ? json{{"value", subset_json(h, *value.value)}, {"closed", value.closed}}
                             : json{{"value", nullptr}};
  }
  out["phi"] = phis;
  json results = json::array();
  for (const auto& r : report.results) {
    json entry = to_json(h, r.verdict);
    entry["predicate"] = r.predicate;
    if (r.k) entry["k"] = r.k;
    if (!r.phi.empty()) entry["phi"] = r.phi;
    results.push_back(entry);
  }
  out["results"] = results;
  json tuples = json::array();
  for (const auto& t : report.primary_tuples) {
    json w = json::array();
    for (Element e : t.tuple) w.push_back(h.element_name(e));
    tuples.push_back({{"phi", t.phi}, {"k", t.k}, {"tuple", w}});
  }
  out["primary_tuples"] = tuples;
  return out;
}

json to_json(const TheoremReport& report) {
  json out{{"id", report.id},
           {"reading", report.reading},
           {"supplementary", report.supplementary},
           {"structures", report.structures},
           {"instances", report.instances()},
           {"holds", report.holds},
           {"vacuous", report.vacuous},
           {"skipped", report.skipped},
           {"failures", json::array()}};
  if (!report.skip_reasons.empty()) out["skip_reasons"] = report.skip_reasons;
  for (const auto& f : report.failures) {
    out["failures"].push_back({{"structure", f.structure}, {"instance", f.instance}, {"detail", f.detail}});
  }
  return out;
}

json to_json(const HuntHit& hit) {
  const KrasnerHyperring& h = *hit.structure;
  json w = json::array();
  for (Element e : hit.witness) w.push_back(h.element_name(e));
  return {{"structure", h.name()}, {"ideal", subset_json(h, hit.ideal)}, {"phi", hit.phi}, {"k", hit.k}, {"witness", w}};
}

}  // namespace hyperring
