#include "gpi/report_json.hpp"

namespace gpi {

using nlohmann::json;

namespace {

json element_to_json(const Group &G, ElementId x) {
  if (G.backend() == Group::Backend::table)
    return x;
  json cycles = json::array();
  for (const auto &c : G.perm(x).cycles())
    cycles.push_back(c);
  return cycles;
}

json factor_to_json(const FactorRecord &f) {
  return {{"index", f.factor_index},
          {"factor_order", f.factor_order},
          {"intersection_order", f.intersection_order},
          {"normalizer_index", f.normalizer_index},
          {"pi", f.pi.primes()},
          {"pass", f.pass}};
}

} // namespace

json subgroup_to_json(const Group &G, const Subgroup &H) {
  json gens = json::array();
  for (ElementId g : H.generators())
    gens.push_back(element_to_json(G, g));
  return {{"order", H.order()}, {"generators", gens}};
}

json verdict_to_json(const Group &G, const Subgroup &H,
                     const PiVerdict &verdict) {
  json out{{"subgroup", subgroup_to_json(G, H)}};
  if (const auto *w = std::get_if<PiWitness>(&verdict)) {
    out["verdict"] = "witness";
    json terms = json::array();
    for (const auto &T : w->series.terms)
      terms.push_back(subgroup_to_json(G, T));
    json factors = json::array();
    for (const auto &f : w->per_factor)
      factors.push_back(factor_to_json(f));
    out["series"] = terms;
    out["factors"] = factors;
  } else {
    const auto &r = std::get<PiRefusal>(verdict);
    out["verdict"] = "refusal";
    json dead = json::array();
    for (const auto &S : r.explored_states)
      dead.push_back(subgroup_to_json(G, S));
    out["explored_states"] = dead;
  }
  return out;
}

json report_to_json(const TheoremReport &r) {
  json failing = json::array();
  for (const auto &f : r.failing)
    failing.push_back({{"family", f.family},
                       {"order", f.order},
                       {"generators", f.generators},
                       {"description", f.description}});
  return {{"theorem", theorem_label(r.theorem)},
          {"group", r.group},
          {"prime", r.prime},
          {"subject", r.subject},
          {"hypothesis", status_name(r.hypothesis)},
          {"conclusion", status_name(r.conclusion)},
          {"violation", r.violation()},
          {"subgroups_checked", r.subgroups_checked},
          {"failing", failing},
          {"detail", r.detail}};
}

json reports_document(const std::vector<TheoremReport> &reports,
                      const CorpusSummary &summary) {
  json list = json::array();
  for (const auto &r : reports)
    list.push_back(report_to_json(r));
  return {{"schema", kReportSchema},
          {"summary",
           {{"groups", summary.groups},
            {"reports", summary.reports},
            {"hypotheses_held", summary.hypotheses_held},
            {"conclusions_held", summary.conclusions_held},
            {"not_evaluated", summary.not_evaluated},
            {"violations", summary.violations}}},
          {"reports", list}};
}

} // namespace gpi
