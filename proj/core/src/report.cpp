#include "teamaut/report.hpp"

namespace teamaut {

using nlohmann::json;

namespace {

json state_json(const SystemState& q) { return json(q); }

json labels_json(const std::vector<SystemLabel>& ls) {
  json arr = json::array();
  for (const auto& l : ls) arr.push_back(to_string(l));
  return arr;
}

}  // namespace

json report_team(const TeamAutomaton& ta) {
  auto keep = reachable(ta.lts);
  json states = json::array();
  for (int q : keep) states.push_back(state_json(ta.states[q]));
  int transitions = 0;
  for (const auto& t : ta.lts.transitions)
    if (keep.count(t.from) && keep.count(t.to)) ++transitions;
  return {{"version", kReportVersion},
          {"kind", "team"},
          {"reachable_states", states},
          {"num_reachable_states", keep.size()},
          {"num_transitions", transitions}};
}

json report_requirement(const Requirement& r) {
  return {{"kind", to_string(r.kind)},
          {"group", r.group},
          {"action", r.action},
          {"state", state_json(r.state)}};
}

json report_verdict(const ComplianceVerdict& v) {
  json j = {{"satisfied", v.satisfied}, {"mode", to_string(v.mode)}};
  if (!v.witness.empty()) j["witness"] = labels_json(v.witness);
  if (v.counterexample_state)
    j["counterexample_state"] = state_json(*v.counterexample_state);
  return j;
}

json report_receptive(const ReceptiveReport& r, Mode mode) {
  json fails = json::array();
  for (const auto& [req, v] : r.failures)
    fails.push_back(
        {{"requirement", report_requirement(req)}, {"verdict", report_verdict(v)}});
  return {{"version", kReportVersion},
          {"kind", "receptiveness"},
          {"mode", to_string(mode)},
          {"receptive", r.receptive},
          {"failures", fails}};
}

json report_responsive(const ResponsiveReport& r, Mode mode) {
  json fails = json::array();
  for (const auto& [q, n] : r.failures)
    fails.push_back({{"state", state_json(q)}, {"component", n}});
  return {{"version", kReportVersion},
          {"kind", "responsiveness"},
          {"mode", to_string(mode)},
          {"responsive", r.responsive},
          {"failures", fails}};
}

json report_realise(const RealiseResult& r, const GlobalModel& m) {
  json j = {{"version", kReportVersion},
            {"kind", "realisation"},
            {"result", r.realised ? "REALISED" : "INCONCLUSIVE"},
            {"rc_holds", r.saturation.report.holds},
            {"merges", r.saturation.merges}};
  json partitions = json::object();
  for (const auto& n : m.sig.names) {
    json blocks = json::array();
    for (const auto& block : r.saturation.eq.blocks(n)) blocks.push_back(block);
    partitions[n] = blocks;
  }
  j["partitions"] = partitions;
  if (!r.saturation.report.holds && !r.saturation.report.violations.empty()) {
    const auto& v = r.saturation.report.violations.front();
    json moves = json::object();
    for (const auto& [n, mv] : v.moves) moves[n] = {mv.first, mv.second};
    j["violation"] = {{"interaction", to_string(v.interaction)},
                      {"glue", v.glue},
                      {"moves", moves},
                      {"missing_transition", v.missing_transition}};
  }
  if (r.realised) {
    auto team_reach = reachable(r.team.lts);
    auto model_reach = reachable(m.lts);
    j["team_states"] = team_reach.size();
    j["model_states"] = model_reach.size();
    j["bisimilar"] = r.bisimilar;
    json pairs = json::array();
    for (const auto& [a, b] : r.bisim_pairs) pairs.push_back({a, b});
    j["bisimulation"] = pairs;
    json comps = json::object();
    for (size_t i = 0; i < r.system.names.size(); ++i) {
      json trans = json::array();
      const auto& c = r.system.components[i];
      for (const auto& t : c.transitions)
        trans.push_back({{"from", c.states[t.from]},
                         {"action", t.action},
                         {"to", c.states[t.to]}});
      comps[r.system.names[i]] = {{"states", c.states},
                                  {"init", c.states[c.initial]},
                                  {"transitions", trans}};
    }
    j["components"] = comps;
  }
  return j;
}

json report_preservation(const PreservationReport& r, Mode mode) {
  json parts = json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"part", p.part},
                     {"receptive", p.receptive},
                     {"responsive", p.responsive}});
  json rcp = json::array();
  for (const auto& [req, v] : r.rcp_failures)
    rcp.push_back(
        {{"requirement", report_requirement(req)}, {"verdict", report_verdict(v)}});
  json rsp = json::array();
  for (const auto& [q, n] : r.rsp_failures)
    rsp.push_back({{"state", state_json(q)}, {"component", n}});
  return {{"version", kReportVersion},
          {"kind", "preservation"},
          {"mode", to_string(mode)},
          {"parts", parts},
          {"interface_receptive", r.interface_receptive},
          {"interface_responsive", r.interface_responsive},
          {"rcp_failures", rcp},
          {"rsp_failures", rsp},
          {"ok", r.ok}};
}

json report_pdl(const std::string& name, const pdl::CheckResult& r) {
  json j = {{"version", kReportVersion},
            {"kind", "pdl"},
            {"formula", name},
            {"holds", r.holds},
            {"satisfying_states", r.satisfying}};
  if (r.path) {
    json p = json::array();
    for (const auto& l : *r.path) p.push_back(to_string(l));
    j["path"] = p;
  }
  return j;
}

json report_products(const std::map<Product, bool>& verdicts) {
  json arr = json::array();
  for (const auto& [p, ok] : verdicts)
    arr.push_back({{"product", std::vector<Feature>(p.begin(), p.end())},
                   {"verdict", ok}});
  return {{"version", kReportVersion}, {"kind", "products"}, {"results", arr}};
}

}  // namespace teamaut
