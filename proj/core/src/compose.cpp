#include "teamaut/compose.hpp"

#include <algorithm>

#include "teamaut/error.hpp"

namespace teamaut {

static std::set<Action> alphabet_of(const System& sys) {
  std::set<Action> all;
  for (const auto& c : sys.components) {
    all.insert(c.inputs.begin(), c.inputs.end());
    all.insert(c.outputs.begin(), c.outputs.end());
    all.insert(c.internals.begin(), c.internals.end());
  }
  return all;
}

std::pair<bool, std::vector<ComposabilityConflict>> composable(
    const std::vector<std::pair<System, SyncTypeSpec>>& parts) {
  std::vector<ComposabilityConflict> conflicts;
  for (size_t a = 0; a < parts.size(); ++a) {
    for (size_t b = a + 1; b < parts.size(); ++b) {
      for (const auto& n : parts[a].first.names)
        if (parts[b].first.index_of(n) >= 0)
          conflicts.push_back({a, b, n, true});
      auto comm_a = classify_actions(parts[a].first).communicating;
      auto comm_b = classify_actions(parts[b].first).communicating;
      auto alpha_a = alphabet_of(parts[a].first);
      auto alpha_b = alphabet_of(parts[b].first);
      for (const auto& x : comm_a)
        if (alpha_b.count(x)) conflicts.push_back({a, b, x, false});
      for (const auto& x : comm_b)
        if (alpha_a.count(x)) conflicts.push_back({a, b, x, false});
    }
  }
  return {conflicts.empty(), conflicts};
}

std::set<Action> interface_actions(
    const std::vector<std::pair<System, SyncTypeSpec>>& parts) {
  if (parts.size() < 2) return {};
  System flat;
  std::set<Action> part_comm;
  for (const auto& [sys, spec] : parts) {
    flat.names.insert(flat.names.end(), sys.names.begin(), sys.names.end());
    flat.components.insert(flat.components.end(), sys.components.begin(),
                           sys.components.end());
    auto c = classify_actions(sys).communicating;
    part_comm.insert(c.begin(), c.end());
  }
  std::set<Action> res;
  for (const auto& a : classify_actions(flat).communicating)
    if (!part_comm.count(a)) res.insert(a);
  return res;
}

std::pair<System, SyncTypeSpec> compose(const CompositionPlan& plan) {
  auto [ok, conflicts] = composable(plan.parts);
  if (!ok) {
    const auto& c = conflicts.front();
    throw ModelError(std::string(c.name_clash ? "component name '"
                                              : "communicating action '") +
                     c.symbol + "' clashes between parts " +
                     std::to_string(c.part_a) + " and " +
                     std::to_string(c.part_b));
  }
  System flat;
  SyncTypeSpec spec;
  for (const auto& [sys, part_spec] : plan.parts) {
    flat.names.insert(flat.names.end(), sys.names.begin(), sys.names.end());
    flat.components.insert(flat.components.end(), sys.components.begin(),
                           sys.components.end());
    auto comm = classify_actions(sys).communicating;
    for (const auto& [a, st] : part_spec.types)
      if (comm.count(a)) spec.types[a] = st;
  }
  for (const auto& a : interface_actions(plan.parts)) {
    auto it = plan.interface_spec.find(a);
    if (it == plan.interface_spec.end()) throw SpecIncompleteError(a);
    spec.types[a] = it->second;
  }
  return {std::move(flat), std::move(spec)};
}

PreservationReport check_preservation(const CompositionPlan& plan, Mode mode) {
  PreservationReport rep;
  bool parts_ok = true;
  for (size_t k = 0; k < plan.parts.size(); ++k) {
    const auto& [sys, spec] = plan.parts[k];
    bool rcp = is_receptive(sys, spec, mode).receptive;
    bool rsp = is_responsive(sys, spec, mode).responsive;
    rep.parts.push_back({k, rcp, rsp});
    parts_ok = parts_ok && rcp && rsp;
  }

  auto inf = interface_actions(plan.parts);
  auto [sys, spec] = compose(plan);
  TeamAutomaton ta = team(sys, spec);

  rep.interface_receptive = true;
  for (const auto& req : derive_rcp(sys, spec, ta)) {
    if (!inf.count(req.action)) continue;
    auto v = check_compliance(ta, req, mode);
    if (!v.satisfied) {
      rep.interface_receptive = false;
      rep.rcp_failures.emplace_back(req, std::move(v));
    }
  }

  std::map<std::pair<SystemState, Name>, bool> served;
  for (const auto& req : derive_rsp(sys, spec, ta)) {
    if (!inf.count(req.action)) continue;
    bool ok = check_compliance(ta, req, mode).satisfied;
    for (const auto& n : req.group) {
      auto key = std::make_pair(req.state, n);
      auto [it, fresh] = served.emplace(key, ok);
      if (!fresh) it->second = it->second || ok;
    }
  }
  rep.interface_responsive = true;
  for (const auto& [key, ok] : served)
    if (!ok) {
      rep.interface_responsive = false;
      rep.rsp_failures.push_back(key);
    }

  rep.ok = parts_ok && rep.interface_receptive && rep.interface_responsive;
  return rep;
}

}  // namespace teamaut
