// Acceptance suite: one pass/fail line per shipped guarantee. Exits
// non-zero when any criterion fails.
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "fixture.hpp"
#include "teamaut/comm.hpp"
#include "teamaut/compose.hpp"
#include "teamaut/featured.hpp"
#include "teamaut/pdl.hpp"
#include "teamaut/realise.hpp"

using namespace teamaut;
using teamaut::testing::load;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << note << "\n";
  if (!ok) ++failures;
}

std::pair<std::set<SystemState>, int> reachable_summary(const TeamAutomaton& ta) {
  auto keep = reachable(ta.lts);
  std::set<SystemState> states;
  for (int q : keep) states.insert(ta.states[q]);
  int transitions = 0;
  for (const auto& t : ta.lts.transitions)
    if (keep.count(t.from) && keep.count(t.to)) ++transitions;
  return {states, transitions};
}

// Local LTS of a component automaton, for behavioural comparison.
Lts<Action> local_lts(const ComponentAutomaton& c) {
  Lts<Action> l;
  for (const auto& s : c.states) l.add_state(s);
  l.initial = c.initial;
  for (const auto& t : c.transitions) l.add_transition(t.from, t.action, t.to);
  l.sort_transitions();
  return l;
}

GlobalModel random_interaction_model(std::mt19937& rng) {
  std::uniform_int_distribution<int> comp_count(2, 3), state_count(2, 4);
  std::uniform_int_distribution<int> role(0, 2);
  GlobalModel m;
  int nc = comp_count(rng);
  for (int c = 0; c < nc; ++c) {
    Name n = "C" + std::to_string(c);
    m.sig.names.push_back(n);
    for (const Action& a : {Action("a"), Action("b")}) {
      switch (role(rng)) {
        case 1: m.sig.inputs[n].insert(a); break;
        case 2: m.sig.outputs[n].insert(a); break;
        default: break;
      }
    }
  }
  for (const auto& a : m.sig.actions())
    m.spec.types[a] = {{1, 1}, {0, std::nullopt}};
  auto labels = interaction_set(m.sig, m.spec);
  int ns = state_count(rng);
  for (int s = 0; s < ns; ++s) m.lts.add_state(std::to_string(s));
  if (!labels.empty()) {
    std::uniform_int_distribution<int> t_count(1, 2 * ns);
    std::uniform_int_distribution<int> state(0, ns - 1);
    std::uniform_int_distribution<size_t> lab(0, labels.size() - 1);
    for (int t = t_count(rng); t > 0; --t)
      m.lts.add_transition(state(rng), labels[lab(rng)], state(rng));
    m.lts.sort_transitions();
  }
  return m;
}

}  // namespace

int main() {
  criterion("1. race team: 9 exact states, 13 transitions, no lossy labels",
            [] {
    auto doc = load("race.ta");
    System sys = doc.plain_system();
    SyncTypeSpec spec = doc.plain_spec();
    TeamAutomaton ta = team(sys, spec);
    auto [states, transitions] = reachable_summary(ta);
    std::set<SystemState> expected{{0, 0, 0}, {1, 1, 1}, {1, 1, 2}, {1, 2, 1},
                                   {1, 2, 2}, {2, 0, 1}, {2, 0, 2}, {2, 1, 0},
                                   {2, 2, 0}};
    bool shape = states == expected && transitions == 13;
    bool absent =
        ta.lts.find_label(SystemLabel{Interaction{{"Ctrl"}, "start", {}}}) < 0 &&
        ta.lts.find_label(
            SystemLabel{Interaction{{"R1", "R2"}, "finish", {"Ctrl"}}}) < 0;
    // Cross-check against the unfiltered product.
    SystemLts full = lts_of_system(sys);
    auto comm = classify_actions(sys).communicating;
    size_t kept = 0;
    for (const auto& t : full.lts.transitions)
      if (label_satisfies(full.lts.alphabet[t.label], spec, comm)) ++kept;
    return shape && absent && ta.lts.transitions.size() == kept;
  });

  criterion("2. race verdicts: strictly receptive, weakly responsive, exact "
            "strict failures", [] {
    auto doc = load("race.ta");
    System sys = doc.plain_system();
    SyncTypeSpec spec = doc.plain_spec();
    bool rcp = is_receptive(sys, spec, Mode::Strict).receptive;
    auto strict = is_responsive(sys, spec, Mode::Strict);
    std::set<std::pair<SystemState, Name>> fails(strict.failures.begin(),
                                                 strict.failures.end());
    std::set<std::pair<SystemState, Name>> expected{
        {{1, 1, 1}, "Ctrl"}, {{2, 0, 1}, "Ctrl"}, {{2, 1, 0}, "Ctrl"}};
    bool weak = is_responsive(sys, spec, Mode::Weak).responsive;
    return rcp && !strict.responsive && fails == expected && weak;
  });

  criterion("3. race protocol realises with the expected partitions and a "
            "4-pair bisimulation", [] {
    auto doc = load("race_global.ta");
    auto res = realise_pipeline(doc.global.sig, doc.global.spec, doc.global);
    if (!res.realised) return false;
    using Blocks = std::vector<std::vector<int>>;
    bool parts =
        res.saturation.eq.blocks("Ctrl") == Blocks{{0}, {1}, {2, 3}} &&
        res.saturation.eq.blocks("R1") == Blocks{{0, 2}, {1, 3}} &&
        res.saturation.eq.blocks("R2") == Blocks{{0, 3}, {1, 2}};
    Lts<Interaction> lhs = reachable_part(interactions_of_team(res.team.lts));
    Lts<Interaction> rhs = reachable_part(doc.global.lts);
    return parts && res.bisim_pairs.size() == 4 &&
           validate_bisimulation(lhs, rhs, res.bisim_pairs);
  });

  criterion("4. diamond model: realised, 4-state team bisimilar to the "
            "5-state model", [] {
    auto doc = load("diamond.ta");
    auto res = realise_pipeline(doc.global.sig, doc.global.spec, doc.global);
    return res.realised && res.bisimilar &&
           reachable(res.team.lts).size() == 4 &&
           reachable(doc.global.lts).size() == 5;
  });

  criterion("5. three-sender model: pipeline inconclusive, yet a hand-built "
            "system realises it", [] {
    auto doc = load("threesender.ta");
    auto res = realise_pipeline(doc.global.sig, doc.global.spec, doc.global);
    if (res.realised) return false;

    ComponentAutomaton sender;
    sender.states = {"0", "1"};
    sender.outputs = {"a"};
    sender.transitions = {{0, "a", 1}};
    System sys;
    sys.names = {"p", "q", "r"};
    sys.components = {sender, sender, sender};
    TeamAutomaton ta = team(sys, doc.global.spec);
    Lts<Interaction> lhs = reachable_part(interactions_of_team(ta.lts));
    Lts<Interaction> rhs = reachable_part(doc.global.lts);
    return bisimilar(lhs, rhs).related;
  });

  criterion("6. composition: +2 states / +3 transitions over the race team, "
            "interface compliance as predicted", [] {
    auto arb = load("arb.ta");
    auto racev = load("racev.ta");
    CompositionPlan plan;
    plan.parts.emplace_back(arb.plain_system(), arb.plain_spec());
    plan.parts.emplace_back(racev.plain_system(), racev.plain_spec());
    for (const Action& a : {Action("ask"), Action("grant"), Action("reject")})
      plan.interface_spec[a] = {{1, 1}, {1, 1}};
    auto [sys, spec] = compose(plan);
    TeamAutomaton ta = team(sys, spec);
    auto [states, transitions] = reachable_summary(ta);
    if (states.size() != 9 + 2 || transitions != 13 + 3) return false;

    Requirement ask_out{ReqKind::Rcp, {"Ctrl"}, "ask", {0, 0, 0, 0}};
    if (!check_compliance(ta, ask_out, Mode::Strict).satisfied) return false;
    Requirement ask_in{ReqKind::Rsp, {"Arbiter"}, "ask", {0, 2, 0, 0}};
    return !check_compliance(ta, ask_in, Mode::Strict).satisfied &&
           check_compliance(ta, ask_in, Mode::Weak).satisfied;
  });

  criterion("7. featured projection recovers both plain controllers; "
            "projection commutes with the featured team", [] {
    auto fdoc = load("featured_race.ta");
    auto racev = load("racev.ta");
    auto race = load("race.ta");

    System locked = project_fsys(fdoc.fsys, {"lock"});
    if (!(locked.component("Ctrl") == racev.plain_system().component("Ctrl")))
      return false;

    System unlocked = project_fsys(fdoc.fsys, {"unlock"});
    Lts<Action> a = reachable_part(local_lts(unlocked.component("Ctrl")));
    Lts<Action> b = local_lts(race.plain_system().component("Ctrl"));
    if (a.num_states() != b.num_states() ||
        a.transitions.size() != b.transitions.size() ||
        !bisimilar(a, b).related)
      return false;

    return project_feta_commutes(fdoc.fsys, fdoc.fst, {"lock"}) &&
           project_feta_commutes(fdoc.fsys, fdoc.fst, {"unlock"});
  });

  criterion("8. dynamic-logic checks: both shipped formulas hold; tautology "
            "and duality on 50 random models", [] {
    namespace p = teamaut::pdl;
    auto doc = load("race_global.ta");
    if (doc.formulas.size() != 2) return false;
    for (const auto& [name, f] : doc.formulas)
      if (!p::check(doc.global.lts, f).holds) return false;

    std::mt19937 rng(7);
    p::Formula taut = p::Formula::box(p::Program::star(p::Program::some()),
                                      p::Formula::truth());
    for (int round = 0; round < 50; ++round) {
      GlobalModel m = random_interaction_model(rng);
      auto t = p::check(m.lts, taut);
      if (!t.holds ||
          t.satisfying.size() != static_cast<size_t>(m.lts.num_states()))
        return false;
      // Box/diamond duality, state by state.
      p::Formula body =
          p::Formula::diamond(p::Program::some(), p::Formula::truth());
      p::Program prog = p::Program::star(p::Program::some());
      auto box = p::check(m.lts, p::Formula::box(prog, body));
      auto dual = p::check(
          m.lts,
          p::Formula::negate(p::Formula::diamond(prog, p::Formula::negate(body))));
      if (box.satisfying != dual.satisfying) return false;
    }
    return true;
  });

  criterion("9. property suite: 200 random systems, zero failures", [] {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> comp_count(1, 3), state_count(1, 4);
    std::uniform_int_distribution<int> role(0, 3), coin(0, 1);
    const std::vector<Action> pool{"a", "b", "c"};
    for (int round = 0; round < 200; ++round) {
      System sys;
      int nc = comp_count(rng);
      for (int c = 0; c < nc; ++c) {
        ComponentAutomaton ca;
        int ns = state_count(rng);
        for (int s = 0; s < ns; ++s) ca.states.push_back(std::to_string(s));
        for (const auto& a : pool) {
          switch (role(rng)) {
            case 1: ca.inputs.insert(a); break;
            case 2: ca.outputs.insert(a); break;
            default: break;
          }
        }
        if (coin(rng)) ca.internals.insert("tau" + std::to_string(c));
        std::vector<Action> declared(ca.inputs.begin(), ca.inputs.end());
        declared.insert(declared.end(), ca.outputs.begin(), ca.outputs.end());
        declared.insert(declared.end(), ca.internals.begin(),
                        ca.internals.end());
        if (!declared.empty()) {
          std::uniform_int_distribution<int> t_count(0, 2 * ns);
          std::uniform_int_distribution<int> st(0, ns - 1);
          std::uniform_int_distribution<size_t> act(0, declared.size() - 1);
          for (int t = t_count(rng); t > 0; --t)
            ca.transitions.push_back({st(rng), declared[act(rng)], st(rng)});
        }
        std::sort(ca.transitions.begin(), ca.transitions.end());
        ca.transitions.erase(
            std::unique(ca.transitions.begin(), ca.transitions.end()),
            ca.transitions.end());
        sys.names.push_back("C" + std::to_string(c));
        sys.components.push_back(std::move(ca));
      }
      SyncTypeSpec spec;
      for (const auto& a : classify_actions(sys).communicating)
        spec.types[a] = {{1, 1}, {0, std::nullopt}};

      SystemLts full = lts_of_system(sys);
      TeamAutomaton ta = team(sys, spec);
      auto comm = classify_actions(sys).communicating;
      size_t kept = 0;
      for (const auto& t : full.lts.transitions)
        if (label_satisfies(full.lts.alphabet[t.label], spec, comm)) ++kept;
      if (ta.lts.transitions.size() != kept) return false;

      auto reqs = derive_rcp(sys, spec, ta);
      auto rsp = derive_rsp(sys, spec, ta);
      reqs.insert(reqs.end(), rsp.begin(), rsp.end());
      for (const auto& req : reqs) {
        auto strict = check_compliance(ta, req, Mode::Strict);
        auto weak = check_compliance(ta, req, Mode::Weak);
        if (strict.satisfied && !weak.satisfied) return false;
        if (weak.satisfied && weak.witness.empty()) return false;
      }
    }
    return true;
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
