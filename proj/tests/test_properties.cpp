#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "teamaut/comm.hpp"
#include "teamaut/pdl.hpp"
#include "teamaut/realise.hpp"

using namespace teamaut;

namespace {

constexpr unsigned kSeed = 20240817;

// Random systems: up to 3 components, up to 4 states, up to 3 shared
// external actions. Internal actions get per-component names so roles
// never clash across components.
System random_system(std::mt19937& rng) {
  std::uniform_int_distribution<int> comp_count(1, 3), state_count(1, 4);
  std::uniform_int_distribution<int> role(0, 3), coin(0, 1);
  const std::vector<Action> pool{"a", "b", "c"};

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
        default: break;  // not in this component's alphabet
      }
    }
    if (coin(rng)) ca.internals.insert("tau" + std::to_string(c));
    std::vector<Action> declared(ca.inputs.begin(), ca.inputs.end());
    declared.insert(declared.end(), ca.outputs.begin(), ca.outputs.end());
    declared.insert(declared.end(), ca.internals.begin(), ca.internals.end());
    if (!declared.empty()) {
      std::uniform_int_distribution<int> t_count(0, 2 * ns);
      std::uniform_int_distribution<int> state(0, ns - 1);
      std::uniform_int_distribution<size_t> act(0, declared.size() - 1);
      int nt = t_count(rng);
      for (int t = 0; t < nt; ++t)
        ca.transitions.push_back({state(rng), declared[act(rng)], state(rng)});
    }
    std::sort(ca.transitions.begin(), ca.transitions.end());
    ca.transitions.erase(
        std::unique(ca.transitions.begin(), ca.transitions.end()),
        ca.transitions.end());
    sys.names.push_back("C" + std::to_string(c));
    sys.components.push_back(std::move(ca));
  }
  return sys;
}

Interval random_interval(std::mt19937& rng, int lo) {
  std::uniform_int_distribution<int> min_d(lo, 2), extra(0, 2);
  int mn = min_d(rng);
  int kind = extra(rng);
  if (kind == 0) return {mn, std::nullopt};
  return {mn, mn + kind - 1};
}

SyncTypeSpec random_spec(std::mt19937& rng, const System& sys) {
  SyncTypeSpec spec;
  for (const auto& a : classify_actions(sys).communicating)
    spec.types[a] = {random_interval(rng, 1), random_interval(rng, 0)};
  return spec;
}

// Interval admission spelled out directly, independent of label_satisfies.
bool admitted(const SystemLabel& l, const SyncTypeSpec& spec) {
  const auto* i = std::get_if<Interaction>(&l);
  if (!i) return true;
  auto it = spec.types.find(i->action);
  if (it == spec.types.end()) return true;
  int s = static_cast<int>(i->senders.size());
  int r = static_cast<int>(i->receivers.size());
  return s >= it->second.out_range.min &&
         (!it->second.out_range.max || s <= *it->second.out_range.max) &&
         r >= it->second.in_range.min &&
         (!it->second.in_range.max || r <= *it->second.in_range.max);
}

GlobalModel random_global(std::mt19937& rng) {
  std::uniform_int_distribution<int> comp_count(2, 3), state_count(2, 4);
  std::uniform_int_distribution<int> role(0, 2);
  const std::vector<Action> pool{"a", "b"};

  GlobalModel m;
  int nc = comp_count(rng);
  for (int c = 0; c < nc; ++c) {
    Name n = "C" + std::to_string(c);
    m.sig.names.push_back(n);
    for (const auto& a : pool) {
      switch (role(rng)) {
        case 1: m.sig.inputs[n].insert(a); break;
        case 2: m.sig.outputs[n].insert(a); break;
        default: break;
      }
    }
  }
  for (const auto& a : m.sig.actions())
    m.spec.types[a] = {random_interval(rng, 1), random_interval(rng, 0)};

  auto labels = interaction_set(m.sig, m.spec);
  int ns = state_count(rng);
  for (int s = 0; s < ns; ++s) m.lts.add_state(std::to_string(s));
  if (!labels.empty()) {
    std::uniform_int_distribution<int> t_count(1, 2 * ns);
    std::uniform_int_distribution<int> state(0, ns - 1);
    std::uniform_int_distribution<size_t> lab(0, labels.size() - 1);
    int nt = t_count(rng);
    for (int t = 0; t < nt; ++t)
      m.lts.add_transition(state(rng), labels[lab(rng)], state(rng));
    m.lts.sort_transitions();
  }
  return m;
}

// Replays a witness through the team, tracking every state the label
// sequence could reach. Returns false when some step has no transition.
bool replayable(const TeamAutomaton& ta, const SystemState& start,
                const std::vector<SystemLabel>& witness) {
  std::set<int> cur{ta.index_of(start)};
  for (const auto& lab : witness) {
    int li = ta.lts.find_label(lab);
    if (li < 0) return false;
    std::set<int> next;
    for (const auto& t : ta.lts.transitions)
      if (t.label == li && cur.count(t.from)) next.insert(t.to);
    if (next.empty()) return false;
    cur = std::move(next);
  }
  return true;
}

}  // namespace

TEST_CASE("team generation matches direct interval admission") {
  std::mt19937 rng(kSeed);
  for (int round = 0; round < 200; ++round) {
    CAPTURE(round);
    System sys = random_system(rng);
    SyncTypeSpec spec = random_spec(rng, sys);

    SystemLts full = lts_of_system(sys);
    TeamAutomaton ta = team(sys, spec);
    REQUIRE(ta.lts.num_states() == full.lts.num_states());

    size_t kept = 0;
    for (const auto& t : full.lts.transitions) {
      const SystemLabel& lab = full.lts.alphabet[t.label];
      if (admitted(lab, spec)) {
        ++kept;
        CHECK(ta.lts.has_transition(t.from, lab, t.to));
      }
    }
    CHECK(ta.lts.transitions.size() == kept);
  }
}

TEST_CASE("strict compliance implies weak compliance, witnesses replay") {
  std::mt19937 rng(kSeed + 1);
  int requirements_seen = 0;
  for (int round = 0; round < 200; ++round) {
    CAPTURE(round);
    System sys = random_system(rng);
    SyncTypeSpec spec = random_spec(rng, sys);
    TeamAutomaton ta = team(sys, spec);

    auto reqs = derive_rcp(sys, spec, ta);
    auto rsp = derive_rsp(sys, spec, ta);
    reqs.insert(reqs.end(), rsp.begin(), rsp.end());
    for (const auto& req : reqs) {
      ++requirements_seen;
      auto strict = check_compliance(ta, req, Mode::Strict);
      auto weak = check_compliance(ta, req, Mode::Weak);
      if (strict.satisfied) CHECK(weak.satisfied);
      if (weak.satisfied) {
        REQUIRE(!weak.witness.empty());
        CHECK(replayable(ta, req.state, weak.witness));
        // Only the final interaction involves the waiting group.
        for (size_t i = 0; i + 1 < weak.witness.size(); ++i)
          for (const auto& n : req.group)
            CHECK_FALSE(participates(weak.witness[i], n));
        const auto& last = weak.witness.back();
        const auto& inter = std::get<Interaction>(last);
        CHECK((req.kind == ReqKind::Rcp ? inter.senders : inter.receivers) ==
              req.group);
      }
    }
  }
  CHECK(requirements_seen > 0);
}

TEST_CASE("saturation is idempotent and its verdict is stable") {
  std::mt19937 rng(kSeed + 2);
  int saturated = 0;
  for (int round = 0; round < 200; ++round) {
    CAPTURE(round);
    GlobalModel m = random_global(rng);
    if (m.lts.transitions.empty()) continue;
    auto sat = saturate(m);
    if (!sat.report.holds) continue;
    ++saturated;
    auto again = saturate_from(m, sat.eq);
    CHECK(again.report.holds);
    CHECK(again.merges == 0);
    CHECK(check_rc(m, sat.eq).holds);
  }
  CHECK(saturated > 0);
}

TEST_CASE("realised teams satisfy the same formulas as their models") {
  std::mt19937 rng(kSeed + 3);
  namespace p = teamaut::pdl;
  std::vector<p::Formula> probes{
      p::Formula::box(p::Program::star(p::Program::some()), p::Formula::truth()),
      p::Formula::diamond(p::Program::some(), p::Formula::truth()),
      p::Formula::diamond(
          p::Program::seq(p::Program::some(), p::Program::some()),
          p::Formula::truth()),
      p::Formula::box(p::Program::some(),
                      p::Formula::diamond(p::Program::some(),
                                          p::Formula::truth()))};
  int realised = 0;
  for (int round = 0; round < 200; ++round) {
    CAPTURE(round);
    GlobalModel m = random_global(rng);
    if (m.lts.transitions.empty()) continue;
    auto res = realise_pipeline(m.sig, m.spec, m);
    if (!res.realised) continue;
    ++realised;
    Lts<Interaction> lhs = reachable_part(interactions_of_team(res.team.lts));
    Lts<Interaction> rhs = reachable_part(m.lts);
    CHECK(validate_bisimulation(lhs, rhs, res.bisim_pairs));
    for (const auto& f : probes)
      CHECK(p::check(lhs, f).holds == p::check(rhs, f).holds);
  }
  CHECK(realised > 0);
}

TEST_CASE("bisimilarity is reflexive and symmetric") {
  std::mt19937 rng(kSeed + 4);
  for (int round = 0; round < 50; ++round) {
    CAPTURE(round);
    GlobalModel m1 = random_global(rng);
    GlobalModel m2 = random_global(rng);
    Lts<Interaction> a = reachable_part(m1.lts);
    Lts<Interaction> b = reachable_part(m2.lts);
    CHECK(bisimilar(a, a).related);
    CHECK(bisimilar(a, b).related == bisimilar(b, a).related);
  }
}
