#include "teamaut/teams.hpp"

#include <algorithm>

#include "teamaut/error.hpp"

namespace teamaut {

std::string to_string(const Interval& iv) {
  return "[" + std::to_string(iv.min) + "," +
         (iv.max ? std::to_string(*iv.max) : "*") + "]";
}

std::string to_string(const SyncType& st) {
  return to_string(st.out_range) + " -> " + to_string(st.in_range);
}

const SyncType& SyncTypeSpec::at(const Action& a) const {
  auto it = types.find(a);
  if (it == types.end()) throw SpecIncompleteError(a);
  return it->second;
}

std::optional<SyncPattern> pattern_from_name(const std::string& name) {
  if (name == "multicast") return SyncPattern::Multicast;
  if (name == "broadcast") return SyncPattern::Broadcast;
  if (name == "full_sync") return SyncPattern::FullSync;
  if (name == "master_slave") return SyncPattern::MasterSlave;
  if (name == "strong_master_slave") return SyncPattern::StrongMasterSlave;
  return std::nullopt;
}

std::string to_string(SyncPattern p) {
  switch (p) {
    case SyncPattern::Multicast: return "multicast";
    case SyncPattern::Broadcast: return "broadcast";
    case SyncPattern::FullSync: return "full_sync";
    case SyncPattern::MasterSlave: return "master_slave";
    case SyncPattern::StrongMasterSlave: return "strong_master_slave";
  }
  return "?";
}

SyncType pattern_type(SyncPattern p, const System& sys, const Action& a) {
  int out_owners = 0, in_owners = 0;
  for (const auto& c : sys.components) {
    if (c.is_output(a)) ++out_owners;
    if (c.is_input(a)) ++in_owners;
  }
  switch (p) {
    case SyncPattern::Multicast:
      return {{1, 1}, {0, std::nullopt}};
    case SyncPattern::Broadcast:
      return {{1, 1}, {in_owners, in_owners}};
    case SyncPattern::FullSync:
      return {{out_owners, out_owners}, {in_owners, in_owners}};
    case SyncPattern::MasterSlave:
      return {{1, std::nullopt}, {0, std::nullopt}};
    case SyncPattern::StrongMasterSlave:
      return {{1, std::nullopt}, {1, std::nullopt}};
  }
  throw ModelError("unknown pattern");
}

bool label_satisfies(const SystemLabel& l, const SyncTypeSpec& spec,
                     const std::set<Action>& communicating) {
  const auto* i = std::get_if<Interaction>(&l);
  if (!i) return true;
  if (!spec.covers(i->action)) {
    if (communicating.count(i->action)) throw SpecIncompleteError(i->action);
    return true;
  }
  const SyncType& st = spec.types.at(i->action);
  return st.out_range.contains(static_cast<int>(i->senders.size())) &&
         st.in_range.contains(static_cast<int>(i->receivers.size()));
}

int TeamAutomaton::index_of(const SystemState& q) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == q) return static_cast<int>(i);
  return -1;
}

TeamAutomaton team(const System& sys, const SyncTypeSpec& spec) {
  auto cls = classify_actions(sys);
  for (const auto& a : cls.communicating)
    if (!spec.covers(a)) throw SpecIncompleteError(a);

  SystemLts full = lts_of_system(sys);
  TeamAutomaton t;
  t.system = sys;
  t.spec = spec;
  t.states = full.states;
  t.lts.initial = full.lts.initial;
  t.lts.state_names = full.lts.state_names;
  for (const auto& tr : full.lts.transitions) {
    const SystemLabel& lab = full.lts.alphabet[tr.label];
    if (label_satisfies(lab, spec, cls.communicating))
      t.lts.add_transition(tr.from, lab, tr.to);
  }
  t.lts.sort_transitions();
  return t;
}

}  // namespace teamaut
