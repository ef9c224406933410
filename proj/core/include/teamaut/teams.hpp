#ifndef TEAMAUT_TEAMS_HPP
#define TEAMAUT_TEAMS_HPP

#include <map>
#include <optional>
#include <string>

#include "teamaut/system.hpp"

namespace teamaut {

/// Closed or right-open integer interval. An absent max means unbounded.
struct Interval {
  int min = 0;
  std::optional<int> max;  // nullopt = unbounded

  bool contains(int k) const { return k >= min && (!max || k <= *max); }
  auto operator<=>(const Interval&) const = default;
};

std::string to_string(const Interval& iv);

/// Admissible sender and receiver multiplicities for one action.
struct SyncType {
  Interval out_range;
  Interval in_range;
  auto operator<=>(const SyncType&) const = default;
};

std::string to_string(const SyncType& st);

/// Map from actions to synchronisation types. Must cover at least the
/// communicating actions of the system it is applied to; entries for open
/// actions are allowed and act as additional restrictions.
struct SyncTypeSpec {
  std::map<Action, SyncType> types;

  bool covers(const Action& a) const { return types.count(a) > 0; }
  const SyncType& at(const Action& a) const;  // throws SpecIncompleteError
  auto operator<=>(const SyncTypeSpec&) const = default;
};

/// Named synchronisation patterns. They expand to concrete intervals
/// relative to a system, see pattern_type().
enum class SyncPattern {
  Multicast,         // [1,1] -> [0,*]
  Broadcast,         // [1,1] -> [k,k], k = number of input owners
  FullSync,          // [s,s] -> [k,k], all owners participate
  MasterSlave,       // [1,*] -> [0,*]
  StrongMasterSlave  // [1,*] -> [1,*]
};

std::optional<SyncPattern> pattern_from_name(const std::string& name);
std::string to_string(SyncPattern p);

/// Expands a pattern for action `a` against the owner counts in `sys`.
SyncType pattern_type(SyncPattern p, const System& sys, const Action& a);

/// True iff the label is admitted by the spec: internal steps and
/// interactions on uncovered open actions are unrestricted; covered
/// actions must have |senders| in out_range and |receivers| in in_range.
/// Throws SpecIncompleteError when a communicating action is uncovered.
bool label_satisfies(const SystemLabel& l, const SyncTypeSpec& spec,
                     const std::set<Action>& communicating);

struct TeamAutomaton {
  System system;
  SyncTypeSpec spec;
  Lts<SystemLabel> lts;             // full product state space, filtered labels
  std::vector<SystemState> states;  // parallel to lts states

  int index_of(const SystemState& q) const;
};

/// The team automaton over `sys` generated by `spec`.
TeamAutomaton team(const System& sys, const SyncTypeSpec& spec);

}  // namespace teamaut

#endif
