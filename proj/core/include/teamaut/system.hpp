#ifndef TEAMAUT_SYSTEM_HPP
#define TEAMAUT_SYSTEM_HPP

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "teamaut/lts.hpp"

namespace teamaut {

using Action = std::string;
using Name = std::string;

/// Multi-party interaction: a set of senders and a set of receivers
/// synchronising on one action. Sets are kept as sorted vectors.
struct Interaction {
  std::vector<Name> senders;
  Action action;
  std::vector<Name> receivers;

  bool participates(const Name& n) const;
  auto operator<=>(const Interaction&) const = default;
};

/// Internal step of a single component.
struct InternalStep {
  Name component;
  Action action;
  auto operator<=>(const InternalStep&) const = default;
};

using SystemLabel = std::variant<Interaction, InternalStep>;

bool participates(const SystemLabel& l, const Name& n);
std::string to_string(const Interaction& l);
std::string to_string(const SystemLabel& l);

/// Finite automaton with input/output/internal action partition.
struct ComponentAutomaton {
  struct Transition {
    int from;
    Action action;
    int to;
    auto operator<=>(const Transition&) const = default;
  };

  std::vector<std::string> states;  // index is the state id
  int initial = 0;
  std::set<Action> inputs, outputs, internals;
  std::vector<Transition> transitions;

  bool is_input(const Action& a) const { return inputs.count(a) > 0; }
  bool is_output(const Action& a) const { return outputs.count(a) > 0; }
  bool is_internal(const Action& a) const { return internals.count(a) > 0; }
  bool enables(int q, const Action& a) const;
  std::vector<int> successors(int q, const Action& a) const;

  /// Checks alphabet disjointness and transition well-formedness.
  void validate() const;

  auto operator<=>(const ComponentAutomaton&) const = default;
};

/// Named, ordered family of component automata. The name order fixes the
/// coordinate order of system states.
struct System {
  std::vector<Name> names;
  std::vector<ComponentAutomaton> components;  // parallel to names

  int index_of(const Name& n) const;  // -1 if absent
  const ComponentAutomaton& component(const Name& n) const;
  void validate() const;

  auto operator<=>(const System&) const = default;
};

/// Tuple of local states in the system's name order.
using SystemState = std::vector<int>;

std::string to_string(const System& sys, const SystemState& q);

struct ActionClasses {
  std::set<Action> communicating;  // input somewhere and output somewhere
  std::set<Action> open;           // external but not communicating
  std::set<Action> internal;
};

ActionClasses classify_actions(const System& sys);

/// The full label set Lambda(S), sorted.
std::vector<SystemLabel> system_labels(const System& sys);

/// LTS induced by a system, over the full product state space.
struct SystemLts {
  Lts<SystemLabel> lts;
  std::vector<SystemState> states;  // parallel to lts states

  int index_of(const SystemState& q) const;  // -1 if absent
};

SystemLts lts_of_system(const System& sys);

}  // namespace teamaut

#endif
