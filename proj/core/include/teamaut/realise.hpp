#ifndef TEAMAUT_REALISE_HPP
#define TEAMAUT_REALISE_HPP

#include <map>
#include <optional>
#include <vector>

#include "teamaut/teams.hpp"

namespace teamaut {

/// Component names with their input/output alphabets, no behaviour and no
/// internal actions. Open (non-communicating) actions are allowed so that
/// signatures can describe subsystems with interface actions.
struct SystemSignature {
  std::vector<Name> names;
  std::map<Name, std::set<Action>> inputs;
  std::map<Name, std::set<Action>> outputs;

  std::set<Action> actions() const;
  std::vector<Name> output_owners(const Action& a) const;
  std::vector<Name> input_owners(const Action& a) const;
  void validate() const;
};

/// All interactions over the signature admitted by the spec.
std::vector<Interaction> interaction_set(const SystemSignature& sig,
                                         const SyncTypeSpec& spec);

/// Global interaction model: an LTS labelled with interactions.
struct GlobalModel {
  SystemSignature sig;
  SyncTypeSpec spec;
  Lts<Interaction> lts;

  /// Checks every label against interaction_set(sig, spec).
  void validate() const;
};

/// Per-component-name equivalence on the model's states, kept as union-find
/// forests.
struct NEquivalence {
  std::vector<Name> names;
  std::map<Name, std::vector<int>> parent;

  void init(const std::vector<Name>& ns, int num_states);
  int find(const Name& n, int q) const;
  bool same(const Name& n, int a, int b) const;
  /// Returns true when the merge changed anything.
  bool merge(const Name& n, int a, int b);
  /// Blocks sorted by least element; each block sorted.
  std::vector<std::vector<int>> blocks(const Name& n) const;
};

/// Finest equivalence where the endpoints of every transition are merged
/// for each component not participating in its label.
NEquivalence base_equivalence(const GlobalModel& m);

struct RcViolation {
  Interaction interaction;
  std::map<Name, int> assignment;  // participant -> assigned state
  int glue;
  /// Chosen local a-transition per participant, as (from, to).
  std::map<Name, std::pair<int, int>> moves;
  /// True when no glue transition with the interaction's label exists at
  /// all; false when some exist but none matches every participant.
  bool missing_transition;
};

struct RcReport {
  bool holds = false;
  std::vector<RcViolation> violations;
};

/// The realisability condition over the given equivalence. Reports every
/// violating instance, in deterministic order.
RcReport check_rc(const GlobalModel& m, const NEquivalence& eq);

struct SaturationResult {
  NEquivalence eq;
  RcReport report;
  int merges = 0;
};

/// Repair loop: start from base_equivalence; on a violation whose glue
/// transition exists, merge the participant's target with the glue target
/// and restart. Stops when the condition holds or a violation has no glue
/// transition to repair against.
SaturationResult saturate(const GlobalModel& m);
SaturationResult saturate_from(const GlobalModel& m, NEquivalence eq);

/// Local component for `n`: states are the blocks of its equivalence,
/// transitions projected from global transitions in which n participates.
ComponentAutomaton quotient(const GlobalModel& m, const NEquivalence& eq,
                            const Name& n);

struct RealiseResult {
  bool realised = false;
  SaturationResult saturation;
  // Populated when realised:
  System system;
  TeamAutomaton team;
  bool bisimilar = false;
  std::vector<std::pair<int, int>> bisim_pairs;  // team state -> model state
};

/// Projects the team's labels back to plain interactions; requires that no
/// internal step occurs.
Lts<Interaction> interactions_of_team(const Lts<SystemLabel>& l);

RealiseResult realise_pipeline(const SystemSignature& sig,
                               const SyncTypeSpec& spec, const GlobalModel& m);

}  // namespace teamaut

#endif
