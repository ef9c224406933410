#ifndef TEAMAUT_COMPOSE_HPP
#define TEAMAUT_COMPOSE_HPP

#include <vector>

#include "teamaut/comm.hpp"
#include "teamaut/teams.hpp"

namespace teamaut {

struct CompositionPlan {
  std::vector<std::pair<System, SyncTypeSpec>> parts;
  /// Types for actions that become communicating only in the composition.
  std::map<Action, SyncType> interface_spec;
};

struct ComposabilityConflict {
  size_t part_a, part_b;
  std::string symbol;  // clashing name or action
  bool name_clash;     // otherwise an action clash
};

std::pair<bool, std::vector<ComposabilityConflict>> composable(
    const std::vector<std::pair<System, SyncTypeSpec>>& parts);

/// Actions communicating in the flat union but in none of the parts.
std::set<Action> interface_actions(
    const std::vector<std::pair<System, SyncTypeSpec>>& parts);

/// Flat union of the parts, with the part specs joined and the interface
/// spec covering the newly communicating actions.
std::pair<System, SyncTypeSpec> compose(const CompositionPlan& plan);

struct PreservationReport {
  struct PartVerdict {
    size_t part;
    bool receptive, responsive;
  };
  std::vector<PartVerdict> parts;
  bool interface_receptive = false;
  bool interface_responsive = false;
  std::vector<std::pair<Requirement, ComplianceVerdict>> rcp_failures;
  std::vector<std::pair<SystemState, Name>> rsp_failures;
  bool ok = false;
};

/// Checks each part's team on its own, then the composed team restricted
/// to requirements on interface actions.
PreservationReport check_preservation(const CompositionPlan& plan, Mode mode);

}  // namespace teamaut

#endif
