#ifndef TEAMAUT_COMM_HPP
#define TEAMAUT_COMM_HPP

#include <optional>
#include <vector>

#include "teamaut/teams.hpp"

namespace teamaut {

enum class ReqKind { Rcp, Rsp };
enum class Mode { Strict, Weak };

std::string to_string(ReqKind k);
std::string to_string(Mode m);

/// A communication requirement at a reachable team state: the named group
/// is ready to send (Rcp) or waiting to receive (Rsp) the action and needs
/// partners on the other side.
struct Requirement {
  ReqKind kind;
  std::vector<Name> group;  // sorted; senders for Rcp, receivers for Rsp
  Action action;
  SystemState state;

  auto operator<=>(const Requirement&) const = default;
};

std::string to_string(const Requirement& r);

struct ComplianceVerdict {
  bool satisfied = false;
  Mode mode = Mode::Strict;
  /// Group-avoiding path ending in the required interaction; length 1 when
  /// strict compliance holds.
  std::vector<SystemLabel> witness;
  std::optional<SystemState> counterexample_state;
};

std::vector<Requirement> derive_rcp(const System& sys, const SyncTypeSpec& spec,
                                    const TeamAutomaton& ta);
std::vector<Requirement> derive_rsp(const System& sys, const SyncTypeSpec& spec,
                                    const TeamAutomaton& ta);

ComplianceVerdict check_compliance(const TeamAutomaton& ta,
                                   const Requirement& req, Mode mode);

struct ReceptiveReport {
  bool receptive = false;
  std::vector<std::pair<Requirement, ComplianceVerdict>> failures;
};

ReceptiveReport is_receptive(const System& sys, const SyncTypeSpec& spec,
                             Mode mode);

struct ResponsiveReport {
  bool responsive = false;
  /// States where the named component has pending receive requirements but
  /// none of them is compliant.
  std::vector<std::pair<SystemState, Name>> failures;
};

ResponsiveReport is_responsive(const System& sys, const SyncTypeSpec& spec,
                               Mode mode);

}  // namespace teamaut

#endif
