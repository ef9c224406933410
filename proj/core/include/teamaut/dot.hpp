#ifndef TEAMAUT_DOT_HPP
#define TEAMAUT_DOT_HPP

#include <string>

#include "teamaut/system.hpp"

namespace teamaut {

/// Deterministic DOT rendering; only reachable states are drawn and the
/// initial state gets an incoming arrow from a point node.
std::string export_dot(const Lts<SystemLabel>& l, const std::string& name);
std::string export_dot(const Lts<Interaction>& l, const std::string& name);

}  // namespace teamaut

#endif
