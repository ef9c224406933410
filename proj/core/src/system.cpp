#include "teamaut/system.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "teamaut/error.hpp"

namespace teamaut {

bool Interaction::participates(const Name& n) const {
  return std::binary_search(senders.begin(), senders.end(), n) ||
         std::binary_search(receivers.begin(), receivers.end(), n);
}

bool participates(const SystemLabel& l, const Name& n) {
  if (const auto* i = std::get_if<Interaction>(&l)) return i->participates(n);
  return std::get<InternalStep>(l).component == n;
}

static std::string name_set(const std::vector<Name>& ns) {
  if (ns.size() == 1) return ns.front();
  std::string s = "{";
  for (size_t i = 0; i < ns.size(); ++i) {
    if (i) s += ",";
    s += ns[i];
  }
  return s + "}";
}

std::string to_string(const Interaction& l) {
  return name_set(l.senders) + "->" + name_set(l.receivers) + ":" + l.action;
}

std::string to_string(const SystemLabel& l) {
  if (const auto* i = std::get_if<Interaction>(&l)) return to_string(*i);
  const auto& s = std::get<InternalStep>(l);
  return s.component + ":" + s.action;
}

bool ComponentAutomaton::enables(int q, const Action& a) const {
  for (const auto& t : transitions)
    if (t.from == q && t.action == a) return true;
  return false;
}

std::vector<int> ComponentAutomaton::successors(int q, const Action& a) const {
  std::vector<int> succ;
  for (const auto& t : transitions)
    if (t.from == q && t.action == a) succ.push_back(t.to);
  return succ;
}

void ComponentAutomaton::validate() const {
  if (states.empty()) throw ModelError("component automaton has no states");
  if (initial < 0 || initial >= static_cast<int>(states.size()))
    throw ModelError("initial state out of range");
  for (const auto& a : inputs) {
    if (outputs.count(a) || internals.count(a))
      throw ModelError("action '" + a + "' declared in more than one role");
  }
  for (const auto& a : outputs)
    if (internals.count(a))
      throw ModelError("action '" + a + "' declared in more than one role");
  for (const auto& t : transitions) {
    if (t.from < 0 || t.from >= static_cast<int>(states.size()) || t.to < 0 ||
        t.to >= static_cast<int>(states.size()))
      throw ModelError("transition endpoint out of range");
    if (!inputs.count(t.action) && !outputs.count(t.action) &&
        !internals.count(t.action))
      throw ModelError("transition uses undeclared action '" + t.action + "'");
  }
}

int System::index_of(const Name& n) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  return -1;
}

const ComponentAutomaton& System::component(const Name& n) const {
  int i = index_of(n);
  if (i < 0) throw ModelError("unknown component '" + n + "'");
  return components[i];
}

void System::validate() const {
  if (names.size() != components.size())
    throw ModelError("system names and components out of sync");
  std::set<Name> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw ModelError("duplicate component name '" + n + "'");
  for (const auto& c : components) c.validate();
}

std::string to_string(const System& sys, const SystemState& q) {
  std::string s = "(";
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) s += ",";
    s += sys.components[i].states[q[i]];
  }
  return s + ")";
}

ActionClasses classify_actions(const System& sys) {
  std::set<Action> all_in, all_out, all_tau, all;
  for (const auto& c : sys.components) {
    all_in.insert(c.inputs.begin(), c.inputs.end());
    all_out.insert(c.outputs.begin(), c.outputs.end());
    all_tau.insert(c.internals.begin(), c.internals.end());
  }
  all.insert(all_in.begin(), all_in.end());
  all.insert(all_out.begin(), all_out.end());

  ActionClasses cls;
  cls.internal = all_tau;
  std::set_intersection(all_in.begin(), all_in.end(), all_out.begin(),
                        all_out.end(),
                        std::inserter(cls.communicating, cls.communicating.end()));
  for (const auto& a : all)
    if (!cls.communicating.count(a) && !all_tau.count(a)) cls.open.insert(a);
  return cls;
}

// Enumerates all subsets of `pool` (kept sorted) and feeds them to `fn`.
static void for_subsets(const std::vector<Name>& pool,
                        const std::function<void(const std::vector<Name>&)>& fn) {
  size_t n = pool.size();
  std::vector<Name> cur;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    cur.clear();
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) cur.push_back(pool[i]);
    fn(cur);
  }
}

std::vector<SystemLabel> system_labels(const System& sys) {
  std::set<SystemLabel> labels;
  std::set<Action> externals;
  for (size_t i = 0; i < sys.names.size(); ++i) {
    const auto& c = sys.components[i];
    externals.insert(c.inputs.begin(), c.inputs.end());
    externals.insert(c.outputs.begin(), c.outputs.end());
    for (const auto& a : c.internals)
      labels.insert(InternalStep{sys.names[i], a});
  }
  for (const auto& a : externals) {
    std::vector<Name> owners_out, owners_in;
    for (size_t i = 0; i < sys.names.size(); ++i) {
      if (sys.components[i].is_output(a)) owners_out.push_back(sys.names[i]);
      if (sys.components[i].is_input(a)) owners_in.push_back(sys.names[i]);
    }
    for_subsets(owners_out, [&](const std::vector<Name>& out) {
      for_subsets(owners_in, [&](const std::vector<Name>& in) {
        if (out.empty() && in.empty()) return;
        labels.insert(Interaction{out, a, in});
      });
    });
  }
  return {labels.begin(), labels.end()};
}

int SystemLts::index_of(const SystemState& q) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == q) return static_cast<int>(i);
  return -1;
}

SystemLts lts_of_system(const System& sys) {
  sys.validate();
  SystemLts res;
  size_t n = sys.names.size();

  // Full product state space, mixed-radix order.
  SystemState q(n, 0);
  for (;;) {
    res.states.push_back(q);
    res.lts.add_state(to_string(sys, q));
    size_t i = n;
    while (i > 0) {
      --i;
      if (++q[i] < static_cast<int>(sys.components[i].states.size())) break;
      q[i] = 0;
      if (i == 0) goto done;
    }
  }
done:
  SystemState q0(n);
  for (size_t i = 0; i < n; ++i) q0[i] = sys.components[i].initial;
  res.lts.initial = res.index_of(q0);

  auto labels = system_labels(sys);
  std::map<SystemState, int> index;
  for (size_t i = 0; i < res.states.size(); ++i)
    index[res.states[i]] = static_cast<int>(i);

  for (size_t s = 0; s < res.states.size(); ++s) {
    const SystemState& from = res.states[s];
    for (const auto& lab : labels) {
      if (const auto* step = std::get_if<InternalStep>(&lab)) {
        int ci = sys.index_of(step->component);
        for (int succ : sys.components[ci].successors(from[ci], step->action)) {
          SystemState to = from;
          to[ci] = succ;
          res.lts.add_transition(static_cast<int>(s), lab, index.at(to));
        }
      } else {
        const auto& i = std::get<Interaction>(lab);
        std::vector<int> parts;
        for (const auto& nm : i.senders) parts.push_back(sys.index_of(nm));
        for (const auto& nm : i.receivers) parts.push_back(sys.index_of(nm));
        // Cartesian product of local successor choices.
        std::vector<std::vector<int>> succs;
        bool enabled = true;
        for (int ci : parts) {
          auto sc = sys.components[ci].successors(from[ci], i.action);
          if (sc.empty()) { enabled = false; break; }
          succs.push_back(std::move(sc));
        }
        if (!enabled) continue;
        std::vector<size_t> pick(parts.size(), 0);
        for (;;) {
          SystemState to = from;
          for (size_t k = 0; k < parts.size(); ++k)
            to[parts[k]] = succs[k][pick[k]];
          res.lts.add_transition(static_cast<int>(s), lab, index.at(to));
          size_t k = parts.size();
          while (k > 0) {
            --k;
            if (++pick[k] < succs[k].size()) break;
            pick[k] = 0;
            if (k == 0) goto next_label;
          }
          if (parts.empty()) break;
        }
      next_label:;
      }
    }
  }
  res.lts.sort_transitions();
  return res;
}

}  // namespace teamaut
