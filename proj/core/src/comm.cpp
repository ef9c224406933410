#include "teamaut/comm.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "teamaut/error.hpp"

namespace teamaut {

std::string to_string(ReqKind k) { return k == ReqKind::Rcp ? "rcp" : "rsp"; }
std::string to_string(Mode m) { return m == Mode::Strict ? "strict" : "weak"; }

std::string to_string(const Requirement& r) {
  std::string g;
  if (r.group.size() == 1) {
    g = r.group.front();
  } else {
    g = "{";
    for (size_t i = 0; i < r.group.size(); ++i) {
      if (i) g += ",";
      g += r.group[i];
    }
    g += "}";
  }
  std::string q = "(";
  for (size_t i = 0; i < r.state.size(); ++i) {
    if (i) q += ",";
    q += std::to_string(r.state[i]);
  }
  q += ")";
  return to_string(r.kind) + "(" + g + "," + r.action + ")@" + q;
}

static std::vector<Requirement> derive(const System& sys,
                                       const SyncTypeSpec& spec,
                                       const TeamAutomaton& ta, ReqKind kind) {
  auto cls = classify_actions(sys);
  auto reach = reachable(ta.lts);
  std::vector<Requirement> reqs;
  for (const auto& [action, st] : spec.types) {
    if (!cls.communicating.count(action)) continue;
    const Interval& own_side =
        kind == ReqKind::Rcp ? st.out_range : st.in_range;
    const Interval& other_side =
        kind == ReqKind::Rcp ? st.in_range : st.out_range;
    if (other_side.contains(0)) continue;
    for (int s : reach) {
      const SystemState& q = ta.states[s];
      std::vector<Name> candidates;
      for (size_t i = 0; i < sys.names.size(); ++i) {
        const auto& c = sys.components[i];
        bool owns = kind == ReqKind::Rcp ? c.is_output(action)
                                         : c.is_input(action);
        if (owns && c.enables(q[i], action)) candidates.push_back(sys.names[i]);
      }
      size_t n = candidates.size();
      for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        std::vector<Name> group;
        for (size_t i = 0; i < n; ++i)
          if (mask & (size_t{1} << i)) group.push_back(candidates[i]);
        if (!own_side.contains(static_cast<int>(group.size()))) continue;
        reqs.push_back({kind, std::move(group), action, q});
      }
    }
  }
  std::sort(reqs.begin(), reqs.end());
  return reqs;
}

std::vector<Requirement> derive_rcp(const System& sys, const SyncTypeSpec& spec,
                                    const TeamAutomaton& ta) {
  return derive(sys, spec, ta, ReqKind::Rcp);
}

std::vector<Requirement> derive_rsp(const System& sys, const SyncTypeSpec& spec,
                                    const TeamAutomaton& ta) {
  return derive(sys, spec, ta, ReqKind::Rsp);
}

static std::optional<SystemLabel> completing_label(const TeamAutomaton& ta,
                                                   int state,
                                                   const Requirement& req) {
  std::optional<SystemLabel> best;
  for (const auto& t : ta.lts.transitions) {
    if (t.from != state) continue;
    const auto* i = std::get_if<Interaction>(&ta.lts.alphabet[t.label]);
    if (!i || i->action != req.action) continue;
    const auto& side = req.kind == ReqKind::Rcp ? i->senders : i->receivers;
    if (side != req.group) continue;
    if (!best || ta.lts.alphabet[t.label] < *best)
      best = ta.lts.alphabet[t.label];
  }
  return best;
}

ComplianceVerdict check_compliance(const TeamAutomaton& ta,
                                   const Requirement& req, Mode mode) {
  int start = ta.index_of(req.state);
  if (start < 0 || !reachable(ta.lts).count(start))
    throw ModelError("requirement state not reachable in this team");

  ComplianceVerdict v;
  v.mode = mode;
  if (auto lab = completing_label(ta, start, req)) {
    v.satisfied = true;
    v.witness = {*lab};
    return v;
  }
  if (mode == Mode::Strict) {
    v.counterexample_state = req.state;
    return v;
  }

  // BFS over labels in which no group member participates; edges from each
  // state are explored in label order so witnesses are shortest and
  // lexicographically least.
  auto avoids_group = [&](const SystemLabel& l) {
    for (const auto& n : req.group)
      if (participates(l, n)) return false;
    return true;
  };
  auto out = ta.lts.outgoing();
  for (auto& edges : out)
    std::sort(edges.begin(), edges.end(),
              [&](const auto& a, const auto& b) {
                return std::tie(ta.lts.alphabet[a.label], a.to) <
                       std::tie(ta.lts.alphabet[b.label], b.to);
              });
  std::map<int, std::pair<int, int>> parent;  // state -> (pred, label id)
  std::deque<int> queue{start};
  std::set<int> seen{start};
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    if (q != start) {
      if (auto lab = completing_label(ta, q, req)) {
        v.satisfied = true;
        std::vector<SystemLabel> path{*lab};
        for (int c = q; c != start;) {
          auto [pred, li] = parent.at(c);
          path.push_back(ta.lts.alphabet[li]);
          c = pred;
        }
        std::reverse(path.begin(), path.end());
        v.witness = std::move(path);
        return v;
      }
    }
    for (const auto& t : out[q]) {
      if (!avoids_group(ta.lts.alphabet[t.label])) continue;
      if (seen.insert(t.to).second) {
        parent[t.to] = {q, t.label};
        queue.push_back(t.to);
      }
    }
  }
  v.counterexample_state = req.state;
  return v;
}

ReceptiveReport is_receptive(const System& sys, const SyncTypeSpec& spec,
                             Mode mode) {
  TeamAutomaton ta = team(sys, spec);
  ReceptiveReport rep;
  rep.receptive = true;
  for (const auto& req : derive_rcp(sys, spec, ta)) {
    auto v = check_compliance(ta, req, mode);
    if (!v.satisfied) {
      rep.receptive = false;
      rep.failures.emplace_back(req, std::move(v));
    }
  }
  return rep;
}

ResponsiveReport is_responsive(const System& sys, const SyncTypeSpec& spec,
                               Mode mode) {
  TeamAutomaton ta = team(sys, spec);
  auto reqs = derive_rsp(sys, spec, ta);
  ResponsiveReport rep;
  rep.responsive = true;
  std::set<std::pair<SystemState, Name>> failing;
  std::map<std::pair<SystemState, Name>, bool> served;
  for (const auto& req : reqs) {
    bool ok = check_compliance(ta, req, mode).satisfied;
    for (const auto& n : req.group) {
      auto key = std::make_pair(req.state, n);
      auto [it, fresh] = served.emplace(key, ok);
      if (!fresh) it->second = it->second || ok;
    }
  }
  for (const auto& [key, ok] : served)
    if (!ok) failing.insert(key);
  rep.responsive = failing.empty();
  rep.failures.assign(failing.begin(), failing.end());
  return rep;
}

}  // namespace teamaut
