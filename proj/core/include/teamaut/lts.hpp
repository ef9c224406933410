#ifndef TEAMAUT_LTS_HPP
#define TEAMAUT_LTS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace teamaut {

/// Finite LTS with interned states and labels. The label type must be
/// totally ordered; labels are compared by value across different LTSs.
template <typename L>
struct Lts {
  struct Transition {
    int from;
    int label;  // index into alphabet
    int to;
    auto operator<=>(const Transition&) const = default;
  };

  int initial = 0;
  std::vector<std::string> state_names;
  std::vector<L> alphabet;
  std::vector<Transition> transitions;

  int num_states() const { return static_cast<int>(state_names.size()); }

  int add_state(std::string name) {
    state_names.push_back(std::move(name));
    return num_states() - 1;
  }

  int intern_label(const L& l) {
    auto it = label_index_.find(l);
    if (it != label_index_.end()) return it->second;
    alphabet.push_back(l);
    int idx = static_cast<int>(alphabet.size()) - 1;
    label_index_.emplace(l, idx);
    return idx;
  }

  int find_label(const L& l) const {
    auto it = label_index_.find(l);
    return it == label_index_.end() ? -1 : it->second;
  }

  void add_transition(int from, const L& l, int to) {
    transitions.push_back({from, intern_label(l), to});
  }

  bool has_transition(int from, const L& l, int to) const {
    int li = find_label(l);
    if (li < 0) return false;
    for (const auto& t : transitions)
      if (t.from == from && t.label == li && t.to == to) return true;
    return false;
  }

  std::vector<std::vector<Transition>> outgoing() const {
    std::vector<std::vector<Transition>> out(num_states());
    for (const auto& t : transitions) out[t.from].push_back(t);
    return out;
  }

  // Keeps alphabet untouched; transitions sorted for deterministic output.
  void sort_transitions() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()),
                      transitions.end());
  }

 private:
  std::map<L, int> label_index_;
};

template <typename L>
std::set<int> reachable(const Lts<L>& l) {
  std::set<int> seen{l.initial};
  std::vector<int> stack{l.initial};
  auto out = l.outgoing();
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (const auto& t : out[q])
      if (seen.insert(t.to).second) stack.push_back(t.to);
  }
  return seen;
}

/// Restriction of an LTS to its reachable part. State names are kept;
/// the alphabet keeps only labels that still occur on some transition.
template <typename L>
Lts<L> reachable_part(const Lts<L>& l) {
  auto keep = reachable(l);
  std::map<int, int> renum;
  Lts<L> r;
  for (int q : keep) renum[q] = r.add_state(l.state_names[q]);
  r.initial = renum.at(l.initial);
  for (const auto& t : l.transitions)
    if (keep.count(t.from) && keep.count(t.to))
      r.add_transition(renum.at(t.from), l.alphabet[t.label], renum.at(t.to));
  r.sort_transitions();
  return r;
}

struct BisimResult {
  bool related = false;                     // initial states related
  std::vector<std::pair<int, int>> pairs;   // greatest bisimulation
};

/// Greatest bisimulation between two LTSs, computed by fixpoint refinement
/// starting from the full relation. Labels are matched by value.
template <typename L>
BisimResult bisimilar(const Lts<L>& a, const Lts<L>& b) {
  int na = a.num_states(), nb = b.num_states();
  // Common label space.
  std::map<L, int> common;
  auto shared_id = [&common](const L& l) {
    auto [it, _] = common.emplace(l, static_cast<int>(common.size()));
    return it->second;
  };
  std::vector<std::vector<std::pair<int, int>>> outa(na), outb(nb);
  for (const auto& t : a.transitions)
    outa[t.from].emplace_back(shared_id(a.alphabet[t.label]), t.to);
  for (const auto& t : b.transitions)
    outb[t.from].emplace_back(shared_id(b.alphabet[t.label]), t.to);

  std::vector<std::vector<bool>> rel(na, std::vector<bool>(nb, true));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < na; ++p) {
      for (int q = 0; q < nb; ++q) {
        if (!rel[p][q]) continue;
        bool ok = true;
        for (const auto& [lab, p2] : outa[p]) {
          bool matched = false;
          for (const auto& [lab2, q2] : outb[q])
            if (lab == lab2 && rel[p2][q2]) { matched = true; break; }
          if (!matched) { ok = false; break; }
        }
        if (ok) {
          for (const auto& [lab, q2] : outb[q]) {
            bool matched = false;
            for (const auto& [lab2, p2] : outa[p])
              if (lab == lab2 && rel[p2][q2]) { matched = true; break; }
            if (!matched) { ok = false; break; }
          }
        }
        if (!ok) { rel[p][q] = false; changed = true; }
      }
    }
  }

  BisimResult res;
  res.related = rel[a.initial][b.initial];
  for (int p = 0; p < na; ++p)
    for (int q = 0; q < nb; ++q)
      if (rel[p][q]) res.pairs.emplace_back(p, q);
  return res;
}

/// Re-validates a claimed bisimulation relation against both LTSs.
template <typename L>
bool validate_bisimulation(const Lts<L>& a, const Lts<L>& b,
                           const std::vector<std::pair<int, int>>& pairs) {
  std::set<std::pair<int, int>> rel(pairs.begin(), pairs.end());
  if (!rel.count({a.initial, b.initial})) return false;
  auto outa = a.outgoing();
  auto outb = b.outgoing();
  for (auto [p, q] : rel) {
    for (const auto& t : outa[p]) {
      bool matched = false;
      for (const auto& u : outb[q])
        if (b.alphabet[u.label] == a.alphabet[t.label] &&
            rel.count({t.to, u.to})) { matched = true; break; }
      if (!matched) return false;
    }
    for (const auto& u : outb[q]) {
      bool matched = false;
      for (const auto& t : outa[p])
        if (a.alphabet[t.label] == b.alphabet[u.label] &&
            rel.count({t.to, u.to})) { matched = true; break; }
      if (!matched) return false;
    }
  }
  return true;
}

}  // namespace teamaut

#endif
