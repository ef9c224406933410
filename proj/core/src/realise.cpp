#include "teamaut/realise.hpp"

#include <algorithm>

#include "teamaut/error.hpp"

namespace teamaut {

std::set<Action> SystemSignature::actions() const {
  std::set<Action> all;
  for (const auto& [n, as] : inputs) all.insert(as.begin(), as.end());
  for (const auto& [n, as] : outputs) all.insert(as.begin(), as.end());
  return all;
}

std::vector<Name> SystemSignature::output_owners(const Action& a) const {
  std::vector<Name> owners;
  for (const auto& n : names) {
    auto it = outputs.find(n);
    if (it != outputs.end() && it->second.count(a)) owners.push_back(n);
  }
  return owners;
}

std::vector<Name> SystemSignature::input_owners(const Action& a) const {
  std::vector<Name> owners;
  for (const auto& n : names) {
    auto it = inputs.find(n);
    if (it != inputs.end() && it->second.count(a)) owners.push_back(n);
  }
  return owners;
}

void SystemSignature::validate() const {
  if (names.empty()) throw ModelError("signature has no components");
  std::set<Name> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw ModelError("duplicate component name '" + n + "'");
  for (const auto& n : names) {
    auto in = inputs.find(n);
    auto out = outputs.find(n);
    if (in == inputs.end() || out == outputs.end()) continue;
    for (const auto& a : in->second)
      if (out->second.count(a))
        throw ModelError("action '" + a + "' is both input and output of '" +
                         n + "'");
  }
}

static void subsets_bounded(const std::vector<Name>& pool, const Interval& iv,
                            std::vector<std::vector<Name>>& out) {
  size_t n = pool.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<Name> cur;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) cur.push_back(pool[i]);
    if (iv.contains(static_cast<int>(cur.size()))) out.push_back(std::move(cur));
  }
}

std::vector<Interaction> interaction_set(const SystemSignature& sig,
                                         const SyncTypeSpec& spec) {
  sig.validate();
  std::set<Interaction> res;
  for (const auto& a : sig.actions()) {
    const SyncType& st = spec.at(a);
    std::vector<std::vector<Name>> outs, ins;
    subsets_bounded(sig.output_owners(a), st.out_range, outs);
    subsets_bounded(sig.input_owners(a), st.in_range, ins);
    for (const auto& o : outs)
      for (const auto& i : ins) {
        if (o.empty() && i.empty()) continue;
        res.insert(Interaction{o, a, i});
      }
  }
  return {res.begin(), res.end()};
}

void GlobalModel::validate() const {
  auto admitted = interaction_set(sig, spec);
  for (const auto& l : lts.alphabet)
    if (!std::binary_search(admitted.begin(), admitted.end(), l))
      throw ModelError("model label " + to_string(l) +
                       " outside the interaction set");
}

void NEquivalence::init(const std::vector<Name>& ns, int num_states) {
  names = ns;
  parent.clear();
  for (const auto& n : ns) {
    auto& p = parent[n];
    p.resize(num_states);
    for (int i = 0; i < num_states; ++i) p[i] = i;
  }
}

int NEquivalence::find(const Name& n, int q) const {
  const auto& p = parent.at(n);
  while (p[q] != q) q = p[q];
  return q;
}

bool NEquivalence::same(const Name& n, int a, int b) const {
  return find(n, a) == find(n, b);
}

bool NEquivalence::merge(const Name& n, int a, int b) {
  int ra = find(n, a), rb = find(n, b);
  if (ra == rb) return false;
  // Smaller id becomes the root so block representatives are stable.
  if (rb < ra) std::swap(ra, rb);
  parent.at(n)[rb] = ra;
  return true;
}

std::vector<std::vector<int>> NEquivalence::blocks(const Name& n) const {
  std::map<int, std::vector<int>> by_root;
  int num = static_cast<int>(parent.at(n).size());
  for (int q = 0; q < num; ++q) by_root[find(n, q)].push_back(q);
  std::vector<std::vector<int>> res;
  for (auto& [root, block] : by_root) res.push_back(std::move(block));
  return res;
}

NEquivalence base_equivalence(const GlobalModel& m) {
  NEquivalence eq;
  eq.init(m.sig.names, m.lts.num_states());
  for (const auto& t : m.lts.transitions) {
    const Interaction& l = m.lts.alphabet[t.label];
    for (const auto& n : m.sig.names)
      if (!l.participates(n)) eq.merge(n, t.from, t.to);
  }
  return eq;
}

RcReport check_rc(const GlobalModel& m, const NEquivalence& eq) {
  RcReport rep;
  auto interactions = interaction_set(m.sig, m.spec);
  int num = m.lts.num_states();

  for (const auto& lam : interactions) {
    std::vector<Name> participants = lam.senders;
    participants.insert(participants.end(), lam.receivers.begin(),
                        lam.receivers.end());
    std::sort(participants.begin(), participants.end());
    if (participants.empty()) continue;
    size_t np = participants.size();

    // Per participant: local a-transitions, i.e. global transitions whose
    // label has the interaction's action and involves the participant.
    std::vector<std::vector<std::pair<int, int>>> moves(np);  // (from, to)
    for (size_t i = 0; i < np; ++i) {
      for (const auto& t : m.lts.transitions) {
        const Interaction& mu = m.lts.alphabet[t.label];
        if (mu.action == lam.action && mu.participates(participants[i]))
          moves[i].emplace_back(t.from, t.to);
      }
      std::sort(moves[i].begin(), moves[i].end());
      moves[i].erase(std::unique(moves[i].begin(), moves[i].end()),
                     moves[i].end());
      if (moves[i].empty()) { np = 0; break; }  // premise can never fire
    }
    if (np == 0) continue;

    // Glue transitions labelled with this interaction, grouped by source.
    std::vector<std::vector<int>> glue_succ(num);
    for (const auto& u : m.lts.transitions)
      if (m.lts.alphabet[u.label] == lam)
        glue_succ[u.from].push_back(u.to);
    for (auto& v : glue_succ) std::sort(v.begin(), v.end());

    // Enumerate one move per participant; the assignment is the moves'
    // sources. Every glue state equivalent to all sources must offer a
    // matching transition whose target all participants accept.
    std::vector<size_t> pick(np, 0);
    for (;;) {
      for (int g = 0; g < num; ++g) {
        bool glue_ok = true;
        for (size_t i = 0; i < np && glue_ok; ++i)
          glue_ok = eq.same(participants[i], moves[i][pick[i]].first, g);
        if (!glue_ok) continue;
        bool matched = false;
        for (int succ : glue_succ[g]) {
          bool all = true;
          for (size_t i = 0; i < np && all; ++i)
            all = eq.same(participants[i], moves[i][pick[i]].second, succ);
          if (all) { matched = true; break; }
        }
        if (matched) continue;
        RcViolation v;
        v.interaction = lam;
        v.glue = g;
        for (size_t i = 0; i < np; ++i) {
          v.assignment[participants[i]] = moves[i][pick[i]].first;
          v.moves[participants[i]] = moves[i][pick[i]];
        }
        v.missing_transition = glue_succ[g].empty();
        rep.violations.push_back(std::move(v));
      }
      size_t i = np;
      bool done = true;
      while (i > 0) {
        --i;
        if (++pick[i] < moves[i].size()) { done = false; break; }
        pick[i] = 0;
      }
      if (done) break;
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

SaturationResult saturate_from(const GlobalModel& m, NEquivalence eq) {
  SaturationResult res;
  res.eq = std::move(eq);
  for (;;) {
    res.report = check_rc(m, res.eq);
    if (res.report.holds) return res;
    const RcViolation& v = res.report.violations.front();
    if (v.missing_transition) return res;  // nothing to repair against
    int target = -1;
    for (const auto& u : m.lts.transitions)
      if (u.from == v.glue && m.lts.alphabet[u.label] == v.interaction) {
        if (target < 0 || u.to < target) target = u.to;
      }
    for (const auto& [n, move] : v.moves)
      if (res.eq.merge(n, move.second, target)) ++res.merges;
  }
}

SaturationResult saturate(const GlobalModel& m) {
  m.validate();
  return saturate_from(m, base_equivalence(m));
}

static std::string block_name(const GlobalModel& m,
                              const std::vector<int>& block) {
  std::string s = "{";
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) s += ",";
    s += m.lts.state_names[block[i]];
  }
  return s + "}";
}

ComponentAutomaton quotient(const GlobalModel& m, const NEquivalence& eq,
                            const Name& n) {
  if (std::find(m.sig.names.begin(), m.sig.names.end(), n) ==
      m.sig.names.end())
    throw ModelError("unknown component '" + n + "'");
  auto blocks = eq.blocks(n);
  std::map<int, int> block_of;  // state -> block index
  ComponentAutomaton ca;
  for (size_t b = 0; b < blocks.size(); ++b) {
    ca.states.push_back(block_name(m, blocks[b]));
    for (int q : blocks[b]) block_of[q] = static_cast<int>(b);
  }
  ca.initial = block_of.at(m.lts.initial);
  auto iti = m.sig.inputs.find(n);
  if (iti != m.sig.inputs.end()) ca.inputs = iti->second;
  auto ito = m.sig.outputs.find(n);
  if (ito != m.sig.outputs.end()) ca.outputs = ito->second;
  std::set<ComponentAutomaton::Transition> seen;
  for (const auto& t : m.lts.transitions) {
    const Interaction& l = m.lts.alphabet[t.label];
    if (!l.participates(n)) continue;
    ComponentAutomaton::Transition ct{block_of.at(t.from), l.action,
                                      block_of.at(t.to)};
    if (seen.insert(ct).second) ca.transitions.push_back(ct);
  }
  std::sort(ca.transitions.begin(), ca.transitions.end());
  return ca;
}

Lts<Interaction> interactions_of_team(const Lts<SystemLabel>& l) {
  Lts<Interaction> r;
  r.initial = l.initial;
  r.state_names = l.state_names;
  for (const auto& t : l.transitions) {
    const auto* i = std::get_if<Interaction>(&l.alphabet[t.label]);
    if (!i) throw ModelError("team contains internal steps");
    r.add_transition(t.from, *i, t.to);
  }
  r.sort_transitions();
  return r;
}

RealiseResult realise_pipeline(const SystemSignature& sig,
                               const SyncTypeSpec& spec,
                               const GlobalModel& m) {
  m.validate();
  RealiseResult res;
  res.saturation = saturate(m);
  if (!res.saturation.report.holds) return res;

  res.system.names = sig.names;
  for (const auto& n : sig.names)
    res.system.components.push_back(quotient(m, res.saturation.eq, n));
  res.team = team(res.system, spec);

  Lts<Interaction> lhs = reachable_part(interactions_of_team(res.team.lts));
  Lts<Interaction> rhs = reachable_part(m.lts);
  auto b = bisimilar(lhs, rhs);
  res.bisimilar = b.related;
  res.bisim_pairs = std::move(b.pairs);
  res.realised = res.bisimilar;
  return res;
}

}  // namespace teamaut
