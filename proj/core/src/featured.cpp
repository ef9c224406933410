#include "teamaut/featured.hpp"

#include <algorithm>

#include "teamaut/error.hpp"

namespace teamaut {

std::string to_string(const Product& p) {
  std::string s = "{";
  bool first = true;
  for (const auto& f : p) {
    if (!first) s += ",";
    s += f;
    first = false;
  }
  return s + "}";
}

FeatureExpr FeatureExpr::top() {
  return FeatureExpr(std::make_shared<Node>(Node{Kind::Top, "", nullptr, nullptr}));
}
FeatureExpr FeatureExpr::bot() {
  return FeatureExpr(std::make_shared<Node>(Node{Kind::Bot, "", nullptr, nullptr}));
}
FeatureExpr FeatureExpr::var(Feature f) {
  return FeatureExpr(
      std::make_shared<Node>(Node{Kind::Var, std::move(f), nullptr, nullptr}));
}
FeatureExpr FeatureExpr::negate(FeatureExpr e) {
  return FeatureExpr(std::make_shared<Node>(
      Node{Kind::Not, "", std::make_shared<FeatureExpr>(std::move(e)), nullptr}));
}
FeatureExpr FeatureExpr::conj(FeatureExpr a, FeatureExpr b) {
  return FeatureExpr(std::make_shared<Node>(
      Node{Kind::And, "", std::make_shared<FeatureExpr>(std::move(a)),
           std::make_shared<FeatureExpr>(std::move(b))}));
}
FeatureExpr FeatureExpr::disj(FeatureExpr a, FeatureExpr b) {
  return FeatureExpr(std::make_shared<Node>(
      Node{Kind::Or, "", std::make_shared<FeatureExpr>(std::move(a)),
           std::make_shared<FeatureExpr>(std::move(b))}));
}

bool FeatureExpr::eval(const Product& p) const {
  switch (kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Var: return p.count(name()) > 0;
    case Kind::Not: return !left().eval(p);
    case Kind::And: return left().eval(p) && right().eval(p);
    case Kind::Or: return left().eval(p) || right().eval(p);
  }
  return false;
}

std::set<Feature> FeatureExpr::variables() const {
  switch (kind()) {
    case Kind::Top:
    case Kind::Bot: return {};
    case Kind::Var: return {name()};
    case Kind::Not: return left().variables();
    case Kind::And:
    case Kind::Or: {
      auto l = left().variables();
      auto r = right().variables();
      l.insert(r.begin(), r.end());
      return l;
    }
  }
  return {};
}

std::string FeatureExpr::str() const {
  switch (kind()) {
    case Kind::Top: return "true";
    case Kind::Bot: return "false";
    case Kind::Var: return name();
    case Kind::Not: return "!" + left().str();
    case Kind::And: return "(" + left().str() + " && " + right().str() + ")";
    case Kind::Or: return "(" + left().str() + " || " + right().str() + ")";
  }
  return "?";
}

void FeaturedCA::validate() const {
  ca.validate();
  if (guards.size() != ca.transitions.size())
    throw ModelError("guard count does not match transition count");
}

System FeaturedSystem::underlying() const {
  System sys;
  sys.names = names;
  for (const auto& c : components) sys.components.push_back(c.ca);
  return sys;
}

void FeaturedSystem::validate() const {
  if (names.size() != components.size())
    throw ModelError("featured system names and components out of sync");
  for (const auto& c : components) {
    c.validate();
    for (const auto& g : c.guards)
      for (const auto& v : g.variables())
        if (!features.count(v))
          throw ModelError("guard uses undeclared feature '" + v + "'");
  }
  underlying().validate();
}

std::vector<Product> valid_products(const std::set<Feature>& features,
                                    const FeatureExpr& fm, int cap) {
  if (static_cast<int>(features.size()) > cap)
    throw ModelError("feature count exceeds enumeration cap of " +
                     std::to_string(cap));
  std::vector<Feature> fs(features.begin(), features.end());
  std::vector<Product> res;
  for (size_t mask = 0; mask < (size_t{1} << fs.size()); ++mask) {
    Product p;
    for (size_t i = 0; i < fs.size(); ++i)
      if (mask & (size_t{1} << i)) p.insert(fs[i]);
    if (fm.eval(p)) res.push_back(std::move(p));
  }
  return res;
}

ComponentAutomaton project_fca(const FeaturedCA& a, const Product& p) {
  a.validate();
  ComponentAutomaton r = a.ca;
  r.transitions.clear();
  for (size_t i = 0; i < a.ca.transitions.size(); ++i)
    if (a.guards[i].eval(p)) r.transitions.push_back(a.ca.transitions[i]);
  return r;
}

System project_fsys(const FeaturedSystem& s, const Product& p) {
  System sys;
  sys.names = s.names;
  for (const auto& c : s.components) sys.components.push_back(project_fca(c, p));
  return sys;
}

SyncType FeaturedSTS::resolve(const Product& p, const Action& a) const {
  auto it = rules.find(a);
  if (it != rules.end())
    for (const auto& r : it->second)
      if (r.guard.eval(p)) return r.type;
  auto d = defaults.find(a);
  if (d == defaults.end()) throw SpecIncompleteError(a);
  return d->second;
}

SyncTypeSpec FeaturedSTS::resolve_spec(const Product& p,
                                       const std::set<Action>& actions) const {
  SyncTypeSpec spec;
  for (const auto& a : actions)
    if (covers(a)) spec.types[a] = resolve(p, a);
  return spec;
}

/// Disjunction of the guards of local transitions matching (from, a, to).
static FeatureExpr local_guard(const FeaturedCA& c, int from, const Action& a,
                               int to) {
  FeatureExpr g = FeatureExpr::bot();
  bool any = false;
  for (size_t i = 0; i < c.ca.transitions.size(); ++i) {
    const auto& t = c.ca.transitions[i];
    if (t.from != from || t.action != a || t.to != to) continue;
    g = any ? FeatureExpr::disj(std::move(g), c.guards[i]) : c.guards[i];
    any = true;
  }
  return g;
}

FeaturedLts induced_fts(const FeaturedSystem& s) {
  s.validate();
  System sys = s.underlying();
  SystemLts base = lts_of_system(sys);
  FeaturedLts f;
  f.lts = base.lts;
  f.states = base.states;
  for (const auto& t : f.lts.transitions) {
    const SystemLabel& lab = f.lts.alphabet[t.label];
    const SystemState& from = f.states[t.from];
    const SystemState& to = f.states[t.to];
    FeatureExpr g = FeatureExpr::top();
    bool any = false;
    for (size_t n = 0; n < s.names.size(); ++n) {
      if (!participates(lab, s.names[n])) continue;
      const Action& a = std::holds_alternative<Interaction>(lab)
                            ? std::get<Interaction>(lab).action
                            : std::get<InternalStep>(lab).action;
      FeatureExpr lg = local_guard(s.components[n], from[n], a, to[n]);
      g = any ? FeatureExpr::conj(std::move(g), std::move(lg)) : std::move(lg);
      any = true;
    }
    f.guards.push_back(std::move(g));
  }
  return f;
}

/// Products admitting the given counts under first-match rule resolution.
static FeatureExpr admission(const FeaturedSTS& fst, const Action& a,
                             int senders, int receivers) {
  auto admits = [&](const SyncType& t) {
    return t.out_range.contains(senders) && t.in_range.contains(receivers);
  };
  FeatureExpr res = FeatureExpr::bot();
  bool any = false;
  FeatureExpr none_before = FeatureExpr::top();
  auto it = fst.rules.find(a);
  if (it != fst.rules.end()) {
    for (const auto& r : it->second) {
      if (admits(r.type)) {
        FeatureExpr hit = FeatureExpr::conj(none_before, r.guard);
        res = any ? FeatureExpr::disj(std::move(res), std::move(hit))
                  : std::move(hit);
        any = true;
      }
      none_before =
          FeatureExpr::conj(std::move(none_before), FeatureExpr::negate(r.guard));
    }
  }
  auto d = fst.defaults.find(a);
  if (d == fst.defaults.end()) throw SpecIncompleteError(a);
  if (admits(d->second)) {
    res = any ? FeatureExpr::disj(std::move(res), std::move(none_before))
              : std::move(none_before);
    any = true;
  }
  return any ? res : FeatureExpr::bot();
}

FeaturedLts feta(const FeaturedSystem& s, const FeaturedSTS& fst) {
  FeaturedLts f = induced_fts(s);
  auto cls = classify_actions(s.underlying());
  for (size_t i = 0; i < f.lts.transitions.size(); ++i) {
    const SystemLabel& lab = f.lts.alphabet[f.lts.transitions[i].label];
    const auto* inter = std::get_if<Interaction>(&lab);
    if (!inter) continue;
    if (!fst.covers(inter->action)) {
      if (cls.communicating.count(inter->action))
        throw SpecIncompleteError(inter->action);
      continue;
    }
    f.guards[i] = FeatureExpr::conj(
        f.guards[i],
        admission(fst, inter->action, static_cast<int>(inter->senders.size()),
                  static_cast<int>(inter->receivers.size())));
  }
  return f;
}

Lts<SystemLabel> project_flts(const FeaturedLts& f, const Product& p) {
  Lts<SystemLabel> r;
  r.initial = f.lts.initial;
  r.state_names = f.lts.state_names;
  for (size_t i = 0; i < f.lts.transitions.size(); ++i) {
    if (!f.guards[i].eval(p)) continue;
    const auto& t = f.lts.transitions[i];
    r.add_transition(t.from, f.lts.alphabet[t.label], t.to);
  }
  r.sort_transitions();
  return r;
}

static std::set<std::tuple<int, SystemLabel, int>> transition_set(
    const Lts<SystemLabel>& l) {
  std::set<std::tuple<int, SystemLabel, int>> s;
  for (const auto& t : l.transitions)
    s.insert({t.from, l.alphabet[t.label], t.to});
  return s;
}

bool project_feta_commutes(const FeaturedSystem& s, const FeaturedSTS& fst,
                           const Product& p) {
  Lts<SystemLabel> lhs = project_flts(feta(s, fst), p);
  System proj = project_fsys(s, p);
  std::set<Action> externals;
  for (const auto& c : proj.components) {
    externals.insert(c.inputs.begin(), c.inputs.end());
    externals.insert(c.outputs.begin(), c.outputs.end());
  }
  TeamAutomaton rhs = team(proj, fst.resolve_spec(p, externals));
  return lhs.initial == rhs.lts.initial &&
         lhs.state_names == rhs.lts.state_names &&
         transition_set(lhs) == transition_set(rhs.lts);
}

std::map<Product, bool> productwise_check(const FeaturedSystem& s,
                                          const FeaturedSTS& fst,
                                          CommProperty property, Mode mode) {
  std::map<Product, bool> res;
  for (const auto& p : valid_products(s.features, s.feature_model)) {
    System proj = project_fsys(s, p);
    std::set<Action> externals;
    for (const auto& c : proj.components) {
      externals.insert(c.inputs.begin(), c.inputs.end());
      externals.insert(c.outputs.begin(), c.outputs.end());
    }
    SyncTypeSpec spec = fst.resolve_spec(p, externals);
    res[p] = property == CommProperty::Receptive
                 ? is_receptive(proj, spec, mode).receptive
                 : is_responsive(proj, spec, mode).responsive;
  }
  return res;
}

}  // namespace teamaut
