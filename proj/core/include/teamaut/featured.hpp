#ifndef TEAMAUT_FEATURED_HPP
#define TEAMAUT_FEATURED_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "teamaut/comm.hpp"
#include "teamaut/teams.hpp"

namespace teamaut {

using Feature = std::string;
using Product = std::set<Feature>;

std::string to_string(const Product& p);

/// Boolean formula over feature names.
class FeatureExpr {
 public:
  enum class Kind { Top, Bot, Var, Not, And, Or };

  static FeatureExpr top();
  static FeatureExpr bot();
  static FeatureExpr var(Feature f);
  static FeatureExpr negate(FeatureExpr e);
  static FeatureExpr conj(FeatureExpr a, FeatureExpr b);
  static FeatureExpr disj(FeatureExpr a, FeatureExpr b);

  Kind kind() const { return node_->kind; }
  const Feature& name() const { return node_->name; }
  const FeatureExpr& left() const { return *node_->left; }
  const FeatureExpr& right() const { return *node_->right; }

  bool eval(const Product& p) const;
  std::set<Feature> variables() const;
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    Feature name;
    std::shared_ptr<FeatureExpr> left, right;
  };
  explicit FeatureExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Component automaton with a feature guard on every transition. Guards
/// run parallel to ca.transitions.
struct FeaturedCA {
  ComponentAutomaton ca;
  std::vector<FeatureExpr> guards;

  void validate() const;
};

struct FeaturedSystem {
  std::vector<Name> names;
  std::vector<FeaturedCA> components;  // parallel to names
  std::set<Feature> features;
  FeatureExpr feature_model = FeatureExpr::top();

  System underlying() const;
  void validate() const;
};

std::vector<Product> valid_products(const std::set<Feature>& features,
                                    const FeatureExpr& fm, int cap = 20);

ComponentAutomaton project_fca(const FeaturedCA& a, const Product& p);
System project_fsys(const FeaturedSystem& s, const Product& p);

/// Product-dependent synchronisation types: per action, an ordered list of
/// guarded rules with first-match semantics and a mandatory default.
struct FeaturedSTS {
  struct Rule {
    FeatureExpr guard = FeatureExpr::top();
    SyncType type;
  };
  std::map<Action, std::vector<Rule>> rules;
  std::map<Action, SyncType> defaults;

  bool covers(const Action& a) const {
    return rules.count(a) > 0 || defaults.count(a) > 0;
  }
  SyncType resolve(const Product& p, const Action& a) const;
  /// Plain spec for one product, over the given action set.
  SyncTypeSpec resolve_spec(const Product& p,
                            const std::set<Action>& actions) const;
};

/// System-level LTS with a guard per transition.
struct FeaturedLts {
  Lts<SystemLabel> lts;
  std::vector<SystemState> states;      // parallel to lts states
  std::vector<FeatureExpr> guards;      // parallel to lts.transitions
};

/// Product construction of the featured system; each transition's guard is
/// the conjunction of the participating components' local guards.
FeaturedLts induced_fts(const FeaturedSystem& s);

/// Featured team: restricts induced_fts transitions by conjoining, per
/// interaction, the products under which the resolved type admits the
/// sender/receiver counts.
FeaturedLts feta(const FeaturedSystem& s, const FeaturedSTS& fst);

/// Keeps the transitions whose guard the product satisfies.
Lts<SystemLabel> project_flts(const FeaturedLts& f, const Product& p);

/// Diagnostic: projecting the featured team at p equals building the team
/// of the projected system under the resolved spec.
bool project_feta_commutes(const FeaturedSystem& s, const FeaturedSTS& fst,
                           const Product& p);

enum class CommProperty { Receptive, Responsive };

std::map<Product, bool> productwise_check(const FeaturedSystem& s,
                                          const FeaturedSTS& fst,
                                          CommProperty property, Mode mode);

}  // namespace teamaut

#endif
