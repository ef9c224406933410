#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixture.hpp"
#include "teamaut/error.hpp"
#include "teamaut/featured.hpp"

using namespace teamaut;
using teamaut::testing::load;

TEST_CASE("feature expressions") {
  FeatureExpr e = parse_feature_expr("(lock || unlock) && !(lock && unlock)");
  CHECK(e.eval({"lock"}));
  CHECK(e.eval({"unlock"}));
  CHECK_FALSE(e.eval({}));
  CHECK_FALSE(e.eval({"lock", "unlock"}));
  CHECK(e.variables() == std::set<Feature>{"lock", "unlock"});

  CHECK(FeatureExpr::top().eval({}));
  CHECK_FALSE(FeatureExpr::bot().eval({"lock"}));
  // str() round-trips through the expression parser.
  FeatureExpr back = parse_feature_expr(e.str());
  CHECK(back.eval({"lock"}));
  CHECK_FALSE(back.eval({"lock", "unlock"}));
}

TEST_CASE("valid products") {
  std::set<Feature> fs{"lock", "unlock"};
  FeatureExpr one = parse_feature_expr("(lock || unlock) && !(lock && unlock)");
  auto ps = valid_products(fs, one);
  CHECK(ps == std::vector<Product>{{"lock"}, {"unlock"}});

  CHECK(valid_products(fs, FeatureExpr::top()).size() == 4);
  CHECK(valid_products(fs, FeatureExpr::bot()).empty());

  std::set<Feature> many;
  for (int i = 0; i < 25; ++i) many.insert("f" + std::to_string(i));
  CHECK_THROWS_AS(valid_products(many, FeatureExpr::top()), ModelError);
}

TEST_CASE("projection of the featured controller") {
  auto doc = load("featured_race.ta");
  auto products = valid_products(doc.fsys.features, doc.fsys.feature_model);
  REQUIRE(products == std::vector<Product>{{"lock"}, {"unlock"}});

  // With the lock feature, projection yields exactly the approval-phase
  // controller from the plain variant model.
  System locked = project_fsys(doc.fsys, {"lock"});
  auto racev = load("racev.ta");
  CHECK(locked.component("Ctrl") == racev.plain_system().component("Ctrl"));

  // Without it, the controller starts immediately; the approval states
  // become unreachable.
  System unlocked = project_fsys(doc.fsys, {"unlock"});
  const auto& ctrl = unlocked.component("Ctrl");
  CHECK(ctrl.transitions ==
        std::vector<ComponentAutomaton::Transition>{
            {0, "start", 3}, {3, "finish", 4}, {4, "finish", 0}});
  // The runners carry no guards, so projection leaves them untouched.
  CHECK(unlocked.component("R1") == racev.plain_system().component("R1"));
}

TEST_CASE("guard bookkeeping is validated") {
  auto doc = load("featured_race.ta");
  FeaturedCA broken = doc.fsys.components[0];
  broken.guards.pop_back();
  CHECK_THROWS_AS(broken.validate(), ModelError);

  FeaturedSystem bad = doc.fsys;
  bad.components[0].guards[0] = FeatureExpr::var("nosuch");
  CHECK_THROWS_AS(bad.validate(), ModelError);
}

TEST_CASE("induced transition guards conjoin the participants") {
  auto doc = load("featured_race.ta");
  FeaturedLts f = induced_fts(doc.fsys);
  // The guarded local start moves drive the interaction guards.
  SystemLabel full = Interaction{{"Ctrl"}, "start", {"R1", "R2"}};
  int li = f.lts.find_label(full);
  REQUIRE(li >= 0);
  int found = 0;
  for (size_t i = 0; i < f.lts.transitions.size(); ++i) {
    if (f.lts.transitions[i].label != li) continue;
    const SystemState& from = f.states[f.lts.transitions[i].from];
    if (from[1] != 0 || from[2] != 0) continue;  // runners ready
    ++found;
    bool lock = f.guards[i].eval({"lock"});
    bool unlock = f.guards[i].eval({"unlock"});
    if (from[0] == 2) {
      CHECK(lock);
      CHECK_FALSE(unlock);
    } else if (from[0] == 0) {
      CHECK(unlock);
      CHECK_FALSE(lock);
    }
  }
  CHECK(found >= 2);
}

TEST_CASE("featured team admission guards") {
  auto doc = load("featured_race.ta");
  FeaturedLts f = feta(doc.fsys, doc.fst);
  // A lossy start violates the [2,2] receiver bound in every product, so
  // its admission guard is unsatisfiable.
  SystemLabel lossy = Interaction{{"Ctrl"}, "start", {}};
  int li = f.lts.find_label(lossy);
  if (li >= 0) {
    for (size_t i = 0; i < f.lts.transitions.size(); ++i)
      if (f.lts.transitions[i].label == li) {
        CHECK_FALSE(f.guards[i].eval({"lock"}));
        CHECK_FALSE(f.guards[i].eval({"unlock"}));
      }
  }
  // The projection of the featured team has no lossy start either.
  Lts<SystemLabel> proj = project_flts(f, {"lock"});
  for (const auto& t : proj.transitions)
    CHECK(proj.alphabet[t.label] != lossy);
}

TEST_CASE("projecting the featured team commutes with projection") {
  auto doc = load("featured_race.ta");
  CHECK(project_feta_commutes(doc.fsys, doc.fst, {"lock"}));
  CHECK(project_feta_commutes(doc.fsys, doc.fst, {"unlock"}));

  // The diagnostic detects a mismatch when the two sides are built from
  // different specs: the featured team under the original rules does not
  // match the product team under a tampered rule that allows only lossy
  // starts in the lock product.
  FeaturedSTS mutated = doc.fst;
  mutated.rules["start"].push_back(
      {FeatureExpr::var("lock"), SyncType{{1, 1}, {0, 0}}});
  Lts<SystemLabel> lhs = project_flts(feta(doc.fsys, doc.fst), {"lock"});
  System proj = project_fsys(doc.fsys, {"lock"});
  std::set<Action> externals;
  for (const auto& c : proj.components) {
    externals.insert(c.inputs.begin(), c.inputs.end());
    externals.insert(c.outputs.begin(), c.outputs.end());
  }
  TeamAutomaton rhs = team(proj, mutated.resolve_spec({"lock"}, externals));
  CHECK(lhs.transitions.size() != rhs.lts.transitions.size());
  // And the correspondence still holds for the tampered rules themselves.
  CHECK(project_feta_commutes(doc.fsys, mutated, {"lock"}));
}

TEST_CASE("first-match rule resolution") {
  FeaturedSTS fst;
  fst.rules["a"] = {{FeatureExpr::var("x"), SyncType{{1, 1}, {1, 1}}},
                    {FeatureExpr::top(), SyncType{{2, 2}, {0, 0}}}};
  fst.defaults["a"] = SyncType{{1, 1}, {0, 0}};
  CHECK(fst.resolve({"x"}, "a") == SyncType{{1, 1}, {1, 1}});
  CHECK(fst.resolve({}, "a") == SyncType{{2, 2}, {0, 0}});

  FeaturedSTS only_default;
  only_default.defaults["a"] = SyncType{{1, 1}, {0, 0}};
  CHECK(only_default.resolve({"x"}, "a") == SyncType{{1, 1}, {0, 0}});
  CHECK_THROWS_AS(only_default.resolve({}, "b"), SpecIncompleteError);
}

TEST_CASE("productwise verdicts") {
  auto doc = load("featured_race.ta");
  auto rcp =
      productwise_check(doc.fsys, doc.fst, CommProperty::Receptive, Mode::Strict);
  REQUIRE(rcp.size() == 2);
  CHECK(rcp.at({"lock"}));
  CHECK(rcp.at({"unlock"}));

  auto rsp_weak =
      productwise_check(doc.fsys, doc.fst, CommProperty::Responsive, Mode::Weak);
  CHECK(rsp_weak.at({"lock"}));
  CHECK(rsp_weak.at({"unlock"}));
}
