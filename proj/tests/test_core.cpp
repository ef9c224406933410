#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "teamaut/error.hpp"
#include "teamaut/system.hpp"

using namespace teamaut;

namespace {

ComponentAutomaton runner() {
  ComponentAutomaton c;
  c.states = {"0", "1", "2"};
  c.inputs = {"start"};
  c.outputs = {"finish"};
  c.internals = {"run"};
  c.transitions = {{0, "start", 1}, {1, "run", 2}, {2, "finish", 0}};
  return c;
}

ComponentAutomaton controller() {
  ComponentAutomaton c;
  c.states = {"0", "1", "2"};
  c.inputs = {"finish"};
  c.outputs = {"start"};
  c.transitions = {{0, "start", 1}, {1, "finish", 2}, {2, "finish", 0}};
  return c;
}

System race() {
  System s;
  s.names = {"Ctrl", "R1", "R2"};
  s.components = {controller(), runner(), runner()};
  return s;
}

}  // namespace

TEST_CASE("component validation") {
  ComponentAutomaton c = runner();
  CHECK_NOTHROW(c.validate());

  ComponentAutomaton overlap = c;
  overlap.outputs.insert("start");
  CHECK_THROWS_AS(overlap.validate(), ModelError);

  ComponentAutomaton undeclared = c;
  undeclared.transitions.push_back({0, "nosuch", 1});
  CHECK_THROWS_AS(undeclared.validate(), ModelError);

  ComponentAutomaton range = c;
  range.transitions.push_back({0, "run", 7});
  CHECK_THROWS_AS(range.validate(), ModelError);

  System dup = race();
  dup.names[2] = "R1";
  CHECK_THROWS_AS(dup.validate(), ModelError);
}

TEST_CASE("action classification") {
  auto cls = classify_actions(race());
  CHECK(cls.communicating == std::set<Action>{"finish", "start"});
  CHECK(cls.open.empty());
  CHECK(cls.internal == std::set<Action>{"run"});

  System open_sys;
  open_sys.names = {"A"};
  ComponentAutomaton a;
  a.states = {"0"};
  a.outputs = {"x"};
  open_sys.components = {a};
  auto cls2 = classify_actions(open_sys);
  CHECK(cls2.open == std::set<Action>{"x"});
  CHECK(cls2.communicating.empty());
}

TEST_CASE("system label enumeration") {
  auto labels = system_labels(race());
  // start: 1 sender owner (Ctrl), 2 receiver owners -> subsets: 2 * 4 - 1
  // empty = 7; finish: 2 sender owners, 1 receiver owner -> 7; run: 2
  // internal steps.
  CHECK(labels.size() == 7 + 7 + 2);
  Interaction full{{"Ctrl"}, "start", {"R1", "R2"}};
  CHECK(std::count(labels.begin(), labels.end(), SystemLabel{full}) == 1);
  Interaction lost{{"Ctrl"}, "start", {}};
  CHECK(std::count(labels.begin(), labels.end(), SystemLabel{lost}) == 1);
  CHECK(std::count(labels.begin(), labels.end(),
                   SystemLabel{InternalStep{"R1", "run"}}) == 1);
}

TEST_CASE("label printing") {
  CHECK(to_string(Interaction{{"Ctrl"}, "start", {"R1", "R2"}}) ==
        "Ctrl->{R1,R2}:start");
  CHECK(to_string(Interaction{{"p", "q"}, "a", {}}) == "{p,q}->{}:a");
  CHECK(to_string(SystemLabel{InternalStep{"R1", "run"}}) == "R1:run");
}

TEST_CASE("system lts over the full product") {
  auto sl = lts_of_system(race());
  CHECK(sl.lts.num_states() == 27);
  CHECK(sl.states[sl.lts.initial] == SystemState{0, 0, 0});
  // The unconstrained system admits the lossy start.
  int i = sl.index_of({0, 0, 0});
  Interaction lossy{{"Ctrl"}, "start", {}};
  CHECK(sl.lts.has_transition(i, SystemLabel{lossy}, sl.index_of({1, 0, 0})));
  // Non-participants stay put.
  Interaction full{{"Ctrl"}, "start", {"R1", "R2"}};
  CHECK(sl.lts.has_transition(i, SystemLabel{full}, sl.index_of({1, 1, 1})));
  CHECK_FALSE(
      sl.lts.has_transition(i, SystemLabel{full}, sl.index_of({1, 1, 0})));
}

TEST_CASE("reachability") {
  Lts<int> l;
  l.add_state("a");
  l.add_state("b");
  l.add_state("c");
  l.add_transition(0, 1, 1);
  l.add_transition(2, 1, 0);
  auto r = reachable(l);
  CHECK(r == std::set<int>{0, 1});
  auto part = reachable_part(l);
  CHECK(part.num_states() == 2);
  CHECK(part.transitions.size() == 1);
}

TEST_CASE("bisimulation") {
  Lts<std::string> a;
  a.add_state("0");
  a.add_state("1");
  a.add_transition(0, "x", 1);
  a.add_transition(1, "x", 0);

  Lts<std::string> one;
  one.add_state("0");
  one.add_transition(0, "x", 0);

  auto r = bisimilar(a, one);
  CHECK(r.related);
  CHECK(validate_bisimulation(a, one, r.pairs));

  Lts<std::string> stuck;
  stuck.add_state("0");
  stuck.add_state("1");
  stuck.add_transition(0, "x", 1);
  CHECK_FALSE(bisimilar(a, stuck).related);

  auto self = bisimilar(a, a);
  CHECK(self.related);
  CHECK(validate_bisimulation(a, a, self.pairs));

  // A claimed relation missing the initial pair fails validation.
  CHECK_FALSE(validate_bisimulation(a, one, {}));
}
