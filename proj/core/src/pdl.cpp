#include "teamaut/pdl.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "teamaut/error.hpp"

namespace teamaut {
namespace pdl {

Program Program::atom(Interaction l) {
  return Program(std::make_shared<Node>(Node{Kind::Atom, {std::move(l)}, nullptr, nullptr}));
}
Program Program::some() {
  return Program(std::make_shared<Node>(Node{Kind::Some, {}, nullptr, nullptr}));
}
Program Program::complement(std::vector<Interaction> ls) {
  return Program(
      std::make_shared<Node>(Node{Kind::Complement, std::move(ls), nullptr, nullptr}));
}
Program Program::seq(Program a, Program b) {
  return Program(std::make_shared<Node>(
      Node{Kind::Seq, {}, std::make_shared<Program>(std::move(a)),
           std::make_shared<Program>(std::move(b))}));
}
Program Program::choice(Program a, Program b) {
  return Program(std::make_shared<Node>(
      Node{Kind::Choice, {}, std::make_shared<Program>(std::move(a)),
           std::make_shared<Program>(std::move(b))}));
}
Program Program::star(Program a) {
  return Program(std::make_shared<Node>(
      Node{Kind::Star, {}, std::make_shared<Program>(std::move(a)), nullptr}));
}

std::string Program::str() const {
  switch (kind()) {
    case Kind::Atom: return to_string(label());
    case Kind::Some: return "some";
    case Kind::Complement: {
      std::string s = "-(";
      for (size_t i = 0; i < labels().size(); ++i) {
        if (i) s += " + ";
        s += to_string(labels()[i]);
      }
      return s + ")";
    }
    case Kind::Seq: return "(" + left().str() + " ; " + right().str() + ")";
    case Kind::Choice: return "(" + left().str() + " + " + right().str() + ")";
    case Kind::Star: return "(" + left().str() + ")*";
  }
  return "?";
}

Formula Formula::truth() {
  return Formula(std::make_shared<Node>(Node{Kind::True, nullptr, nullptr, nullptr}));
}
Formula Formula::falsity() {
  return Formula(std::make_shared<Node>(Node{Kind::False, nullptr, nullptr, nullptr}));
}
Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Not, std::make_shared<Formula>(std::move(f)), nullptr, nullptr}));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(
      Node{Kind::And, std::make_shared<Formula>(std::move(a)),
           std::make_shared<Formula>(std::move(b)), nullptr}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Or, std::make_shared<Formula>(std::move(a)),
           std::make_shared<Formula>(std::move(b)), nullptr}));
}
Formula Formula::box(Program p, Formula f) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Box, std::make_shared<Formula>(std::move(f)), nullptr,
           std::make_shared<Program>(std::move(p))}));
}
Formula Formula::diamond(Program p, Formula f) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Diamond, std::make_shared<Formula>(std::move(f)), nullptr,
           std::make_shared<Program>(std::move(p))}));
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Not: return "!" + left().str();
    case Kind::And: return "(" + left().str() + " && " + right().str() + ")";
    case Kind::Or: return "(" + left().str() + " || " + right().str() + ")";
    case Kind::Box: return "[" + program().str() + "]" + left().str();
    case Kind::Diamond: return "<" + program().str() + ">" + left().str();
  }
  return "?";
}

static int label_id(const Interaction& l,
                    const std::vector<Interaction>& alphabet) {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == l) return static_cast<int>(i);
  throw ModelError("atom " + to_string(l) + " not in the model's alphabet");
}

ProgramNfa compile_program(const Program& p,
                           const std::vector<Interaction>& alphabet) {
  ProgramNfa n;
  switch (p.kind()) {
    case Program::Kind::Atom: {
      n.num_states = 2;
      n.start = 0;
      n.accept = 1;
      n.edges.push_back({0, label_id(p.label(), alphabet), 1});
      return n;
    }
    case Program::Kind::Some: {
      n.num_states = 2;
      n.start = 0;
      n.accept = 1;
      for (size_t i = 0; i < alphabet.size(); ++i)
        n.edges.push_back({0, static_cast<int>(i), 1});
      return n;
    }
    case Program::Kind::Complement: {
      std::set<int> excluded;
      for (const auto& l : p.labels()) excluded.insert(label_id(l, alphabet));
      n.num_states = 2;
      n.start = 0;
      n.accept = 1;
      for (size_t i = 0; i < alphabet.size(); ++i)
        if (!excluded.count(static_cast<int>(i)))
          n.edges.push_back({0, static_cast<int>(i), 1});
      return n;
    }
    case Program::Kind::Seq: {
      ProgramNfa a = compile_program(p.left(), alphabet);
      ProgramNfa b = compile_program(p.right(), alphabet);
      n = a;
      int off = a.num_states;
      n.num_states += b.num_states;
      for (const auto& e : b.edges)
        n.edges.push_back({e.from + off, e.label, e.to + off});
      n.edges.push_back({a.accept, -1, b.start + off});
      n.accept = b.accept + off;
      return n;
    }
    case Program::Kind::Choice: {
      ProgramNfa a = compile_program(p.left(), alphabet);
      ProgramNfa b = compile_program(p.right(), alphabet);
      int offa = 1, offb = 1 + a.num_states;
      n.num_states = a.num_states + b.num_states + 2;
      n.start = 0;
      n.accept = n.num_states - 1;
      for (const auto& e : a.edges)
        n.edges.push_back({e.from + offa, e.label, e.to + offa});
      for (const auto& e : b.edges)
        n.edges.push_back({e.from + offb, e.label, e.to + offb});
      n.edges.push_back({0, -1, a.start + offa});
      n.edges.push_back({0, -1, b.start + offb});
      n.edges.push_back({a.accept + offa, -1, n.accept});
      n.edges.push_back({b.accept + offb, -1, n.accept});
      return n;
    }
    case Program::Kind::Star: {
      ProgramNfa a = compile_program(p.left(), alphabet);
      int off = 1;
      n.num_states = a.num_states + 2;
      n.start = 0;
      n.accept = n.num_states - 1;
      for (const auto& e : a.edges)
        n.edges.push_back({e.from + off, e.label, e.to + off});
      n.edges.push_back({0, -1, a.start + off});
      n.edges.push_back({0, -1, n.accept});
      n.edges.push_back({a.accept + off, -1, a.start + off});
      n.edges.push_back({a.accept + off, -1, n.accept});
      return n;
    }
  }
  throw ModelError("bad program");
}

/// States satisfying <p>body, by backward fixpoint over the product of the
/// model and the program automaton.
static std::vector<bool> diamond_states(const Lts<Interaction>& m,
                                        const ProgramNfa& nfa,
                                        const std::vector<bool>& body) {
  int nm = m.num_states(), nn = nfa.num_states;
  auto id = [nn](int q, int s) { return q * nn + s; };
  std::vector<bool> in(nm * nn, false);
  std::deque<int> work;
  auto mark = [&](int q, int s) {
    if (!in[id(q, s)]) {
      in[id(q, s)] = true;
      work.push_back(id(q, s));
    }
  };
  for (int q = 0; q < nm; ++q)
    if (body[q]) mark(q, nfa.accept);
  // Backward edges indexed by target.
  std::vector<std::vector<std::pair<int, int>>> eps_into(nn);  // s' <- (s)
  std::vector<std::vector<std::pair<int, int>>> lab_into(nn);  // s' <- (s,l)
  for (const auto& e : nfa.edges) {
    if (e.label < 0)
      eps_into[e.to].emplace_back(e.from, -1);
    else
      lab_into[e.to].emplace_back(e.from, e.label);
  }
  std::vector<std::vector<std::pair<int, int>>> m_into(nm);  // q2 <- (q,l)
  for (const auto& t : m.transitions) m_into[t.to].emplace_back(t.from, t.label);

  while (!work.empty()) {
    int cur = work.front();
    work.pop_front();
    int q = cur / nn, s = cur % nn;
    for (const auto& [s0, _] : eps_into[s]) mark(q, s0);
    for (const auto& [s0, l] : lab_into[s])
      for (const auto& [q0, ml] : m_into[q])
        if (ml == l) mark(q0, s0);
  }
  std::vector<bool> res(nm, false);
  for (int q = 0; q < nm; ++q) res[q] = in[id(q, nfa.start)];
  return res;
}

/// Shortest label path witnessing <p>body from `from`, if any.
static std::optional<std::vector<Interaction>> diamond_path(
    const Lts<Interaction>& m, const ProgramNfa& nfa,
    const std::vector<bool>& body, int from) {
  int nn = nfa.num_states;
  auto id = [nn](int q, int s) { return q * nn + s; };
  std::map<int, std::pair<int, int>> parent;  // node -> (pred node, label or -1)
  std::deque<int> queue{id(from, nfa.start)};
  std::set<int> seen{id(from, nfa.start)};
  auto out = m.outgoing();
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    int q = cur / nn, s = cur % nn;
    if (s == nfa.accept && body[q]) {
      std::vector<Interaction> path;
      for (int c = cur; c != id(from, nfa.start);) {
        auto [pred, l] = parent.at(c);
        if (l >= 0) path.push_back(m.alphabet[l]);
        c = pred;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& e : nfa.edges) {
      if (e.from != s) continue;
      if (e.label < 0) {
        int nxt = id(q, e.to);
        if (seen.insert(nxt).second) {
          parent[nxt] = {cur, -1};
          queue.push_back(nxt);
        }
      } else {
        for (const auto& t : out[q]) {
          if (t.label != e.label) continue;
          int nxt = id(t.to, e.to);
          if (seen.insert(nxt).second) {
            parent[nxt] = {cur, t.label};
            queue.push_back(nxt);
          }
        }
      }
    }
  }
  return std::nullopt;
}

static std::vector<bool> eval(const Lts<Interaction>& m, const Formula& f) {
  int nm = m.num_states();
  switch (f.kind()) {
    case Formula::Kind::True: return std::vector<bool>(nm, true);
    case Formula::Kind::False: return std::vector<bool>(nm, false);
    case Formula::Kind::Not: {
      auto v = eval(m, f.left());
      v.flip();
      return v;
    }
    case Formula::Kind::And: {
      auto a = eval(m, f.left());
      auto b = eval(m, f.right());
      for (int i = 0; i < nm; ++i) a[i] = a[i] && b[i];
      return a;
    }
    case Formula::Kind::Or: {
      auto a = eval(m, f.left());
      auto b = eval(m, f.right());
      for (int i = 0; i < nm; ++i) a[i] = a[i] || b[i];
      return a;
    }
    case Formula::Kind::Diamond: {
      auto body = eval(m, f.left());
      auto nfa = compile_program(f.program(), m.alphabet);
      return diamond_states(m, nfa, body);
    }
    case Formula::Kind::Box: {
      auto body = eval(m, f.left());
      body.flip();
      auto nfa = compile_program(f.program(), m.alphabet);
      auto d = diamond_states(m, nfa, body);
      d.flip();
      return d;
    }
  }
  return std::vector<bool>(nm, false);
}

CheckResult check(const Lts<Interaction>& m, const Formula& f) {
  CheckResult res;
  auto v = eval(m, f);
  res.holds = v[m.initial];
  for (int q = 0; q < m.num_states(); ++q)
    if (v[q]) res.satisfying.push_back(q);

  if (f.kind() == Formula::Kind::Diamond && res.holds) {
    auto body = eval(m, f.left());
    auto nfa = compile_program(f.program(), m.alphabet);
    res.path = diamond_path(m, nfa, body, m.initial);
  } else if (f.kind() == Formula::Kind::Box && !res.holds) {
    auto body = eval(m, f.left());
    body.flip();
    auto nfa = compile_program(f.program(), m.alphabet);
    res.path = diamond_path(m, nfa, body, m.initial);
  }
  return res;
}

}  // namespace pdl
}  // namespace teamaut
