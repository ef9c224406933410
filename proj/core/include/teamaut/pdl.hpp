#ifndef TEAMAUT_PDL_HPP
#define TEAMAUT_PDL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "teamaut/system.hpp"

namespace teamaut {
namespace pdl {

/// Regular program over interaction labels. `Some` matches any label of
/// the model's alphabet; `Complement` matches any label not listed.
class Program {
 public:
  enum class Kind { Atom, Some, Complement, Seq, Choice, Star };

  static Program atom(Interaction l);
  static Program some();
  static Program complement(std::vector<Interaction> ls);
  static Program seq(Program a, Program b);
  static Program choice(Program a, Program b);
  static Program star(Program a);

  Kind kind() const { return node_->kind; }
  const Interaction& label() const { return node_->labels.front(); }
  const std::vector<Interaction>& labels() const { return node_->labels; }
  const Program& left() const { return *node_->left; }
  const Program& right() const { return *node_->right; }

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::vector<Interaction> labels;
    std::shared_ptr<Program> left, right;
  };
  explicit Program(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind { True, False, Not, And, Or, Box, Diamond };

  static Formula truth();
  static Formula falsity();
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula box(Program p, Formula f);
  static Formula diamond(Program p, Formula f);

  Kind kind() const { return node_->kind; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  const Program& program() const { return *node_->prog; }

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<Formula> left, right;
    std::shared_ptr<Program> prog;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// NFA over label ids with epsilon moves (label -1), Thompson-style.
struct ProgramNfa {
  struct Edge {
    int from;
    int label;  // index into the ambient alphabet, -1 for epsilon
    int to;
  };
  int start = 0;
  int accept = 0;
  int num_states = 0;
  std::vector<Edge> edges;
};

/// Compiles a program against a fixed alphabet; atoms outside the alphabet
/// raise ModelError.
ProgramNfa compile_program(const Program& p,
                           const std::vector<Interaction>& alphabet);

struct CheckResult {
  bool holds = false;                // at the initial state
  std::vector<int> satisfying;       // all states satisfying the formula
  /// For a failed top-level Box: shortest program path to a state refuting
  /// the body. For a satisfied top-level Diamond: a witnessing path.
  std::optional<std::vector<Interaction>> path;
};

CheckResult check(const Lts<Interaction>& m, const Formula& f);

}  // namespace pdl
}  // namespace teamaut

#endif
