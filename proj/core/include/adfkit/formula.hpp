#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace adfkit {

// Propositional acceptance condition over argument names.
//
// Immutable value type backed by a shared node tree.  Conjunction and
// disjunction are n-ary; the constructors flatten directly nested nodes of
// the same kind and collapse a single operand to the operand itself, so a
// formula built through them is in a canonical associativity form.  No other
// rewriting happens at construction; see simplified() for constant folding.
class Formula {
 public:
  enum class Kind { top, bot, atom, neg, conj, disj };

  static Formula top();
  static Formula bot();
  static Formula atom(std::string name);
  static Formula neg(Formula f);
  static Formula conj(std::vector<Formula> fs);  // fs must be nonempty
  static Formula disj(std::vector<Formula> fs);  // fs must be nonempty

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const;           // kind() == atom only
  const std::vector<Formula>& children() const;   // neg: 1, conj/disj: >= 2

  // Sorted, duplicate-free list of atom names occurring in the formula.
  std::vector<std::string> atoms() const;

  // Evaluates under a total assignment of the atoms.
  bool evaluate(const std::function<bool(const std::string&)>& truth) const;

  // Constant folding plus double negation removal.  Never changes the value
  // of evaluate() under any assignment.
  Formula simplified() const;

  // Exact tree equality (same kinds, atom names and child order).
  bool same_tree(const Formula& o) const;

  // Rendering in the document grammar: c(v), c(f), atom, neg(F), and(F,F),
  // or(F,F); n-ary connectives fold left.
  std::string to_text() const;

 private:
  struct Node {
    Kind kind;
    std::string name;            // atom
    std::vector<Formula> kids;   // neg/conj/disj
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace adfkit
