#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adfkit/formula.hpp"
#include "adfkit/types.hpp"

namespace adfkit {

// Abstract dialectical framework: an ordered argument list plus one
// acceptance condition per argument.  Links are derived from the atoms of
// the conditions and never stored independently.
class Adf {
 public:
  // args and conditions are parallel; every atom of every condition must be
  // a declared argument.
  Adf(std::vector<std::string> args, std::vector<Formula> conditions);

  static Adf from_conditions(
      const std::vector<std::pair<std::string, Formula>>& named);

  int size() const { return table_.size(); }
  const ArgTable& args() const { return table_; }
  Mask full_mask() const { return table_.full_mask(); }

  const Formula& condition(int a) const { return conditions_.at(a); }
  const Formula& condition(const std::string& a) const {
    return conditions_.at(table_.index_of(a));
  }

  Mask parents(int a) const { return parents_.at(a); }
  Mask parents(const std::string& a) const {
    return parents_.at(table_.index_of(a));
  }

  // C_a applied to accepted ∩ par(a); arguments outside par(a) never affect
  // the result.
  bool eval_condition(int a, Mask accepted) const;
  bool eval_condition(const std::string& a,
                      const std::vector<std::string>& accepted) const;

 private:
  bool eval_direct(int a, Mask accepted) const;

  ArgTable table_;
  std::vector<Formula> conditions_;
  std::vector<Mask> parents_;
  std::vector<std::vector<int>> parent_bits_;  // set bits of parents_, ascending
  // Truth table over the parent cube, built when the parent count is small
  // enough; index bit j corresponds to parent_bits_[a][j].
  std::vector<std::vector<char>> truth_;
};

// All completions of v to the argument set z (v's domain must be contained
// in z).  Returns 2^|z \ domain(v)| interpretations, each agreeing with v on
// its domain; the all-t and all-f completions are among them.
std::vector<Interpretation> completions(const Interpretation& v, Mask z);

}  // namespace adfkit
