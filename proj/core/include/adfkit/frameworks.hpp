#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "adfkit/types.hpp"

namespace adfkit {

enum class FrameworkKind { af, setaf, eafc, afn };

const char* to_token(FrameworkKind k);
std::optional<FrameworkKind> framework_kind_from_token(std::string_view token);

// Semantics of the source formalisms.  coherent and strongly_coherent are
// AFN-only.
enum class SourceSemanticsId {
  conflict_free,
  admissible,
  complete,
  preferred,
  grounded,
  stable,
  coherent,
  strongly_coherent,
};

const char* to_token(SourceSemanticsId sem);
std::optional<SourceSemanticsId> source_semantics_from_token(
    std::string_view token);

// Dung framework: binary attacks.
class Af {
 public:
  explicit Af(const std::vector<std::string>& args);

  void add_attack(const std::string& from, const std::string& to);
  void add_attack(int from, int to);

  const ArgTable& args() const { return table_; }
  int size() const { return table_.size(); }
  Mask full_mask() const { return table_.full_mask(); }

  const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
  Mask attackers_of(int a) const { return attackers_.at(a); }
  bool has_attack(int from, int to) const {
    return has_bit(attackers_.at(to), from);
  }

 private:
  ArgTable table_;
  std::vector<std::pair<int, int>> attacks_;
  std::vector<Mask> attackers_;  // per target
};

// Framework with sets of attacking arguments.
class Setaf {
 public:
  explicit Setaf(const std::vector<std::string>& args);

  void add_attack(const std::vector<std::string>& set,
                  const std::string& target);
  void add_attack(Mask set, int target);  // set must be nonempty

  const ArgTable& args() const { return table_; }
  int size() const { return table_.size(); }
  Mask full_mask() const { return table_.full_mask(); }

  const std::vector<std::pair<Mask, int>>& attacks() const { return attacks_; }
  const std::vector<Mask>& attack_sets_on(int target) const {
    return per_target_.at(target);
  }

 private:
  ArgTable table_;
  std::vector<std::pair<Mask, int>> attacks_;
  std::vector<std::vector<Mask>> per_target_;
};

// Extended argumentation framework with collective defense attacks.
class Eafc {
 public:
  explicit Eafc(const std::vector<std::string>& args);

  void add_attack(const std::string& from, const std::string& to);
  void add_attack(int from, int to);
  // Defense attack by `set` on the attack (from, to); the attack must exist
  // and the set must be nonempty.
  void add_defense_attack(const std::vector<std::string>& set,
                          const std::string& from, const std::string& to);
  void add_defense_attack(Mask set, int from, int to);

  const ArgTable& args() const { return table_; }
  int size() const { return table_.size(); }
  Mask full_mask() const { return table_.full_mask(); }

  const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
  bool has_attack(int from, int to) const;
  Mask attackers_of(int a) const { return attackers_.at(a); }

  struct DefenseAttack {
    Mask set;
    int from;
    int to;
  };
  const std::vector<DefenseAttack>& defense_attacks() const { return datts_; }
  // Defense-attacking sets of the attack (from, to).
  std::vector<Mask> defense_attacks_on(int from, int to) const;

 private:
  ArgTable table_;
  std::vector<std::pair<int, int>> attacks_;
  std::vector<Mask> attackers_;
  std::vector<DefenseAttack> datts_;
};

// Argumentation framework with necessities.
class Afn {
 public:
  explicit Afn(const std::vector<std::string>& args);

  void add_attack(const std::string& from, const std::string& to);
  void add_attack(int from, int to);
  void add_necessity(const std::vector<std::string>& set,
                     const std::string& target);
  void add_necessity(Mask set, int target);  // set must be nonempty

  const ArgTable& args() const { return table_; }
  int size() const { return table_.size(); }
  Mask full_mask() const { return table_.full_mask(); }

  const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
  Mask attackers_of(int a) const { return attackers_.at(a); }
  const std::vector<std::pair<Mask, int>>& necessities() const {
    return necessities_;
  }
  const std::vector<Mask>& necessity_sets_of(int a) const {
    return per_target_.at(a);
  }

 private:
  ArgTable table_;
  std::vector<std::pair<int, int>> attacks_;
  std::vector<Mask> attackers_;
  std::vector<std::pair<Mask, int>> necessities_;
  std::vector<std::vector<Mask>> per_target_;
};

using SourceFramework = std::variant<Af, Setaf, Eafc, Afn>;

FrameworkKind kind_of(const SourceFramework& f);
const ArgTable& args_of(const SourceFramework& f);

// --- AF ---------------------------------------------------------------

Mask af_discarded(const Af& af, Mask x);
std::vector<Mask> af_extensions(const Af& af, SourceSemanticsId sem);

// --- SETAF ------------------------------------------------------------

Mask setaf_discarded(const Setaf& sf, Mask x);
std::vector<Mask> setaf_extensions(const Setaf& sf, SourceSemanticsId sem);

// --- EAFC -------------------------------------------------------------

// a defeats b w.r.t. the reference set x: (a,b) is an attack and no subset
// of x carries a defense attack on it.
bool eafc_defeats(const Eafc& f, Mask x, int a, int b);

// Every defeat_x by a member of x that has a reinstatement set on x,
// computed as the greatest fixpoint over the defeat pairs.
std::vector<std::pair<int, int>> eafc_reinstated_defeats(const Eafc& f,
                                                         Mask x);

// Whether the given defeat_x by a member of x has a reinstatement set on x.
// The pair must actually be a defeat_x originating in x.
bool eafc_has_reinstatement(const Eafc& f, Mask x, std::pair<int, int> defeat);

// Targets of reinstated defeats: the EAFC discarded set of x.
Mask eafc_discarded(const Eafc& f, Mask x);

bool eafc_is_bounded_hierarchical(const Eafc& f);

std::vector<Mask> eafc_extensions(const Eafc& f, SourceSemanticsId sem);

// --- AFN --------------------------------------------------------------

// Members of x that have a powerful sequence within x (least fixpoint).
Mask afn_powerful_members(const Afn& f, Mask x);
bool afn_coherent(const Afn& f, Mask x);

// Discarded set X^att: arguments whose every coherent host set is attacked
// by x; computed as the complement of the arguments derivable while
// avoiding x-attacked members.
Mask afn_discarded(const Afn& f, Mask x);
// Deactivated set X^+: directly attacked, or some necessity set disjoint
// from x.
Mask afn_deactivated(const Afn& f, Mask x);

std::vector<Mask> afn_extensions(const Afn& f, SourceSemanticsId sem);

std::vector<Mask> source_extensions(const SourceFramework& f,
                                    SourceSemanticsId sem);

}  // namespace adfkit
