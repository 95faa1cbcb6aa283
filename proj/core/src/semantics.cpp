#include "adfkit/semantics.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace adfkit {

namespace {

struct SemanticsToken {
  SemanticsId id;
  const char* token;
};

constexpr std::array<SemanticsToken, 15> semantics_tokens{{
    {SemanticsId::conflict_free, "conflict-free"},
    {SemanticsId::pd_acyclic_conflict_free, "pd-acyclic-conflict-free"},
    {SemanticsId::model, "model"},
    {SemanticsId::stable, "stable"},
    {SemanticsId::grounded, "grounded"},
    {SemanticsId::acyclic_grounded, "acyclic-grounded"},
    {SemanticsId::cc_admissible, "cc-admissible"},
    {SemanticsId::cc_complete, "cc-complete"},
    {SemanticsId::cc_preferred, "cc-preferred"},
    {SemanticsId::aa_admissible, "aa-admissible"},
    {SemanticsId::aa_complete, "aa-complete"},
    {SemanticsId::aa_preferred, "aa-preferred"},
    {SemanticsId::ca2_admissible, "ca2-admissible"},
    {SemanticsId::ca2_complete, "ca2-complete"},
    {SemanticsId::ca2_preferred, "ca2-preferred"},
}};

}  // namespace

const char* to_token(SemanticsId sem) {
  for (const auto& t : semantics_tokens)
    if (t.id == sem) return t.token;
  throw std::logic_error("bad semantics id");
}

std::optional<SemanticsId> semantics_from_token(std::string_view token) {
  for (const auto& t : semantics_tokens)
    if (token == t.token) return t.id;
  return std::nullopt;
}

const std::vector<SemanticsId>& all_semantics() {
  static const std::vector<SemanticsId> all = [] {
    std::vector<SemanticsId> v;
    for (const auto& t : semantics_tokens) v.push_back(t.id);
    return v;
  }();
  return all;
}

const char* to_token(LinkPolarity p) {
  switch (p) {
    case LinkPolarity::supporting:
      return "supporting";
    case LinkPolarity::attacking:
      return "attacking";
    case LinkPolarity::both:
      return "both";
    case LinkPolarity::neither:
      return "neither";
  }
  throw std::logic_error("bad polarity");
}

// ---------------------------------------------------------------------
// Construction: minimal decisive interpretations and evaluations.
// ---------------------------------------------------------------------

AdfSemantics::AdfSemantics(const Adf& adf) : adf_(&adf) {
  const int n = adf.size();
  min_dec_in_.resize(n);
  min_dec_out_.resize(n);
  evaluations_.resize(n);

  for (int a = 0; a < n; ++a) {
    const Mask par = adf.parents(a);
    // Every (t, f) pair over the parents, kept when decisive and not
    // dominated by another decisive pair.
    std::vector<Interpretation> dec_in, dec_out;
    for_each_subset(par, [&](Mask t) {
      for_each_subset(par & ~t, [&](Mask f) {
        switch (decide_over_parents(a, t, f)) {
          case Decision::decisively_in:
            dec_in.push_back({t, f});
            break;
          case Decision::decisively_out:
            dec_out.push_back({t, f});
            break;
          case Decision::undecided:
            break;
        }
      });
    });
    auto keep_minimal = [](std::vector<Interpretation>& v) {
      std::vector<Interpretation> out;
      for (const auto& c : v) {
        bool dominated = false;
        for (const auto& o : v) {
          if (o == c) continue;
          if ((o.t & ~c.t) == 0 && (o.f & ~c.f) == 0) {
            dominated = true;
            break;
          }
        }
        if (!dominated) out.push_back(c);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    min_dec_in_[a] = keep_minimal(dec_in);
    min_dec_out_[a] = keep_minimal(dec_out);
  }

  for (int a = 0; a < n; ++a) enumerate_evaluations(a);
}

Decision AdfSemantics::decide_over_parents(int a, Mask t, Mask f) const {
  const Mask open = adf_->parents(a) & ~(t | f);
  bool seen_in = false, seen_out = false;
  bool undecided = false;
  for_each_subset(open, [&](Mask extra) {
    if (undecided) return;
    if (adf_->eval_condition(a, t | extra))
      seen_in = true;
    else
      seen_out = true;
    if (seen_in && seen_out) undecided = true;
  });
  if (undecided) return Decision::undecided;
  return seen_in ? Decision::decisively_in : Decision::decisively_out;
}

Decision AdfSemantics::decide(int a, const Interpretation& v) const {
  if (a < 0 || a >= size()) throw std::out_of_range("argument index");
  if ((v.t & v.f) != 0)
    throw std::invalid_argument("interpretation assigns t and f at once");
  const Mask par = adf_->parents(a);
  return decide_over_parents(a, v.t & par, v.f & par);
}

Decision AdfSemantics::decide(const std::string& a,
                              const Interpretation& v) const {
  return decide(adf_->args().index_of(a), v);
}

const std::vector<Interpretation>& AdfSemantics::min_dec_in(int a) const {
  return min_dec_in_.at(a);
}

const std::vector<Interpretation>& AdfSemantics::min_dec_out(int a) const {
  return min_dec_out_.at(a);
}

// Reduced evaluation enumeration for one target.  A depth-first search
// assigns every argument reached through the t-parts one interpretation
// from min_dec(in, ·).  Once the closure is complete, the arguments lying
// on t-part cycles together with everything they require form the pd-set;
// the rest admits a pd-sequence ordering ending at the target.
void AdfSemantics::enumerate_evaluations(int target) {
  std::set<Evaluation> found;
  const int n = size();

  // chosen[i] >= 0: index into min_dec_in_[i]; -1: not part of the closure.
  std::vector<int> chosen(n, -1);

  auto finalize = [&]() {
    Mask dom = 0;
    Mask blocking = 0;
    for (int i = 0; i < n; ++i)
      if (chosen[i] >= 0) {
        dom |= bit(i);
        blocking |= min_dec_in_[i][chosen[i]].f;
      }
    // reach[i]: arguments reachable from i through chosen t-parts.
    std::vector<Mask> reach(n, 0);
    for_each_bit(dom, [&](int i) { reach[i] = min_dec_in_[i][chosen[i]].t; });
    bool changed = true;
    while (changed) {
      changed = false;
      for_each_bit(dom, [&](int i) {
        Mask next = reach[i];
        for_each_bit(reach[i], [&](int j) { next |= reach[j]; });
        if (next != reach[i]) {
          reach[i] = next;
          changed = true;
        }
      });
    }
    Mask cyclic = 0;
    for_each_bit(dom, [&](int i) {
      if (has_bit(reach[i], i)) cyclic |= bit(i);
    });
    // The pd-set is the requirement closure of the cycle members.
    Mask pd = cyclic;
    for_each_bit(cyclic, [&](int i) { pd |= reach[i]; });
    found.insert(Evaluation{pd, dom & ~pd, blocking});
  };

  auto dfs = [&](auto&& self, Mask pending) -> void {
    if (pending == 0) {
      finalize();
      return;
    }
    const int e = std::countr_zero(pending);
    const auto& options = min_dec_in_[e];
    for (size_t k = 0; k < options.size(); ++k) {
      chosen[e] = static_cast<int>(k);
      Mask next = pending & ~bit(e);
      bool ok = true;
      for_each_bit(options[k].t, [&](int need) {
        if (chosen[need] < 0 && !has_bit(next, need)) {
          if (min_dec_in_[need].empty()) ok = false;
          next |= bit(need);
        }
      });
      if (ok) self(self, next);
      // Reset only what this frame added; needs added to `next` that were
      // never chosen are reset by their own frames.
      chosen[e] = -1;
    }
  };

  if (!min_dec_in_[target].empty()) dfs(dfs, bit(target));
  evaluations_[target].assign(found.begin(), found.end());
}

const std::vector<Evaluation>& AdfSemantics::partially_acyclic_evaluations(
    int a) const {
  if (a < 0 || a >= size()) throw std::out_of_range("argument index");
  return evaluations_.at(a);
}

std::vector<Evaluation> AdfSemantics::acyclic_evaluations(int a) const {
  std::vector<Evaluation> out;
  for (const auto& e : partially_acyclic_evaluations(a))
    if (e.acyclic()) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------
// Discarded sets, ranges and conflict-freeness.
// ---------------------------------------------------------------------

Mask AdfSemantics::discarded(Mask x, DiscardMode mode) const {
  Mask out = 0;
  for (int a = 0; a < size(); ++a) {
    bool member = true;  // no evaluation at all puts a in every mode's set
    for (const auto& e : evaluations_[a]) {
      switch (mode) {
        case DiscardMode::standard:
          if ((e.blocking & x) == 0) member = false;
          break;
        case DiscardMode::partial:
          if ((e.pd_set & ~x) == 0 && (e.blocking & x) == 0) member = false;
          break;
        case DiscardMode::acyclic:
          if (e.acyclic() && (e.blocking & x) == 0) member = false;
          break;
      }
      if (!member) break;
    }
    if (member) out |= bit(a);
  }
  return out;
}

bool AdfSemantics::is_conflict_free(Mask x) const {
  bool ok = true;
  for_each_bit(x, [&](int s) {
    if (ok && !adf_->eval_condition(s, x)) ok = false;
  });
  return ok;
}

bool AdfSemantics::is_pd_acyclic_conflict_free(Mask x) const {
  bool ok = true;
  for_each_bit(x, [&](int a) {
    if (!ok) return;
    bool witnessed = false;
    for (const auto& e : evaluations_[a]) {
      if (e.acyclic() && (e.seq & ~x) == 0 && (e.blocking & x) == 0) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) ok = false;
  });
  return ok;
}

// ---------------------------------------------------------------------
// Extension families.
// ---------------------------------------------------------------------

// Admissibility within one family; fills *range_f with the f-part of the
// range when requested.
bool AdfSemantics::admissible_in_family(Mask x, DiscardMode mode,
                                        Mask* range_f) const {
  const bool cf = mode == DiscardMode::acyclic ? is_pd_acyclic_conflict_free(x)
                                               : is_conflict_free(x);
  if (!cf) return false;
  const Mask disc = discarded(x, mode);
  const Mask f = disc & ~x;
  if (range_f) *range_f = f;
  bool ok = true;
  for_each_bit(x, [&](int e) {
    if (ok && decide_over_parents(e, x & adf_->parents(e),
                                  f & adf_->parents(e)) !=
                  Decision::decisively_in)
      ok = false;
  });
  return ok;
}

std::vector<Mask> AdfSemantics::family(SemanticsId sem) const {
  const Mask full = adf_->full_mask();
  std::vector<Mask> out;

  auto mode_of = [](SemanticsId s) {
    switch (s) {
      case SemanticsId::cc_admissible:
      case SemanticsId::cc_complete:
      case SemanticsId::cc_preferred:
        return DiscardMode::standard;
      case SemanticsId::aa_admissible:
      case SemanticsId::aa_complete:
      case SemanticsId::aa_preferred:
        return DiscardMode::acyclic;
      default:
        return DiscardMode::partial;
    }
  };

  switch (sem) {
    case SemanticsId::conflict_free:
      for_each_subset(full, [&](Mask x) {
        if (is_conflict_free(x)) out.push_back(x);
      });
      break;
    case SemanticsId::pd_acyclic_conflict_free:
      for_each_subset(full, [&](Mask x) {
        if (is_pd_acyclic_conflict_free(x)) out.push_back(x);
      });
      break;
    case SemanticsId::model:
      for_each_subset(full, [&](Mask x) {
        if (!is_conflict_free(x)) return;
        bool rejects = true;
        for_each_bit(full & ~x, [&](int a) {
          if (rejects && adf_->eval_condition(a, x)) rejects = false;
        });
        if (rejects) out.push_back(x);
      });
      break;
    case SemanticsId::stable:
      for_each_subset(full, [&](Mask x) {
        if (is_pd_acyclic_conflict_free(x) &&
            discarded(x, DiscardMode::acyclic) == (full & ~x))
          out.push_back(x);
      });
      break;
    case SemanticsId::cc_admissible:
    case SemanticsId::aa_admissible:
    case SemanticsId::ca2_admissible: {
      const DiscardMode mode = mode_of(sem);
      for_each_subset(full, [&](Mask x) {
        if (admissible_in_family(x, mode, nullptr)) out.push_back(x);
      });
      break;
    }
    case SemanticsId::cc_complete:
    case SemanticsId::aa_complete:
    case SemanticsId::ca2_complete: {
      const DiscardMode mode = mode_of(sem);
      for_each_subset(full, [&](Mask x) {
        Mask f = 0;
        if (!admissible_in_family(x, mode, &f)) return;
        bool closed = true;
        for_each_bit(full & ~x, [&](int a) {
          if (closed && decide_over_parents(a, x & adf_->parents(a),
                                            f & adf_->parents(a)) ==
                            Decision::decisively_in)
            closed = false;
        });
        if (closed) out.push_back(x);
      });
      break;
    }
    case SemanticsId::cc_preferred:
    case SemanticsId::aa_preferred:
    case SemanticsId::ca2_preferred: {
      const DiscardMode mode = mode_of(sem);
      std::vector<Mask> adm;
      for_each_subset(full, [&](Mask x) {
        if (admissible_in_family(x, mode, nullptr)) adm.push_back(x);
      });
      for (Mask x : adm) {
        bool maximal = true;
        for (Mask y : adm)
          if (y != x && (x & ~y) == 0) {
            maximal = false;
            break;
          }
        if (maximal) out.push_back(x);
      }
      break;
    }
    case SemanticsId::grounded:
    case SemanticsId::acyclic_grounded: {
      const auto complete = family(sem == SemanticsId::grounded
                                       ? SemanticsId::cc_complete
                                       : SemanticsId::aa_complete);
      auto least = least_member(complete);
      if (!least)
        throw no_least_element(std::string(to_token(sem)) +
                               ": the complete family has no least element");
      out.push_back(*least);
      break;
    }
  }
  return out;
}

std::vector<Mask> AdfSemantics::extensions(SemanticsId sem) const {
  auto out = family(sem);
  adf_->args().sort_extensions(out);
  return out;
}

std::vector<std::vector<std::string>> AdfSemantics::extensions_named(
    SemanticsId sem) const {
  std::vector<std::vector<std::string>> out;
  for (Mask m : extensions(sem)) out.push_back(adf_->args().names_of(m));
  return out;
}

Mask AdfSemantics::grounded_by_iteration(DiscardMode mode) const {
  Mask x = 0;
  while (true) {
    const Mask disc = discarded(x, mode);
    const Mask f = disc & ~x;
    Mask next = x;
    for (int a = 0; a < size(); ++a)
      if (decide_over_parents(a, x & adf_->parents(a),
                              f & adf_->parents(a)) ==
          Decision::decisively_in)
        next |= bit(a);
    if (next == x) return x;
    x = next;
  }
}

std::optional<Mask> least_member(const std::vector<Mask>& family) {
  for (Mask c : family) {
    bool least = true;
    for (Mask o : family)
      if ((c & ~o) != 0) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Classification.
// ---------------------------------------------------------------------

Classification AdfSemantics::classify() const {
  Classification cl;
  cl.is_badf = true;
  for (int s = 0; s < size(); ++s) {
    const Mask par = adf_->parents(s);
    for_each_bit(par, [&](int r) {
      bool supporting = true, attacking = true;
      for_each_subset(par, [&](Mask set) {
        const bool before = adf_->eval_condition(s, set);
        const bool after = adf_->eval_condition(s, set | bit(r));
        if (before && !after) supporting = false;
        if (!before && after) attacking = false;
      });
      LinkPolarity pol;
      if (supporting && attacking)
        pol = LinkPolarity::both;
      else if (supporting)
        pol = LinkPolarity::supporting;
      else if (attacking)
        pol = LinkPolarity::attacking;
      else
        pol = LinkPolarity::neither;
      if (pol == LinkPolarity::neither) cl.is_badf = false;
      cl.links.push_back(LinkInfo{r, s, pol});
    });
  }
  std::sort(cl.links.begin(), cl.links.end(),
            [](const LinkInfo& a, const LinkInfo& b) {
              return std::pair(a.source, a.target) <
                     std::pair(b.source, b.target);
            });
  cl.is_aadf_plus = true;
  for (int a = 0; a < size() && cl.is_aadf_plus; ++a)
    for (const auto& e : evaluations_[a])
      if (!e.acyclic()) {
        cl.is_aadf_plus = false;
        break;
      }
  return cl;
}

}  // namespace adfkit
