#include "adfkit/adf.hpp"

#include <stdexcept>

namespace adfkit {

namespace {
// Parent counts up to this build a truth table; larger conditions fall back
// to direct formula evaluation.
constexpr int table_limit = 16;
}  // namespace

Adf::Adf(std::vector<std::string> args, std::vector<Formula> conditions)
    : table_(args), conditions_(std::move(conditions)) {
  if (static_cast<size_t>(table_.size()) != conditions_.size())
    throw std::invalid_argument("one acceptance condition per argument");

  parents_.resize(table_.size());
  parent_bits_.resize(table_.size());
  truth_.resize(table_.size());
  for (int a = 0; a < table_.size(); ++a) {
    Mask par = 0;
    for (const auto& atom : conditions_[a].atoms())
      par |= bit(table_.index_of(atom));  // throws on undeclared atoms
    parents_[a] = par;
    for_each_bit(par, [&](int p) { parent_bits_[a].push_back(p); });

    const int p = count_bits(par);
    if (p <= table_limit) {
      truth_[a].resize(size_t{1} << p);
      for (Mask idx = 0; idx < (Mask{1} << p); ++idx) {
        Mask s = 0;
        for (int j = 0; j < p; ++j)
          if (has_bit(idx, j)) s |= bit(parent_bits_[a][j]);
        truth_[a][idx] = eval_direct(a, s) ? 1 : 0;
      }
    }
  }
}

Adf Adf::from_conditions(
    const std::vector<std::pair<std::string, Formula>>& named) {
  std::vector<std::string> args;
  std::vector<Formula> conds;
  for (const auto& [name, cond] : named) {
    args.push_back(name);
    conds.push_back(cond);
  }
  return Adf(std::move(args), std::move(conds));
}

bool Adf::eval_direct(int a, Mask accepted) const {
  return conditions_[a].evaluate([&](const std::string& atom) {
    return has_bit(accepted, table_.index_of(atom));
  });
}

bool Adf::eval_condition(int a, Mask accepted) const {
  if (a < 0 || a >= size()) throw std::out_of_range("argument index");
  const Mask s = accepted & parents_[a];
  if (!truth_[a].empty()) {
    Mask idx = 0;
    const auto& bits = parent_bits_[a];
    for (size_t j = 0; j < bits.size(); ++j)
      if (has_bit(s, bits[j])) idx |= bit(static_cast<int>(j));
    return truth_[a][idx] != 0;
  }
  return eval_direct(a, s);
}

bool Adf::eval_condition(const std::string& a,
                         const std::vector<std::string>& accepted) const {
  return eval_condition(table_.index_of(a), table_.mask_of(accepted));
}

std::vector<Interpretation> completions(const Interpretation& v, Mask z) {
  if ((v.domain() & ~z) != 0)
    throw std::invalid_argument(
        "completion target must contain the interpretation's domain");
  const Mask open = z & ~v.domain();
  std::vector<Interpretation> out;
  out.reserve(size_t{1} << count_bits(open));
  for_each_subset(open, [&](Mask to_t) {
    out.push_back(Interpretation{v.t | to_t, v.f | (open & ~to_t)});
  });
  return out;
}

}  // namespace adfkit
