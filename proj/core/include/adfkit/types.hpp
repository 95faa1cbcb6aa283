#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace adfkit {

// Argument sets are bitmasks over a framework's argument table.  Exhaustive
// enumeration over the subset lattice is the point of this library, so the
// argument count is hard-capped at 32.
using Mask = std::uint32_t;

inline constexpr int max_args = 32;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
constexpr int count_bits(Mask m) { return std::popcount(m); }

// Calls fn(i) for every set bit of m, lowest first.
template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

// Calls fn(s) for every subset s of m, including m itself and the empty set.
template <typename Fn>
void for_each_subset(Mask m, Fn&& fn) {
  Mask s = m;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

struct unknown_argument : std::invalid_argument {
  explicit unknown_argument(const std::string& name)
      : std::invalid_argument("unknown argument: " + name) {}
};

// Two-valued interpretation defined on a subset of the arguments.
// t and f are disjoint bitmasks; everything else is unassigned.
struct Interpretation {
  Mask t = 0;
  Mask f = 0;

  Mask domain() const { return t | f; }
  bool operator==(const Interpretation&) const = default;
  auto operator<=>(const Interpretation&) const = default;
};

// Argument name table shared by every framework kind.  Indices follow
// declaration order; names must be identifier-like tokens (letter followed
// by letters, digits or underscores) and unique within the table.
class ArgTable {
 public:
  ArgTable() = default;
  explicit ArgTable(const std::vector<std::string>& names) {
    for (const auto& n : names) add(n);
  }

  int add(const std::string& name);

  int size() const { return static_cast<int>(names_.size()); }
  Mask full_mask() const {
    return size() == max_args ? ~Mask{0} : bit(size()) - 1;
  }

  bool contains(const std::string& name) const {
    return index_.count(name) != 0;
  }
  // Throws unknown_argument if the name is not declared.
  int index_of(const std::string& name) const;
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  Mask mask_of(const std::vector<std::string>& names) const;
  // Member names of m, sorted by name.
  std::vector<std::string> names_of(Mask m) const;
  // "{a,b,c}" with members sorted by name; "{}" for the empty set.
  std::string set_to_string(Mask m) const;

  // Canonical extension order: ascending cardinality, then lexicographic by
  // the sorted member names.
  bool extension_less(Mask a, Mask b) const;
  void sort_extensions(std::vector<Mask>& sets) const;

  bool operator==(const ArgTable& o) const { return names_ == o.names_; }

  static bool valid_token(const std::string& name);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace adfkit
