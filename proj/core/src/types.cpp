#include "adfkit/types.hpp"

#include <cctype>
#include <sstream>

namespace adfkit {

bool ArgTable::valid_token(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

int ArgTable::add(const std::string& name) {
  if (!valid_token(name))
    throw std::invalid_argument("invalid argument name: '" + name + "'");
  if (index_.count(name))
    throw std::invalid_argument("duplicate argument: " + name);
  if (size() >= max_args)
    throw std::length_error("more than " + std::to_string(max_args) +
                            " arguments are not supported");
  int i = size();
  names_.push_back(name);
  index_.emplace(name, i);
  return i;
}

int ArgTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw unknown_argument(name);
  return it->second;
}

Mask ArgTable::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) m |= bit(index_of(n));
  return m;
}

std::vector<std::string> ArgTable::names_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(names_.at(i)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string ArgTable::set_to_string(Mask m) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& n : names_of(m)) {
    if (!first) os << ',';
    os << n;
    first = false;
  }
  os << '}';
  return os.str();
}

bool ArgTable::extension_less(Mask a, Mask b) const {
  int ca = count_bits(a), cb = count_bits(b);
  if (ca != cb) return ca < cb;
  return names_of(a) < names_of(b);
}

void ArgTable::sort_extensions(std::vector<Mask>& sets) const {
  std::sort(sets.begin(), sets.end(),
            [this](Mask a, Mask b) { return extension_less(a, b); });
}

}  // namespace adfkit
