#include "adfkit/formula.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace adfkit {

Formula Formula::top() {
  return Formula(std::make_shared<Node>(Node{Kind::top, {}, {}}));
}

Formula Formula::bot() {
  return Formula(std::make_shared<Node>(Node{Kind::bot, {}, {}}));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  return Formula(std::make_shared<Node>(Node{Kind::atom, std::move(name), {}}));
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<Node>(Node{Kind::neg, {}, {std::move(f)}}));
}

static std::vector<Formula> flatten(Formula::Kind kind,
                                    std::vector<Formula> fs) {
  if (fs.empty())
    throw std::invalid_argument("connective needs at least one operand");
  std::vector<Formula> flat;
  for (auto& f : fs) {
    if (f.kind() == kind) {
      for (const auto& k : f.children()) flat.push_back(k);
    } else {
      flat.push_back(std::move(f));
    }
  }
  return flat;
}

Formula Formula::conj(std::vector<Formula> fs) {
  auto flat = flatten(Kind::conj, std::move(fs));
  if (flat.size() == 1) return flat.front();
  return Formula(std::make_shared<Node>(Node{Kind::conj, {}, std::move(flat)}));
}

Formula Formula::disj(std::vector<Formula> fs) {
  auto flat = flatten(Kind::disj, std::move(fs));
  if (flat.size() == 1) return flat.front();
  return Formula(std::make_shared<Node>(Node{Kind::disj, {}, std::move(flat)}));
}

const std::string& Formula::atom_name() const {
  if (kind() != Kind::atom) throw std::logic_error("not an atom");
  return node_->name;
}

const std::vector<Formula>& Formula::children() const { return node_->kids; }

static void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      out.insert(f.atom_name());
      break;
    case Formula::Kind::top:
    case Formula::Kind::bot:
      break;
    default:
      for (const auto& k : f.children()) collect_atoms(k, out);
  }
}

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> s;
  collect_atoms(*this, s);
  return {s.begin(), s.end()};
}

bool Formula::evaluate(
    const std::function<bool(const std::string&)>& truth) const {
  switch (kind()) {
    case Kind::top:
      return true;
    case Kind::bot:
      return false;
    case Kind::atom:
      return truth(node_->name);
    case Kind::neg:
      return !node_->kids[0].evaluate(truth);
    case Kind::conj:
      for (const auto& k : node_->kids)
        if (!k.evaluate(truth)) return false;
      return true;
    case Kind::disj:
      for (const auto& k : node_->kids)
        if (k.evaluate(truth)) return true;
      return false;
  }
  throw std::logic_error("bad formula kind");
}

Formula Formula::simplified() const {
  switch (kind()) {
    case Kind::top:
    case Kind::bot:
    case Kind::atom:
      return *this;
    case Kind::neg: {
      Formula sub = node_->kids[0].simplified();
      if (sub.kind() == Kind::top) return bot();
      if (sub.kind() == Kind::bot) return top();
      if (sub.kind() == Kind::neg) return sub.children()[0];
      return neg(std::move(sub));
    }
    case Kind::conj:
    case Kind::disj: {
      const bool is_conj = kind() == Kind::conj;
      const Kind absorb = is_conj ? Kind::bot : Kind::top;
      const Kind unit = is_conj ? Kind::top : Kind::bot;
      std::vector<Formula> kept;
      for (const auto& k : node_->kids) {
        Formula s = k.simplified();
        if (s.kind() == absorb) return is_conj ? bot() : top();
        if (s.kind() == unit) continue;
        kept.push_back(std::move(s));
      }
      if (kept.empty()) return is_conj ? top() : bot();
      return is_conj ? conj(std::move(kept)) : disj(std::move(kept));
    }
  }
  throw std::logic_error("bad formula kind");
}

bool Formula::same_tree(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::top:
    case Kind::bot:
      return true;
    case Kind::atom:
      return node_->name == o.node_->name;
    default: {
      const auto& a = node_->kids;
      const auto& b = o.node_->kids;
      if (a.size() != b.size()) return false;
      for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].same_tree(b[i])) return false;
      return true;
    }
  }
}

std::string Formula::to_text() const {
  switch (kind()) {
    case Kind::top:
      return "c(v)";
    case Kind::bot:
      return "c(f)";
    case Kind::atom:
      return node_->name;
    case Kind::neg:
      return "neg(" + node_->kids[0].to_text() + ")";
    case Kind::conj:
    case Kind::disj: {
      const char* op = kind() == Kind::conj ? "and" : "or";
      std::string acc = node_->kids[0].to_text();
      for (size_t i = 1; i < node_->kids.size(); ++i)
        acc = std::string(op) + "(" + acc + "," + node_->kids[i].to_text() + ")";
      return acc;
    }
  }
  throw std::logic_error("bad formula kind");
}

}  // namespace adfkit
