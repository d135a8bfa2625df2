#include "flocks/formula.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace flocks {

struct Formula::Node {
  Connective kind;
  std::string atom_name;
  std::vector<Formula> kids;
  std::size_t hash;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Connective kind, std::string name, Formula* kids,
                      std::size_t n_kids) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->atom_name = std::move(name);
  node->kids.reserve(n_kids);
  for (std::size_t i = 0; i < n_kids; ++i) node->kids.push_back(kids[i]);
  std::size_t h = combine(0x5bd1e995, static_cast<std::size_t>(kind));
  h = combine(h, std::hash<std::string>{}(node->atom_name));
  for (const Formula& k : node->kids) h = combine(h, k.hash());
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  return make(Connective::Atom, std::move(name), nullptr, 0);
}
Formula Formula::verum() { return make(Connective::Verum, "", nullptr, 0); }
Formula Formula::falsum() { return make(Connective::Falsum, "", nullptr, 0); }
Formula Formula::negation(Formula child) {
  Formula kids[] = {std::move(child)};
  return make(Connective::Not, "", kids, 1);
}
Formula Formula::conjunction(Formula l, Formula r) {
  Formula kids[] = {std::move(l), std::move(r)};
  return make(Connective::And, "", kids, 2);
}
Formula Formula::disjunction(Formula l, Formula r) {
  Formula kids[] = {std::move(l), std::move(r)};
  return make(Connective::Or, "", kids, 2);
}
Formula Formula::implication(Formula l, Formula r) {
  Formula kids[] = {std::move(l), std::move(r)};
  return make(Connective::Implies, "", kids, 2);
}
Formula Formula::equivalence(Formula l, Formula r) {
  Formula kids[] = {std::move(l), std::move(r)};
  return make(Connective::Iff, "", kids, 2);
}

Connective Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Connective::Atom)
    throw std::logic_error("name() on non-atom");
  return node_->atom_name;
}

const Formula& Formula::child() const {
  if (node_->kind != Connective::Not)
    throw std::logic_error("child() on non-negation");
  return node_->kids[0];
}

const Formula& Formula::left() const {
  if (node_->kids.size() != 2) throw std::logic_error("left() on non-binary");
  return node_->kids[0];
}

const Formula& Formula::right() const {
  if (node_->kids.size() != 2) throw std::logic_error("right() on non-binary");
  return node_->kids[1];
}

std::size_t Formula::hash() const noexcept { return node_->hash; }

namespace {

int cmp(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Connective::Atom:
      return a.name().compare(b.name());
    case Connective::Verum:
    case Connective::Falsum:
      return 0;
    case Connective::Not:
      return cmp(a.child(), b.child());
    default: {
      int c = cmp(a.left(), b.left());
      return c != 0 ? c : cmp(a.right(), b.right());
    }
  }
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  return cmp(*this, other) == 0;
}

bool Formula::operator<(const Formula& other) const {
  if (node_ == other.node_) return false;
  return cmp(*this, other) < 0;
}

}  // namespace flocks
