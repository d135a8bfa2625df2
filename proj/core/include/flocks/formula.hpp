#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>

namespace flocks {

enum class Connective { Atom, Verum, Falsum, Not, And, Or, Implies, Iff };

/// Immutable propositional formula AST with structural identity.
/// `A & B` and `B & A` are distinct values; all set containers below
/// order formulas structurally, so canonical output is deterministic.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula verum();
  static Formula falsum();
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula equivalence(Formula left, Formula right);

  Connective kind() const noexcept;
  const std::string& name() const;  // Atom only
  const Formula& child() const;     // Not only
  const Formula& left() const;      // binary connectives
  const Formula& right() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool operator<(const Formula& other) const;
  std::size_t hash() const noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, Formula* kids,
                      std::size_t n_kids);
  std::shared_ptr<const Node> node_;
};

using Base = std::set<Formula>;
using Flock = std::set<Base>;

}  // namespace flocks
