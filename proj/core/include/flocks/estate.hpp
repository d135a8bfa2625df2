#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flocks/flock.hpp"
#include "flocks/formula.hpp"

namespace flocks {

/// Largest admissible-state count for generated and merged states.
inline constexpr std::size_t kStateCap = std::size_t{1} << 16;

/// Finite epistemic state: admissible states carry finite generator sets
/// (denoting their deductive closure) and a strict preference order.
/// `prefer` holds pairs (s, t) with s strictly below t; it must be
/// irreflexive and transitive.
struct EpistemicState {
  std::vector<std::string> ids;
  std::vector<Base> labels;
  std::set<std::pair<std::size_t, std::size_t>> prefer;

  std::size_t size() const { return labels.size(); }
  bool less(std::size_t s, std::size_t t) const {
    return prefer.count({s, t}) != 0;
  }
  bool less_eq(std::size_t s, std::size_t t) const {
    return s == t || less(s, t);
  }
};

struct BeliefSummary {
  std::vector<std::size_t> maximal_states;
  Formula belief_formula;
};

/// Throws Error if prefer is reflexive, intransitive, or out of range.
void validate(const EpistemicState& e);

/// Downset construction: states are all subsets of the flock's bases
/// (including the empty one), labelled by themselves, preferred by strict
/// inclusion. Throws EmptyFlock when no nonempty base exists, TooLarge
/// past the cap.
EpistemicState generate(const Flock& f);

/// Maximal states and the disjunction of their label conjunctions.
/// An empty state yields no maximal states and the formula `true`.
BeliefSummary belief_summary(const EpistemicState& e);

bool believes(const EpistemicState& e, const Formula& goal);

/// Persistence: s below t implies the label of t entails all of l(s).
bool is_persistent(const EpistemicState& e);

/// Pure monotonicity: s weakly below t iff Th(l(s)) is within Th(l(t)).
bool is_pure(const EpistemicState& e);

/// Exactly one maximal state.
bool is_determinate(const EpistemicState& e);

/// Drops every state whose label entails `goal`. Throws
/// TautologyContraction when the result is empty because `goal` is
/// tautological.
EpistemicState contract_estate(const EpistemicState& e, const Formula& goal);

/// Product states, union labels, componentwise preference (strict part).
EpistemicState pure_merge(const EpistemicState& a, const EpistemicState& b);

/// Pure expansion: merge with the two-state rudimentary state for `added`.
EpistemicState expand_estate(const EpistemicState& e, const Formula& added);

/// Order-preserving bijection mapping labels to logically equivalent
/// labels; backtracking search pruned by label-equivalence classes.
bool isomorphic(const EpistemicState& a, const EpistemicState& b);

/// Bounded behavioral check: belief formulas stay logically equivalent
/// under every contraction sequence of length <= depth drawn from
/// canonical representatives of the joint signature's non-tautological
/// boolean functions. Joint signature limited to 3 atoms.
bool behaviorally_equivalent(const EpistemicState& a, const EpistemicState& b,
                             int depth);

/// One minimal-size representative per boolean function over `atoms`,
/// ordered by truth-table bitmask. Built from atoms, constants, ~, &, |.
std::vector<Formula> canonical_formulas(const std::vector<std::string>& atoms);

/// Debug dump: one line per state, `id : {generators} ; above: [ids]`,
/// sorted by id.
std::string dump(const EpistemicState& e);

}  // namespace flocks
