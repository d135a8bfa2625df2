#pragma once

#include <string>
#include <string_view>

#include "flocks/formula.hpp"
#include "flocks/logic.hpp"

namespace flocks {

/// Largest base size remainder enumeration accepts.
inline constexpr std::size_t kBaseCap = 16;

/// Inclusion-maximal bases of F with the empty base removed.
Flock normalize(const Flock& f);

/// Flock identity: both flocks generate the same epistemic state,
/// which holds exactly when their normalizations coincide.
bool identical(const Flock& f, const Flock& g);

/// All inclusion-maximal subsets of `base` that do not entail `goal`.
/// Contains the empty base when every nonempty subset entails `goal`.
std::set<Base> remainders(const Base& base, const Formula& goal);

/// Flock contraction: normalized union of the remainders of every base.
/// Throws TautologyContraction when `goal` is a tautology and EmptyFlock
/// when F has no nonempty base.
Flock contract(const Flock& f, const Formula& goal);

/// Pairwise base union of two flocks sharing no formula (structurally).
/// Throws NotDisjoint listing the shared formulas.
Flock merge(const Flock& f, const Flock& g);

struct ExpandResult {
  Flock flock;
  Formula used;  // the formula actually added, after any freshening
};

/// Adds `added` to every base. When `added` already occurs in the flock
/// it is either freshened (auto_freshen) or rejected with OccursInFlock.
/// A flock with empty normalization expands to the singleton {{added}}.
ExpandResult expand(const Flock& f, const Formula& added, bool auto_freshen);

/// Levi-identity revision: contract by ~added, then expand by `added`
/// with freshening.
Flock revise(const Flock& f, const Formula& added);

/// True iff every inclusion-maximal base entails `goal`.
/// Throws EmptyFlock when the normalization is empty.
bool believed(const Flock& f, const Formula& goal);

/// Disjunction over the maximal bases of the conjunction of each base;
/// verum for a flock with empty normalization.
Formula belief_formula(const Flock& f);

/// Rival reduction keeping only inclusion-minimal bases; an empty base
/// absorbs everything.
Flock fukv_normalize(const Flock& f);

/// Rival deletion: same remainder step as contract, minimal-set reduction.
Flock fukv_delete(const Flock& f, const Formula& goal);

// Flock text format: one base per line `{ f1 ; f2 ; ... }`, empty base
// `{ }`, `#` starts a comment, blank lines ignored. Canonical output
// orders formulas and bases lexicographically by rendered text.
std::string render_base(const Base& base);
std::string render_flock(const Flock& f);
Flock parse_flock(std::string_view text);
Flock load_flock(const std::string& path);
void save_flock(const Flock& f, const std::string& path);

}  // namespace flocks
