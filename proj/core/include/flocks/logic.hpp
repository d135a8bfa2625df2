#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flocks/errors.hpp"
#include "flocks/formula.hpp"

namespace flocks {

/// Largest joint signature the truth-table entailment check accepts.
inline constexpr std::size_t kAtomCap = 20;

/// Parses the ASCII formula grammar: atoms `[A-Za-z_][A-Za-z0-9_']*`,
/// constants `true` / `false`, `~`, `&`, `|`, `->`, `<->`, parentheses.
/// Precedence ~ > & > | > -> > <->; `->` is right-associative, the
/// other binary connectives associate to the left.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesization rendering; reparsing the result yields a
/// structurally equal AST.
std::string render_formula(const Formula& f);

/// Classical propositional consequence decided by exhaustive valuation
/// over the joint signature. Throws SignatureTooLarge above kAtomCap.
bool entails(const Base& premises, const Formula& goal);

bool equivalent(const Formula& f, const Formula& g);

bool is_tautology(const Formula& f);

/// Sorted atom names occurring in the given formulas.
std::vector<std::string> signature(const Base& fs);
std::vector<std::string> signature(const Formula& f);

/// All subformulas of f, including f itself.
void collect_subformulas(const Formula& f, std::set<Formula>& out);

/// First formula among ~~f, ~~~~f, ... that is structurally distinct
/// from every member of `forbidden` and from all their subformulas.
Formula freshen(const Formula& f, const Base& forbidden);

}  // namespace flocks
