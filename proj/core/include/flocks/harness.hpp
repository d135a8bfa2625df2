#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flocks/estate.hpp"
#include "flocks/flock.hpp"

namespace flocks {

struct TrialConfig {
  std::uint64_t seed = 0;
  int trials = 100;
  int atoms = 3;           // <= 4
  int max_bases = 3;       // <= 4
  int max_base_size = 3;   // <= 4
  int max_formula_depth = 2;  // <= 3
};

struct Failure {
  int trial;
  std::string counterexample;
};

struct CheckReport {
  std::string name;
  int trials = 0;
  int skipped = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  /// `CHECK <name> trials=<n> failures=<k>` plus counterexample blocks.
  std::string to_text() const;
};

/// Deterministic: equal (cfg, index) pairs give structurally equal flocks.
Flock random_flock(const TrialConfig& cfg, std::uint64_t index);

/// Deterministic random formula over the first cfg.atoms atom names.
Formula random_formula(const TrialConfig& cfg, std::mt19937_64& rng);

/// State-level equality of contracting the generated state vs. generating
/// the contracted flock, over random (flock, formula) pairs.
CheckReport check_lemma_contraction(const TrialConfig& cfg);

/// Isomorphism of the merged generated states with the state generated by
/// the flock merge, for random atom-disjoint flock pairs.
CheckReport check_theorem_merge(const TrialConfig& cfg);

/// Expansion isomorphism and the belief law B(F+A) = Th(B(F), A).
CheckReport check_expansion(const TrialConfig& cfg);

/// Contraction-order and fresh-expansion-order identity; also pins the
/// non-commutativity witness of the rival minimal-set deletion.
CheckReport check_commutativity(const TrialConfig& cfg);

/// Persistence of generated states and its closure under pure merge.
CheckReport check_persistence(const TrialConfig& cfg);

struct ExploreOp {
  enum class Kind { Contract, Expand } kind;
  Formula argument;
};

struct ExploreResult {
  bool found = false;
  Flock start;                   // primitive flock the witness begins from
  std::vector<ExploreOp> witness;
  std::uint64_t visited = 0;
  int depth = 0;
  std::string header;            // records the primitive-flock reading
  std::string to_text() const;
};

/// Breadth-first search over flocks reachable from singleton-base
/// primitive flocks (one canonical formula per base) by contraction and
/// expansion with canonical arguments. atoms <= 2, depth <= 4.
ExploreResult explore_constructibility(const Flock& target, int depth,
                                       int atoms);

/// Atom names handed out by the harness: A, B, C, D.
std::vector<std::string> harness_atoms(int count);

}  // namespace flocks
