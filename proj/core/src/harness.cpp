#include "flocks/harness.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace flocks {

std::vector<std::string> harness_atoms(int count) {
  static const std::vector<std::string> names = {"A", "B", "C", "D"};
  if (count < 0 || count > static_cast<int>(names.size()))
    throw Error("harness supports 0..4 atoms, got " + std::to_string(count));
  return {names.begin(), names.begin() + count};
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << "CHECK " << name << " trials=" << trials
      << " failures=" << failures.size() << " skipped=" << skipped << "\n";
  for (const Failure& f : failures) {
    out << "FAILURE trial=" << f.trial << "\n" << f.counterexample;
    if (!f.counterexample.empty() && f.counterexample.back() != '\n')
      out << "\n";
  }
  return out.str();
}

namespace {

std::mt19937_64 make_rng(const TrialConfig& cfg, std::uint64_t salt,
                         std::uint64_t index) {
  std::seed_seq seq{cfg.seed, salt, index};
  return std::mt19937_64(seq);
}

Formula random_formula_over(std::mt19937_64& rng,
                            const std::vector<std::string>& atoms, int depth) {
  std::uniform_int_distribution<int> atom_pick(
      0, static_cast<int>(atoms.size()) - 1);
  if (depth <= 0) return Formula::atom(atoms[atom_pick(rng)]);
  switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
    case 0:
    case 1:
      return Formula::atom(atoms[atom_pick(rng)]);
    case 2:
    case 3:
      return Formula::negation(random_formula_over(rng, atoms, depth - 1));
    case 4:
      return Formula::conjunction(random_formula_over(rng, atoms, depth - 1),
                                  random_formula_over(rng, atoms, depth - 1));
    case 5:
      return Formula::disjunction(random_formula_over(rng, atoms, depth - 1),
                                  random_formula_over(rng, atoms, depth - 1));
    case 6:
      return Formula::implication(random_formula_over(rng, atoms, depth - 1),
                                  random_formula_over(rng, atoms, depth - 1));
    default:
      return Formula::equivalence(random_formula_over(rng, atoms, depth - 1),
                                  random_formula_over(rng, atoms, depth - 1));
  }
}

Flock random_flock_over(std::mt19937_64& rng, const TrialConfig& cfg,
                        const std::vector<std::string>& atoms) {
  while (true) {
    Flock flock;
    int n_bases = std::uniform_int_distribution<int>(1, cfg.max_bases)(rng);
    for (int b = 0; b < n_bases; ++b) {
      Base base;
      int size = std::uniform_int_distribution<int>(0, cfg.max_base_size)(rng);
      for (int i = 0; i < size; ++i)
        base.insert(random_formula_over(rng, atoms, cfg.max_formula_depth));
      flock.insert(std::move(base));
    }
    for (const Base& base : flock)
      if (!base.empty()) return flock;
  }
}

std::string describe(const Flock& flock, const Formula& formula) {
  return render_flock(flock) + "formula: " + render_formula(formula) + "\n";
}

Formula random_non_tautology(std::mt19937_64& rng,
                             const std::vector<std::string>& atoms, int depth,
                             int& skipped) {
  while (true) {
    Formula f = random_formula_over(rng, atoms, depth);
    if (!is_tautology(f)) return f;
    ++skipped;
  }
}

// ------------------------------------------------------------- Lemma 1

using BasePair = std::pair<Base, Base>;

void state_view(const EpistemicState& e, std::set<Base>& states,
                std::set<BasePair>& order) {
  for (const Base& label : e.labels) states.insert(label);
  for (auto [s, t] : e.prefer) order.insert({e.labels[s], e.labels[t]});
}

bool lemma_contraction_holds(const Flock& flock, const Formula& goal) {
  EpistemicState contracted_state = contract_estate(generate(flock), goal);
  std::set<Base> actual_states;
  std::set<BasePair> actual_order;
  state_view(contracted_state, actual_states, actual_order);

  // Flock contraction before normalization, then its downset by hand.
  std::set<Base> raw;
  for (const Base& base : flock) {
    auto rs = remainders(base, goal);
    raw.insert(rs.begin(), rs.end());
  }
  std::set<Base> expected_states{Base{}};
  for (const Base& base : raw) {
    std::vector<Formula> items(base.begin(), base.end());
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << items.size()); ++m) {
      Base subset_base;
      for (std::size_t i = 0; i < items.size(); ++i)
        if ((m >> i) & 1) subset_base.insert(items[i]);
      expected_states.insert(std::move(subset_base));
    }
  }
  std::set<BasePair> expected_order;
  for (const Base& a : expected_states)
    for (const Base& b : expected_states)
      if (a.size() < b.size() &&
          std::includes(b.begin(), b.end(), a.begin(), a.end()))
        expected_order.insert({a, b});
  return actual_states == expected_states && actual_order == expected_order;
}

}  // namespace

Flock random_flock(const TrialConfig& cfg, std::uint64_t index) {
  auto rng = make_rng(cfg, 0, index);
  return random_flock_over(rng, cfg, harness_atoms(cfg.atoms));
}

Formula random_formula(const TrialConfig& cfg, std::mt19937_64& rng) {
  return random_formula_over(rng, harness_atoms(cfg.atoms),
                             cfg.max_formula_depth);
}

CheckReport check_lemma_contraction(const TrialConfig& cfg) {
  CheckReport report{"lemma-contraction"};
  auto pin = [&](const Flock& flock, const Formula& goal) {
    if (!lemma_contraction_holds(flock, goal))
      report.failures.push_back({-1, describe(flock, goal)});
    ++report.trials;
  };
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  pin(Flock{Base{a, b}}, Formula::conjunction(a, b));
  pin(Flock{Base{a}, Base{b}}, a);
  auto atoms = harness_atoms(cfg.atoms);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = make_rng(cfg, 1, static_cast<std::uint64_t>(t));
    Flock flock = random_flock_over(rng, cfg, atoms);
    Formula goal = random_non_tautology(rng, atoms, cfg.max_formula_depth,
                                        report.skipped);
    if (!lemma_contraction_holds(flock, goal))
      report.failures.push_back({t, describe(flock, goal)});
    ++report.trials;
  }
  return report;
}

CheckReport check_theorem_merge(const TrialConfig& cfg) {
  CheckReport report{"theorem-merge"};
  auto atoms = harness_atoms(std::max(cfg.atoms, 2));
  std::vector<std::string> left(atoms.begin(),
                                atoms.begin() + (atoms.size() + 1) / 2);
  std::vector<std::string> right(atoms.begin() + (atoms.size() + 1) / 2,
                                 atoms.end());
  auto run = [&](const Flock& f, const Flock& g) {
    Flock merged = merge(f, g);
    return isomorphic(pure_merge(generate(f), generate(g)), generate(merged));
  };
  Formula a = Formula::atom("A"), b = Formula::atom("B"), c = Formula::atom("C");
  if (!run(Flock{Base{a}}, Flock{Base{b}}))
    report.failures.push_back({-1, render_flock(Flock{Base{a}})});
  ++report.trials;
  if (!run(Flock{Base{a}, Base{b}}, Flock{Base{c}}))
    report.failures.push_back({-1, render_flock(Flock{Base{a}, Base{b}})});
  ++report.trials;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = make_rng(cfg, 2, static_cast<std::uint64_t>(t));
    while (true) {
      Flock f = random_flock_over(rng, cfg, left);
      Flock g = random_flock_over(rng, cfg, right);
      try {
        if (!run(f, g))
          report.failures.push_back(
              {t, render_flock(f) + "--\n" + render_flock(g)});
      } catch (const TooLarge&) {
        ++report.skipped;
        continue;
      }
      break;
    }
    ++report.trials;
  }
  return report;
}

CheckReport check_expansion(const TrialConfig& cfg) {
  CheckReport report{"expansion"};
  auto holds = [&](const Flock& flock, const Formula& added) {
    ExpandResult res = expand(flock, added, true);
    bool iso = isomorphic(expand_estate(generate(flock), res.used),
                          generate(res.flock));
    bool belief = equivalent(
        belief_formula(res.flock),
        Formula::conjunction(belief_formula(flock), res.used));
    return iso && belief;
  };
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  if (!holds(Flock{Base{a}, Base{b}}, b))
    report.failures.push_back({-1, describe(Flock{Base{a}, Base{b}}, b)});
  ++report.trials;
  if (!holds(Flock{Base{a}}, Formula::atom("C")))
    report.failures.push_back({-1, describe(Flock{Base{a}}, Formula::atom("C"))});
  ++report.trials;
  auto atoms = harness_atoms(cfg.atoms);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = make_rng(cfg, 3, static_cast<std::uint64_t>(t));
    Flock flock = random_flock_over(rng, cfg, atoms);
    Formula added = random_formula_over(rng, atoms, cfg.max_formula_depth);
    try {
      if (!holds(flock, added))
        report.failures.push_back({t, describe(flock, added)});
    } catch (const TooLarge&) {
      ++report.skipped;
    }
    ++report.trials;
  }
  return report;
}

CheckReport check_commutativity(const TrialConfig& cfg) {
  CheckReport report{"commutativity"};
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  Formula ab = Formula::conjunction(a, b);
  // Pinned Example 3 trace under both semantics.
  {
    Flock start{Base{a, b}};
    Flock ours1 = contract(contract(start, ab), a);
    Flock ours2 = contract(contract(start, a), ab);
    if (!identical(ours1, ours2) || !identical(ours1, Flock{Base{b}}))
      report.failures.push_back({-1, render_flock(start) + "ours-order\n"});
    ++report.trials;
    Flock fukv1 = fukv_delete(fukv_delete(start, ab), a);
    Flock fukv2 = fukv_delete(fukv_delete(start, a), ab);
    bool witness = fukv1 == Flock{Base{}} && fukv2 == Flock{Base{b}} &&
                   !identical(fukv1, fukv2);
    if (!witness)
      report.failures.push_back({-1, render_flock(start) + "fukv-order\n"});
    ++report.trials;
  }
  auto atoms = harness_atoms(cfg.atoms);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = make_rng(cfg, 4, static_cast<std::uint64_t>(t));
    Flock flock = random_flock_over(rng, cfg, atoms);
    Formula f = random_non_tautology(rng, atoms, cfg.max_formula_depth,
                                     report.skipped);
    Formula g = random_non_tautology(rng, atoms, cfg.max_formula_depth,
                                     report.skipped);
    try {
      Flock one = contract(contract(flock, f), g);
      Flock two = contract(contract(flock, g), f);
      if (!identical(one, two))
        report.failures.push_back(
            {t, describe(flock, f) + "formula: " + render_formula(g) + "\n"});
    } catch (const EmptyFlock&) {
      ++report.skipped;  // one order ran out of nonempty bases
    }
    ++report.trials;
  }
  // Fresh-expansion order identity, with atoms outside the flock alphabet.
  Formula x = Formula::atom("X"), y = Formula::atom("Y");
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = make_rng(cfg, 5, static_cast<std::uint64_t>(t));
    Flock flock = random_flock_over(rng, cfg, atoms);
    Flock one = expand(expand(flock, x, false).flock, y, false).flock;
    Flock two = expand(expand(flock, y, false).flock, x, false).flock;
    if (!identical(one, two))
      report.failures.push_back({t, render_flock(flock)});
    ++report.trials;
  }
  return report;
}

namespace {

EpistemicState random_persistent_state(std::mt19937_64& rng,
                                       const TrialConfig& cfg,
                                       const std::vector<std::string>& atoms) {
  EpistemicState e;
  int n = std::uniform_int_distribution<int>(2, 5)(rng);
  for (int s = 0; s < n; ++s) {
    Base label;
    int size = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < size; ++i)
      label.insert(random_formula_over(rng, atoms, cfg.max_formula_depth));
    e.ids.push_back("s" + std::to_string(s));
    e.labels.push_back(std::move(label));
  }
  auto included = [&](int s, int t) {
    for (const Formula& c : e.labels[s])
      if (!entails(e.labels[t], c)) return false;
    return true;
  };
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && included(s, t) && !included(t, s) &&
          std::uniform_int_distribution<int>(0, 1)(rng) == 1)
        below[s][t] = true;
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (below[s][k] && below[k][t]) below[s][t] = true;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (below[s][t]) e.prefer.insert({static_cast<std::size_t>(s),
                                        static_cast<std::size_t>(t)});
  return e;
}

}  // namespace

CheckReport check_persistence(const TrialConfig& cfg) {
  CheckReport report{"persistence"};
  // Negative control: losing content along the order must be detected.
  {
    EpistemicState bad;
    bad.ids = {"s0", "s1"};
    bad.labels = {Base{Formula::atom("A")}, Base{Formula::atom("B")}};
    bad.prefer = {{0, 1}};
    if (is_persistent(bad))
      report.failures.push_back({-1, "negative control not detected\n"});
    ++report.trials;
  }
  auto atoms = harness_atoms(cfg.atoms);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = make_rng(cfg, 6, static_cast<std::uint64_t>(t));
    Flock flock = random_flock_over(rng, cfg, atoms);
    if (!is_persistent(generate(flock)))
      report.failures.push_back({t, render_flock(flock)});
    ++report.trials;
  }
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = make_rng(cfg, 7, static_cast<std::uint64_t>(t));
    EpistemicState e1 = random_persistent_state(rng, cfg, atoms);
    EpistemicState e2 = random_persistent_state(rng, cfg, atoms);
    if (!is_persistent(e1) || !is_persistent(e2) ||
        !is_persistent(pure_merge(e1, e2)))
      report.failures.push_back({t, dump(e1) + "--\n" + dump(e2)});
    ++report.trials;
  }
  return report;
}

// ----------------------------------------------------- constructibility

namespace {

struct MaskDomain {
  std::vector<Formula> canon;       // index -> canonical formula
  std::vector<std::uint32_t> truth; // index -> truth table over valuations
  std::uint32_t full = 0;           // all-valuations mask
  std::size_t tautology_index = 0;

  explicit MaskDomain(const std::vector<std::string>& atoms) {
    canon = canonical_formulas(atoms);
    std::size_t valuations = std::size_t{1} << atoms.size();
    full = (std::uint32_t{1} << valuations) - 1;
    for (std::size_t i = 0; i < canon.size(); ++i) {
      std::uint32_t mask = 0;
      for (std::size_t v = 0; v < valuations; ++v) {
        Base premises;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
          Formula atom = Formula::atom(atoms[j]);
          premises.insert(((v >> j) & 1) ? atom : Formula::negation(atom));
        }
        if (entails(premises, canon[i])) mask |= std::uint32_t{1} << v;
      }
      truth.push_back(mask);
      if (mask == full) tautology_index = i;
    }
  }

  std::uint32_t conj(std::uint32_t base_bits) const {
    std::uint32_t out = full;
    for (std::size_t i = 0; i < canon.size(); ++i)
      if ((base_bits >> i) & 1) out &= truth[i];
    return out;
  }

  bool base_entails(std::uint32_t base_bits, std::size_t goal) const {
    return (conj(base_bits) & ~truth[goal]) == 0;
  }
};

using MaskFlock = std::vector<std::uint32_t>;  // sorted, maximal, nonempty

MaskFlock mask_normalize(std::vector<std::uint32_t> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  MaskFlock out;
  for (std::uint32_t a : bases) {
    if (a == 0) continue;
    bool maximal = true;
    for (std::uint32_t b : bases)
      if (a != b && (a & b) == a) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::string mask_key(const MaskFlock& flock) {
  std::string key(flock.size() * sizeof(std::uint32_t), '\0');
  std::memcpy(key.data(), flock.data(), key.size());
  return key;
}

std::vector<std::uint32_t> mask_remainders(const MaskDomain& domain,
                                           std::uint32_t base,
                                           std::size_t goal) {
  std::vector<std::uint32_t> failing;  // submasks not entailing goal
  std::uint32_t sub = base;
  while (true) {
    if (!domain.base_entails(sub, goal)) failing.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & base;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t a : failing) {
    bool maximal = true;
    for (std::uint32_t b : failing)
      if (a != b && (a & b) == a) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

std::string ExploreResult::to_text() const {
  std::ostringstream out;
  out << header << "\n";
  out << (found ? "FOUND" : "NOT FOUND") << " depth=" << depth
      << " visited=" << visited << "\n";
  if (found) {
    out << "start:\n" << render_flock(start);
    for (const ExploreOp& op : witness)
      out << (op.kind == ExploreOp::Kind::Contract ? "contract " : "expand ")
          << render_formula(op.argument) << "\n";
  }
  return out.str();
}

ExploreResult explore_constructibility(const Flock& target, int depth,
                                       int atoms) {
  if (atoms < 1 || atoms > 2)
    throw TooLarge("explorer supports 1..2 atoms, got " + std::to_string(atoms));
  if (depth < 0 || depth > 4)
    throw TooLarge("explorer supports depth 0..4, got " + std::to_string(depth));
  std::vector<std::string> names{"p", "q"};
  names.resize(atoms);
  MaskDomain domain(names);

  // Targets are matched up to canonical representatives: each target
  // formula maps to the canonical formula with the same truth table.
  MaskFlock target_masks;
  {
    std::vector<std::uint32_t> bases;
    for (const Base& base : normalize(target)) {
      std::uint32_t bits = 0;
      for (const Formula& f : base) {
        for (const std::string& atom : signature(f))
          if (std::find(names.begin(), names.end(), atom) == names.end())
            throw Error("target formula " + render_formula(f) +
                        " uses atom outside the explorer signature");
        std::uint32_t mask = 0;
        std::size_t valuations = std::size_t{1} << names.size();
        for (std::size_t v = 0; v < valuations; ++v) {
          Base premises;
          for (std::size_t j = 0; j < names.size(); ++j) {
            Formula atom = Formula::atom(names[j]);
            premises.insert(((v >> j) & 1) ? atom : Formula::negation(atom));
          }
          if (entails(premises, f)) mask |= std::uint32_t{1} << v;
        }
        for (std::size_t i = 0; i < domain.truth.size(); ++i)
          if (domain.truth[i] == mask) {
            bits |= std::uint32_t{1} << i;
            break;
          }
      }
      bases.push_back(bits);
    }
    target_masks = mask_normalize(std::move(bases));
  }
  std::string target_key = mask_key(target_masks);

  ExploreResult result;
  result.depth = depth;
  result.header =
      "primitive flocks: singleton flocks {{f}}, one canonical formula per "
      "boolean function over the signature; operation arguments drawn from "
      "the same canonical set (tautology excluded for contraction); targets "
      "matched up to canonical representatives";

  auto decode = [&](const MaskFlock& flock) {
    Flock out;
    for (std::uint32_t bits : flock) {
      Base base;
      for (std::size_t i = 0; i < domain.canon.size(); ++i)
        if ((bits >> i) & 1) base.insert(domain.canon[i]);
      out.insert(std::move(base));
    }
    return out;
  };

  struct Edge {
    std::string parent;
    ExploreOp op;
  };
  std::unordered_map<std::string, Edge> edges;
  std::unordered_map<std::string, MaskFlock> seen;
  std::deque<std::string> frontier;

  auto finish = [&](const std::string& key) {
    result.found = true;
    std::vector<ExploreOp> ops;
    std::string cursor = key;
    while (true) {
      auto it = edges.find(cursor);
      if (it == edges.end()) break;
      ops.push_back(it->second.op);
      cursor = it->second.parent;
    }
    std::reverse(ops.begin(), ops.end());
    result.witness = std::move(ops);
    result.start = decode(seen.at(cursor));
    return result;
  };

  for (std::size_t c = 0; c < domain.canon.size(); ++c) {
    MaskFlock primitive = mask_normalize({std::uint32_t{1} << c});
    std::string key = mask_key(primitive);
    if (seen.count(key) != 0) continue;
    seen.emplace(key, primitive);
    frontier.push_back(key);
    ++result.visited;
    if (key == target_key) return finish(key);
  }

  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::deque<std::string> next;
    for (const std::string& key : frontier) {
      MaskFlock flock = seen.at(key);
      for (std::size_t c = 0; c < domain.canon.size(); ++c) {
        // Contraction by any non-tautological canonical formula.
        if (c != domain.tautology_index && !flock.empty()) {
          std::vector<std::uint32_t> bases;
          for (std::uint32_t bits : flock) {
            auto rs = mask_remainders(domain, bits, c);
            bases.insert(bases.end(), rs.begin(), rs.end());
          }
          MaskFlock child = mask_normalize(std::move(bases));
          std::string child_key = mask_key(child);
          if (seen.count(child_key) == 0) {
            seen.emplace(child_key, child);
            edges.emplace(child_key,
                          Edge{key, {ExploreOp::Kind::Contract,
                                     domain.canon[c]}});
            next.push_back(child_key);
            ++result.visited;
            if (child_key == target_key) return finish(child_key);
          }
        }
        // Expansion by a canonical formula not occurring in the flock.
        bool occurs = false;
        for (std::uint32_t bits : flock)
          if ((bits >> c) & 1) occurs = true;
        if (occurs) continue;
        std::vector<std::uint32_t> bases;
        if (flock.empty()) {
          bases.push_back(std::uint32_t{1} << c);
        } else {
          for (std::uint32_t bits : flock)
            bases.push_back(bits | (std::uint32_t{1} << c));
        }
        MaskFlock child = mask_normalize(std::move(bases));
        std::string child_key = mask_key(child);
        if (seen.count(child_key) == 0) {
          seen.emplace(child_key, child);
          edges.emplace(child_key,
                        Edge{key, {ExploreOp::Kind::Expand, domain.canon[c]}});
          next.push_back(child_key);
          ++result.visited;
          if (child_key == target_key) return finish(child_key);
        }
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace flocks
