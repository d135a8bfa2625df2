#include "flocks/estate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace flocks {

namespace {

std::string compact_base(const Base& base) {
  std::vector<std::string> texts;
  for (const Formula& f : base) texts.push_back(render_formula(f));
  std::sort(texts.begin(), texts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i != 0) out += ";";
    out += texts[i];
  }
  out += "}";
  return out;
}

bool subset(const Base& a, const Base& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool proper_subset(const Base& a, const Base& b) {
  return a.size() < b.size() && subset(a, b);
}

// Th(a) included in Th(b), decided on generators.
bool th_included(const Base& a, const Base& b) {
  for (const Formula& c : a)
    if (!entails(b, c)) return false;
  return true;
}

bool th_equivalent(const Base& a, const Base& b) {
  return th_included(a, b) && th_included(b, a);
}

}  // namespace

void validate(const EpistemicState& e) {
  if (e.ids.size() != e.labels.size())
    throw Error("epistemic state: ids/labels size mismatch");
  for (auto [s, t] : e.prefer) {
    if (s >= e.size() || t >= e.size())
      throw Error("epistemic state: preference pair out of range");
    if (s == t) throw Error("epistemic state: preference not irreflexive");
  }
  for (auto [s, t] : e.prefer)
    for (auto [u, v] : e.prefer)
      if (t == u && e.prefer.count({s, v}) == 0)
        throw Error("epistemic state: preference not transitive");
}

EpistemicState generate(const Flock& f) {
  std::set<Base> states;
  for (const Base& base : f) {
    if (base.size() > kBaseCap)
      throw TooLarge("base has " + std::to_string(base.size()) +
                     " formulas, cap is " + std::to_string(kBaseCap));
    std::vector<Formula> items(base.begin(), base.end());
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << items.size()); ++m) {
      Base subset_base;
      for (std::size_t i = 0; i < items.size(); ++i)
        if ((m >> i) & 1) subset_base.insert(items[i]);
      states.insert(std::move(subset_base));
      if (states.size() > kStateCap)
        throw TooLarge("generated state count exceeds " +
                       std::to_string(kStateCap));
    }
  }
  if (states.empty())
    throw EmptyFlock("cannot generate a state from a flock with no nonempty base");
  // The vacuous subset is an admissible state: the rudimentary state for a
  // single proposition has theories Th(empty) and Th(A), and the merge
  // theorem's union bijection needs the bottom state on both sides.
  states.insert(Base{});
  EpistemicState e;
  for (const Base& s : states) {
    e.ids.push_back(compact_base(s));
    e.labels.push_back(s);
  }
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j && proper_subset(e.labels[i], e.labels[j]))
        e.prefer.insert({i, j});
  return e;
}

BeliefSummary belief_summary(const EpistemicState& e) {
  BeliefSummary out{{}, Formula::verum()};
  for (std::size_t s = 0; s < e.size(); ++s) {
    bool maximal = true;
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e.less(s, t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.maximal_states.push_back(s);
  }
  if (out.maximal_states.empty()) return out;
  std::vector<Formula> disjuncts;
  for (std::size_t s : out.maximal_states) {
    const Base& label = e.labels[s];
    if (label.empty()) {
      disjuncts.push_back(Formula::verum());
      continue;
    }
    auto it = label.begin();
    Formula conj = *it;
    for (++it; it != label.end(); ++it)
      conj = Formula::conjunction(conj, *it);
    disjuncts.push_back(std::move(conj));
  }
  Formula belief = disjuncts[0];
  for (std::size_t i = 1; i < disjuncts.size(); ++i)
    belief = Formula::disjunction(std::move(belief), disjuncts[i]);
  out.belief_formula = std::move(belief);
  return out;
}

bool believes(const EpistemicState& e, const Formula& goal) {
  return entails({belief_summary(e).belief_formula}, goal);
}

bool is_persistent(const EpistemicState& e) {
  for (auto [s, t] : e.prefer)
    if (!th_included(e.labels[s], e.labels[t])) return false;
  return true;
}

bool is_pure(const EpistemicState& e) {
  for (std::size_t s = 0; s < e.size(); ++s)
    for (std::size_t t = 0; t < e.size(); ++t)
      if (e.less_eq(s, t) != th_included(e.labels[s], e.labels[t]))
        return false;
  return true;
}

bool is_determinate(const EpistemicState& e) {
  return belief_summary(e).maximal_states.size() == 1;
}

EpistemicState contract_estate(const EpistemicState& e, const Formula& goal) {
  std::vector<std::size_t> keep;
  std::map<std::size_t, std::size_t> index;
  EpistemicState out;
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (entails(e.labels[s], goal)) continue;
    index[s] = out.size();
    out.ids.push_back(e.ids[s]);
    out.labels.push_back(e.labels[s]);
    keep.push_back(s);
  }
  if (out.size() == 0 && is_tautology(goal))
    throw TautologyContraction("contracting the tautology " +
                               render_formula(goal) +
                               " removes every admissible state");
  for (auto [s, t] : e.prefer) {
    auto is = index.find(s);
    auto it = index.find(t);
    if (is != index.end() && it != index.end())
      out.prefer.insert({is->second, it->second});
  }
  return out;
}

EpistemicState pure_merge(const EpistemicState& a, const EpistemicState& b) {
  if (a.size() != 0 && b.size() != 0 && a.size() > kStateCap / b.size())
    throw TooLarge("merged state count exceeds " + std::to_string(kStateCap));
  EpistemicState out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out.ids.push_back("(" + a.ids[i] + "," + b.ids[j] + ")");
      Base label = a.labels[i];
      label.insert(b.labels[j].begin(), b.labels[j].end());
      out.labels.push_back(std::move(label));
    }
  }
  std::size_t n = b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l) {
          if (i == k && j == l) continue;
          if (a.less_eq(i, k) && b.less_eq(j, l))
            out.prefer.insert({i * n + j, k * n + l});
        }
  return out;
}

EpistemicState expand_estate(const EpistemicState& e, const Formula& added) {
  EpistemicState rudimentary;
  rudimentary.ids = {"{}", compact_base({added})};
  rudimentary.labels = {Base{}, Base{added}};
  rudimentary.prefer = {{0, 1}};
  return pure_merge(e, rudimentary);
}

namespace {

// Semantic label classes shared across both states; -1 never returned.
std::vector<int> label_classes(const std::vector<Base>& labels,
                               std::vector<Base>& reps) {
  std::vector<int> classes;
  for (const Base& label : labels) {
    int found = -1;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (th_equivalent(label, reps[r])) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(label);
    }
    classes.push_back(found);
  }
  return classes;
}

struct IsoSearch {
  const EpistemicState& a;
  const EpistemicState& b;
  std::vector<int> class_a, class_b;
  std::vector<std::size_t> in_a, out_a, in_b, out_b;
  std::vector<int> mapping;       // a-state -> b-state or -1
  std::vector<bool> used;

  bool extend(std::size_t i) {
    if (i == a.size()) return true;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || class_a[i] != class_b[j]) continue;
      if (in_a[i] != in_b[j] || out_a[i] != out_b[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i; ++k) {
        std::size_t m = static_cast<std::size_t>(mapping[k]);
        if (a.less(i, k) != b.less(j, m) || a.less(k, i) != b.less(m, j)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      mapping[i] = static_cast<int>(j);
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
      mapping[i] = -1;
    }
    return false;
  }
};

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> degrees(
    const EpistemicState& e) {
  std::vector<std::size_t> in(e.size(), 0), out(e.size(), 0);
  for (auto [s, t] : e.prefer) {
    ++out[s];
    ++in[t];
  }
  return {in, out};
}

}  // namespace

bool isomorphic(const EpistemicState& a, const EpistemicState& b) {
  if (a.size() > kStateCap || b.size() > kStateCap)
    throw TooLarge("isomorphism check past the state cap");
  if (a.size() != b.size() || a.prefer.size() != b.prefer.size()) return false;
  std::vector<Base> reps;
  IsoSearch search{a, b};
  search.class_a = label_classes(a.labels, reps);
  search.class_b = label_classes(b.labels, reps);
  std::vector<int> count_a(reps.size(), 0), count_b(reps.size(), 0);
  for (int c : search.class_a) ++count_a[c];
  for (int c : search.class_b) ++count_b[c];
  if (count_a != count_b) return false;
  std::tie(search.in_a, search.out_a) = degrees(a);
  std::tie(search.in_b, search.out_b) = degrees(b);
  search.mapping.assign(a.size(), -1);
  search.used.assign(b.size(), false);
  return search.extend(0);
}

std::vector<Formula> canonical_formulas(const std::vector<std::string>& atoms) {
  if (atoms.size() > 3)
    throw SignatureTooLarge("canonical formula table limited to 3 atoms, got " +
                            std::to_string(atoms.size()));
  const std::size_t valuations = std::size_t{1} << atoms.size();
  const std::uint32_t full = valuations == 32
                                 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << valuations) - 1;
  auto truth_mask = [&](const Formula& f) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < valuations; ++v) {
      Base premises;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        Formula atom = Formula::atom(atoms[i]);
        premises.insert(((v >> i) & 1) ? atom : Formula::negation(atom));
      }
      if (entails(premises, f)) mask |= std::uint32_t{1} << v;
    }
    return mask;
  };
  std::map<std::uint32_t, Formula> found;
  std::vector<Formula> order;
  auto add = [&](const Formula& f) {
    std::uint32_t mask = truth_mask(f);
    if (found.count(mask) != 0) return;
    found.emplace(mask, f);
    order.push_back(f);
  };
  add(Formula::verum());
  add(Formula::falsum());
  for (const std::string& name : atoms) add(Formula::atom(name));
  const std::size_t total = std::size_t{1} << valuations;
  std::size_t scanned = 0;
  while (found.size() < total && scanned < order.size()) {
    std::size_t end = order.size();
    for (std::size_t i = scanned; i < end; ++i) add(Formula::negation(order[i]));
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        if (i < scanned && j < scanned) continue;
        add(Formula::conjunction(order[i], order[j]));
        add(Formula::disjunction(order[i], order[j]));
        if (found.size() == total) break;
      }
      if (found.size() == total) break;
    }
    scanned = end;
  }
  (void)full;
  std::vector<Formula> out;
  for (const auto& [mask, f] : found) out.push_back(f);
  return out;
}

bool behaviorally_equivalent(const EpistemicState& a, const EpistemicState& b,
                             int depth) {
  std::set<std::string> atom_set;
  for (const Base& label : a.labels)
    for (const std::string& name : signature(label)) atom_set.insert(name);
  for (const Base& label : b.labels)
    for (const std::string& name : signature(label)) atom_set.insert(name);
  if (atom_set.size() > 3)
    throw SignatureTooLarge("behavioral check limited to 3 atoms, got " +
                            std::to_string(atom_set.size()));
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::vector<Formula> moves;
  for (const Formula& f : canonical_formulas(atoms))
    if (!is_tautology(f)) moves.push_back(f);

  struct Rec {
    const std::vector<Formula>& moves;
    bool run(const EpistemicState& x, const EpistemicState& y, int d) {
      Formula bx = belief_summary(x).belief_formula;
      Formula by = belief_summary(y).belief_formula;
      if (!equivalent(bx, by)) return false;
      if (d == 0) return true;
      for (const Formula& move : moves)
        if (!run(contract_estate(x, move), contract_estate(y, move), d - 1))
          return false;
      return true;
    }
  };
  return Rec{moves}.run(a, b, depth);
}

std::string dump(const EpistemicState& e) {
  std::vector<std::string> lines;
  for (std::size_t s = 0; s < e.size(); ++s) {
    std::vector<std::string> above;
    for (std::size_t t = 0; t < e.size(); ++t)
      if (e.less(s, t)) above.push_back(e.ids[t]);
    std::sort(above.begin(), above.end());
    std::ostringstream line;
    line << e.ids[s] << " : " << compact_base(e.labels[s]) << " ; above: [";
    for (std::size_t i = 0; i < above.size(); ++i) {
      if (i != 0) line << ",";
      line << above[i];
    }
    line << "]";
    lines.push_back(line.str());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) out += line + "\n";
  return out;
}

}  // namespace flocks
