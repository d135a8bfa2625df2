#include "flocks/flock.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace flocks {

namespace {

bool subset(const Base& a, const Base& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool proper_subset(const Base& a, const Base& b) {
  return a.size() < b.size() && subset(a, b);
}

Base all_formulas(const Flock& f) {
  Base out;
  for (const Base& base : f) out.insert(base.begin(), base.end());
  return out;
}

}  // namespace

Flock normalize(const Flock& f) {
  Flock out;
  for (const Base& base : f) {
    if (base.empty()) continue;
    bool maximal = true;
    for (const Base& other : f) {
      if (proper_subset(base, other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(base);
  }
  return out;
}

bool identical(const Flock& f, const Flock& g) {
  return normalize(f) == normalize(g);
}

std::set<Base> remainders(const Base& base, const Formula& goal) {
  if (base.size() > kBaseCap)
    throw TooLarge("base has " + std::to_string(base.size()) +
                   " formulas, cap is " + std::to_string(kBaseCap));
  std::vector<Formula> items(base.begin(), base.end());
  std::set<Base> found;
  // Top-down by cardinality: a non-entailing subset is a remainder unless
  // it sits below one found at a larger size.
  std::vector<std::uint32_t> by_size(base.size() + 1, 0);
  std::vector<std::vector<std::uint32_t>> masks(base.size() + 1);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << items.size()); ++m)
    masks[std::popcount(m)].push_back(m);
  std::vector<std::uint32_t> found_masks;
  for (std::size_t size = items.size() + 1; size-- > 0;) {
    for (std::uint32_t m : masks[size]) {
      bool covered = false;
      for (std::uint32_t fm : found_masks) {
        if ((m & fm) == m) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      Base candidate;
      for (std::size_t i = 0; i < items.size(); ++i)
        if ((m >> i) & 1) candidate.insert(items[i]);
      if (!entails(candidate, goal)) {
        found.insert(std::move(candidate));
        found_masks.push_back(m);
      }
    }
  }
  return found;
}

Flock contract(const Flock& f, const Formula& goal) {
  if (is_tautology(goal))
    throw TautologyContraction("cannot contract by the tautology " +
                               render_formula(goal));
  if (normalize(f).empty())
    throw EmptyFlock("cannot contract a flock with no nonempty base");
  Flock out;
  for (const Base& base : f) {
    auto rs = remainders(base, goal);
    out.insert(rs.begin(), rs.end());
  }
  return normalize(out);
}

Flock merge(const Flock& f, const Flock& g) {
  Base left = all_formulas(f);
  Base right = all_formulas(g);
  Base shared;
  for (const Formula& formula : left)
    if (right.count(formula) != 0) shared.insert(formula);
  if (!shared.empty()) {
    std::string what = "flocks share formulas:";
    for (const Formula& formula : shared) what += " " + render_formula(formula);
    throw NotDisjoint(what);
  }
  Flock out;
  for (const Base& a : f) {
    for (const Base& b : g) {
      Base u = a;
      u.insert(b.begin(), b.end());
      out.insert(std::move(u));
    }
  }
  return normalize(out);
}

ExpandResult expand(const Flock& f, const Formula& added, bool auto_freshen) {
  Base occurring = all_formulas(f);
  Formula used = added;
  if (occurring.count(added) != 0) {
    if (!auto_freshen)
      throw OccursInFlock(render_formula(added) +
                          " already occurs in the flock");
    used = freshen(added, occurring);
  }
  Flock bases = normalize(f);
  Flock out;
  if (bases.empty()) {
    // Contracting everything leaves the vacuous base; expansion restarts
    // from the new formula alone (Levi identity needs this case).
    out.insert(Base{used});
  } else {
    for (const Base& base : bases) {
      Base u = base;
      u.insert(used);
      out.insert(std::move(u));
    }
  }
  return {normalize(out), used};
}

Flock revise(const Flock& f, const Formula& added) {
  return expand(contract(f, Formula::negation(added)), added, true).flock;
}

bool believed(const Flock& f, const Formula& goal) {
  Flock bases = normalize(f);
  if (bases.empty())
    throw EmptyFlock("belief query on a flock with no nonempty base");
  for (const Base& base : bases)
    if (!entails(base, goal)) return false;
  return true;
}

Formula belief_formula(const Flock& f) {
  Flock bases = normalize(f);
  if (bases.empty()) return Formula::verum();
  std::vector<Formula> disjuncts;
  for (const Base& base : bases) {
    auto it = base.begin();
    Formula conj = *it;
    for (++it; it != base.end(); ++it) conj = Formula::conjunction(conj, *it);
    disjuncts.push_back(std::move(conj));
  }
  Formula out = disjuncts[0];
  for (std::size_t i = 1; i < disjuncts.size(); ++i)
    out = Formula::disjunction(std::move(out), disjuncts[i]);
  return out;
}

Flock fukv_normalize(const Flock& f) {
  for (const Base& base : f)
    if (base.empty()) return Flock{Base{}};
  Flock out;
  for (const Base& base : f) {
    bool minimal = true;
    for (const Base& other : f) {
      if (proper_subset(other, base)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(base);
  }
  return out;
}

Flock fukv_delete(const Flock& f, const Formula& goal) {
  if (is_tautology(goal))
    throw TautologyContraction("cannot delete the tautology " +
                               render_formula(goal));
  Flock out;
  for (const Base& base : f) {
    auto rs = remainders(base, goal);
    out.insert(rs.begin(), rs.end());
  }
  return fukv_normalize(out);
}

// ----------------------------------------------------------- text format

std::string render_base(const Base& base) {
  std::vector<std::string> texts;
  for (const Formula& formula : base) texts.push_back(render_formula(formula));
  std::sort(texts.begin(), texts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < texts.size(); ++i)
    out += (i == 0 ? " " : " ; ") + texts[i];
  out += " }";
  return out;
}

std::string render_flock(const Flock& f) {
  std::vector<std::string> lines;
  for (const Base& base : f) lines.push_back(render_base(base));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) out += line + "\n";
  return out;
}

Flock parse_flock(std::string_view text) {
  Flock out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string body = line.substr(begin, end - begin + 1);
    if (body.front() != '{' || body.back() != '}')
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected `{ formulas }`",
                       begin);
    body = body.substr(1, body.size() - 2);
    Base base;
    std::size_t start = 0;
    bool any = body.find_first_not_of(" \t") != std::string::npos;
    while (any) {
      std::size_t sep = body.find(';', start);
      std::string part = body.substr(
          start, sep == std::string::npos ? std::string::npos : sep - start);
      try {
        base.insert(parse_formula(part));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                         e.position);
      }
      if (sep == std::string::npos) break;
      start = sep + 1;
    }
    out.insert(std::move(base));
  }
  return out;
}

Flock load_flock(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_flock(buffer.str());
}

void save_flock(const Flock& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << render_flock(f);
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace flocks
