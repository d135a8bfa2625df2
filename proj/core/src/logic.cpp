#include "flocks/logic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace flocks {

namespace {

// ---------------------------------------------------------------- parsing

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_rest(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  Formula parse() {
    Formula f = iff();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return f;
  }

  Formula iff() {
    Formula f = implies();
    while (true) {
      skip_ws();
      if (text.substr(pos, 3) == "<->") {
        pos += 3;
        f = Formula::equivalence(std::move(f), implies());
      } else {
        return f;
      }
    }
  }

  Formula implies() {
    Formula f = disj();
    skip_ws();
    if (text.substr(pos, 2) == "->") {
      pos += 2;
      return Formula::implication(std::move(f), implies());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        f = Formula::disjunction(std::move(f), conj());
      } else {
        return f;
      }
    }
  }

  Formula conj() {
    Formula f = unary();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '&') {
        ++pos;
        f = Formula::conjunction(std::move(f), unary());
      } else {
        return f;
      }
    }
  }

  Formula unary() {
    skip_ws();
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      Formula f = iff();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return f;
    }
    if (!ident_start(text[pos])) fail("expected formula");
    std::size_t start = pos;
    while (pos < text.size() && ident_rest(text[pos])) ++pos;
    std::string name(text.substr(start, pos - start));
    if (name == "true") return Formula::verum();
    if (name == "false") return Formula::falsum();
    return Formula::atom(std::move(name));
  }
};

// --------------------------------------------------------------- printing

int precedence(Connective k) {
  switch (k) {
    case Connective::Iff:
      return 1;
    case Connective::Implies:
      return 2;
    case Connective::Or:
      return 3;
    case Connective::And:
      return 4;
    case Connective::Not:
      return 5;
    default:
      return 6;
  }
}

void render(const Formula& f, std::string& out);

void render_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out.push_back('(');
  render(f, out);
  if (parens) out.push_back(')');
}

void render_binary(const Formula& f, const char* op, bool right_assoc,
                   std::string& out) {
  int p = precedence(f.kind());
  int pl = precedence(f.left().kind());
  int pr = precedence(f.right().kind());
  render_wrapped(f.left(), right_assoc ? pl <= p : pl < p, out);
  out += op;
  render_wrapped(f.right(), right_assoc ? pr < p : pr <= p, out);
}

void render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      break;
    case Connective::Verum:
      out += "true";
      break;
    case Connective::Falsum:
      out += "false";
      break;
    case Connective::Not:
      out.push_back('~');
      render_wrapped(f.child(), precedence(f.child().kind()) < 5, out);
      break;
    case Connective::And:
      render_binary(f, " & ", false, out);
      break;
    case Connective::Or:
      render_binary(f, " | ", false, out);
      break;
    case Connective::Implies:
      render_binary(f, " -> ", true, out);
      break;
    case Connective::Iff:
      render_binary(f, " <-> ", false, out);
      break;
  }
}

// ------------------------------------------------------------- entailment

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out.insert(f.name());
      break;
    case Connective::Verum:
    case Connective::Falsum:
      break;
    case Connective::Not:
      collect_atoms(f.child(), out);
      break;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

bool eval(const Formula& f, const std::map<std::string, bool>& valuation) {
  switch (f.kind()) {
    case Connective::Atom:
      return valuation.at(f.name());
    case Connective::Verum:
      return true;
    case Connective::Falsum:
      return false;
    case Connective::Not:
      return !eval(f.child(), valuation);
    case Connective::And:
      return eval(f.left(), valuation) && eval(f.right(), valuation);
    case Connective::Or:
      return eval(f.left(), valuation) || eval(f.right(), valuation);
    case Connective::Implies:
      return !eval(f.left(), valuation) || eval(f.right(), valuation);
    case Connective::Iff:
      return eval(f.left(), valuation) == eval(f.right(), valuation);
  }
  return false;  // unreachable
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser parser{text};
  return parser.parse();
}

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

bool entails(const Base& premises, const Formula& goal) {
  std::set<std::string> atom_set;
  for (const Formula& p : premises) collect_atoms(p, atom_set);
  collect_atoms(goal, atom_set);
  if (atom_set.size() > kAtomCap)
    throw SignatureTooLarge("joint signature has " +
                            std::to_string(atom_set.size()) +
                            " atoms, cap is " + std::to_string(kAtomCap));
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::map<std::string, bool> valuation;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      valuation[atoms[i]] = (mask >> i) & 1;
    bool all_premises = true;
    for (const Formula& p : premises) {
      if (!eval(p, valuation)) {
        all_premises = false;
        break;
      }
    }
    if (all_premises && !eval(goal, valuation)) return false;
  }
  return true;
}

bool equivalent(const Formula& f, const Formula& g) {
  return entails({f}, g) && entails({g}, f);
}

bool is_tautology(const Formula& f) { return entails({}, f); }

std::vector<std::string> signature(const Base& fs) {
  std::set<std::string> atom_set;
  for (const Formula& f : fs) collect_atoms(f, atom_set);
  return {atom_set.begin(), atom_set.end()};
}

std::vector<std::string> signature(const Formula& f) {
  std::set<std::string> atom_set;
  collect_atoms(f, atom_set);
  return {atom_set.begin(), atom_set.end()};
}

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  out.insert(f);
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Verum:
    case Connective::Falsum:
      break;
    case Connective::Not:
      collect_subformulas(f.child(), out);
      break;
    default:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
  }
}

Formula freshen(const Formula& f, const Base& forbidden) {
  std::set<Formula> closure;
  for (const Formula& g : forbidden) collect_subformulas(g, closure);
  Formula candidate = Formula::negation(Formula::negation(f));
  while (closure.count(candidate) != 0)
    candidate = Formula::negation(Formula::negation(candidate));
  return candidate;
}

}  // namespace flocks
