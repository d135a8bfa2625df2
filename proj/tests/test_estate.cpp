#include <algorithm>
#include <random>

#include "doctest.h"
#include "flocks/estate.hpp"
#include "flocks/harness.hpp"

using namespace flocks;

namespace {

Formula A() { return Formula::atom("A"); }
Formula B() { return Formula::atom("B"); }
Formula AB() { return Formula::conjunction(A(), B()); }
Formula nnA() { return Formula::negation(Formula::negation(A())); }
Formula nnB() { return Formula::negation(Formula::negation(B())); }

std::set<Base> states_of(const EpistemicState& e) {
  return {e.labels.begin(), e.labels.end()};
}

TrialConfig small_cfg(std::uint64_t seed) {
  TrialConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("generate: downset states and inclusion order") {
  EpistemicState e = generate(Flock{Base{A(), B()}});
  CHECK(states_of(e) ==
        std::set<Base>{Base{}, Base{A()}, Base{B()}, Base{A(), B()}});
  auto index = [&](const Base& b) {
    return static_cast<std::size_t>(
        std::find(e.labels.begin(), e.labels.end(), b) - e.labels.begin());
  };
  CHECK(e.less(index(Base{A()}), index(Base{A(), B()})));
  CHECK(e.less(index(Base{B()}), index(Base{A(), B()})));
  CHECK_FALSE(e.less(index(Base{A()}), index(Base{B()})));
  validate(e);

  EpistemicState two = generate(Flock{Base{A()}, Base{B()}});
  CHECK(states_of(two) == std::set<Base>{Base{}, Base{A()}, Base{B()}});
  CHECK(generate(Flock{Base{A()}}).size() == 2);
  CHECK_THROWS_AS(generate(Flock{Base{}}), EmptyFlock);
  Base huge;
  for (int i = 0; i < 17; ++i) huge.insert(Formula::atom("x" + std::to_string(i)));
  CHECK_THROWS_AS(generate(Flock{huge}), TooLarge);
}

TEST_CASE("belief_summary") {
  CHECK(equivalent(belief_summary(generate(Flock{Base{A()}, Base{B()}}))
                       .belief_formula,
                   Formula::disjunction(A(), B())));
  CHECK(equivalent(belief_summary(generate(Flock{Base{A(), B()}}))
                       .belief_formula,
                   AB()));
  EpistemicState syntax = generate(Flock{Base{nnA()}, Base{A(), B()}});
  CHECK(believes(syntax, A()));
  CHECK_FALSE(believes(syntax, AB()));
  // empty state: verum summary
  EpistemicState empty;
  CHECK(belief_summary(empty).belief_formula == Formula::verum());
  CHECK(belief_summary(empty).maximal_states.empty());
}

TEST_CASE("is_persistent") {
  CHECK(is_persistent(generate(Flock{Base{A(), B()}, Base{nnA()}})));
  EpistemicState bad;
  bad.ids = {"s0", "s1"};
  bad.labels = {Base{A()}, Base{B()}};
  bad.prefer = {{0, 1}};
  CHECK_FALSE(is_persistent(bad));
  EpistemicState single;
  single.ids = {"s0"};
  single.labels = {Base{A()}};
  CHECK(is_persistent(single));
}

TEST_CASE("is_pure") {
  CHECK(is_pure(generate(Flock{Base{A(), B()}})));
  // Th(~~A) is inside Th(A,B) but {~~A} is not below {A,B} syntactically
  CHECK_FALSE(is_pure(generate(Flock{Base{nnA()}, Base{A(), B()}})));
  EpistemicState incomparable;
  incomparable.ids = {"s0", "s1"};
  incomparable.labels = {Base{A()}, Base{B()}};
  CHECK(is_pure(incomparable));
}

TEST_CASE("is_determinate") {
  CHECK(is_determinate(generate(Flock{Base{A(), B()}})));
  CHECK_FALSE(is_determinate(generate(Flock{Base{A()}, Base{B()}})));
  EpistemicState single;
  single.ids = {"s0"};
  single.labels = {Base{A()}};
  CHECK(is_determinate(single));
}

TEST_CASE("contract_estate") {
  EpistemicState e = generate(Flock{Base{A(), B()}});
  EpistemicState once = contract_estate(e, AB());
  CHECK(states_of(once) == std::set<Base>{Base{}, Base{A()}, Base{B()}});
  EpistemicState twice = contract_estate(once, A());
  CHECK(states_of(twice) == std::set<Base>{Base{}, Base{B()}});
  CHECK(believes(twice, B()));
  // contracting falsum drops only inconsistent-label states
  EpistemicState mixed;
  mixed.ids = {"s0", "s1"};
  mixed.labels = {Base{A()}, Base{A(), Formula::negation(A())}};
  mixed.prefer = {{0, 1}};
  EpistemicState dropped = contract_estate(mixed, Formula::falsum());
  CHECK(states_of(dropped) == std::set<Base>{Base{A()}});
  CHECK_THROWS_AS(contract_estate(e, parse_formula("A | ~A")),
                  TautologyContraction);
}

TEST_CASE("pure_merge") {
  EpistemicState merged =
      pure_merge(generate(Flock{Base{A()}}), generate(Flock{Base{B()}}));
  CHECK(isomorphic(merged, generate(Flock{Base{A(), B()}})));
  validate(merged);
  // symmetry
  CHECK(isomorphic(
      merged, pure_merge(generate(Flock{Base{B()}}), generate(Flock{Base{A()}}))));
  // persistence closure
  EpistemicState p1 = generate(Flock{Base{A()}, Base{B()}});
  EpistemicState p2 = generate(Flock{Base{Formula::atom("C")}});
  CHECK(is_persistent(pure_merge(p1, p2)));
}

TEST_CASE("expand_estate") {
  EpistemicState e = generate(Flock{Base{A()}});
  EpistemicState expanded = expand_estate(e, B());
  CHECK(isomorphic(expanded, generate(Flock{Base{A(), B()}})));
  CHECK(equivalent(belief_summary(expanded).belief_formula,
                   Formula::conjunction(
                       belief_summary(e).belief_formula, B())));
  // expanding by a tautology leaves beliefs equivalent
  EpistemicState by_taut = expand_estate(e, parse_formula("B | ~B"));
  CHECK(equivalent(belief_summary(by_taut).belief_formula,
                   belief_summary(e).belief_formula));
}

TEST_CASE("isomorphic") {
  CHECK(isomorphic(generate(Flock{Base{A()}}), generate(Flock{Base{nnA()}})));
  CHECK_FALSE(isomorphic(generate(Flock{Base{A()}, Base{B()}}),
                         generate(Flock{Base{A(), B()}})));
  // same sizes, different order shape
  EpistemicState chain;
  chain.ids = {"s0", "s1"};
  chain.labels = {Base{A()}, Base{A(), B()}};
  chain.prefer = {{0, 1}};
  EpistemicState flat;
  flat.ids = {"s0", "s1"};
  flat.labels = {Base{A()}, Base{A(), B()}};
  CHECK_FALSE(isomorphic(chain, flat));
}

TEST_CASE("behaviorally_equivalent") {
  Flock expanded{Base{nnB(), A()}, Base{nnB(), B()}};
  Flock reduced{Base{nnB(), A()}, Base{B()}};
  CHECK(behaviorally_equivalent(generate(expanded), generate(reduced), 2));
  CHECK(behaviorally_equivalent(generate(Flock{Base{B()}, Base{B(), A()}}),
                                generate(Flock{Base{A(), B()}}), 2));
  CHECK_FALSE(behaviorally_equivalent(generate(Flock{Base{A()}}),
                                      generate(Flock{Base{B()}}), 0));
  EpistemicState wide = generate(
      Flock{Base{A(), B(), Formula::atom("C"), Formula::atom("D")}});
  CHECK_THROWS_AS(behaviorally_equivalent(wide, wide, 1), SignatureTooLarge);
}

TEST_CASE("canonical_formulas covers every boolean function once") {
  auto two = canonical_formulas({"p", "q"});
  CHECK(two.size() == 16);
  std::set<std::string> rendered;
  for (const Formula& f : two) rendered.insert(render_formula(f));
  CHECK(rendered.size() == 16);
  CHECK(canonical_formulas({}).size() == 2);
  CHECK(canonical_formulas({"p"}).size() == 4);
}

TEST_CASE("dump golden") {
  EpistemicState e = generate(Flock{Base{A(), B()}});
  CHECK(dump(e) ==
        "{A;B} : {A;B} ; above: []\n"
        "{A} : {A} ; above: [{A;B}]\n"
        "{B} : {B} ; above: [{A;B}]\n"
        "{} : {} ; above: [{A;B},{A},{B}]\n");
}

TEST_CASE("property: generated states are persistent and valid") {
  TrialConfig cfg = small_cfg(31);
  for (int t = 0; t < 60; ++t) {
    Flock flock = random_flock(cfg, static_cast<std::uint64_t>(t));
    EpistemicState e = generate(flock);
    validate(e);
    CHECK(is_persistent(e));
    // persistence restated on labels
    for (auto [s, t2] : e.prefer)
      for (const Formula& c : e.labels[s]) CHECK(entails(e.labels[t2], c));
  }
}
