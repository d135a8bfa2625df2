#include "doctest.h"
#include "flocks/harness.hpp"

using namespace flocks;

namespace {

TrialConfig cfg_with(std::uint64_t seed, int trials) {
  TrialConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return cfg;
}

}  // namespace

TEST_CASE("random_flock is deterministic and respects bounds") {
  TrialConfig cfg = cfg_with(42, 100);
  for (std::uint64_t i = 0; i < 50; ++i) {
    Flock a = random_flock(cfg, i);
    Flock b = random_flock(cfg, i);
    CHECK(a == b);
    CHECK(a.size() <= static_cast<std::size_t>(cfg.max_bases));
    for (const Base& base : a) {
      CHECK(base.size() <= static_cast<std::size_t>(cfg.max_base_size));
      for (const std::string& atom : signature(base)) {
        bool known = false;
        for (const std::string& h : harness_atoms(cfg.atoms))
          known = known || h == atom;
        CHECK(known);
      }
    }
  }
  // different seeds diverge somewhere
  TrialConfig other = cfg_with(43, 100);
  bool differs = false;
  for (std::uint64_t i = 0; i < 20 && !differs; ++i)
    differs = random_flock(cfg, i) != random_flock(other, i);
  CHECK(differs);
}

TEST_CASE("harness_atoms") {
  CHECK(harness_atoms(2) == std::vector<std::string>{"A", "B"});
  CHECK(harness_atoms(0).empty());
  CHECK_THROWS_AS(harness_atoms(5), Error);
}

TEST_CASE("check_lemma_contraction passes") {
  CheckReport r = check_lemma_contraction(cfg_with(1, 30));
  CHECK(r.passed());
  CHECK(r.trials > 0);
}

TEST_CASE("check_theorem_merge passes") {
  CheckReport r = check_theorem_merge(cfg_with(2, 20));
  CHECK(r.passed());
  CHECK(r.trials > 0);
}

TEST_CASE("check_expansion passes") {
  CheckReport r = check_expansion(cfg_with(3, 20));
  CHECK(r.passed());
  CHECK(r.trials > 0);
}

TEST_CASE("check_commutativity passes") {
  CheckReport r = check_commutativity(cfg_with(4, 30));
  CHECK(r.passed());
  CHECK(r.trials > 0);
}

TEST_CASE("check_persistence passes") {
  CheckReport r = check_persistence(cfg_with(5, 30));
  CHECK(r.passed());
  CHECK(r.trials > 0);
}

TEST_CASE("reports are reproducible byte for byte") {
  TrialConfig cfg = cfg_with(77, 15);
  CHECK(check_lemma_contraction(cfg).to_text() ==
        check_lemma_contraction(cfg).to_text());
  CHECK(check_commutativity(cfg).to_text() ==
        check_commutativity(cfg).to_text());
  CHECK(check_persistence(cfg).to_text() == check_persistence(cfg).to_text());
}

TEST_CASE("report text header") {
  CheckReport r;
  r.name = "sample";
  r.trials = 9;
  r.skipped = 2;
  CHECK(r.to_text() == "CHECK sample trials=9 failures=0 skipped=2\n");
  r.failures.push_back({4, "flock: { A }"});
  CHECK(r.to_text() ==
        "CHECK sample trials=9 failures=1 skipped=2\n"
        "FAILURE trial=4\nflock: { A }\n");
}

TEST_CASE("explore: target reachable at depth zero") {
  ExploreResult r = explore_constructibility(parse_flock("{ p }\n"), 0, 1);
  CHECK(r.found);
  CHECK(r.witness.empty());
  CHECK(identical(r.start, parse_flock("{ p }\n")));
}

TEST_CASE("explore: two-base flock needs contraction after expansion") {
  Flock target = parse_flock("{ p }\n{ q }\n");
  CHECK_FALSE(explore_constructibility(target, 1, 2).found);
  ExploreResult r = explore_constructibility(target, 4, 2);
  CHECK(r.found);
  CHECK(!r.witness.empty());
  // replay the witness through the real operations
  Flock replayed = r.start;
  for (const ExploreOp& op : r.witness)
    replayed = op.kind == ExploreOp::Kind::Contract
                   ? contract(replayed, op.argument)
                   : expand(replayed, op.argument, true).flock;
  // semantic match: same belief theory and same set of base theories
  CHECK(equivalent(belief_formula(replayed), belief_formula(target)));
}

TEST_CASE("explore: a non-constructible target reports not found") {
  // one base strictly inside the other's theory collapses under normalize,
  // so the two-theory reading { p } / { p & q } is not primitive-reachable
  Flock target = parse_flock("{ p }\n{ p & q }\n");
  ExploreResult r = explore_constructibility(target, 4, 2);
  CHECK_FALSE(r.found);
  CHECK(r.visited > 100);
  std::string text = r.to_text();
  CHECK(text.find("NOT FOUND depth=4") != std::string::npos);
}

TEST_CASE("explore: result text carries the primitive reading") {
  ExploreResult r = explore_constructibility(parse_flock("{ p & q }\n"), 1, 2);
  std::string text = r.to_text();
  CHECK(text.find("primitive flocks") != std::string::npos);
  CHECK(text.find("FOUND") != std::string::npos);
  if (r.found) CHECK(text.find("start:") != std::string::npos);
}
