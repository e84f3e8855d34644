#include <doctest.h>

#include <random>

#include "qbfredux/generators.hpp"
#include "qbfredux/oracle.hpp"
#include "qbfredux/propagation.hpp"

using namespace qbfredux;

namespace {

Lit pos(Var v) { return Lit(v, true); }
Lit neg(Var v) { return Lit(v, false); }

// A u E x . (u v ~x) (~u v x), the two-clause equivalence gadget.
Formula forall_exists_xor() {
  Formula f{Prefix({{Quant::Forall, {1}}, {Quant::Exists, {2}}})};
  f.add_clause({pos(1), neg(2)});
  f.add_clause({neg(1), pos(2)});
  return f;
}

// A u1 E x3 A u2 E x4 with the two inner clauses of the chained gadget;
// the clause (u1 v ~x3) itself is the candidate under test.
Formula chained_gadget_without_candidate() {
  Formula f{Prefix({{Quant::Forall, {1}},
                    {Quant::Exists, {2}},
                    {Quant::Forall, {3}},
                    {Quant::Exists, {4}}})};
  f.add_clause({pos(1), neg(2), pos(4)});
  f.add_clause({neg(3), neg(4)});
  return f;
}

}  // namespace

TEST_CASE("universal reduction removes trailing universals only") {
  const Prefix exa =
      Prefix({{Quant::Exists, {1}}, {Quant::Forall, {2}}, {Quant::Exists, {3}}});
  CHECK(universal_reduce(exa, {pos(1), pos(2), pos(3)}, 0) ==
        Clause{pos(1), pos(2), pos(3)});
  CHECK(universal_reduce(exa, {pos(1), pos(2)}, 0) == Clause{pos(1)});

  const Prefix au = Prefix({{Quant::Forall, {1}}, {Quant::Exists, {2}}});
  CHECK(universal_reduce(au, {neg(1)}, 0).empty());

  CHECK_THROWS_AS(universal_reduce(exa, {pos(1), neg(1)}, 0), Error);
}

TEST_CASE("universal reduction respects the abstraction level") {
  const Prefix prefix = Prefix({{Quant::Forall, {1}},
                                {Quant::Exists, {2}},
                                {Quant::Forall, {3}},
                                {Quant::Exists, {4}}});
  // Level 2: u3 is still universal, u1 counts as existential.
  CHECK(universal_reduce(prefix, {neg(1), pos(3)}, 2) == Clause{neg(1)});
  // Abstracted universals are never removed.
  CHECK(universal_reduce(prefix, {pos(1)}, 1) == Clause{pos(1)});
  // At the full abstraction nothing reduces.
  CHECK(universal_reduce(prefix, {pos(1), pos(3)}, 4) == Clause{pos(1), pos(3)});
}

TEST_CASE("assuming a negated clause") {
  const Formula f = forall_exists_xor();
  Trail tautological(f, 2);
  CHECK(tautological.assume_negation({pos(2), neg(2)}) ==
        AssumeResult::ImmediateConflict);

  Trail plain(f, 2);
  CHECK(plain.assume_negation({pos(1), pos(2)}) == AssumeResult::Assumed);
  CHECK(plain.assignments() == std::vector<Lit>{neg(1), neg(2)});

  Trail empty(f, 2);
  CHECK(empty.assume_negation({}) == AssumeResult::Assumed);
  CHECK(empty.assignments().empty());

  Trail guarded(f, 0);
  CHECK_THROWS_AS(guarded.assume_negation({pos(1)}), Error);
}

TEST_CASE("propagation with reduction conflicts where plain propagation does not") {
  const Formula f = forall_exists_xor();
  const Clause candidate{pos(2)};  // (x)

  // Level 0: propagating ~x yields (~u), which reduces to the empty clause.
  Trail level0(f, 0);
  REQUIRE(level0.assume_negation(candidate) == AssumeResult::Assumed);
  const PropagationOutcome conflict = level0.propagate();
  CHECK(conflict.kind == PropagationOutcome::Kind::Conflict);
  REQUIRE(conflict.conflict_clause.has_value());

  // Level 2 (everything existential): fixed point without conflict.
  Trail level2(f, 2);
  REQUIRE(level2.assume_negation(candidate) == AssumeResult::Assumed);
  const PropagationOutcome fixed = level2.propagate();
  CHECK(fixed.kind == PropagationOutcome::Kind::FixedPoint);
  CHECK_FALSE(fixed.conflict_clause.has_value());
}

TEST_CASE("propagation drives the chained gadget into a reduced conflict") {
  // With the candidate removed: x4 becomes unit, then (~u2 v ~x4) empties
  // because ~u2 sits above the abstraction level.
  const Formula without = chained_gadget_without_candidate();
  Trail trail(without, 2);
  REQUIRE(trail.assume_negation({pos(1), neg(2)}) == AssumeResult::Assumed);
  CHECK(trail.propagate().kind == PropagationOutcome::Kind::Conflict);
  CHECK(trail.value(4).has_value());

  // With the candidate present the assumption falsifies it directly.
  Formula with = chained_gadget_without_candidate();
  with.add_clause({pos(1), neg(2)});
  Trail direct(with, 2);
  REQUIRE(direct.assume_negation({pos(1), neg(2)}) == AssumeResult::Assumed);
  CHECK(direct.propagate().kind == PropagationOutcome::Kind::Conflict);
}

TEST_CASE("plain and quantified asymmetric tautology checks") {
  const Formula f = chained_gadget_without_candidate();
  const Clause candidate{pos(1), neg(2)};
  CHECK_FALSE(at_check(f, candidate));
  CHECK(qat_check(f, candidate));
}

TEST_CASE("asymmetric tautology basics") {
  Formula f{Prefix({{Quant::Exists, {1, 2}}})};
  f.add_clause({pos(1), pos(2)});
  CHECK(at_check(f, {pos(1), neg(1)}));       // contradictory negation
  CHECK(at_check(f, {pos(1), pos(2)}));       // clause of the formula itself
  CHECK_FALSE(at_check(f, {pos(1)}));
}

TEST_CASE("the quantified check refuses the unsound propositional conclusion") {
  const Formula f = forall_exists_xor();
  // (x) propagates to a conflict at level 0 but its maximum level forces
  // the full abstraction, where no conflict arises.
  CHECK_FALSE(qat_check(f, {pos(2)}));
}

TEST_CASE("quantified check on the clause-elimination family") {
  const Formula f = gen_phi_c(1);
  Formula without = f;
  without.remove_clause(0);  // gadget clause on the first existential pivot
  // Its outer resolvent (u1 v ~x3) has ids (5, 3) under the family layout.
  const Clause resolvent{pos(5), neg(3)};
  CHECK(qat_check(without, resolvent));
  CHECK_FALSE(at_check(without, resolvent));
}

TEST_CASE("propagation outcome and trail are deterministic") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomQbfConfig config;
    config.num_vars = 9;
    config.num_blocks = 3;
    config.num_clauses = 18;
    config.width_max = 4;
    config.seed = seed;
    const Formula f = gen_random_qbf(config);
    const Clause candidate = f.clause(0);
    Formula without = f;
    without.remove_clause(0);

    const std::uint32_t level = without.prefix().max_level(candidate);
    Trail first(without, level);
    Trail second(without, level);
    REQUIRE(first.assume_negation(candidate) == second.assume_negation(candidate));
    const PropagationOutcome a = first.propagate();
    const PropagationOutcome b = second.propagate();
    CHECK(a.kind == b.kind);
    CHECK(a.conflict_clause == b.conflict_clause);
    CHECK(first.assignments() == second.assignments());
  }
}

TEST_CASE("a plain conflict implies a quantified conflict") {
  std::mt19937_64 rng(99);
  std::size_t positive = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    RandomQbfConfig config;
    config.num_vars = 8;
    config.num_blocks = 2 + seed % 3;
    config.num_clauses = 14;
    config.width_max = 3;
    config.seed = seed;
    const Formula f = gen_random_qbf(config);
    for (int trial = 0; trial < 6; ++trial) {
      Clause c;
      std::vector<bool> used(config.num_vars + 1, false);
      const std::size_t width = 1 + rng() % 3;
      while (c.size() < width) {
        const Var v = 1 + static_cast<Var>(rng() % config.num_vars);
        if (used[v]) continue;
        used[v] = true;
        c.push_back(Lit(v, (rng() & 1) != 0));
      }
      if (at_check(f, c)) {
        ++positive;
        CHECK(qat_check(f, c));
      }
    }
  }
  CHECK(positive > 0);  // the corpus exercised the implication
}

TEST_CASE("at the full abstraction universal reduction removes nothing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    RandomQbfConfig config;
    config.num_vars = 7;
    config.num_blocks = 1 + trial % 4;
    config.num_clauses = 8;
    config.width_max = 4;
    config.seed = 1000 + trial;
    const Formula f = gen_random_qbf(config);
    const auto n = static_cast<std::uint32_t>(f.prefix().block_count());
    for (ClauseId id : f.live_clause_ids())
      CHECK(universal_reduce(f.prefix(), f.clause(id), n) == f.clause(id));
  }
  (void)rng;
}

TEST_CASE("small instances: a quantified conflict certifies implication") {
  std::mt19937_64 rng(31);
  std::size_t certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    RandomQbfConfig config;
    config.num_vars = 5;
    config.num_blocks = 2 + trial % 2;
    config.num_clauses = 6 + trial % 5;
    config.width_max = 3;
    config.seed = 500 + trial;
    const Formula f = gen_random_qbf(config);
    for (int inner = 0; inner < 4; ++inner) {
      Clause c;
      std::vector<bool> used(config.num_vars + 1, false);
      const std::size_t width = 1 + rng() % 2;
      while (c.size() < width) {
        const Var v = 1 + static_cast<Var>(rng() % config.num_vars);
        if (used[v]) continue;
        used[v] = true;
        c.push_back(Lit(v, (rng() & 1) != 0));
      }
      if (qat_check(f, c)) {
        ++certified;
        CHECK(tree_implies(f, c));
      }
    }
  }
  CHECK(certified > 0);
}
