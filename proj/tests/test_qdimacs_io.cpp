#include <doctest.h>

#include "qbfredux/generators.hpp"
#include "qbfredux/qdimacs.hpp"
#include "qbfredux/trace.hpp"

using namespace qbfredux;

namespace {

Lit pos(Var v) { return Lit(v, true); }
Lit neg(Var v) { return Lit(v, false); }

}  // namespace

TEST_CASE("parsing a plain three-level formula") {
  const auto [f, diagnostics] =
      parse_qdimacs("p cnf 3 2\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-1 -2 -3 0\n");
  CHECK(f.prefix().blocks() ==
        std::vector<QuantifierBlock>{{Quant::Exists, {1}},
                                     {Quant::Forall, {2}},
                                     {Quant::Exists, {3}}});
  REQUIRE(f.live_clause_count() == 2);
  CHECK(f.clause(0) == Clause{pos(1), pos(2), pos(3)});
  CHECK(f.clause(1) == Clause{neg(1), neg(2), neg(3)});
  CHECK(diagnostics.warnings.empty());
}

TEST_CASE("tautological clauses are dropped with a warning") {
  const auto [f, diagnostics] = parse_qdimacs("p cnf 2 1\ne 1 2 0\n1 -1 2 0\n");
  CHECK(f.live_clause_count() == 0);
  CHECK(diagnostics.dropped_tautologies == 1);
  CHECK(diagnostics.warnings.size() == 1);
}

TEST_CASE("free variables are bound in an outermost existential block") {
  const auto [f, diagnostics] = parse_qdimacs("p cnf 2 1\n1 2 0\n");
  CHECK(f.prefix().blocks() ==
        std::vector<QuantifierBlock>{{Quant::Exists, {1, 2}}});
  CHECK(diagnostics.freed_variables_bound == 2);
}

TEST_CASE("free variables merge into a leading existential block") {
  const auto [f, diagnostics] = parse_qdimacs("p cnf 3 1\ne 1 0\na 2 0\n1 2 3 0\n");
  CHECK(diagnostics.freed_variables_bound == 1);
  CHECK(f.prefix().blocks() ==
        std::vector<QuantifierBlock>{{Quant::Exists, {1, 3}},
                                     {Quant::Forall, {2}}});
}

TEST_CASE("duplicate literals are merged with a count") {
  const auto [f, diagnostics] = parse_qdimacs("p cnf 2 1\ne 1 2 0\n1 1 2 0\n");
  CHECK(f.clause(0) == Clause{pos(1), pos(2)});
  CHECK(diagnostics.merged_duplicate_literals == 1);
}

TEST_CASE("clause count mismatches are warnings") {
  const auto [f, diagnostics] = parse_qdimacs("p cnf 1 5\ne 1 0\n1 0\n");
  CHECK(f.live_clause_count() == 1);
  REQUIRE(diagnostics.warnings.size() == 1);
  CHECK(diagnostics.warnings[0].second.find("declares 5") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_qdimacs("p dnf 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_qdimacs(""), ParseError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\ne 1 0 2 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\ne 1 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\ne 1 2 0\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\ne 1 0\n1 0\ne 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\ne 1 1 0\n1 0\n"), ParseError);

  try {
    parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 0\n2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("multi-line and multi-clause lines parse") {
  const auto [f, diagnostics] = parse_qdimacs("p cnf 2 3\ne 1 2 0\n1\n2 0 -1 0\n-2 0\n");
  CHECK(f.live_clause_count() == 3);
  CHECK(f.clause(0) == Clause{pos(1), pos(2)});
}

TEST_CASE("round trips reproduce the formula") {
  const std::string text = "p cnf 3 2\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-1 -2 -3 0\n";
  const auto first = parse_qdimacs(text);
  CHECK(write_qdimacs(first.formula) == text);
  const auto second = parse_qdimacs(write_qdimacs(first.formula));
  CHECK(first.formula == second.formula);
}

TEST_CASE("write handles empty matrices and empty clauses") {
  Formula empty_matrix{Prefix({{Quant::Exists, {1}}, {Quant::Forall, {2}}})};
  CHECK(write_qdimacs(empty_matrix) == "p cnf 2 0\ne 1 0\na 2 0\n");

  Formula with_empty{Prefix({{Quant::Exists, {1}}})};
  with_empty.add_clause({});
  CHECK(write_qdimacs(with_empty) == "p cnf 1 1\ne 1 0\n0\n");
}

TEST_CASE("parse-write-parse is idempotent on generated formulas") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomQbfConfig config;
    config.num_vars = 8;
    config.num_blocks = 3;
    config.num_clauses = 12;
    config.width_min = 1;
    config.width_max = 4;
    config.seed = seed;
    const Formula f = gen_random_qbf(config);
    const auto once = parse_qdimacs(write_qdimacs(f));
    CHECK(once.formula == f);
    const auto twice = parse_qdimacs(write_qdimacs(once.formula));
    CHECK(twice.formula == once.formula);
  }
}

TEST_CASE("trace lines serialize witness first") {
  const Prefix prefix =
      Prefix({{Quant::Exists, {1}}, {Quant::Forall, {3}}, {Quant::Exists, {5}}});
  std::vector<TraceEvent> events;
  events.push_back(TraceEvent{TraceEventKind::ClauseDeleted, pos(1),
                              {pos(1), pos(3), neg(5)}, PropMode::QUP});
  CHECK(write_trace(events) == "d 1 3 -5 0\n");
  (void)prefix;
}

TEST_CASE("universal literal removal lines list the survivors") {
  std::vector<TraceEvent> events;
  events.push_back(TraceEvent{TraceEventKind::UniversalLiteralDeleted, neg(2),
                              {neg(2), neg(3), neg(4)}, PropMode::QUP});
  CHECK(write_trace(events) == "u -2 -3 -4 0\n");
  CHECK(write_trace({}).empty());
}

TEST_CASE("witness-free deletions write the clause only") {
  std::vector<TraceEvent> events;
  events.push_back(TraceEvent{TraceEventKind::ClauseDeleted, std::nullopt,
                              {pos(1), neg(2)}, PropMode::UP});
  CHECK(write_trace(events) == "d 1 -2 0\n");
}

TEST_CASE("trace replay reconstructs the edits") {
  Formula f{Prefix({{Quant::Exists, {1}}, {Quant::Forall, {2}}, {Quant::Exists, {3}}})};
  f.add_clause({pos(1), pos(2), pos(3)});
  f.add_clause({neg(1), neg(3)});
  f.add_clause({pos(2), pos(3)});

  std::vector<TraceEvent> events;
  events.push_back(TraceEvent{TraceEventKind::UniversalLiteralDeleted, pos(2),
                              {pos(1), pos(2), pos(3)}, PropMode::QUP});
  events.push_back(TraceEvent{TraceEventKind::ClauseDeleted, neg(3),
                              {neg(1), neg(3)}, PropMode::QUP});

  const Formula replayed = replay_trace(f, write_trace(events));
  Formula expected{f.prefix()};
  expected.add_clause({pos(1), pos(3)});
  expected.add_clause({pos(2), pos(3)});
  CHECK(replayed == expected);

  CHECK_THROWS_AS(replay_trace(f, "d 1 0\n"), Error);
}
