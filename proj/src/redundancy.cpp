#include "qbfredux/redundancy.hpp"

#include <algorithm>
#include <iterator>

#include "qbfredux/propagation.hpp"

namespace qbfredux {

Deadline Deadline::in_seconds(double seconds) {
  Deadline deadline;
  deadline.at_ = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
  return deadline;
}

bool Deadline::expired() const {
  return at_ && std::chrono::steady_clock::now() >= *at_;
}

Clause outer_clause(const Prefix& prefix, const Clause& c, Lit l) {
  if (std::find(c.begin(), c.end(), l) == c.end())
    throw Error("literal not in clause");
  Clause outer;
  for (Lit k : c)
    if (k != l && prefix.lit_leq(k, l)) outer.push_back(k);
  return outer;
}

OuterResolvent outer_resolvent(const Prefix& prefix, const Clause& c,
                               const Clause& d, Lit l) {
  if (std::find(c.begin(), c.end(), l) == c.end())
    throw Error("pivot literal not in clause");
  if (std::find(d.begin(), d.end(), l.negated()) == d.end())
    throw Error("complement of pivot not in second clause");
  Clause joined = outer_clause(prefix, d, l.negated());
  for (Lit k : c)
    if (k != l) joined.push_back(k);
  NormalizedClause normalized = normalize_clause(prefix, std::move(joined));
  return OuterResolvent{std::move(normalized.literals), normalized.tautological};
}

namespace {

bool passes_check(const Formula& f, const Clause& c, Mode mode,
                  EliminationStats* stats) {
  if (stats) ++stats->propagation_calls;
  return mode == Mode::Qrat ? at_check(f, c) : qat_check(f, c);
}

}  // namespace

bool has_redundancy(const Formula& f, const Clause& c, Lit l, Mode mode,
                    EliminationStats* stats) {
  if (std::find(c.begin(), c.end(), l) == c.end())
    throw Error("pivot literal not in clause");
  if (stats) ++stats->redundancy_checks;
  for (ClauseId id : f.occurrences(l.negated())) {
    if (!f.is_live(id)) continue;
    OuterResolvent resolvent = outer_resolvent(f.prefix(), c, f.clause(id), l);
    if (resolvent.tautological) continue;
    if (!passes_check(f, resolvent.literals, mode, stats)) return false;
  }
  return true;
}

bool clause_implied(const Formula& f, const Clause& c, Mode mode,
                    EliminationStats* stats) {
  if (stats) ++stats->redundancy_checks;
  return passes_check(f, c, mode, stats);
}

namespace {

PropMode prop_mode(Mode mode) {
  return mode == Mode::Qrat ? PropMode::UP : PropMode::QUP;
}

}  // namespace

PassResult qrate_pass(Formula& f, Mode mode, const Deadline& deadline,
                      EliminationStats* stats) {
  PassResult result;
  const Prefix& prefix = f.prefix();
  for (ClauseId id = 0; id < f.slot_count(); ++id) {
    if (!f.is_live(id)) continue;
    if (deadline.expired()) {
      result.hit_deadline = true;
      break;
    }
    const Clause candidate = f.clause(id);
    f.remove_clause(id);
    std::optional<Lit> witness;
    bool deleted = false;
    if (clause_implied(f, candidate, mode, stats)) {
      deleted = true;
    } else {
      for (Lit l : candidate) {
        if (prefix.quantifier_of(l.var()) != Quant::Exists) continue;
        if (has_redundancy(f, candidate, l, mode, stats)) {
          deleted = true;
          witness = l;
          break;
        }
      }
    }
    if (deleted) {
      result.events.push_back(
          TraceEvent{TraceEventKind::ClauseDeleted, witness, candidate,
                     prop_mode(mode)});
      result.changed = true;
      if (stats) ++stats->clauses_deleted;
    } else {
      f.restore_clause(id);
    }
  }
  return result;
}

PassResult qratu_pass(Formula& f, Mode mode, const Deadline& deadline,
                      EliminationStats* stats) {
  PassResult result;
  const Prefix& prefix = f.prefix();
  for (ClauseId id = 0; id < f.slot_count(); ++id) {
    if (!f.is_live(id)) continue;
    std::size_t index = 0;
    while (index < f.clause(id).size()) {
      const Lit l = f.clause(id)[index];
      if (prefix.quantifier_of(l.var()) != Quant::Forall) {
        ++index;
        continue;
      }
      if (deadline.expired()) {
        result.hit_deadline = true;
        return result;
      }
      const Clause candidate = f.clause(id);
      f.remove_clause(id);
      const bool redundant = has_redundancy(f, candidate, l, mode, stats);
      f.restore_clause(id);
      if (redundant) {
        result.events.push_back(TraceEvent{
            TraceEventKind::UniversalLiteralDeleted, l, candidate,
            prop_mode(mode)});
        f.remove_literal(id, l);
        result.changed = true;
        if (stats) ++stats->universal_literals_deleted;
        // index now points at the literal after l
      } else {
        ++index;
      }
    }
  }
  return result;
}

PassResult ur_pass(Formula& f) {
  PassResult result;
  for (ClauseId id = 0; id < f.slot_count(); ++id) {
    if (!f.is_live(id)) continue;
    const Clause reduced = universal_reduce(f.prefix(), f.clause(id), 0);
    if (reduced.size() == f.clause(id).size()) continue;
    Clause removed;
    std::set_difference(f.clause(id).begin(), f.clause(id).end(),
                        reduced.begin(), reduced.end(),
                        std::back_inserter(removed),
                        [&f](Lit a, Lit b) { return f.prefix().lit_less(a, b); });
    for (Lit l : removed) {
      result.events.push_back(TraceEvent{TraceEventKind::UniversalLiteralDeleted,
                                         l, f.clause(id), PropMode::QUP});
      f.remove_literal(id, l);
    }
    result.changed = true;
  }
  return result;
}

PreprocessResult preprocess(const Formula& input, const PreprocessConfig& cfg) {
  if (!cfg.enable_qrate && !cfg.enable_qratu && !cfg.enable_ur_pass)
    throw Error("no elimination rule enabled");
  PreprocessResult result;
  result.formula = input;
  Formula& f = result.formula;
  EliminationStats& stats = result.stats;
  const Deadline deadline = cfg.soft_timeout_seconds > 0
                                ? Deadline::in_seconds(cfg.soft_timeout_seconds)
                                : Deadline::unlimited();

  while (true) {
    if (cfg.max_rounds != 0 && stats.rounds >= cfg.max_rounds) break;
    if (deadline.expired()) {
      stats.timed_out = true;
      break;
    }
    ++stats.rounds;
    bool changed = false;
    bool hit_deadline = false;
    const auto run = [&](PassResult pass) {
      changed |= pass.changed;
      hit_deadline |= pass.hit_deadline;
      for (TraceEvent& event : pass.events)
        result.trace.push_back(std::move(event));
    };
    if (cfg.enable_ur_pass) {
      PassResult pass = ur_pass(f);
      stats.universal_literals_deleted += pass.events.size();
      run(std::move(pass));
    }
    if (cfg.enable_qrate && !hit_deadline)
      run(qrate_pass(f, cfg.mode, deadline, &stats));
    if (cfg.enable_qratu && !hit_deadline)
      run(qratu_pass(f, cfg.mode, deadline, &stats));
    if (hit_deadline) {
      stats.timed_out = true;
      break;
    }
    if (!changed) break;
  }
  stats.empty_clause = f.has_empty_clause();
  return result;
}

}  // namespace qbfredux
