#include "qbfredux/propagation.hpp"

#include <algorithm>
#include <cassert>

namespace qbfredux {

Clause universal_reduce(const Prefix& prefix, const Clause& c,
                        std::uint32_t abstraction) {
  Clause reduced;
  reduced.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Lit l = c[i];
    if (i > 0 && c[i - 1].var() == l.var())
      throw Error("universal reduction of a tautological clause");
    const std::uint32_t level = prefix.level_of(l.var());
    bool removable = prefix.quantifier_of(l.var()) == Quant::Forall &&
                     level > abstraction;
    if (removable) {
      for (Lit k : c) {
        if (prefix.is_existential_under(k.var(), abstraction) &&
            prefix.level_of(k.var()) > level) {
          removable = false;
          break;
        }
      }
    }
    if (!removable) reduced.push_back(l);
  }
  return reduced;
}

Trail::Trail(const Formula& f, std::uint32_t abstraction)
    : formula_(f), abstraction_(abstraction) {
  values_.assign(static_cast<std::size_t>(f.max_var()) + 1, 0);
  open_eu_.assign(f.slot_count(), 0);
  satisfied_.assign(f.slot_count(), 0);
  const Prefix& prefix = f.prefix();
  for (ClauseId id = 0; id < f.slot_count(); ++id) {
    if (!f.is_live(id)) continue;
    std::uint32_t open = 0;
    for (Lit l : f.clause(id))
      if (prefix.is_existential_under(l.var(), abstraction_)) ++open;
    open_eu_[id] = open;
    if (open <= 1) initial_units_.push_back(id);
  }
}

std::optional<bool> Trail::value(Var v) const {
  if (v >= values_.size() || values_[v] == 0) return std::nullopt;
  return values_[v] > 0;
}

AssumeResult Trail::assume_negation(const Clause& c) {
  const Prefix& prefix = formula_.prefix();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!prefix.is_existential_under(c[i].var(), abstraction_))
      throw Error("assumption over universal variable");
    if (i > 0 && c[i - 1].var() == c[i].var()) return AssumeResult::ImmediateConflict;
  }
  for (Lit l : c) {
    const bool ok = enqueue(l.negated());
    assert(ok);  // complementary pairs were ruled out above
    (void)ok;
  }
  return AssumeResult::Assumed;
}

bool Trail::enqueue(Lit l) {
  std::int8_t& slot = values_[l.var()];
  const std::int8_t desired = l.positive() ? 1 : -1;
  if (slot == desired) return true;
  if (slot != 0) return false;
  slot = desired;
  queue_.push_back(l);
  return true;
}

void Trail::conflict(ClauseId id) {
  conflict_found_ = true;
  conflict_clause_ = id;
}

// Re-derives the clause state from current values: satisfied, conflicting
// (empty after universal reduction of the non-falsified part), unit, or
// still pending because a universal literal below the remaining
// existential support survives reduction.
void Trail::examine(ClauseId id) {
  const Prefix& prefix = formula_.prefix();
  Lit support{};
  bool has_support = false;
  std::uint32_t min_universal_level = 0;
  for (Lit l : formula_.clause(id)) {
    const std::int8_t v = values_[l.var()];
    if (v != 0) {
      if ((v > 0) == l.positive()) {
        satisfied_[id] = 1;
        return;
      }
      continue;  // falsified
    }
    if (prefix.is_existential_under(l.var(), abstraction_)) {
      if (has_support) return;  // two open literals, nothing to do yet
      has_support = true;
      support = l;
    } else {
      const std::uint32_t level = prefix.level_of(l.var());
      if (min_universal_level == 0 || level < min_universal_level)
        min_universal_level = level;
    }
  }
  if (!has_support) {
    // Only universal literals above the abstraction remain; universal
    // reduction removes them all.
    conflict(id);
    return;
  }
  // Universal literals deeper than the support are reduced away; one at a
  // smaller level keeps the clause from being unit.
  if (min_universal_level != 0 &&
      min_universal_level < prefix.level_of(support.var()))
    return;
  if (!enqueue(support)) conflict(id);
}

PropagationOutcome Trail::propagate() {
  for (ClauseId id : initial_units_) {
    if (conflict_found_) break;
    if (!satisfied_[id]) examine(id);
  }
  while (!conflict_found_ && head_ < queue_.size()) {
    const Lit l = queue_[head_++];
    for (ClauseId id : formula_.occurrences(l))
      if (formula_.is_live(id)) satisfied_[id] = 1;
    for (ClauseId id : formula_.occurrences(l.negated())) {
      if (!formula_.is_live(id) || satisfied_[id]) continue;
      if (--open_eu_[id] <= 1) {
        examine(id);
        if (conflict_found_) break;
      }
    }
  }
  PropagationOutcome outcome;
  if (conflict_found_) {
    outcome.kind = PropagationOutcome::Kind::Conflict;
    outcome.conflict_clause = conflict_clause_;
  }
  return outcome;
}

bool at_check(const Formula& f, const Clause& c) {
  Trail trail(f, static_cast<std::uint32_t>(f.prefix().block_count()));
  if (trail.assume_negation(c) == AssumeResult::ImmediateConflict) return true;
  return trail.propagate().kind == PropagationOutcome::Kind::Conflict;
}

bool qat_check(const Formula& f, const Clause& c) {
  Trail trail(f, f.prefix().max_level(c));
  if (trail.assume_negation(c) == AssumeResult::ImmediateConflict) return true;
  return trail.propagate().kind == PropagationOutcome::Kind::Conflict;
}

}  // namespace qbfredux
