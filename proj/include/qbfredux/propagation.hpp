#ifndef QBFREDUX_PROPAGATION_HPP_
#define QBFREDUX_PROPAGATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qbfredux/formula.hpp"

namespace qbfredux {

/// Universal reduction at an abstraction level: removes every universal
/// literal above the level that has no existential-under-abstraction
/// literal at a deeper level in the clause. Level 0 is plain universal
/// reduction. Throws on tautological input.
Clause universal_reduce(const Prefix& prefix, const Clause& c,
                        std::uint32_t abstraction);

enum class AssumeResult : std::uint8_t { Assumed, ImmediateConflict };

struct PropagationOutcome {
  enum class Kind : std::uint8_t { FixedPoint, Conflict };
  Kind kind = Kind::FixedPoint;
  std::optional<ClauseId> conflict_clause;
};

/// Unit propagation state over one formula at a fixed abstraction level.
///
/// Propagation assigns only variables that are existential under the
/// abstraction; universal literals above the level are handled by lazy
/// universal reduction when a clause runs out of other support. At
/// abstraction level block_count() this is exactly propositional unit
/// propagation.
///
/// A trail is single use: construct, assume a negated clause, propagate.
class Trail {
 public:
  Trail(const Formula& f, std::uint32_t abstraction);

  std::uint32_t abstraction() const { return abstraction_; }

  /// Enqueues the complement of every literal of c as an assumption.
  /// Returns ImmediateConflict iff c contains complementary literals.
  /// Throws if a variable of c is not existential under the abstraction.
  AssumeResult assume_negation(const Clause& c);

  PropagationOutcome propagate();

  std::optional<bool> value(Var v) const;
  /// Assignments in the order they were made (assumptions first).
  const std::vector<Lit>& assignments() const { return queue_; }

 private:
  bool enqueue(Lit l);          // false on contradiction with the trail
  void examine(ClauseId id);    // clause lost existential support
  void conflict(ClauseId id);

  const Formula& formula_;
  std::uint32_t abstraction_;
  std::vector<std::int8_t> values_;       // by var: 0 unassigned, +1, -1
  std::vector<Lit> queue_;
  std::size_t head_ = 0;
  std::vector<std::uint32_t> open_eu_;    // per slot: non-falsified eu literals
  std::vector<std::uint8_t> satisfied_;   // per slot
  std::vector<ClauseId> initial_units_;   // slots starting with open_eu <= 1
  bool conflict_found_ = false;
  ClauseId conflict_clause_ = 0;
};

/// Asymmetric tautology: the clause's negation propagates to a conflict
/// under the full abstraction (plain unit propagation).
bool at_check(const Formula& f, const Clause& c);

/// Quantified asymmetric tautology: propagation with universal reduction
/// at the abstraction level given by the clause's maximum nesting level.
bool qat_check(const Formula& f, const Clause& c);

}  // namespace qbfredux

#endif  // QBFREDUX_PROPAGATION_HPP_
