#ifndef QBFREDUX_TRACE_HPP_
#define QBFREDUX_TRACE_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbfredux/formula.hpp"

namespace qbfredux {

/// Propagation flavor that justified an elimination step.
enum class PropMode : std::uint8_t { UP, QUP };

enum class TraceEventKind : std::uint8_t { ClauseDeleted, UniversalLiteralDeleted };

/// One elimination step.
///
/// For ClauseDeleted the witness is the existential pivot, or absent when
/// the clause was removed by the direct implication check; `clause` is the
/// clause as it stood at deletion time. For UniversalLiteralDeleted the
/// witness is the removed universal literal and `clause` the clause before
/// the removal.
struct TraceEvent {
  TraceEventKind kind = TraceEventKind::ClauseDeleted;
  std::optional<Lit> witness;
  Clause clause;
  PropMode mode = PropMode::UP;
};

/// Text form, one line per event:
///   "d w l1 ... lk 0"  clause deletion, witness literal first
///   "d l1 ... lk 0"    witness-free clause deletion
///   "u w l1 ... lk 0"  universal literal w removed, survivors follow
std::string write_trace(const std::vector<TraceEvent>& events);
void write_trace(const std::vector<TraceEvent>& events, std::ostream& out);

/// Applies a textual trace to a copy of `input`: deletes each listed clause
/// (matched by literal content among live clauses, lowest id first) and
/// removes listed universal literals. Throws if a step has no match.
Formula replay_trace(const Formula& input, std::string_view trace_text);

}  // namespace qbfredux

#endif  // QBFREDUX_TRACE_HPP_
