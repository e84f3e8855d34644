#ifndef QBFREDUX_REDUNDANCY_HPP_
#define QBFREDUX_REDUNDANCY_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qbfredux/formula.hpp"
#include "qbfredux/trace.hpp"

namespace qbfredux {

/// Which propagation backs the redundancy checks: plain unit propagation
/// or the quantifier-aware variant running on a prefix abstraction.
enum class Mode : std::uint8_t { Qrat, QratPlus };

struct EliminationStats {
  std::uint64_t clauses_deleted = 0;
  std::uint64_t universal_literals_deleted = 0;
  std::uint64_t redundancy_checks = 0;   // candidate-level checks
  std::uint64_t propagation_calls = 0;   // propagation queries issued
  std::uint64_t rounds = 0;
  bool timed_out = false;
  bool empty_clause = false;  // output contains the empty clause
};

struct PreprocessConfig {
  Mode mode = Mode::QratPlus;
  bool enable_qrate = true;
  bool enable_qratu = true;
  bool enable_ur_pass = false;
  double soft_timeout_seconds = 0;  // 0 = unlimited
  std::uint32_t max_rounds = 0;     // 0 = until fixed point
};

/// Soft deadline, checked between candidate checks only.
class Deadline {
 public:
  static Deadline unlimited() { return Deadline{}; }
  static Deadline in_seconds(double seconds);
  bool expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Literals of c at or before l's position in the prefix order, excluding
/// l itself. Throws if l is not in c.
Clause outer_clause(const Prefix& prefix, const Clause& c, Lit l);

struct OuterResolvent {
  Clause literals;  // canonical order, duplicates merged
  bool tautological = false;
};

/// (c minus l) joined with the outer clause of d on the complement of l.
/// Requires l in c and its complement in d.
OuterResolvent outer_resolvent(const Prefix& prefix, const Clause& c,
                               const Clause& d, Lit l);

/// True iff every outer resolvent of c on l with a live clause of f is
/// tautological or passes the mode's propagation check. The candidate c
/// must not be live in f's store.
bool has_redundancy(const Formula& f, const Clause& c, Lit l, Mode mode,
                    EliminationStats* stats = nullptr);

/// Direct implication check of c against f per the mode; a true result
/// licenses deleting c outright. The candidate must not be live in f.
bool clause_implied(const Formula& f, const Clause& c, Mode mode,
                    EliminationStats* stats = nullptr);

struct PassResult {
  std::vector<TraceEvent> events;
  bool changed = false;
  bool hit_deadline = false;
};

/// One sweep over live clauses in ascending id order. Each candidate is
/// removed for its own check; it is deleted permanently when directly
/// implied (witness-free event) or when some existential literal passes
/// the redundancy check (that literal is the recorded witness).
PassResult qrate_pass(Formula& f, Mode mode, const Deadline& deadline,
                      EliminationStats* stats = nullptr);

/// One sweep removing redundant universal literals. Literals of a clause
/// are tried in canonical order; the clause keeps shrinking in place.
PassResult qratu_pass(Formula& f, Mode mode, const Deadline& deadline,
                      EliminationStats* stats = nullptr);

/// Applies plain universal reduction to every live clause.
PassResult ur_pass(Formula& f);

struct PreprocessResult {
  Formula formula;
  std::vector<TraceEvent> trace;
  EliminationStats stats;
};

/// Rounds of [ur] -> qrate -> qratu until no pass changes the formula,
/// the round limit is reached, or the soft deadline fires (the partially
/// reduced formula is returned with timed_out set).
PreprocessResult preprocess(const Formula& input, const PreprocessConfig& cfg);

}  // namespace qbfredux

#endif  // QBFREDUX_REDUNDANCY_HPP_
