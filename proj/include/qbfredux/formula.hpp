#ifndef QBFREDUX_FORMULA_HPP_
#define QBFREDUX_FORMULA_HPP_

#include <cstdint>
#include <vector>

#include "qbfredux/prefix.hpp"
#include "qbfredux/types.hpp"

namespace qbfredux {

/// A closed PCNF formula: prefix, clause store with stable ids, and a
/// per-literal occurrence index.
///
/// Clause removal is logical: the slot keeps its literals and its entries
/// in the occurrence index, so removal and restoration are O(1). Consumers
/// iterating occurrence lists skip ids that are not live.
class Formula {
 public:
  Formula() = default;
  explicit Formula(Prefix prefix);

  const Prefix& prefix() const { return prefix_; }
  Var max_var() const { return prefix_.max_var(); }

  /// Normalizes (canonical order, duplicates merged) and stores the clause.
  /// Throws if the clause is tautological or not closed under the prefix.
  ClauseId add_clause(Clause literals);

  /// Logical removal; the id stays valid for clause() and restore_clause().
  void remove_clause(ClauseId id);
  void restore_clause(ClauseId id);

  /// Removes one literal from a live clause, keeping canonical order and
  /// the occurrence index consistent.
  void remove_literal(ClauseId id, Lit l);

  bool is_live(ClauseId id) const { return id < slots_.size() && slots_[id].live; }
  const Clause& clause(ClauseId id) const;

  std::size_t slot_count() const { return slots_.size(); }
  std::size_t live_clause_count() const { return live_count_; }
  std::vector<ClauseId> live_clause_ids() const;
  bool has_empty_clause() const { return live_empty_count_ > 0; }

  /// Ids of clauses whose stored literals contain l, live or removed.
  const std::vector<ClauseId>& occurrences(Lit l) const;

  /// Structural equality: same prefix and same live clause sequence.
  bool operator==(const Formula& other) const;

  /// Verifies the occurrence index against a full rebuild, the canonical
  /// order of every clause, and the live counters.
  bool check_consistency() const;

 private:
  struct Slot {
    Clause literals;
    bool live = true;
  };

  Prefix prefix_;
  std::vector<Slot> slots_;
  std::vector<std::vector<ClauseId>> occurrences_;
  std::size_t live_count_ = 0;
  std::size_t live_empty_count_ = 0;
};

/// The formula with prefix blocks 1..level merged into one leading
/// existential block; clauses carry over unchanged as literal sets but are
/// re-sorted into the abstracted prefix's canonical order.
Formula abstract_formula(const Formula& f, std::uint32_t level);

}  // namespace qbfredux

#endif  // QBFREDUX_FORMULA_HPP_
