#ifndef QBFREDUX_PREFIX_HPP_
#define QBFREDUX_PREFIX_HPP_

#include <cstdint>
#include <vector>

#include "qbfredux/types.hpp"

namespace qbfredux {

struct QuantifierBlock {
  Quant quant = Quant::Exists;
  std::vector<Var> vars;

  bool operator==(const QuantifierBlock&) const = default;
};

/// A quantifier prefix: alternating blocks of equally quantified variables.
/// Block levels are 1-based positions. The variable order used everywhere
/// is (level, id), extended to literals by putting the positive literal of
/// a variable before the negative one.
class Prefix {
 public:
  Prefix() = default;

  /// Builds a prefix from blocks as listed. Adjacent blocks with the same
  /// quantifier are merged into one and every block is sorted by ascending
  /// variable id. Throws if a block is empty or a variable repeats.
  explicit Prefix(std::vector<QuantifierBlock> blocks);

  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<QuantifierBlock>& blocks() const { return blocks_; }
  Var max_var() const { return max_var_; }
  std::size_t var_count() const { return var_count_; }

  bool contains(Var v) const {
    return v < level_by_var_.size() && level_by_var_[v] != 0;
  }

  /// 1-based level of the block containing v. Throws on unknown variables.
  std::uint32_t level_of(Var v) const;
  Quant quantifier_of(Var v) const;

  /// True iff v is existential or sits in a block at or before the given
  /// abstraction level (converting it into an existential one).
  bool is_existential_under(Var v, std::uint32_t abstraction) const {
    return level_of(v) <= abstraction || quantifier_of(v) == Quant::Exists;
  }

  /// The prefix order on literals: (level, id) lexicographically.
  bool lit_leq(Lit l, Lit k) const;
  /// Strict total order used for canonical clause layout: (level, id,
  /// polarity) with the positive literal first.
  bool lit_less(Lit l, Lit k) const;

  /// Sorted set of block levels touched by the clause.
  std::vector<std::uint32_t> levels_of(const Clause& c) const;
  /// Maximum level in the clause; 0 for the empty clause.
  std::uint32_t max_level(const Clause& c) const;

  bool operator==(const Prefix&) const = default;

 private:
  std::vector<QuantifierBlock> blocks_;
  std::vector<std::uint32_t> level_by_var_;  // indexed by id, 0 = absent
  Var max_var_ = 0;
  std::size_t var_count_ = 0;
};

/// Merges blocks 1..level into one leading existential block (variables
/// sorted by ascending id) and keeps the remaining blocks. Level 0 is the
/// identity. Throws if level exceeds the block count.
Prefix abstract_prefix(const Prefix& prefix, std::uint32_t level);

struct NormalizedClause {
  Clause literals;
  bool tautological = false;
  std::uint32_t duplicates_merged = 0;
};

/// Sorts into canonical order and merges duplicate literals. Complementary
/// pairs are kept and flagged. Throws if a variable is not in the prefix.
NormalizedClause normalize_clause(const Prefix& prefix, Clause literals);

}  // namespace qbfredux

#endif  // QBFREDUX_PREFIX_HPP_
