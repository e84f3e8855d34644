#include "qbfredux/prefix.hpp"

#include <algorithm>

namespace qbfredux {

Prefix::Prefix(std::vector<QuantifierBlock> blocks) {
  for (auto& block : blocks) {
    if (block.vars.empty()) throw Error("empty quantifier block");
    if (!blocks_.empty() && blocks_.back().quant == block.quant) {
      auto& dst = blocks_.back().vars;
      dst.insert(dst.end(), block.vars.begin(), block.vars.end());
    } else {
      blocks_.push_back(std::move(block));
    }
  }
  std::uint32_t level = 0;
  for (auto& block : blocks_) {
    ++level;
    std::sort(block.vars.begin(), block.vars.end());
    for (Var v : block.vars) {
      if (v == 0) throw Error("variable 0 in prefix");
      if (v >= level_by_var_.size()) level_by_var_.resize(v + 1, 0);
      if (level_by_var_[v] != 0)
        throw Error("variable " + std::to_string(v) + " quantified twice");
      level_by_var_[v] = level;
      max_var_ = std::max(max_var_, v);
      ++var_count_;
    }
  }
}

std::uint32_t Prefix::level_of(Var v) const {
  if (!contains(v))
    throw Error("variable " + std::to_string(v) + " not in prefix");
  return level_by_var_[v];
}

Quant Prefix::quantifier_of(Var v) const {
  return blocks_[level_of(v) - 1].quant;
}

bool Prefix::lit_leq(Lit l, Lit k) const {
  const std::uint32_t ll = level_of(l.var());
  const std::uint32_t lk = level_of(k.var());
  if (ll != lk) return ll < lk;
  return l.var() <= k.var();
}

bool Prefix::lit_less(Lit l, Lit k) const {
  const std::uint32_t ll = level_of(l.var());
  const std::uint32_t lk = level_of(k.var());
  if (ll != lk) return ll < lk;
  if (l.var() != k.var()) return l.var() < k.var();
  return l.positive() && !k.positive();
}

std::vector<std::uint32_t> Prefix::levels_of(const Clause& c) const {
  std::vector<std::uint32_t> levels;
  levels.reserve(c.size());
  for (Lit l : c) levels.push_back(level_of(l.var()));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

std::uint32_t Prefix::max_level(const Clause& c) const {
  std::uint32_t maximum = 0;
  for (Lit l : c) maximum = std::max(maximum, level_of(l.var()));
  return maximum;
}

Prefix abstract_prefix(const Prefix& prefix, std::uint32_t level) {
  if (level > prefix.block_count())
    throw Error("abstraction level " + std::to_string(level) +
                " exceeds block count");
  if (level == 0) return prefix;
  std::vector<QuantifierBlock> blocks;
  QuantifierBlock merged{Quant::Exists, {}};
  for (std::uint32_t i = 0; i < level; ++i) {
    const auto& vars = prefix.blocks()[i].vars;
    merged.vars.insert(merged.vars.end(), vars.begin(), vars.end());
  }
  blocks.push_back(std::move(merged));
  for (std::size_t i = level; i < prefix.block_count(); ++i)
    blocks.push_back(prefix.blocks()[i]);
  return Prefix(std::move(blocks));
}

NormalizedClause normalize_clause(const Prefix& prefix, Clause literals) {
  NormalizedClause result;
  for (Lit l : literals) prefix.level_of(l.var());  // reject unknown variables
  std::sort(literals.begin(), literals.end(),
            [&prefix](Lit a, Lit b) { return prefix.lit_less(a, b); });
  for (Lit l : literals) {
    if (!result.literals.empty()) {
      const Lit last = result.literals.back();
      if (last == l) {
        ++result.duplicates_merged;
        continue;
      }
      if (last.var() == l.var()) result.tautological = true;
    }
    result.literals.push_back(l);
  }
  return result;
}

}  // namespace qbfredux
