#include "qbfredux/formula.hpp"

#include <algorithm>

namespace qbfredux {

namespace {
const std::vector<ClauseId> kNoOccurrences;
}  // namespace

Formula::Formula(Prefix prefix) : prefix_(std::move(prefix)) {
  occurrences_.resize(2 * (static_cast<std::size_t>(prefix_.max_var()) + 1));
}

ClauseId Formula::add_clause(Clause literals) {
  NormalizedClause normalized = normalize_clause(prefix_, std::move(literals));
  if (normalized.tautological) throw Error("tautological clause");
  const ClauseId id = static_cast<ClauseId>(slots_.size());
  for (Lit l : normalized.literals) occurrences_[l.index()].push_back(id);
  if (normalized.literals.empty()) ++live_empty_count_;
  slots_.push_back(Slot{std::move(normalized.literals), true});
  ++live_count_;
  return id;
}

void Formula::remove_clause(ClauseId id) {
  if (!is_live(id)) throw Error("remove of a clause id that is not live");
  slots_[id].live = false;
  --live_count_;
  if (slots_[id].literals.empty()) --live_empty_count_;
}

void Formula::restore_clause(ClauseId id) {
  if (id >= slots_.size()) throw Error("restore of an unknown clause id");
  if (slots_[id].live) throw Error("restore of a live clause id");
  slots_[id].live = true;
  ++live_count_;
  if (slots_[id].literals.empty()) ++live_empty_count_;
}

void Formula::remove_literal(ClauseId id, Lit l) {
  if (!is_live(id)) throw Error("literal removal from a clause that is not live");
  Clause& literals = slots_[id].literals;
  auto it = std::find(literals.begin(), literals.end(), l);
  if (it == literals.end()) throw Error("literal not in clause");
  literals.erase(it);
  auto& occ = occurrences_[l.index()];
  occ.erase(std::find(occ.begin(), occ.end(), id));
  if (literals.empty()) ++live_empty_count_;
}

const Clause& Formula::clause(ClauseId id) const {
  if (id >= slots_.size()) throw Error("unknown clause id");
  return slots_[id].literals;
}

std::vector<ClauseId> Formula::live_clause_ids() const {
  std::vector<ClauseId> ids;
  ids.reserve(live_count_);
  for (ClauseId id = 0; id < slots_.size(); ++id)
    if (slots_[id].live) ids.push_back(id);
  return ids;
}

const std::vector<ClauseId>& Formula::occurrences(Lit l) const {
  if (l.index() >= occurrences_.size()) return kNoOccurrences;
  return occurrences_[l.index()];
}

bool Formula::operator==(const Formula& other) const {
  if (!(prefix_ == other.prefix_)) return false;
  if (live_count_ != other.live_count_) return false;
  const auto mine = live_clause_ids();
  const auto theirs = other.live_clause_ids();
  for (std::size_t i = 0; i < mine.size(); ++i)
    if (slots_[mine[i]].literals != other.slots_[theirs[i]].literals)
      return false;
  return true;
}

bool Formula::check_consistency() const {
  std::size_t live = 0;
  std::size_t live_empty = 0;
  std::vector<std::vector<ClauseId>> rebuilt(occurrences_.size());
  for (ClauseId id = 0; id < slots_.size(); ++id) {
    const Slot& slot = slots_[id];
    for (std::size_t i = 0; i < slot.literals.size(); ++i) {
      if (i > 0 && !prefix_.lit_less(slot.literals[i - 1], slot.literals[i]))
        return false;
      rebuilt[slot.literals[i].index()].push_back(id);
    }
    if (slot.live) {
      ++live;
      if (slot.literals.empty()) ++live_empty;
    }
  }
  if (live != live_count_ || live_empty != live_empty_count_) return false;
  for (std::size_t idx = 0; idx < occurrences_.size(); ++idx) {
    std::vector<ClauseId> have = occurrences_[idx];
    std::sort(have.begin(), have.end());
    if (have != rebuilt[idx]) return false;
  }
  return true;
}

Formula abstract_formula(const Formula& f, std::uint32_t level) {
  Formula result(abstract_prefix(f.prefix(), level));
  for (ClauseId id : f.live_clause_ids()) result.add_clause(f.clause(id));
  return result;
}

}  // namespace qbfredux
