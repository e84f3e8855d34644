#include "qbfredux/oracle.hpp"

#include <algorithm>
#include <cassert>

namespace qbfredux {

namespace {

std::vector<Var> occurring_variables(const Formula& f) {
  std::vector<Var> vars;
  for (ClauseId id : f.live_clause_ids())
    for (Lit l : f.clause(id)) vars.push_back(l.var());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void sort_by_prefix_order(const Prefix& prefix, std::vector<Var>& vars) {
  std::sort(vars.begin(), vars.end(), [&prefix](Var a, Var b) {
    const auto la = prefix.level_of(a);
    const auto lb = prefix.level_of(b);
    return la != lb ? la < lb : a < b;
  });
}

/// Game evaluation with incremental clause counters. A branch is decided
/// early once every clause is satisfied or some clause is falsified.
class Evaluator {
 public:
  explicit Evaluator(const Formula& f) : formula_(f) {
    order_ = occurring_variables(f);
    sort_by_prefix_order(f.prefix(), order_);
    unassigned_.assign(f.slot_count(), 0);
    true_literals_.assign(f.slot_count(), 0);
    for (ClauseId id : f.live_clause_ids()) {
      unassigned_[id] = static_cast<std::uint32_t>(f.clause(id).size());
      if (f.clause(id).empty()) contains_empty_ = true;
      ++open_;
    }
  }

  std::size_t variable_count() const { return order_.size(); }

  bool satisfiable() {
    if (contains_empty_) return false;
    return recurse(0);
  }

 private:
  bool assign(Var v, bool value) {
    bool falsified = false;
    for (ClauseId id : formula_.occurrences(Lit(v, value)))
      if (formula_.is_live(id) && ++true_literals_[id] == 1) --open_;
    for (ClauseId id : formula_.occurrences(Lit(v, !value))) {
      if (!formula_.is_live(id)) continue;
      if (--unassigned_[id] == 0 && true_literals_[id] == 0) falsified = true;
    }
    return !falsified;
  }

  void unassign(Var v, bool value) {
    for (ClauseId id : formula_.occurrences(Lit(v, value)))
      if (formula_.is_live(id) && --true_literals_[id] == 0) ++open_;
    for (ClauseId id : formula_.occurrences(Lit(v, !value)))
      if (formula_.is_live(id)) ++unassigned_[id];
  }

  bool branch(std::size_t idx, Var v, bool value) {
    const bool viable = assign(v, value);
    const bool result = viable && recurse(idx + 1);
    unassign(v, value);
    return result;
  }

  bool recurse(std::size_t idx) {
    if (open_ == 0) return true;
    if (idx == order_.size()) return false;
    const Var v = order_[idx];
    const bool first = branch(idx, v, true);
    if (formula_.prefix().quantifier_of(v) == Quant::Exists)
      return first || branch(idx, v, false);
    return first && branch(idx, v, false);
  }

  const Formula& formula_;
  std::vector<Var> order_;
  std::vector<std::uint32_t> unassigned_;
  std::vector<std::uint32_t> true_literals_;
  std::size_t open_ = 0;
  bool contains_empty_ = false;
};

}  // namespace

Verdict evaluate(const Formula& f, std::size_t variable_cap) {
  Evaluator evaluator(f);
  if (evaluator.variable_count() > variable_cap)
    throw ResourceLimitError("formula has " +
                             std::to_string(evaluator.variable_count()) +
                             " occurring variables, cap is " +
                             std::to_string(variable_cap));
  return evaluator.satisfiable() ? Verdict::Sat : Verdict::Unsat;
}

bool sat_equivalent(const Formula& a, const Formula& b, std::size_t variable_cap) {
  return evaluate(a, variable_cap) == evaluate(b, variable_cap);
}

namespace {

/// Searches for a model of the formula that falsifies the clause on some
/// path. The `need` flag tracks whether the current subtree still has to
/// contain the falsifying path; at a universal node it is discharged into
/// exactly one child.
class CounterModelSearch {
 public:
  CounterModelSearch(const Formula& f, const Clause& c) : formula_(f), clause_(c) {
    order_ = occurring_variables(f);
    for (Lit l : c) order_.push_back(l.var());
    std::sort(order_.begin(), order_.end());
    order_.erase(std::unique(order_.begin(), order_.end()), order_.end());
    sort_by_prefix_order(f.prefix(), order_);
    std::size_t universals = 0;
    std::size_t existentials = 0;
    for (Var v : order_)
      if (f.prefix().quantifier_of(v) == Quant::Forall)
        ++universals;
      else
        ++existentials;
    if (universals > 3 || existentials > 4)
      throw ResourceLimitError("tree implication check capped at 3 universal "
                               "and 4 existential variables");
    values_.assign(static_cast<std::size_t>(f.max_var()) + 1, false);
  }

  bool found(std::size_t idx, bool need) {
    if (idx == order_.size())
      return matrix_true() && (!need || !clause_true());
    const Var v = order_[idx];
    if (formula_.prefix().quantifier_of(v) == Quant::Exists)
      return with(v, true, [&] { return found(idx + 1, need); }) ||
             with(v, false, [&] { return found(idx + 1, need); });
    if (!need)
      return with(v, true, [&] { return found(idx + 1, false); }) &&
             with(v, false, [&] { return found(idx + 1, false); });
    const auto sub = [&](bool value, bool sub_need) {
      return with(v, value, [&] { return found(idx + 1, sub_need); });
    };
    return (sub(true, true) && sub(false, false)) ||
           (sub(true, false) && sub(false, true));
  }

 private:
  template <typename Fn>
  bool with(Var v, bool value, Fn&& fn) {
    values_[v] = value;
    return fn();
  }

  bool literal_true(Lit l) const { return values_[l.var()] == l.positive(); }

  bool clause_satisfied(const Clause& c) const {
    return std::any_of(c.begin(), c.end(),
                       [this](Lit l) { return literal_true(l); });
  }

  bool matrix_true() const {
    for (ClauseId id : formula_.live_clause_ids())
      if (!clause_satisfied(formula_.clause(id))) return false;
    return true;
  }

  bool clause_true() const { return clause_satisfied(clause_); }

  const Formula& formula_;
  const Clause& clause_;
  std::vector<Var> order_;
  std::vector<bool> values_;
};

}  // namespace

bool tree_implies(const Formula& f, const Clause& c) {
  CounterModelSearch search(f, c);
  return !search.found(0, true);
}

void for_each_pre_model(const Formula& f,
                        const std::function<void(const PreModel&)>& visit,
                        std::size_t decision_point_cap) {
  std::vector<Var> order;
  for (const QuantifierBlock& block : f.prefix().blocks())
    order.insert(order.end(), block.vars.begin(), block.vars.end());
  sort_by_prefix_order(f.prefix(), order);

  // One decision point per (existential variable, assignment of all
  // earlier variables); point indices are var-major, context-minor.
  std::vector<std::pair<Var, std::uint64_t>> points;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (f.prefix().quantifier_of(order[pos]) != Quant::Exists) continue;
    if (pos >= 20 ||
        points.size() + (std::uint64_t{1} << pos) > decision_point_cap)
      throw ResourceLimitError("pre-model enumeration capped at " +
                               std::to_string(decision_point_cap) +
                               " decision points");
    const std::uint64_t contexts = std::uint64_t{1} << pos;
    for (std::uint64_t ctx = 0; ctx < contexts; ++ctx)
      points.emplace_back(order[pos], ctx);
  }
  const std::uint64_t total = std::uint64_t{1} << points.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PreModel model;
    for (std::size_t k = 0; k < points.size(); ++k)
      model.choices[points[k]] = (mask >> k) & 1;
    visit(model);
  }
}

bool pre_model_is_model(const Formula& f, const PreModel& m) {
  std::vector<Var> order;
  for (const QuantifierBlock& block : f.prefix().blocks())
    order.insert(order.end(), block.vars.begin(), block.vars.end());
  sort_by_prefix_order(f.prefix(), order);
  if (order.size() > 20)
    throw ResourceLimitError("pre-model check capped at 20 variables");

  std::vector<bool> values(static_cast<std::size_t>(f.max_var()) + 1, false);
  const std::uint64_t total = std::uint64_t{1} << order.size();
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    bool consistent = true;
    for (std::size_t pos = 0; pos < order.size() && consistent; ++pos) {
      if (f.prefix().quantifier_of(order[pos]) != Quant::Exists) continue;
      const std::uint64_t context = assignment & ((std::uint64_t{1} << pos) - 1);
      const bool chosen = m.choices.at({order[pos], context});
      consistent = chosen == (((assignment >> pos) & 1) != 0);
    }
    if (!consistent) continue;
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      values[order[pos]] = ((assignment >> pos) & 1) != 0;
    for (ClauseId id : f.live_clause_ids()) {
      bool satisfied = false;
      for (Lit l : f.clause(id))
        if (values[l.var()] == l.positive()) {
          satisfied = true;
          break;
        }
      if (!satisfied) return false;
    }
  }
  return true;
}

}  // namespace qbfredux
