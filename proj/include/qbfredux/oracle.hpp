#ifndef QBFREDUX_ORACLE_HPP_
#define QBFREDUX_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "qbfredux/formula.hpp"

namespace qbfredux {

enum class Verdict : std::uint8_t { Sat, Unsat };

inline constexpr std::size_t kDefaultVariableCap = 24;

/// Brute-force game evaluation over the assignment tree: existential nodes
/// are disjunctions of their children, universal nodes conjunctions, leaves
/// the truth of the matrix. Variables without occurrences are skipped; the
/// cap applies to the occurring variables.
Verdict evaluate(const Formula& f, std::size_t variable_cap = kDefaultVariableCap);

bool sat_equivalent(const Formula& a, const Formula& b,
                    std::size_t variable_cap = kDefaultVariableCap);

/// True iff every tree model of the formula also satisfies the clause on
/// all of its paths. Capped at 3 universal and 4 existential variables
/// (over the formula's occurring variables plus the clause's).
bool tree_implies(const Formula& f, const Clause& c);

/// A choice of one child per existential decision point: the key pairs the
/// existential variable with the assignment of all earlier prefix
/// variables, encoded as a bitmask in (level, id) order (bit k set = k-th
/// earlier variable true).
struct PreModel {
  std::map<std::pair<Var, std::uint64_t>, bool> choices;
};

/// Enumerates every pre-model of the formula (all choice functions over
/// all existential decision points). Intended for tiny regression checks;
/// throws once the number of decision points exceeds the cap.
void for_each_pre_model(const Formula& f,
                        const std::function<void(const PreModel&)>& visit,
                        std::size_t decision_point_cap = 12);

/// True iff every complete assignment consistent with the pre-model
/// satisfies the matrix.
bool pre_model_is_model(const Formula& f, const PreModel& m);

}  // namespace qbfredux

#endif  // QBFREDUX_ORACLE_HPP_
