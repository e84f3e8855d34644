#ifndef QBFREDUX_GENERATORS_HPP_
#define QBFREDUX_GENERATORS_HPP_

#include <cstdint>

#include "qbfredux/formula.hpp"

namespace qbfredux {

/// The clause-elimination family: prefix E A E A E over 6n variables with
/// 7n clauses, built from n variable-disjoint gadgets. Quantifier-aware
/// redundancy checking collapses it entirely; the plain propositional
/// check deletes nothing.
///
/// Numbering: x_j maps to id j (1..4n), u_j to id 4n+j (1..2n).
Formula gen_phi_c(std::uint32_t n);

/// The literal-elimination family: prefix A E A E with 8n clauses. The
/// quantifier-aware check removes every occurrence of a block-1 universal
/// literal; the plain check removes none.
///
/// Numbering: x_j maps to id j (1..3n), u_j to id 3n+j (1..3n).
Formula gen_phi_l(std::uint32_t n);

/// Parity family with a doubled universal (prefix E x1..xn A z1,z2
/// E t2..tn); 2 + 8(n-1) clauses.
///
/// Numbering: x_j maps to id j, z1/z2 to n+1/n+2, t_j to id n+1+j.
Formula gen_quparity(std::uint32_t n);

/// The single-universal parity variant of gen_quparity: z replaces the
/// z1,z2 pair in prefix and clauses. Variable ids match gen_quparity with
/// z taking z1's id n+1; id n+2 is unused.
Formula gen_lqparity(std::uint32_t n);

struct RandomQbfConfig {
  std::uint32_t num_vars = 0;
  std::uint32_t num_blocks = 1;
  std::uint32_t num_clauses = 0;
  std::uint32_t width_min = 1;
  std::uint32_t width_max = 3;
  std::uint64_t seed = 0;
};

/// Deterministic in the seed. Variables 1..V are spread round-robin over
/// the blocks; blocks alternate quantifiers with the innermost block
/// existential. Clause literals are sampled without repeating a variable,
/// so no tautologies or duplicate literals arise.
Formula gen_random_qbf(const RandomQbfConfig& cfg);

}  // namespace qbfredux

#endif  // QBFREDUX_GENERATORS_HPP_
