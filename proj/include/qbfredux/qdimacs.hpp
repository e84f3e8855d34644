#ifndef QBFREDUX_QDIMACS_HPP_
#define QBFREDUX_QDIMACS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbfredux/formula.hpp"

namespace qbfredux {

struct ParseDiagnostics {
  std::vector<std::pair<std::size_t, std::string>> warnings;
  std::uint64_t dropped_tautologies = 0;
  std::uint64_t merged_duplicate_literals = 0;
  std::uint64_t freed_variables_bound = 0;
};

struct ParseResult {
  Formula formula;
  ParseDiagnostics diagnostics;
};

/// Parses QDIMACS text into a normalized formula.
///
/// Comments are skipped, adjacent same-quantifier blocks are merged,
/// duplicate literals within a clause are merged, tautological clauses are
/// dropped with a warning, and variables that occur only in clauses are
/// bound in an outermost existential block. A clause count that disagrees
/// with the header is a warning, not an error.
ParseResult parse_qdimacs(std::istream& in);
ParseResult parse_qdimacs(std::string_view text);

/// Serializes header, quantifier lines in block order, and live clauses in
/// store order with canonical literal order.
std::string write_qdimacs(const Formula& f);
void write_qdimacs(const Formula& f, std::ostream& out);

}  // namespace qbfredux

#endif  // QBFREDUX_QDIMACS_HPP_
