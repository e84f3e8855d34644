#include "qbfredux/qdimacs.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace qbfredux {

namespace {

struct Tokenizer {
  explicit Tokenizer(std::istream& stream) : in(stream) {}

  std::istream& in;
  std::string line;
  std::vector<std::string_view> tokens;
  std::size_t line_number = 0;

  bool next_line() {
    while (std::getline(in, line)) {
      ++line_number;
      tokens.clear();
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos > start) tokens.emplace_back(&line[start], pos - start);
      }
      if (tokens.empty()) continue;
      if (tokens[0][0] == 'c') continue;  // comment line
      return true;
    }
    return false;
  }
};

long long to_number(const Tokenizer& tz, std::string_view token) {
  long long value = 0;
  const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
  if (result.ec != std::errc() || result.ptr != token.data() + token.size())
    throw ParseError(tz.line_number, "invalid token '" + std::string(token) + "'");
  return value;
}

}  // namespace

ParseResult parse_qdimacs(std::istream& in) {
  Tokenizer tz{in};
  ParseDiagnostics diagnostics;

  if (!tz.next_line()) throw ParseError(tz.line_number, "missing header");
  if (tz.tokens.size() != 4 || tz.tokens[0] != "p" || tz.tokens[1] != "cnf")
    throw ParseError(tz.line_number, "malformed header");
  const long long declared_max_var = to_number(tz, tz.tokens[2]);
  const long long declared_clauses = to_number(tz, tz.tokens[3]);
  if (declared_max_var < 0 || declared_clauses < 0 ||
      declared_max_var > std::numeric_limits<int>::max())
    throw ParseError(tz.line_number, "malformed header");

  std::vector<QuantifierBlock> blocks;
  std::vector<std::pair<std::size_t, Clause>> raw_clauses;  // (start line, lits)
  std::set<Var> quantified;
  Clause pending;
  std::size_t pending_line = 0;
  bool in_clause_section = false;

  while (tz.next_line()) {
    const std::string_view head = tz.tokens[0];
    if (head == "a" || head == "e") {
      if (in_clause_section || !pending.empty())
        throw ParseError(tz.line_number, "quantifier line after clauses");
      QuantifierBlock block;
      block.quant = head == "a" ? Quant::Forall : Quant::Exists;
      bool terminated = false;
      for (std::size_t i = 1; i < tz.tokens.size(); ++i) {
        const long long value = to_number(tz, tz.tokens[i]);
        if (value == 0) {
          if (i + 1 != tz.tokens.size())
            throw ParseError(tz.line_number, "literal 0 inside quantifier line");
          terminated = true;
          break;
        }
        if (value < 0)
          throw ParseError(tz.line_number, "negative variable in quantifier line");
        if (value > declared_max_var)
          throw ParseError(tz.line_number,
                           "variable " + std::to_string(value) +
                               " exceeds declared maximum");
        const Var v = static_cast<Var>(value);
        if (!quantified.insert(v).second)
          throw ParseError(tz.line_number,
                           "variable " + std::to_string(v) + " quantified twice");
        block.vars.push_back(v);
      }
      if (!terminated)
        throw ParseError(tz.line_number, "quantifier line not terminated by 0");
      if (block.vars.empty())
        throw ParseError(tz.line_number, "empty quantifier block");
      blocks.push_back(std::move(block));
      continue;
    }
    in_clause_section = true;
    for (std::string_view token : tz.tokens) {
      const long long value = to_number(tz, token);
      if (value == 0) {
        raw_clauses.emplace_back(pending_line == 0 ? tz.line_number : pending_line,
                                 std::move(pending));
        pending.clear();
        pending_line = 0;
        continue;
      }
      if (std::llabs(value) > declared_max_var)
        throw ParseError(tz.line_number, "variable " + std::to_string(std::llabs(value)) +
                                             " exceeds declared maximum");
      if (pending.empty()) pending_line = tz.line_number;
      pending.push_back(Lit::from_dimacs(static_cast<int>(value)));
    }
  }
  if (!pending.empty()) throw ParseError(tz.line_number, "unterminated clause");

  // Variables occurring only in clauses are bound in a fresh outermost
  // existential block; the prefix constructor merges it with a leading
  // existential block when present.
  std::set<Var> free_vars;
  for (const auto& [line, literals] : raw_clauses)
    for (Lit l : literals)
      if (!quantified.count(l.var())) free_vars.insert(l.var());
  if (!free_vars.empty()) {
    diagnostics.freed_variables_bound = free_vars.size();
    diagnostics.warnings.emplace_back(
        0, std::to_string(free_vars.size()) +
               " free variable(s) bound in an outermost existential block");
    QuantifierBlock block{Quant::Exists, {free_vars.begin(), free_vars.end()}};
    blocks.insert(blocks.begin(), std::move(block));
  }

  Formula formula{Prefix(std::move(blocks))};
  for (auto& [line, literals] : raw_clauses) {
    NormalizedClause normalized = normalize_clause(formula.prefix(), std::move(literals));
    if (normalized.duplicates_merged > 0) {
      diagnostics.merged_duplicate_literals += normalized.duplicates_merged;
      diagnostics.warnings.emplace_back(line, "duplicate literals merged");
    }
    if (normalized.tautological) {
      ++diagnostics.dropped_tautologies;
      diagnostics.warnings.emplace_back(line, "tautological clause dropped");
      continue;
    }
    formula.add_clause(std::move(normalized.literals));
  }

  if (static_cast<long long>(raw_clauses.size()) != declared_clauses)
    diagnostics.warnings.emplace_back(
        0, "header declares " + std::to_string(declared_clauses) + " clauses but " +
               std::to_string(raw_clauses.size()) + " were read");

  return ParseResult{std::move(formula), std::move(diagnostics)};
}

ParseResult parse_qdimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qdimacs(in);
}

void write_qdimacs(const Formula& f, std::ostream& out) {
  out << "p cnf " << f.max_var() << ' ' << f.live_clause_count() << '\n';
  for (const QuantifierBlock& block : f.prefix().blocks()) {
    out << (block.quant == Quant::Forall ? 'a' : 'e');
    for (Var v : block.vars) out << ' ' << v;
    out << " 0\n";
  }
  for (ClauseId id : f.live_clause_ids()) {
    for (Lit l : f.clause(id)) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string write_qdimacs(const Formula& f) {
  std::ostringstream out;
  write_qdimacs(f, out);
  return out.str();
}

}  // namespace qbfredux
