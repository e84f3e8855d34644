#include "qbfredux/trace.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace qbfredux {

void write_trace(const std::vector<TraceEvent>& events, std::ostream& out) {
  for (const TraceEvent& event : events) {
    if (event.kind == TraceEventKind::ClauseDeleted) {
      out << 'd';
      if (event.witness) out << ' ' << event.witness->to_dimacs();
      for (Lit l : event.clause)
        if (!event.witness || l != *event.witness) out << ' ' << l.to_dimacs();
    } else {
      out << 'u' << ' ' << event.witness->to_dimacs();
      for (Lit l : event.clause)
        if (l != *event.witness) out << ' ' << l.to_dimacs();
    }
    out << " 0\n";
  }
}

std::string write_trace(const std::vector<TraceEvent>& events) {
  std::ostringstream out;
  write_trace(events, out);
  return out.str();
}

namespace {

struct ReplayStep {
  TraceEventKind kind;
  Lit removed;    // UniversalLiteralDeleted only
  Clause clause;  // full clause content to match, canonical order
};

std::vector<ReplayStep> parse_steps(const Prefix& prefix, std::string_view text) {
  std::vector<ReplayStep> steps;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    std::istringstream in{std::string(line)};
    std::string head;
    if (!(in >> head)) continue;
    if (head != "d" && head != "u")
      throw ParseError(line_number, "unknown trace line kind '" + head + "'");
    std::vector<int> numbers;
    int value = 0;
    while (in >> value) numbers.push_back(value);
    if (numbers.empty() || numbers.back() != 0)
      throw ParseError(line_number, "trace line not terminated by 0");
    numbers.pop_back();
    ReplayStep step;
    Clause literals;
    for (int n : numbers) literals.push_back(Lit::from_dimacs(n));
    if (head == "u") {
      if (literals.empty())
        throw ParseError(line_number, "literal removal without a literal");
      step.kind = TraceEventKind::UniversalLiteralDeleted;
      step.removed = literals.front();
    } else {
      step.kind = TraceEventKind::ClauseDeleted;
    }
    step.clause = normalize_clause(prefix, std::move(literals)).literals;
    steps.push_back(std::move(step));
  }
  return steps;
}

ClauseId find_live_clause(const Formula& f, const Clause& content) {
  for (ClauseId id = 0; id < f.slot_count(); ++id)
    if (f.is_live(id) && f.clause(id) == content) return id;
  throw Error("trace replay: no live clause matches a step");
}

}  // namespace

Formula replay_trace(const Formula& input, std::string_view trace_text) {
  Formula f = input;
  for (const ReplayStep& step : parse_steps(f.prefix(), trace_text)) {
    const ClauseId id = find_live_clause(f, step.clause);
    if (step.kind == TraceEventKind::ClauseDeleted)
      f.remove_clause(id);
    else
      f.remove_literal(id, step.removed);
  }
  return f;
}

}  // namespace qbfredux
