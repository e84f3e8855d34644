#ifndef QBFREDUX_TYPES_HPP_
#define QBFREDUX_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbfredux {

/// External variable id, 1-based as in QDIMACS.
using Var = std::uint32_t;

enum class Quant : std::uint8_t { Exists, Forall };

/// A signed variable reference. Encoded as 2*var for positive and 2*var+1
/// for negative polarity so that literals index occurrence tables directly.
class Lit {
 public:
  Lit() = default;
  Lit(Var v, bool positive) : code_(2 * v + (positive ? 0u : 1u)) {}

  /// Builds a literal from a signed DIMACS integer. Throws on 0.
  static Lit from_dimacs(int value);

  Var var() const { return code_ >> 1; }
  bool positive() const { return (code_ & 1u) == 0; }
  Lit negated() const {
    Lit l;
    l.code_ = code_ ^ 1u;
    return l;
  }
  int to_dimacs() const {
    return positive() ? static_cast<int>(var()) : -static_cast<int>(var());
  }
  /// Dense index for occurrence tables.
  std::uint32_t index() const { return code_; }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }

 private:
  std::uint32_t code_ = 0;
};

/// Clauses are plain literal sequences; a clause stored in a formula is
/// kept in the canonical prefix order (see Prefix::lit_less).
using Clause = std::vector<Lit>;

using ClauseId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input error with the 1-based line number it was detected on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a brute-force computation would exceed its configured cap.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

inline Lit Lit::from_dimacs(int value) {
  if (value == 0) throw Error("literal 0 is not a valid literal");
  return value > 0 ? Lit(static_cast<Var>(value), true)
                   : Lit(static_cast<Var>(-value), false);
}

}  // namespace qbfredux

#endif  // QBFREDUX_TYPES_HPP_
