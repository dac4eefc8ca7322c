#pragma once

#include <stdexcept>
#include <string>

namespace zkq {

// Failure classes surfaced by the engine. The CLI maps DomainError to exit
// code 2; command-line usage problems exit 1.
enum class errc {
  non_unit_classical_limit,
  non_invertible_classical_limit,
  not_classically_filtered,
  non_stabilized,
  not_quantizable,
  window_empty,
  degenerate_bound,
  chart_violation,
  h1_obstruction,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_unit_classical_limit: return "NonUnitClassicalLimit";
    case errc::non_invertible_classical_limit: return "NonInvertibleClassicalLimit";
    case errc::not_classically_filtered: return "NotClassicallyFiltered";
    case errc::non_stabilized: return "NonStabilized";
    case errc::not_quantizable: return "NotQuantizable";
    case errc::window_empty: return "WindowEmpty";
    case errc::degenerate_bound: return "DegenerateBound";
    case errc::chart_violation: return "ChartViolation";
    case errc::h1_obstruction: return "H1Obstruction";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw DomainError(code, what); }

}  // namespace zkq
