#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaingraph {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  NonUnitGain,
  BadIndex,
  MissingVertexValue,
  DifferentUnderlyingGraph,
  NotACycle,
  EdgeNotPresent,
  IsolatedVertex,
  DimensionMismatch,
  NonRealForm,
  NotHermitian,
  NoConvergence,
  LengthMismatch,
  NonRealCoefficient,
  TooLarge,
  NotSubgraph,
  BadConfig,
  Syntax,
  BadHeader,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
// `line` is the 1-based input line for parser errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  Errc code_;
  int line_;
};

}  // namespace gaingraph
