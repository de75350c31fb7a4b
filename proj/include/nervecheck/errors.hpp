// Error codes and the exception type shared by all nervecheck modules.
#pragma once

#include <stdexcept>
#include <string>

namespace nervecheck {

enum class Errc {
  NonSquare,
  NonSymmetric,
  BadDiagonal,
  BadOffDiagonal,
  DuplicateName,
  EmptySubset,
  UnknownGenerator,
  BadLabelSet,
  NotConnected,
  RankGuardExceeded,
  UnknownVertex,
  VertexClash,
  NotASimplex,
  EmptyComplex,
  NotHyperbolic,
  FiniteGroup,
  SearchBudgetExceeded,
  TooLarge,
  NameClash,
  InvariantBreach,
  SyntaxError,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

  // Resource guards map to a distinct process exit status in the CLI.
  bool is_resource_error() const {
    return code_ == Errc::RankGuardExceeded ||
           code_ == Errc::SearchBudgetExceeded || code_ == Errc::TooLarge;
  }

 private:
  Errc code_;
};

}  // namespace nervecheck
