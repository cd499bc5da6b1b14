#pragma once

#include <stdexcept>
#include <string>

namespace bpb {

enum class ErrorKind {
  DimensionMismatch,
  InvalidSpace,
  ZeroVector,
  Regime,        // parameters outside the validity regime of a formula
  EmptySample,   // a sampled constraint set came out empty
  NotFound,      // a guaranteed witness was not located by the search
  Parse,
  InvalidConfig,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bpb
