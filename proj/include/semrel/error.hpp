#pragma once

#include <stdexcept>
#include <string>

namespace semrel {

enum class Errc {
  Io,
  Parse,
  InvalidArgument,
  Cycle,
  RootCount,
  UndeclaredConcept,
  UnknownConcept,
  UnreachablePair,
  MissingIc,
  ZeroMass,
  UnmappableTerm,
  EmptySuperGloss,
  NoContextualSignal,
  TooFewPoints,
  DegenerateRanking,
  VersionMismatch,
  ChecksumMismatch,
  MalformedRecord,
};

/// Single exception type for the library. The code lets callers (evaluation,
/// CLI exit codes) classify failures without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace semrel
