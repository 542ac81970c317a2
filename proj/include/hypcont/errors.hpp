#pragma once

#include <stdexcept>
#include <string>

namespace hypcont {

enum class ErrorKind {
  Parse,
  InvalidOptions,
  SimIncomplete,
  UnsupportedSubseries,
  NotSimplified,
  UnknownSeries,
  DuplicatePattern,
  UnknownPattern,
  DegenerateCurve,
  UnsolvableDegree,
  NotTwoVariable,
  PoleHit,
  NotConverging,
  EmptyOverlap,
  BranchRequired,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypcont
