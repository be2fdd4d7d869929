#pragma once

#include <stdexcept>
#include <string>

namespace dnt {

/// Dempster-style combination is undefined when the conflict coefficient
/// reaches 1: every focal-element product lands on the empty set.
class TotalConflictError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A failure inside the decision pipeline, tagged with the stage it occurred
/// in ("aggregation", "d-numbers", "fusion", "lvt", "decision").
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace dnt
