#pragma once

#include <stdexcept>
#include <string>

namespace cotlab {

// Malformed input data (bad JSONL line, schema violation). Carries the
// line number when one is known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, long line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Structurally valid input that violates a domain invariant (gold not in
// options, duplicate id, id missing from an outcome log).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the shape a component knows how to handle (a sample the
// question-template oracle cannot classify, a response a templated policy
// cannot score).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pipeline stage failed; names the stage so partial artifacts can be
// located and the run resumed.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& stage, const std::string& msg)
      : std::runtime_error("stage '" + stage + "': " + msg), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace cotlab
