#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symbreak {

// Malformed input: a graph6 record, an edge-list file, a bad vertex pair.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), offset_(0) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A precondition of an operation is not met (edgeless line graph, D' on
// K_2, deleting every vertex, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The computation is well defined but exceeds a configured limit: node
// budget, enumeration cap, order > 64. Never a silent wrong answer.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes disagreed. Always a bug or a counterexample.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symbreak
