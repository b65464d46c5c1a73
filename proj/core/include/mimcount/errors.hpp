#pragma once

#include <stdexcept>
#include <string>

namespace mimcount {

/// Precondition violation on a graph operation (vertex out of range,
/// self-loop, retwin on a non-edge, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed external input: graph6 records, edge-list text, family specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form expression or construction requested outside the range
/// where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mimcount
