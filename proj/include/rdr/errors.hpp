#pragma once

#include <stdexcept>
#include <string>

namespace rdr {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or graph6 input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input graph violates the simple-graph invariants (self-loop, bad vertex id).
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  NotConnectedError() : Error("graph is not connected") {}
};

class NotUnicyclicError : public Error {
 public:
  explicit NotUnicyclicError(const std::string& why) : Error("graph is not unicyclic: " + why) {}
};

/// Graph lies outside the class an operation supports (for instance exact
/// resistance on a graph with more than one cycle).
class UnsupportedGraphError : public Error {
 public:
  using Error::Error;
};

/// A rewrite would map the graph to an isomorphic copy of itself.
class IdentityRewriteError : public Error {
 public:
  using Error::Error;
};

/// A rewrite's structural precondition does not hold at the requested site.
class RewritePreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rdr
