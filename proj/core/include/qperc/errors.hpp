#ifndef QPERC_ERRORS_HPP
#define QPERC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qperc {

/// Base class for all qperc errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(long long u)
      : Error("self-loop at vertex " + std::to_string(u)), vertex(u) {}
  long long vertex;
};

class DuplicateEdgeError : public Error {
 public:
  DuplicateEdgeError(long long u, long long v)
      : Error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
        u(u),
        v(v) {}
  long long u, v;
};

class VertexRangeError : public Error {
 public:
  explicit VertexRangeError(long long v)
      : Error("vertex index out of range: " + std::to_string(v)) {}
};

class EmptyPoolError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class GenerationFailedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, long long line)
      : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
  long long line;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

class NoTransitionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& key, const std::string& what)
      : Error("config key '" + key + "': " + what), key(key) {}
  std::string key;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qperc

#endif
