#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypertile {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed vertex-type text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain (angle-sum, degree, wrong tiling kind).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// build() declined because no existence criterion covers the vertex-type.
class RefusalError : public Error {
 public:
  using Error::Error;
};

// A fan could not be completed: the faces already around the vertex form a
// word with no continuation in the vertex-type.
class ContinuationError : public Error {
 public:
  ContinuationError(const std::string& what, int vertex, std::vector<int> word)
      : Error(what), vertex_(vertex), word_(std::move(word)) {}

  int vertex() const { return vertex_; }
  const std::vector<int>& word() const { return word_; }

 private:
  int vertex_;
  std::vector<int> word_;
};

// Scripted policy exhausted or asked for an unavailable continuation.
class PolicyError : public Error {
 public:
  using Error::Error;
};

// JSON patch document does not follow the schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// An invariant that the construction guarantees was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypertile
