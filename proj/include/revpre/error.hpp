#pragma once

#include <stdexcept>
#include <string>

namespace revpre {

/// Base class for every validation failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph, configuration, CNF, assignment files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace revpre
