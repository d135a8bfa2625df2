#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flocks {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct SignatureTooLarge : Error {
  using Error::Error;
};

struct TautologyContraction : Error {
  using Error::Error;
};

struct OccursInFlock : Error {
  using Error::Error;
};

struct NotDisjoint : Error {
  using Error::Error;
};

struct EmptyFlock : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace flocks
