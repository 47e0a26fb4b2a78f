#pragma once

#include <stdexcept>
#include <string>

namespace bezlin {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainMismatch : public Error {
public:
  using Error::Error;
};

class DivisionError : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class CapExhausted : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg), position(pos) {}
  std::size_t position;
};

} // namespace bezlin
