#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plumbstein {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph file. Line numbers are 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// Precondition violated by an argument (bad fraction, bad stabilization budget, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluating a continued fraction hit a zero tail.
class DivisionByZero : public DomainError {
 public:
  explicit DivisionByZero(std::size_t index)
      : DomainError("division by zero at coefficient " + std::to_string(index)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// The input is valid but outside what the constructions support
// (valence >= 4, nonplanar clusters other than K3,3, non-family-Y graphs, ...).
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

// The dual graph has no Hamiltonian path ending at any face.
class SearchExhausted : public UnsupportedShape {
 public:
  using UnsupportedShape::UnsupportedShape;
};

}  // namespace plumbstein
