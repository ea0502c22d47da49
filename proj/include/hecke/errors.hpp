#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Bad textual input (partitions, tableaux, rationals, flags).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation of a rational function at a zero of its denominator.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, std::string point)
      : std::runtime_error(what + " at " + point), point_(std::move(point)) {}
  const std::string& point() const { return point_; }

 private:
  std::string point_;
};

}  // namespace hecke
