#pragma once

/// @file errors.hpp

#include <stdexcept>
#include <string>

#include "dzeta/bigrat.hpp"

namespace dzeta {

/// Evaluation hit a zero of the denominator.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const BigRat& t)
      : std::domain_error("pole at evaluation point T=" + t.str()), t_(t) {}
  const BigRat& point() const { return t_; }

 private:
  BigRat t_;
};

/// A computed level broke an identity that must hold; always a bug, never data.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dzeta
