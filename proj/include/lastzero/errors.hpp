#pragma once

#include <stdexcept>
#include <string>

namespace lastzero {

// Thrown when an iteration fails to converge (quadrature panel budget,
// root-find iteration cap) or an integrand evaluates to NaN/Inf.
// Precondition violations use std::domain_error instead.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lastzero
