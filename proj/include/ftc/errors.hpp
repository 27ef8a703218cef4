#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ftc {

/// Operands or matrices built over different fields were combined.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation needed eigenvalues (or roots of unity) that the working field
/// does not contain. `obstructions` names the irreducible polynomials that
/// failed to split, rendered as strings.
class SplittingError : public std::runtime_error {
 public:
  SplittingError(const std::string& what, std::vector<std::string> obstructions)
      : std::runtime_error(what), obstructions_(std::move(obstructions)) {}
  const std::vector<std::string>& obstructions() const noexcept { return obstructions_; }

 private:
  std::vector<std::string> obstructions_;
};

/// Composition-factor machinery only runs over finite fields.
class UnsupportedField : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The radical was computed but semisimplicity of the quotient could not be certified.
class RadicalUncertified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element that was expected to act as a scalar on a module does not.
class NonScalarAction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A character group is infinite (the presentation has positive free rank).
class InfiniteGroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ftc
