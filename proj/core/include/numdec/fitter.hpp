#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "numdec/lexicon.hpp"

namespace numdec {

/// x = constant + sum(coefficients[i] * args[i]), all integers.
struct AffineEquation {
  std::int64_t constant = 0;
  std::vector<std::int64_t> coefficients;

  std::size_t arity() const { return coefficients.size(); }
  /// Exact evaluation; throws std::overflow_error if the result leaves the
  /// signed 64-bit range.
  std::int64_t evaluate(std::span<const std::int64_t> args) const;

  friend bool operator==(const AffineEquation&, const AffineEquation&) = default;
};

enum class FitStatus {
  Exact,           // integer affine equation reproduces every sample
  Inconsistent,    // no affine equation over the rationals fits
  NonIntegerOnly,  // rational solutions exist, none with integer coefficients
  Conflict,        // the sample set is not a function
};

std::string_view to_string(FitStatus status);

struct FitOutcome {
  FitStatus status = FitStatus::Exact;
  std::optional<AffineEquation> equation;  // set iff status == Exact

  bool exact() const { return status == FitStatus::Exact; }
};

/// Solves the sample system by exact rational elimination (no floating point
/// anywhere). Underdetermined systems pin every free coefficient to 0 and
/// solve the pivots, preferring the constant term; a single sample therefore
/// fits as a constant function. The outcome never depends on sample order.
FitOutcome fit_affine(std::span<const Sample> samples, std::size_t arity);

/// True iff the equation reproduces every sample exactly.
bool verify(const AffineEquation& equation, std::span<const Sample> samples);

}  // namespace numdec
