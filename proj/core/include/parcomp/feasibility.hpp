#pragma once

#include <optional>
#include <vector>

#include "parcomp/linalg.hpp"

namespace parcomp {

// Homogeneous system { L·x = 0 : L in equalities } ∪ { L·x > 0 : L in strict_positives }.
struct StrictSystem {
  std::size_t dim = 0;
  std::vector<RatVector> equalities;
  std::vector<RatVector> strict_positives;

  // Throws std::invalid_argument if a functional has the wrong dimension.
  void validate() const;
};

struct FeasibilityOutcome {
  std::optional<RatVector> witness;

  bool feasible() const { return witness.has_value(); }
};

// Exact decision by null-space substitution followed by Fourier-Motzkin
// elimination; a feasible verdict carries a rational witness.
FeasibilityOutcome decide(const StrictSystem& sys);

bool verify_solution(const StrictSystem& sys, std::span<const Rational> x);

}  // namespace parcomp
