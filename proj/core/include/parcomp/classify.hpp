#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parcomp/feasibility.hpp"
#include "parcomp/pairs.hpp"

namespace parcomp {

struct CompatibilityResult {
  ParabolicIndex pi;
  bool compatible = false;
  std::optional<RatVector> witness;           // h' coordinates, integer with content 1
  std::optional<RatVector> embedded_witness;  // host h coordinates
};

struct Classification {
  SymmetricPair pair;
  std::vector<CompatibilityResult> results;  // ordered by subset mask
  std::size_t compatible_count = 0;

  std::size_t total() const { return results.size(); }
};

struct CrossCheckReport {
  std::size_t total = 0;
  std::size_t oracle_compatible = 0;
  std::size_t predicate_compatible = 0;
  std::vector<ParabolicIndex> mismatches;

  bool ok() const { return mismatches.empty(); }
};

inline constexpr int kMaxEnumerationRank = 20;

// Equalities α|h' = 0 for α in Π, strict α|h' > 0 for the other simple roots.
StrictSystem compatibility_system(const SymmetricPair& pair, const ParabolicIndex& pi);

CompatibilityResult is_compatible(const SymmetricPair& pair, const ParabolicIndex& pi);

// Closed-form answer: Π is a union of restriction classes; Π1 = Π2 for diagonal
// pairs; always true for equal-rank pairs.
bool class_predicate(const SymmetricPair& pair, const ParabolicIndex& pi);

// Every subset of the host's simple roots. `jobs` > 1 evaluates subsets on worker
// threads; the result is identical for any job count.
// Throws std::invalid_argument when the host rank exceeds kMaxEnumerationRank.
Classification classify_all(const SymmetricPair& pair, unsigned jobs = 1);

CrossCheckReport cross_check(const SymmetricPair& pair, unsigned jobs = 1);

bool verify_witness(const SymmetricPair& pair, const ParabolicIndex& pi, std::span<const Rational> w);

// Σ_α α(H)·T_α over the simple roots.
RatVector coweight_expansion(const RootSystem& rs, std::span<const Rational> h);

// Splits an index set over a diagonal pair's doubled host into (Π1, Π2) over the base.
std::pair<ParabolicIndex, ParabolicIndex> split_diagonal(const SymmetricPair& pair, const ParabolicIndex& pi);

}  // namespace parcomp
