#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parcomp/root_system.hpp"

namespace parcomp {

enum class FamilyKind { SlSoOdd, SlSoEven, SlSp, SoSoOddOdd, E6Sp8, E6F4, Diagonal, EqualRank };

// Stable CLI/JSON tag ("sl-so-odd", "e6-f4", ...).
std::string_view tag(FamilyKind kind);
// Throws std::invalid_argument for unknown tags.
FamilyKind family_kind_from_tag(std::string_view tag);

struct PairFamily {
  FamilyKind kind = FamilyKind::SlSoOdd;
  int n = 0;
  int m = 0;
  CartanType base;        // Diagonal: the diagonally embedded algebra; EqualRank: the host
  std::string subalgebra;  // EqualRank display name, e.g. "s(gl(2)+gl(2))"

  static PairFamily sl_so_odd(int n) { return {.kind = FamilyKind::SlSoOdd, .n = n}; }
  static PairFamily sl_so_even(int n) { return {.kind = FamilyKind::SlSoEven, .n = n}; }
  static PairFamily sl_sp(int n) { return {.kind = FamilyKind::SlSp, .n = n}; }
  static PairFamily so_so(int m, int n) { return {.kind = FamilyKind::SoSoOddOdd, .n = n, .m = m}; }
  static PairFamily e6_sp8() { return {.kind = FamilyKind::E6Sp8}; }
  static PairFamily e6_f4() { return {.kind = FamilyKind::E6F4}; }
  static PairFamily diagonal(CartanType base) { return {.kind = FamilyKind::Diagonal, .base = base}; }
  static PairFamily equal_rank(CartanType host, std::string subalgebra = {}) {
    return {.kind = FamilyKind::EqualRank, .base = host, .subalgebra = std::move(subalgebra)};
  }

  // Throws std::invalid_argument when parameters are out of bounds.
  void validate() const;

  // Human-readable "(g, g^tau)", e.g. "(sl(5), so(5))".
  std::string describe() const;
  bool unequal_rank() const;
};

struct SymmetricPair {
  PairFamily family;
  RootSystem host;
  std::size_t hprime_dim = 0;
  // ambient_dim × hprime_dim; columns are a basis of h' in host coordinates.
  RatMatrix embedding;
  // Partition of 1..rank by equality of restricted simple roots.
  std::vector<std::vector<int>> classes;

  int rank() const { return host.rank(); }
  RatVector embed(std::span<const Rational> w) const;
};

// A root of the host composed with the embedding: a functional on h'.
struct RestrictedFunctional {
  RatVector coeffs;
  Root source;
};

SymmetricPair build_pair(const PairFamily& family);

RestrictedFunctional restrict_root(const SymmetricPair& pair, const Root& root);

std::vector<std::vector<int>> restriction_classes(const SymmetricPair& pair);

// Explicit element of h' (in h' coordinates) defining the standard Borel.
// Defined for the six unequal-rank families only.
RatVector borel_witness(const SymmetricPair& pair);

// The non-singleton classes as printed for the unequal-rank families,
// as a closed form in the family parameters.
std::vector<std::vector<int>> literal_paired_classes(const PairFamily& family);

}  // namespace parcomp
