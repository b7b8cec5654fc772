#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parcomp/linalg.hpp"

namespace parcomp {

enum class CartanFamily { A, B, C, D, E, F, G };

// Simple Cartan type, e.g. A4, D3, E6.
struct CartanType {
  CartanFamily family = CartanFamily::A;
  int rank = 1;

  static CartanType A(int n) { return {CartanFamily::A, n}; }
  static CartanType B(int n) { return {CartanFamily::B, n}; }
  static CartanType C(int n) { return {CartanFamily::C, n}; }
  static CartanType D(int n) { return {CartanFamily::D, n}; }
  static CartanType E6() { return {CartanFamily::E, 6}; }

  // Parses "A4", "D3", "E6", ... Throws std::invalid_argument.
  static CartanType parse(std::string_view label);

  std::string name() const;
  // Rejects unsupported family/rank combinations with std::invalid_argument.
  void validate() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

enum class ModelKind {
  DiagonalTraceZero,  // N-tuples with zero sum; type A
  DiagonalFree,       // (b1..bN) standing for diag(b1..bN,-bN..-b1); type D
  CorootBasis,        // coefficients over the simple coroots
  Product,            // direct sum of component models
};

std::string_view to_string(ModelKind kind);

// How elements of the Cartan subalgebra h are written down.
struct CoordinateModel {
  ModelKind kind = ModelKind::CorootBasis;
  std::size_t ambient_dim = 0;
  // Linear functionals that vanish on h (e.g. the trace for type A).
  std::vector<RatVector> constraints;
  // Root names are rendered from ambient coordinates (a1-a2) rather than
  // from simple-root coefficients (alpha_1+alpha_2).
  bool coordinate_names = false;

  bool contains(std::span<const Rational> h) const;
};

// A root as a linear functional on h, together with its expansion over the simple roots.
struct Root {
  RatVector coeffs;
  std::vector<int> simple_coeffs;
  std::string name;

  int height() const;
  Rational operator()(std::span<const Rational> h) const { return dot(coeffs, h); }
};

// Subset of simple-root indices (1-based), kept sorted.
class ParabolicIndex {
 public:
  ParabolicIndex() = default;
  explicit ParabolicIndex(std::vector<int> indices);

  static ParabolicIndex from_mask(std::uint64_t mask);
  static ParabolicIndex all(int rank);

  const std::vector<int>& indices() const { return indices_; }
  bool contains(int index) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  std::uint64_t mask() const;
  // Throws std::invalid_argument if any index lies outside 1..rank.
  void validate(int rank) const;

  std::string str() const;  // "{1,4}"

  friend bool operator==(const ParabolicIndex&, const ParabolicIndex&) = default;
  friend auto operator<=>(const ParabolicIndex& a, const ParabolicIndex& b) { return a.mask() <=> b.mask(); }

 private:
  std::vector<int> indices_;
};

class RootSystem {
 public:
  const std::vector<CartanType>& components() const { return components_; }
  std::string label() const;
  int rank() const { return static_cast<int>(simple_roots_.size()); }
  const CoordinateModel& model() const { return model_; }
  std::size_t ambient_dim() const { return model_.ambient_dim; }
  const std::vector<Root>& simple_roots() const { return simple_roots_; }
  const Root& simple_root(int index) const { return simple_roots_.at(index - 1); }
  const RatMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const std::vector<RatVector>& coweights() const { return coweights_; }

  // (α_1(h), ..., α_rank(h)).
  RatVector simple_values(std::span<const Rational> h) const;
  // Throws std::invalid_argument when h is not an element of the model's h.
  void require_in_model(std::span<const Rational> h) const;

  friend RootSystem build_root_system(CartanType type);
  friend RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

 private:
  void finish();

  std::vector<CartanType> components_;
  CoordinateModel model_;
  std::vector<Root> simple_roots_;
  RatMatrix cartan_;
  std::vector<Root> positive_roots_;
  std::vector<RatVector> coweights_;
};

// A(n) and D(n) use the diagonal matrix models; all other types use CorootBasis.
// E6 follows the simple-root ordering with alpha_4 at the branch node.
RootSystem build_root_system(CartanType type);
RootSystem build_root_system(std::string_view label);

// Root system of the direct sum; ambient coordinates and simple roots are concatenated.
RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

RatMatrix cartan_matrix(CartanType type);

inline constexpr std::size_t kMaxPositiveRoots = 500;

// Positive roots as simple-root coefficient vectors, ordered by height, then
// lexicographically. Convention: cartan(i, j) = α_i(H_{α_j}).
// Throws std::runtime_error when more than kMaxPositiveRoots are produced.
std::vector<std::vector<int>> generate_positive_roots(const RatMatrix& cartan);
std::vector<Root> generate_positive_roots(std::span<const Root> simple_roots, const RatMatrix& cartan,
                                          bool coordinate_names = false);

// T_α for the simple root with 1-based index i.
RatVector fundamental_coweight(const RootSystem& rs, int index);

// Basis of h in ambient coordinates (simple coroots for the diagonal models,
// the coordinate vectors otherwise).
std::vector<RatVector> cartan_basis(const RootSystem& rs);

struct ParabolicDescriptor {
  ParabolicIndex pi;
  std::vector<Root> levi_positive_roots;
  std::vector<Root> nilradical_roots;
};

ParabolicDescriptor standard_parabolic(const RootSystem& rs, const ParabolicIndex& pi);

// H defines a parabolic which does not contain the standard Borel.
struct NonStandard {
  std::vector<int> signs;  // sign of β(H) for each β in positive_roots()
};
using HyperbolicParabolic = std::variant<ParabolicIndex, NonStandard>;

HyperbolicParabolic parabolic_from_hyperbolic(const RootSystem& rs, std::span<const Rational> h);

}  // namespace parcomp
