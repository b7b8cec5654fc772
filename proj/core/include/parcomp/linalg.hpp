#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "parcomp/rational.hpp"

namespace parcomp {

using RatVector = std::vector<Rational>;

RatVector make_vector(std::initializer_list<long long> values);
RatVector zero_vector(std::size_t dim);
RatVector unit_vector(std::size_t dim, std::size_t index);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector subtract(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(const Rational& s, std::span<const Rational> v);
void axpy(const Rational& s, std::span<const Rational> x, RatVector& y);  // y += s*x
bool is_zero(std::span<const Rational> v);

// Positive multiple of v with coprime integer entries (content 1).
// The zero vector is returned unchanged.
RatVector primitive(std::span<const Rational> v);

std::string to_string(std::span<const Rational> v);

// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RatVector column(std::size_t c) const;

  RatMatrix transpose() const;
  RatVector operator*(std::span<const Rational> x) const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector left_multiply(std::span<const Rational> y) const;  // yᵀ·A

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct UniqueSolution {
  RatVector x;
};
struct NoSolution {};
struct ParametricSolution {
  RatVector particular;
  std::vector<RatVector> null_basis;
};
using LinearSolution = std::variant<UniqueSolution, NoSolution, ParametricSolution>;

// Exact Gauss-Jordan solve of A·x = b.
LinearSolution solve_linear(const RatMatrix& a, std::span<const Rational> b);

// Basis of {x : A·x = 0}, one vector per free column of the reduced row echelon form.
std::vector<RatVector> null_space(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

// Throws std::domain_error when A is singular.
RatMatrix inverse(const RatMatrix& a);

}  // namespace parcomp
