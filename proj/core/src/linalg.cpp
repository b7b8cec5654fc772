#include "parcomp/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace parcomp {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

// In-place reduced row echelon form; returns pivot column per pivot row.
// Only the first `pivot_cols` columns are eligible as pivots.
std::vector<std::size_t> reduce(RatMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RatVector> null_basis_from_rref(const RatMatrix& m, const std::vector<std::size_t>& pivots,
                                            std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RatVector make_vector(std::initializer_list<long long> values) {
  RatVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

RatVector zero_vector(std::size_t dim) { return RatVector(dim); }

RatVector unit_vector(std::size_t dim, std::size_t index) {
  RatVector v(dim);
  v.at(index) = 1;
  return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_dim(a.size(), b.size(), "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_dim(a.size(), b.size(), "add");
  RatVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

RatVector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_dim(a.size(), b.size(), "subtract");
  RatVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector scale(const Rational& s, std::span<const Rational> v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(s * x);
  return r;
}

void axpy(const Rational& s, std::span<const Rational> x, RatVector& y) {
  require_same_dim(x.size(), y.size(), "axpy");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += s * x[i];
  }
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RatVector primitive(std::span<const Rational> v) {
  if (is_zero(v)) return RatVector(v.begin(), v.end());
  BigInt den_lcm = 1;
  for (const auto& x : v) den_lcm = boost::multiprecision::lcm(den_lcm, x.den());
  BigInt num_gcd = 0;
  for (const auto& x : v) {
    BigInt scaled = x.num() * (den_lcm / x.den());
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  Rational factor(den_lcm, num_gcd < 0 ? BigInt(-num_gcd) : num_gcd);
  return scale(factor, v);
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged initializer");
    for (long long x : r) data_.emplace_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_dim(rows[r].size(), cols, "RatMatrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_dim(columns[c].size(), rows, "RatMatrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::operator*(std::span<const Rational> x) const {
  require_same_dim(cols_, x.size(), "matrix-vector product");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  require_same_dim(cols_, rhs.rows_, "matrix product");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

RatVector RatMatrix::left_multiply(std::span<const Rational> y) const {
  require_same_dim(rows_, y.size(), "vector-matrix product");
  RatVector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) axpy(y[r], row(r), out);
  return out;
}

LinearSolution solve_linear(const RatMatrix& a, std::span<const Rational> b) {
  require_same_dim(a.rows(), b.size(), "solve_linear");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = reduce(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, n).is_zero()) return NoSolution{};
  }
  RatVector x = zero_vector(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  if (pivots.size() == n) return UniqueSolution{std::move(x)};
  return ParametricSolution{std::move(x), null_basis_from_rref(aug, pivots, n)};
}

std::vector<RatVector> null_space(const RatMatrix& a) {
  RatMatrix m = a;
  auto pivots = reduce(m, m.cols());
  return null_basis_from_rref(m, pivots, a.cols());
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return reduce(m, m.cols()).size();
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  if (reduce(aug, n).size() != n) throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace parcomp
