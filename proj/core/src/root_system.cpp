#include "parcomp/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parcomp {

namespace {

std::string coordinate_name(std::span<const Rational> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    Rational mag = abs(c);
    if (mag != Rational(1)) os << mag;
    os << 'a' << (k + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string simple_name(std::span<const int> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) os << '+';
    if (coeffs[k] != 1) os << coeffs[k];
    os << "alpha_" << (k + 1);
    first = false;
  }
  return os.str();
}

Root root_from_support(std::span<const Root> simple_roots, std::vector<int> support, bool coordinate_names) {
  Root root;
  root.coeffs = zero_vector(simple_roots.front().coeffs.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] != 0) axpy(Rational(support[i]), simple_roots[i].coeffs, root.coeffs);
  }
  root.name = coordinate_names ? coordinate_name(root.coeffs) : simple_name(support);
  root.simple_coeffs = std::move(support);
  return root;
}

// Bourbaki-style chain with cartan(i, i+1) = cartan(i+1, i) = -1.
RatMatrix chain(int n) {
  RatMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  }
  return c;
}

RatMatrix from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  RatMatrix c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  for (auto [a, b] : edges) {
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  }
  return c;
}

}  // namespace

CartanType CartanType::parse(std::string_view label) {
  std::string s;
  for (char ch : label) {
    if (ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 2) throw std::invalid_argument("unsupported root system label: '" + std::string(label) + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': t.family = CartanFamily::A; break;
    case 'B': t.family = CartanFamily::B; break;
    case 'C': t.family = CartanFamily::C; break;
    case 'D': t.family = CartanFamily::D; break;
    case 'E': t.family = CartanFamily::E; break;
    case 'F': t.family = CartanFamily::F; break;
    case 'G': t.family = CartanFamily::G; break;
    default: throw std::invalid_argument("unsupported root system label: '" + std::string(label) + "'");
  }
  std::string digits = s.substr(1);
  if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw std::invalid_argument("unsupported root system label: '" + std::string(label) + "'");
  }
  t.rank = std::stoi(digits);
  t.validate();
  return t;
}

std::string CartanType::name() const {
  static constexpr char kLetters[] = "ABCDEFG";
  return std::string(1, kLetters[static_cast<int>(family)]) + std::to_string(rank);
}

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case CartanFamily::A: ok = rank >= 1; break;
    case CartanFamily::B:
    case CartanFamily::C:
    case CartanFamily::D: ok = rank >= 2; break;
    case CartanFamily::E: ok = rank >= 6 && rank <= 8; break;
    case CartanFamily::F: ok = rank == 4; break;
    case CartanFamily::G: ok = rank == 2; break;
  }
  if (!ok || rank > 64) throw std::invalid_argument("unsupported root system: " + name());
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::DiagonalTraceZero: return "diagonal-trace-zero";
    case ModelKind::DiagonalFree: return "diagonal-free";
    case ModelKind::CorootBasis: return "coroot-basis";
    case ModelKind::Product: return "product";
  }
  return "unknown";
}

bool CoordinateModel::contains(std::span<const Rational> h) const {
  if (h.size() != ambient_dim) return false;
  return std::all_of(constraints.begin(), constraints.end(), [&](const RatVector& c) { return dot(c, h).is_zero(); });
}

int Root::height() const {
  int h = 0;
  for (int c : simple_coeffs) h += c;
  return h;
}

ParabolicIndex::ParabolicIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

ParabolicIndex ParabolicIndex::from_mask(std::uint64_t mask) {
  std::vector<int> idx;
  for (int i = 0; i < 64; ++i) {
    if (mask & (std::uint64_t{1} << i)) idx.push_back(i + 1);
  }
  return ParabolicIndex(std::move(idx));
}

ParabolicIndex ParabolicIndex::all(int rank) {
  std::vector<int> idx(rank);
  for (int i = 0; i < rank; ++i) idx[i] = i + 1;
  return ParabolicIndex(std::move(idx));
}

bool ParabolicIndex::contains(int index) const { return std::binary_search(indices_.begin(), indices_.end(), index); }

std::uint64_t ParabolicIndex::mask() const {
  std::uint64_t m = 0;
  for (int i : indices_) {
    if (i >= 1 && i <= 64) m |= std::uint64_t{1} << (i - 1);
  }
  return m;
}

void ParabolicIndex::validate(int rank) const {
  for (int i : indices_) {
    if (i < 1 || i > rank) {
      throw std::invalid_argument("simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    }
  }
}

std::string ParabolicIndex::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(indices_[k]);
  }
  return s + "}";
}

std::string RootSystem::label() const {
  std::string s;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += '+';
    s += components_[k].name();
  }
  return s;
}

RatVector RootSystem::simple_values(std::span<const Rational> h) const {
  if (h.size() != ambient_dim()) {
    throw std::invalid_argument("element has dimension " + std::to_string(h.size()) + ", model expects " +
                                std::to_string(ambient_dim()));
  }
  RatVector v;
  v.reserve(simple_roots_.size());
  for (const auto& a : simple_roots_) v.push_back(a(h));
  return v;
}

void RootSystem::require_in_model(std::span<const Rational> h) const {
  if (h.size() != ambient_dim()) {
    throw std::invalid_argument("element has dimension " + std::to_string(h.size()) + ", model expects " +
                                std::to_string(ambient_dim()));
  }
  if (!model_.contains(h)) {
    throw std::invalid_argument("element " + to_string(h) + " does not lie in h for " + label());
  }
}

void RootSystem::finish() {
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (cartan_(i, i) != Rational(2)) throw std::logic_error("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational& c = cartan_(i, j);
      if (c > Rational(0) || c < Rational(-3) || !c.is_integer()) {
        throw std::logic_error("Cartan matrix off-diagonal entry out of range");
      }
    }
  }
  positive_roots_ = generate_positive_roots(simple_roots_, cartan_, model_.coordinate_names);

  // Dual basis: α_i(T_j) = δ_ij together with the model constraints.
  std::vector<RatVector> rows;
  for (const auto& a : simple_roots_) rows.push_back(a.coeffs);
  for (const auto& c : model_.constraints) rows.push_back(c);
  RatMatrix system = RatMatrix::from_rows(rows, ambient_dim());
  coweights_.clear();
  for (int j = 0; j < n; ++j) {
    RatVector rhs = zero_vector(rows.size());
    rhs[j] = 1;
    auto sol = solve_linear(system, rhs);
    auto* unique = std::get_if<UniqueSolution>(&sol);
    if (!unique) throw std::logic_error("coweight system for " + label() + " is not uniquely solvable");
    coweights_.push_back(std::move(unique->x));
  }
}

RatMatrix cartan_matrix(CartanType type) {
  type.validate();
  const int n = type.rank;
  switch (type.family) {
    case CartanFamily::A: return chain(n);
    case CartanFamily::B: {
      RatMatrix c = chain(n);
      c(n - 2, n - 1) = -2;
      return c;
    }
    case CartanFamily::C: {
      RatMatrix c = chain(n);
      c(n - 1, n - 2) = -2;
      return c;
    }
    case CartanFamily::D: {
      RatMatrix c(n, n);
      for (int i = 0; i < n; ++i) c(i, i) = 2;
      for (int i = 0; i + 1 < n - 1; ++i) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
      }
      if (n >= 3) {
        c(n - 3, n - 1) = -1;
        c(n - 1, n - 3) = -1;
      }
      return c;
    }
    case CartanFamily::E:
      if (n == 6) {
        // α2-α3-α4-α5-α6 chain, α1 attached to α4.
        return RatMatrix{{2, 0, 0, -1, 0, 0},  {0, 2, -1, 0, 0, 0},  {0, -1, 2, -1, 0, 0},
                         {-1, 0, -1, 2, -1, 0}, {0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, -1, 2}};
      }
      if (n == 7) return from_edges(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}});
      return from_edges(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}});
    case CartanFamily::F: {
      RatMatrix c = chain(4);
      c(1, 2) = -2;
      return c;
    }
    case CartanFamily::G: {
      RatMatrix c = chain(2);
      c(1, 0) = -3;
      return c;
    }
  }
  throw std::invalid_argument("unsupported root system");
}

RootSystem build_root_system(CartanType type) {
  type.validate();
  RootSystem rs;
  rs.components_ = {type};
  const int n = type.rank;

  if (type.family == CartanFamily::A) {
    const std::size_t dim = n + 1;
    rs.model_ = {ModelKind::DiagonalTraceZero, dim, {RatVector(dim, Rational(1))}, true};
    for (int k = 0; k < n; ++k) {
      RatVector c = zero_vector(dim);
      c[k] = 1;
      c[k + 1] = -1;
      rs.simple_roots_.push_back({c, {}, coordinate_name(c)});
    }
  } else if (type.family == CartanFamily::D) {
    const std::size_t dim = n;
    rs.model_ = {ModelKind::DiagonalFree, dim, {}, true};
    for (int k = 0; k + 1 < n; ++k) {
      RatVector c = zero_vector(dim);
      c[k] = 1;
      c[k + 1] = -1;
      rs.simple_roots_.push_back({c, {}, coordinate_name(c)});
    }
    RatVector last = zero_vector(dim);
    last[n - 2] = 1;
    last[n - 1] = 1;
    rs.simple_roots_.push_back({last, {}, coordinate_name(last)});
  } else {
    RatMatrix c = cartan_matrix(type);
    rs.model_ = {ModelKind::CorootBasis, static_cast<std::size_t>(n), {}, false};
    for (int i = 0; i < n; ++i) {
      auto row = c.row(i);
      rs.simple_roots_.push_back({RatVector(row.begin(), row.end()), {}, "alpha_" + std::to_string(i + 1)});
    }
    rs.cartan_ = std::move(c);
  }

  for (int i = 0; i < n; ++i) {
    rs.simple_roots_[i].simple_coeffs.assign(n, 0);
    rs.simple_roots_[i].simple_coeffs[i] = 1;
  }

  if (rs.model_.kind != ModelKind::CorootBasis) {
    // Simply laced with the standard form on coordinates: α_i(H_j) = (α_i, α_j).
    rs.cartan_ = RatMatrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& aj = rs.simple_roots_[j].coeffs;
        rs.cartan_(i, j) = Rational(2) * dot(rs.simple_roots_[i].coeffs, aj) / dot(aj, aj);
      }
  }
  rs.finish();
  return rs;
}

RootSystem build_root_system(std::string_view label) { return build_root_system(CartanType::parse(label)); }

RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
  RootSystem rs;
  rs.components_ = a.components_;
  rs.components_.insert(rs.components_.end(), b.components_.begin(), b.components_.end());
  const std::size_t da = a.ambient_dim();
  const std::size_t db = b.ambient_dim();
  const std::size_t dim = da + db;
  const int ra = a.rank();
  const int rb = b.rank();

  auto lift = [&](std::span<const Rational> v, std::size_t offset) {
    RatVector out = zero_vector(dim);
    std::copy(v.begin(), v.end(), out.begin() + offset);
    return out;
  };

  rs.model_.kind = ModelKind::Product;
  rs.model_.ambient_dim = dim;
  rs.model_.coordinate_names = a.model_.coordinate_names && b.model_.coordinate_names;
  for (const auto& c : a.model_.constraints) rs.model_.constraints.push_back(lift(c, 0));
  for (const auto& c : b.model_.constraints) rs.model_.constraints.push_back(lift(c, da));

  for (int i = 0; i < ra + rb; ++i) {
    const Root& src = i < ra ? a.simple_roots_[i] : b.simple_roots_[i - ra];
    Root r;
    r.coeffs = lift(src.coeffs, i < ra ? 0 : da);
    r.simple_coeffs.assign(ra + rb, 0);
    r.simple_coeffs[i] = 1;
    r.name = rs.model_.coordinate_names ? coordinate_name(r.coeffs) : "alpha_" + std::to_string(i + 1);
    rs.simple_roots_.push_back(std::move(r));
  }

  rs.cartan_ = RatMatrix(ra + rb, ra + rb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j) rs.cartan_(i, j) = a.cartan_(i, j);
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < rb; ++j) rs.cartan_(ra + i, ra + j) = b.cartan_(i, j);
  rs.finish();
  return rs;
}

std::vector<std::vector<int>> generate_positive_roots(const RatMatrix& cartan) {
  const std::size_t n = cartan.rows();
  if (cartan.cols() != n) throw std::invalid_argument("Cartan matrix must be square");
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!cartan(i, j).is_integer()) throw std::invalid_argument("Cartan matrix must be integral");
      c[i][j] = static_cast<long long>(cartan(i, j).num());
    }

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    level.push_back(e);
    found.insert(e);
  }
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      for (std::size_t j = 0; j < n; ++j) {
        // Root string through beta in direction α_j: p - q = beta(H_j).
        int p = 0;
        std::vector<int> down = beta;
        while (down[j] > 0) {
          --down[j];
          if (!found.count(down)) break;
          ++p;
        }
        long long pairing = 0;
        for (std::size_t i = 0; i < n; ++i) pairing += beta[i] * c[i][j];
        long long q = p - pairing;
        if (q > 0) {
          std::vector<int> up = beta;
          ++up[j];
          if (!found.count(up)) next.insert(up);
        }
      }
    }
    for (const auto& r : next) found.insert(r);
    if (found.size() > kMaxPositiveRoots) {
      throw std::runtime_error("positive root closure exceeded " + std::to_string(kMaxPositiveRoots) +
                               " roots; malformed Cartan matrix");
    }
    level.assign(next.begin(), next.end());
  }

  std::vector<std::vector<int>> roots(found.begin(), found.end());
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  std::sort(roots.begin(), roots.end(), [&](const auto& x, const auto& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;  // α_1 before α_2 within a height
  });
  return roots;
}

std::vector<Root> generate_positive_roots(std::span<const Root> simple_roots, const RatMatrix& cartan,
                                          bool coordinate_names) {
  if (simple_roots.size() != cartan.rows()) {
    throw std::invalid_argument("simple roots and Cartan matrix disagree on rank");
  }
  std::vector<Root> out;
  for (auto& support : generate_positive_roots(cartan)) {
    out.push_back(root_from_support(simple_roots, std::move(support), coordinate_names));
  }
  return out;
}

RatVector fundamental_coweight(const RootSystem& rs, int index) {
  if (index < 1 || index > rs.rank()) {
    throw std::invalid_argument("coweight index " + std::to_string(index) + " outside 1.." + std::to_string(rs.rank()));
  }
  return rs.coweights()[index - 1];
}

std::vector<RatVector> cartan_basis(const RootSystem& rs) {
  std::vector<RatVector> basis;
  if (rs.model().constraints.empty()) {
    for (std::size_t k = 0; k < rs.ambient_dim(); ++k) basis.push_back(unit_vector(rs.ambient_dim(), k));
    return basis;
  }
  if (rs.model().coordinate_names) {
    // Simple coroots of the diagonal models coincide with the simple roots' coefficient vectors.
    for (const auto& a : rs.simple_roots()) basis.push_back(a.coeffs);
    return basis;
  }
  return null_space(RatMatrix::from_rows(rs.model().constraints, rs.ambient_dim()));
}

ParabolicDescriptor standard_parabolic(const RootSystem& rs, const ParabolicIndex& pi) {
  pi.validate(rs.rank());
  ParabolicDescriptor d;
  d.pi = pi;
  for (const auto& root : rs.positive_roots()) {
    bool inside = true;
    for (std::size_t i = 0; i < root.simple_coeffs.size(); ++i) {
      if (root.simple_coeffs[i] != 0 && !pi.contains(static_cast<int>(i) + 1)) {
        inside = false;
        break;
      }
    }
    (inside ? d.levi_positive_roots : d.nilradical_roots).push_back(root);
  }
  return d;
}

HyperbolicParabolic parabolic_from_hyperbolic(const RootSystem& rs, std::span<const Rational> h) {
  rs.require_in_model(h);
  RatVector values = rs.simple_values(h);
  bool dominant = std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.sign() >= 0; });
  if (!dominant) {
    NonStandard ns;
    for (const auto& root : rs.positive_roots()) ns.signs.push_back(root(h).sign());
    return ns;
  }
  std::vector<int> zeros;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) zeros.push_back(static_cast<int>(i) + 1);
  }
  return ParabolicIndex(std::move(zeros));
}

}  // namespace parcomp
