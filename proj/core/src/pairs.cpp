#include "parcomp/pairs.hpp"

#include <array>
#include <stdexcept>

namespace parcomp {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kTags{{
    {FamilyKind::SlSoOdd, "sl-so-odd"},
    {FamilyKind::SlSoEven, "sl-so-even"},
    {FamilyKind::SlSp, "sl-sp"},
    {FamilyKind::SoSoOddOdd, "so-so"},
    {FamilyKind::E6Sp8, "e6-sp8"},
    {FamilyKind::E6F4, "e6-f4"},
    {FamilyKind::Diagonal, "diagonal"},
    {FamilyKind::EqualRank, "equal-rank"},
}};

// Coroot images H_β in coordinates over H_{α_1..α_6}.
const std::vector<RatVector>& e6_sp8_columns() {
  static const std::vector<RatVector> cols{make_vector({2, 0, 1, 2, 1, 0}), make_vector({0, 1, 0, 0, 0, 1}),
                                           make_vector({0, 0, 1, 0, 1, 0}), make_vector({0, 0, 0, 1, 0, 0})};
  return cols;
}

const std::vector<RatVector>& e6_f4_columns() {
  static const std::vector<RatVector> cols{make_vector({0, 1, 0, 0, 0, 1}), make_vector({0, 0, 1, 0, 1, 0}),
                                           make_vector({0, 0, 0, 1, 0, 0}), make_vector({1, 0, 0, 0, 0, 0})};
  return cols;
}

// Columns j = 1..count with +1 at j and -1 at mirror - j (1-based).
std::vector<RatVector> mirrored_columns(std::size_t dim, int count, int mirror) {
  std::vector<RatVector> cols;
  for (int j = 1; j <= count; ++j) {
    RatVector c = zero_vector(dim);
    c[j - 1] = 1;
    c[mirror - j - 1] = -1;
    cols.push_back(std::move(c));
  }
  return cols;
}

std::string lower_name(CartanType t) {
  switch (t.family) {
    case CartanFamily::A: return "sl(" + std::to_string(t.rank + 1) + ")";
    case CartanFamily::B: return "so(" + std::to_string(2 * t.rank + 1) + ")";
    case CartanFamily::C: return "sp(" + std::to_string(2 * t.rank) + ")";
    case CartanFamily::D: return "so(" + std::to_string(2 * t.rank) + ")";
    case CartanFamily::E: return "e" + std::to_string(t.rank);
    case CartanFamily::F: return "f4";
    case CartanFamily::G: return "g2";
  }
  return t.name();
}

}  // namespace

std::string_view tag(FamilyKind kind) {
  for (const auto& [k, t] : kTags) {
    if (k == kind) return t;
  }
  return "unknown";
}

FamilyKind family_kind_from_tag(std::string_view t) {
  for (const auto& [k, name] : kTags) {
    if (name == t) return k;
  }
  throw std::invalid_argument("unknown pair tag '" + std::string(t) + "'");
}

void PairFamily::validate() const {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument(std::string(tag(kind)) + ": " + what);
  };
  switch (kind) {
    case FamilyKind::SlSoOdd:
      if (n < 1) fail("requires n >= 1");
      if (n > 32) fail("n too large");
      break;
    case FamilyKind::SlSoEven:
    case FamilyKind::SlSp:
      if (n < 2) fail("requires n >= 2");
      if (n > 32) fail("n too large");
      break;
    case FamilyKind::SoSoOddOdd:
      if (m < 1 || n < 0 || m + n < 2) fail("requires m >= 1, n >= 0, m + n >= 2");
      if (m + n > 64) fail("m + n too large");
      break;
    case FamilyKind::E6Sp8:
    case FamilyKind::E6F4: break;
    case FamilyKind::Diagonal:
      base.validate();
      if (base.rank > 32) fail("base rank too large");
      break;
    case FamilyKind::EqualRank: base.validate(); break;
  }
}

bool PairFamily::unequal_rank() const {
  return kind != FamilyKind::Diagonal && kind != FamilyKind::EqualRank;
}

std::string PairFamily::describe() const {
  auto num = [](int x) { return std::to_string(x); };
  switch (kind) {
    case FamilyKind::SlSoOdd: return "(sl(" + num(2 * n + 1) + "), so(" + num(2 * n + 1) + "))";
    case FamilyKind::SlSoEven: return "(sl(" + num(2 * n) + "), so(" + num(2 * n) + "))";
    case FamilyKind::SlSp: return "(sl(" + num(2 * n) + "), sp(" + num(2 * n) + "))";
    case FamilyKind::SoSoOddOdd:
      return "(so(" + num(2 * m + 2 * n) + "), so(" + num(2 * m - 1) + ")+so(" + num(2 * n + 1) + "))";
    case FamilyKind::E6Sp8: return "(e6, sp(8))";
    case FamilyKind::E6F4: return "(e6, f4)";
    case FamilyKind::Diagonal: {
      std::string g = lower_name(base);
      return "(" + g + "+" + g + ", " + g + ")";
    }
    case FamilyKind::EqualRank:
      return "(" + lower_name(base) + ", " + (subalgebra.empty() ? "equal-rank subalgebra" : subalgebra) + ")";
  }
  return "";
}

RatVector SymmetricPair::embed(std::span<const Rational> w) const {
  if (w.size() != hprime_dim) {
    throw std::invalid_argument("h' element has dimension " + std::to_string(w.size()) + ", expected " +
                                std::to_string(hprime_dim));
  }
  return embedding * w;
}

SymmetricPair build_pair(const PairFamily& family) {
  family.validate();
  SymmetricPair pair{.family = family};
  std::vector<RatVector> columns;
  switch (family.kind) {
    case FamilyKind::SlSoOdd: {
      const int n = family.n;
      pair.host = build_root_system(CartanType::A(2 * n));
      columns = mirrored_columns(pair.host.ambient_dim(), n, 2 * n + 2);
      break;
    }
    case FamilyKind::SlSoEven:
    case FamilyKind::SlSp: {
      // Both subalgebras share the Cartan diag(b1..bn,-bn..-b1) after conjugation.
      const int n = family.n;
      pair.host = build_root_system(CartanType::A(2 * n - 1));
      columns = mirrored_columns(pair.host.ambient_dim(), n, 2 * n + 1);
      break;
    }
    case FamilyKind::SoSoOddOdd: {
      const int total = family.m + family.n;
      pair.host = build_root_system(CartanType::D(total));
      for (int j = 0; j + 1 < total; ++j) columns.push_back(unit_vector(total, j));
      break;
    }
    case FamilyKind::E6Sp8:
      pair.host = build_root_system(CartanType::E6());
      columns = e6_sp8_columns();
      break;
    case FamilyKind::E6F4:
      pair.host = build_root_system(CartanType::E6());
      columns = e6_f4_columns();
      break;
    case FamilyKind::Diagonal: {
      RootSystem base = build_root_system(family.base);
      pair.host = direct_sum(base, base);
      for (const auto& v : cartan_basis(base)) {
        RatVector c = v;
        c.insert(c.end(), v.begin(), v.end());
        columns.push_back(std::move(c));
      }
      break;
    }
    case FamilyKind::EqualRank:
      pair.host = build_root_system(family.base);
      columns = cartan_basis(pair.host);
      break;
  }

  for (const auto& c : columns) pair.host.require_in_model(c);
  pair.hprime_dim = columns.size();
  pair.embedding = RatMatrix::from_columns(columns, pair.host.ambient_dim());
  if (rank(pair.embedding) != pair.hprime_dim) {
    throw std::logic_error("embedding columns are linearly dependent for " + family.describe());
  }
  pair.classes = restriction_classes(pair);
  return pair;
}

RestrictedFunctional restrict_root(const SymmetricPair& pair, const Root& root) {
  if (root.coeffs.size() != pair.host.ambient_dim()) {
    throw std::invalid_argument("root " + root.name + " does not belong to host " + pair.host.label());
  }
  return {pair.embedding.left_multiply(root.coeffs), root};
}

std::vector<std::vector<int>> restriction_classes(const SymmetricPair& pair) {
  std::vector<std::vector<int>> classes;
  std::vector<RatVector> representatives;
  for (int i = 1; i <= pair.rank(); ++i) {
    RatVector r = restrict_root(pair, pair.host.simple_root(i)).coeffs;
    std::size_t k = 0;
    while (k < representatives.size() && representatives[k] != r) ++k;
    if (k == representatives.size()) {
      representatives.push_back(std::move(r));
      classes.emplace_back();
    }
    classes[k].push_back(i);
  }
  return classes;
}

RatVector borel_witness(const SymmetricPair& pair) {
  const PairFamily& f = pair.family;
  RatVector w;
  switch (f.kind) {
    case FamilyKind::SlSoOdd:
    case FamilyKind::SlSoEven:
    case FamilyKind::SlSp:
      for (int k = f.n; k >= 1; --k) w.emplace_back(k);
      return w;
    case FamilyKind::SoSoOddOdd:
      for (int k = f.m + f.n - 1; k >= 1; --k) w.emplace_back(k);
      return w;
    case FamilyKind::E6Sp8: return make_vector({7, 10, 12, 13});
    case FamilyKind::E6F4: return make_vector({8, 15, 21, 11});
    case FamilyKind::Diagonal:
    case FamilyKind::EqualRank: break;
  }
  throw std::invalid_argument("no explicit Borel witness for " + std::string(tag(f.kind)));
}

std::vector<std::vector<int>> literal_paired_classes(const PairFamily& family) {
  family.validate();
  std::vector<std::vector<int>> out;
  switch (family.kind) {
    case FamilyKind::SlSoOdd:
      for (int k = 1; k <= family.n; ++k) out.push_back({k, 2 * family.n + 1 - k});
      break;
    case FamilyKind::SlSoEven:
    case FamilyKind::SlSp:
      for (int k = 1; k <= family.n - 1; ++k) out.push_back({k, 2 * family.n - k});
      break;
    case FamilyKind::SoSoOddOdd: {
      const int total = family.m + family.n;
      out.push_back({total - 1, total});
      break;
    }
    case FamilyKind::E6Sp8:
    case FamilyKind::E6F4:
      out = {{2, 6}, {3, 5}};
      break;
    case FamilyKind::Diagonal:
    case FamilyKind::EqualRank:
      throw std::invalid_argument("no closed-form class list for " + std::string(tag(family.kind)));
  }
  return out;
}

}  // namespace parcomp
