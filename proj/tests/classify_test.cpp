#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "parcomp/classify.hpp"

namespace parcomp {
namespace {

std::set<std::vector<int>> compatible_sets(const Classification& c) {
  std::set<std::vector<int>> out;
  for (const auto& r : c.results)
    if (r.compatible) out.insert(r.pi.indices());
  return out;
}

std::vector<PairFamily> catalog() {
  return {PairFamily::sl_so_odd(2),
          PairFamily::sl_so_odd(3),
          PairFamily::sl_so_even(2),
          PairFamily::sl_so_even(3),
          PairFamily::sl_sp(2),
          PairFamily::sl_sp(3),
          PairFamily::so_so(2, 1),
          PairFamily::so_so(2, 2),
          PairFamily::so_so(3, 1),
          PairFamily::e6_sp8(),
          PairFamily::e6_f4(),
          PairFamily::diagonal(CartanType::A(1)),
          PairFamily::diagonal(CartanType::A(2)),
          PairFamily::diagonal(CartanType::D(3)),
          PairFamily::equal_rank(CartanType::A(3)),
          PairFamily::equal_rank(CartanType::D(4)),
          PairFamily::equal_rank(CartanType::E6())};
}

TEST(CompatibilitySystem, SplitsByIndexSet) {
  auto p = build_pair(PairFamily::sl_so_odd(2));
  auto s = compatibility_system(p, ParabolicIndex({1, 4}));
  EXPECT_EQ(s.dim, 2u);
  EXPECT_EQ(s.equalities.size(), 2u);
  EXPECT_EQ(s.strict_positives.size(), 2u);
  EXPECT_THROW(compatibility_system(p, ParabolicIndex({5})), std::invalid_argument);
}

TEST(IsCompatible, Examples) {
  auto sl = build_pair(PairFamily::sl_so_odd(2));
  EXPECT_TRUE(is_compatible(sl, ParabolicIndex{}).compatible);
  EXPECT_TRUE(is_compatible(sl, ParabolicIndex({1, 4})).compatible);
  EXPECT_FALSE(is_compatible(sl, ParabolicIndex({1})).compatible);
  EXPECT_FALSE(is_compatible(sl, ParabolicIndex({1, 3})).compatible);

  auto f4 = build_pair(PairFamily::e6_f4());
  auto r = is_compatible(f4, ParabolicIndex({3, 5}));
  ASSERT_TRUE(r.compatible);
  EXPECT_EQ(*r.witness, make_vector({16, 29, 42, 24}));
  EXPECT_FALSE(is_compatible(f4, ParabolicIndex({3})).compatible);
}

TEST(IsCompatible, WitnessIsPrimitiveInteger) {
  for (const auto& f : catalog()) {
    auto c = classify_all(build_pair(f));
    for (const auto& r : c.results) {
      if (!r.compatible) {
        EXPECT_FALSE(r.witness.has_value());
        continue;
      }
      ASSERT_TRUE(r.witness && r.embedded_witness);
      for (const auto& x : *r.witness) EXPECT_TRUE(x.is_integer());
      EXPECT_EQ(primitive(*r.witness), *r.witness);
    }
  }
}

TEST(ClassifyAll, Counts) {
  EXPECT_EQ(classify_all(build_pair(PairFamily::sl_so_odd(2))).compatible_count, 4u);
  auto e6 = classify_all(build_pair(PairFamily::e6_sp8()));
  EXPECT_EQ(e6.total(), 64u);
  EXPECT_EQ(e6.compatible_count, 16u);
  EXPECT_EQ(classify_all(build_pair(PairFamily::so_so(2, 1))).compatible_count, 4u);
}

TEST(ClassifyAll, CanonicalOrder) {
  auto c = classify_all(build_pair(PairFamily::sl_so_odd(2)));
  for (std::size_t m = 0; m < c.results.size(); ++m) EXPECT_EQ(c.results[m].pi.mask(), m);
  std::set<std::vector<int>> expected{{}, {1, 4}, {2, 3}, {1, 2, 3, 4}};
  EXPECT_EQ(compatible_sets(c), expected);
}

TEST(ClassifyAll, DeterministicAcrossJobCounts) {
  auto p = build_pair(PairFamily::e6_f4());
  auto one = classify_all(p, 1);
  for (unsigned jobs : {2u, 3u, 8u}) {
    auto many = classify_all(p, jobs);
    ASSERT_EQ(many.results.size(), one.results.size());
    for (std::size_t i = 0; i < one.results.size(); ++i) {
      EXPECT_EQ(many.results[i].pi, one.results[i].pi);
      EXPECT_EQ(many.results[i].compatible, one.results[i].compatible);
      EXPECT_EQ(many.results[i].witness, one.results[i].witness);
    }
  }
}

TEST(ClassifyAll, RefusesLargeRank) {
  auto p = build_pair(PairFamily::sl_so_odd(11));
  EXPECT_EQ(p.rank(), 22);
  EXPECT_THROW(classify_all(p), std::invalid_argument);
  EXPECT_THROW(cross_check(p), std::invalid_argument);
}

TEST(CrossCheck, NoMismatchesOnCatalog) {
  for (const auto& f : catalog()) {
    auto report = cross_check(build_pair(f));
    EXPECT_TRUE(report.ok()) << f.describe();
    EXPECT_EQ(report.oracle_compatible, report.predicate_compatible);
  }
}

TEST(Properties, WitnessesVerifyAndExpandOverCoweights) {
  for (const auto& f : catalog()) {
    auto p = build_pair(f);
    for (const auto& r : classify_all(p).results) {
      if (!r.compatible) continue;
      EXPECT_TRUE(verify_witness(p, r.pi, *r.witness)) << f.describe() << " " << r.pi.str();
      const RatVector& h = *r.embedded_witness;
      EXPECT_EQ(coweight_expansion(p.host, h), h);
      RatVector values = p.host.simple_values(h);
      for (int i = 1; i <= p.rank(); ++i) EXPECT_EQ(values[i - 1].is_zero(), r.pi.contains(i));
    }
  }
}

TEST(Properties, BorelAndFullSetAlwaysCompatible) {
  for (const auto& f : catalog()) {
    auto p = build_pair(f);
    EXPECT_TRUE(is_compatible(p, ParabolicIndex{}).compatible) << f.describe();
    EXPECT_TRUE(is_compatible(p, ParabolicIndex::all(p.rank())).compatible) << f.describe();
  }
}

TEST(Properties, SymplecticMatchesOrthogonalEven) {
  for (int n : {2, 3}) {
    auto sp = classify_all(build_pair(PairFamily::sl_sp(n)));
    auto so = classify_all(build_pair(PairFamily::sl_so_even(n)));
    EXPECT_EQ(compatible_sets(sp), compatible_sets(so));
  }
}

TEST(Properties, F4MatchesSp8) {
  EXPECT_EQ(compatible_sets(classify_all(build_pair(PairFamily::e6_f4()))),
            compatible_sets(classify_all(build_pair(PairFamily::e6_sp8()))));
}

TEST(Properties, DiagonalCompatibleIffHalvesAgree) {
  auto p = build_pair(PairFamily::diagonal(CartanType::A(2)));
  for (const auto& r : classify_all(p).results) {
    auto [a, b] = split_diagonal(p, r.pi);
    EXPECT_EQ(r.compatible, a == b) << r.pi.str();
  }
  EXPECT_THROW(split_diagonal(build_pair(PairFamily::sl_so_odd(1)), ParabolicIndex{}), std::invalid_argument);
}

TEST(VerifyWitness, Examples) {
  auto p = build_pair(PairFamily::sl_so_odd(2));
  EXPECT_TRUE(verify_witness(p, ParabolicIndex{}, make_vector({2, 1})));
  EXPECT_FALSE(verify_witness(p, ParabolicIndex{}, make_vector({1, 1})));
  EXPECT_TRUE(verify_witness(p, ParabolicIndex({1, 4}), make_vector({1, 1})));
  EXPECT_THROW(verify_witness(p, ParabolicIndex{}, make_vector({1})), std::invalid_argument);

  auto sp8 = build_pair(PairFamily::e6_sp8());
  EXPECT_TRUE(verify_witness(sp8, ParabolicIndex{}, make_vector({7, 10, 12, 13})));
}

}  // namespace
}  // namespace parcomp
