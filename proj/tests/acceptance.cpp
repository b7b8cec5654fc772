// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "parcomp/classify.hpp"
#include "support/oracles.hpp"

namespace {

using namespace parcomp;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what;
      ok = false;
    }
  }
};

// Every system decided in criteria 1-9, for the solver audit in criterion 11.
std::size_t g_systems = 0;
std::size_t g_bad_systems = 0;
// Witnesses produced in criteria 1-6, for the expansion identity in criterion 7.
std::size_t g_expansions = 0;
std::size_t g_bad_expansions = 0;

void audit_systems(const SymmetricPair& pair) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair.rank()); ++mask) {
    StrictSystem sys = compatibility_system(pair, ParabolicIndex::from_mask(mask));
    FeasibilityOutcome out = decide(sys);
    ++g_systems;
    if (out.feasible() && !verify_solution(sys, *out.witness)) ++g_bad_systems;
  }
}

void audit_expansion(const RootSystem& rs, const ParabolicIndex& pi, const RatVector& h) {
  ++g_expansions;
  RatVector values = rs.simple_values(h);
  bool ok = coweight_expansion(rs, h) == h;
  for (int i = 1; i <= rs.rank(); ++i) ok = ok && (values[i - 1].is_zero() == pi.contains(i));
  if (!ok) ++g_bad_expansions;
}

std::set<std::uint64_t> compatible_masks(const Classification& c) {
  std::set<std::uint64_t> out;
  for (const auto& r : c.results)
    if (r.compatible) out.insert(r.pi.mask());
  return out;
}

// Classifies, audits, and compares against an independent predicate on index sets.
Classification run_family(Check& check, const PairFamily& f, const std::function<bool(const ParabolicIndex&)>& pred,
                          std::size_t expected_count) {
  SymmetricPair pair = build_pair(f);
  Classification c = classify_all(pair);
  audit_systems(pair);
  for (const auto& r : c.results) {
    check.expect(r.compatible == pred(r.pi), f.describe() + " disagrees at " + r.pi.str());
    if (r.compatible) {
      check.expect(verify_witness(pair, r.pi, *r.witness), f.describe() + " bad witness at " + r.pi.str());
      audit_expansion(pair.host, r.pi, *r.embedded_witness);
    }
  }
  check.expect(c.compatible_count == expected_count, f.describe() + " count " + std::to_string(c.compatible_count));
  check.detail << (check.detail.tellp() > 0 ? "; " : "") << f.describe() << " " << c.compatible_count << "/"
               << c.total();
  return c;
}

bool paired(const ParabolicIndex& pi, int a, int b) { return pi.contains(a) == pi.contains(b); }

Check criterion1() {
  Check c;
  for (int n : {2, 3}) {
    auto pred = [n](const ParabolicIndex& pi) {
      for (int k = 1; k <= 2 * n; ++k)
        if (!paired(pi, k, 2 * n + 1 - k)) return false;
      return true;
    };
    run_family(c, PairFamily::sl_so_odd(n), pred, std::size_t{1} << n);
  }
  return c;
}

Check criterion2() {
  Check c;
  for (int n : {2, 3}) {
    auto pred = [n](const ParabolicIndex& pi) {
      for (int k = 1; k <= 2 * n - 1; ++k)
        if (!paired(pi, k, 2 * n - k)) return false;
      return true;
    };
    auto so = run_family(c, PairFamily::sl_so_even(n), pred, std::size_t{1} << n);
    auto sp = run_family(c, PairFamily::sl_sp(n), pred, std::size_t{1} << n);
    c.expect(compatible_masks(so) == compatible_masks(sp), "so/sp classifications differ at n=" + std::to_string(n));
  }
  return c;
}

Check criterion3() {
  Check c;
  std::set<std::uint64_t> rank4[2];
  int slot = 0;
  for (auto [m, n, count] : {std::tuple{2, 1, 4}, std::tuple{2, 2, 8}, std::tuple{3, 1, 8}}) {
    const int total = m + n;
    auto pred = [total](const ParabolicIndex& pi) { return paired(pi, total - 1, total); };
    auto cls = run_family(c, PairFamily::so_so(m, n), pred, count);
    if (total == 4) rank4[slot++] = compatible_masks(cls);
  }
  c.expect(rank4[0] == rank4[1], "(2,2) and (3,1) differ");
  return c;
}

bool e6_pred(const ParabolicIndex& pi) { return paired(pi, 2, 6) && paired(pi, 3, 5); }

std::set<std::uint64_t> g_e6_sp8;

Check criterion4() {
  Check c;
  g_e6_sp8 = compatible_masks(run_family(c, PairFamily::e6_sp8(), e6_pred, 16));
  SymmetricPair p = build_pair(PairFamily::e6_sp8());
  auto r = [&](int i) { return restrict_root(p, p.host.simple_root(i)).coeffs; };
  c.expect(r(2) == r(6), "alpha_2 != alpha_6 on h'");
  c.expect(r(3) == r(5), "alpha_3 != alpha_5 on h'");
  return c;
}

Check criterion5() {
  Check c;
  auto f4 = compatible_masks(run_family(c, PairFamily::e6_f4(), e6_pred, 16));
  c.expect(f4 == g_e6_sp8, "f4 and sp(8) classifications differ");
  SymmetricPair p = build_pair(PairFamily::e6_f4());
  struct Dual {
    std::initializer_list<long long> betas;
    std::initializer_list<long long> values;
  };
  for (const Dual& d : {Dual{{1, 2, 3, 2}, {1, 0, 0, 0, 0, 0}}, Dual{{2, 3, 4, 2}, {0, 1, 0, 0, 0, 1}},
                        Dual{{3, 6, 8, 4}, {0, 0, 1, 0, 1, 0}}, Dual{{2, 4, 6, 3}, {0, 0, 0, 1, 0, 0}}}) {
    RatVector got = p.host.simple_values(p.embed(make_vector(d.betas)));
    c.expect(got == make_vector(d.values), "T element " + to_string(make_vector(d.betas)) + " gives " + to_string(got));
  }
  c.detail << "; four T elements dual";
  return c;
}

Check criterion6() {
  Check c;
  auto borel = [&](const PairFamily& f, const RatVector& expected_h) {
    SymmetricPair p = build_pair(f);
    RatVector w = borel_witness(p);
    RatVector h = p.embed(w);
    c.expect(h == expected_h, f.describe() + " witness embeds as " + to_string(h));
    c.expect(verify_witness(p, ParabolicIndex{}, w), f.describe() + " witness rejected");
    audit_expansion(p.host, ParabolicIndex{}, h);
    return p.host.simple_values(h);
  };
  for (int n : {2, 3}) {
    RatVector odd, even;
    for (int k = n; k >= -n; --k) odd.emplace_back(k);
    for (int k = n; k >= -n; --k)
      if (k != 0) even.emplace_back(k);
    borel(PairFamily::sl_so_odd(n), odd);
    borel(PairFamily::sl_so_even(n), even);
    borel(PairFamily::sl_sp(n), even);
  }
  // (2,1,0) in the D(3) model stands for diag(2,1,0,0,-1,-2).
  borel(PairFamily::so_so(2, 1), make_vector({2, 1, 0}));
  RatVector sp8 = borel(PairFamily::e6_sp8(), build_pair(PairFamily::e6_sp8()).embed(make_vector({7, 10, 12, 13})));
  RatVector f4 = borel(PairFamily::e6_f4(), build_pair(PairFamily::e6_f4()).embed(make_vector({8, 15, 21, 11})));
  c.expect(sp8 == make_vector({1, 1, 1, 2, 1, 1}), "sp(8) values " + to_string(sp8));
  c.expect(f4 == make_vector({1, 1, 1, 1, 1, 1}), "f4 values " + to_string(f4));
  c.detail << "sp(8) values " << to_string(sp8) << "; f4 values " << to_string(f4);
  return c;
}

Check criterion7() {
  Check c;
  std::mt19937_64 rng(7);
  int trials = 0;
  for (const char* label : {"A4", "D4", "E6"}) {
    RootSystem rs = build_root_system(label);
    std::uniform_int_distribution<std::uint64_t> masks(0, (std::uint64_t{1} << rs.rank()) - 1);
    std::uniform_int_distribution<int> num(1, 12), den(1, 9);
    for (int t = 0; t < 100; ++t, ++trials) {
      ParabolicIndex pi = ParabolicIndex::from_mask(masks(rng));
      RatVector h = zero_vector(rs.ambient_dim());
      for (int i = 1; i <= rs.rank(); ++i)
        if (!pi.contains(i)) axpy(Rational(BigInt(num(rng)), BigInt(den(rng))), rs.coweights()[i - 1], h);
      auto got = parabolic_from_hyperbolic(rs, h);
      c.expect(std::holds_alternative<ParabolicIndex>(got) && std::get<ParabolicIndex>(got) == pi,
               std::string(label) + " trial " + std::to_string(t) + " pi " + pi.str());
    }
  }
  c.expect(g_expansions > 0, "no witnesses collected");
  c.expect(g_bad_expansions == 0, std::to_string(g_bad_expansions) + " witnesses fail the expansion identity");
  c.detail << trials << " hyperbolic trials; expansion identity on " << g_expansions << " witnesses";
  return c;
}

Check criterion8() {
  Check c;
  for (int n : {1, 2, 3}) {
    PairFamily f = PairFamily::diagonal(CartanType::A(n));
    SymmetricPair pair = build_pair(f);
    audit_systems(pair);
    Classification cls = classify_all(pair);
    std::size_t agree = 0;
    for (const auto& r : cls.results) {
      auto [a, b] = split_diagonal(pair, r.pi);
      bool ok = r.compatible == (a == b);
      c.expect(ok, f.describe() + " at " + r.pi.str());
      if (ok) ++agree;
    }
    c.expect(cls.compatible_count == (std::size_t{1} << n), f.describe() + " count");
    c.detail << (n > 1 ? "; " : "") << "A" << n << ": " << agree << "/" << cls.total() << " pairs agree";
  }
  return c;
}

Check criterion9() {
  Check c;
  for (CartanType host : {CartanType::A(3), CartanType::D(4), CartanType::E6()}) {
    std::size_t total = std::size_t{1} << host.rank;
    run_family(c, PairFamily::equal_rank(host), [](const ParabolicIndex&) { return true; }, total);
  }
  return c;
}

Check criterion10() {
  Check c;
  auto duality = [&](const RootSystem& rs) {
    RatMatrix m(rs.rank(), rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) m(i, j) = rs.simple_roots()[i](rs.coweights()[j]);
    c.expect(m == RatMatrix::identity(rs.rank()), rs.label() + " duality matrix");
  };
  for (int n = 1; n <= 6; ++n) {
    RootSystem rs = build_root_system(CartanType::A(n));
    c.expect(rs.positive_roots().size() == static_cast<std::size_t>(n * (n + 1) / 2), rs.label() + " root count");
    duality(rs);
  }
  for (int n = 2; n <= 6; ++n) {
    RootSystem rs = build_root_system(CartanType::D(n));
    c.expect(rs.positive_roots().size() == static_cast<std::size_t>(n * (n - 1)), rs.label() + " root count");
    duality(rs);
  }
  RootSystem e6 = build_root_system(CartanType::E6());
  c.expect(e6.positive_roots().size() == 36, "E6 root count");
  std::vector<std::vector<int>> cartan(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) cartan[i][j] = static_cast<int>(e6.cartan_matrix()(i, j).num());
  c.expect(oracle::simply_laced_positive_roots(cartan, 3).size() == 36, "E6 brute-force count");
  duality(e6);
  c.detail << "A1-A6, D2-D6, E6 counts and duality";
  return c;
}

Check criterion11() {
  Check c;
  c.expect(g_systems >= 400, "only " + std::to_string(g_systems) + " systems audited");
  c.expect(g_bad_systems == 0, std::to_string(g_bad_systems) + " witnesses fail verify_solution");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dims(1, 6), counts(1, 8);
  int feasible = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t dim = dims(rng);
    RatVector x0 = oracle::random_int_vector(rng, dim, -6, 6);
    StrictSystem sys{dim, {}, {}};
    for (int k = counts(rng); k > 0; --k) {
      RatVector l = oracle::random_int_vector(rng, dim, -4, 4);
      Rational v = dot(l, x0);
      if (v.sign() != 0) sys.strict_positives.push_back(v.sign() > 0 ? l : scale(Rational(-1), l));
      else sys.equalities.push_back(l);
    }
    FeasibilityOutcome out = decide(sys);
    bool ok = out.feasible() && verify_solution(sys, *out.witness);
    c.expect(ok, "random system " + std::to_string(t));
    if (ok) ++feasible;
  }
  c.detail << g_systems << " systems audited; " << feasible << "/200 witness-first systems feasible";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"1  sl(2n+1)/so(2n+1) pairing k<->2n+1-k", criterion1},
      {"2  sl(2n)/so(2n) and sl(2n)/sp(2n) agree", criterion2},
      {"3  so(2m+2n)/so(2m-1)+so(2n+1) last pair", criterion3},
      {"4  e6/sp(8) unions of {1},{4},{2,6},{3,5}", criterion4},
      {"5  e6/f4 matches e6/sp(8), dual elements", criterion5},
      {"6  explicit Borel witnesses", criterion6},
      {"7  hyperbolic elements and coweight expansion", criterion7},
      {"8  diagonal pairs compatible iff halves agree", criterion8},
      {"9  equal-rank identity embeddings", criterion9},
      {"10 root counts and coweight duality", criterion10},
      {"11 feasibility solver audit", criterion11},
  };
  auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check result;
    try {
      result = fn();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail << "exception: " << e.what();
    }
    if (!result.ok) ++failures;
    std::cout << (result.ok ? "[PASS] " : "[FAIL] ") << "criterion " << name << " -- " << result.detail.str()
              << std::endl;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              secs);
  return failures == 0 ? 0 : 1;
}
