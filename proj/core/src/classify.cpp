#include "parcomp/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace parcomp {

namespace {

void require_enumerable(const SymmetricPair& pair) {
  if (pair.rank() > kMaxEnumerationRank) {
    throw std::invalid_argument("refusing to enumerate 2^" + std::to_string(pair.rank()) +
                                " subsets (host rank above " + std::to_string(kMaxEnumerationRank) + ")");
  }
}

template <typename Fn>
void for_each_mask(std::uint64_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(mask);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::uint64_t mask = next++; mask < count; mask = next++) {
        try {
          fn(mask);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

StrictSystem compatibility_system(const SymmetricPair& pair, const ParabolicIndex& pi) {
  pi.validate(pair.rank());
  StrictSystem sys;
  sys.dim = pair.hprime_dim;
  for (int i = 1; i <= pair.rank(); ++i) {
    RatVector r = restrict_root(pair, pair.host.simple_root(i)).coeffs;
    (pi.contains(i) ? sys.equalities : sys.strict_positives).push_back(std::move(r));
  }
  return sys;
}

CompatibilityResult is_compatible(const SymmetricPair& pair, const ParabolicIndex& pi) {
  CompatibilityResult result{.pi = pi};
  FeasibilityOutcome outcome = decide(compatibility_system(pair, pi));
  if (outcome.feasible()) {
    result.compatible = true;
    result.witness = primitive(*outcome.witness);
    result.embedded_witness = pair.embed(*result.witness);
  }
  return result;
}

bool class_predicate(const SymmetricPair& pair, const ParabolicIndex& pi) {
  pi.validate(pair.rank());
  switch (pair.family.kind) {
    case FamilyKind::EqualRank: return true;
    case FamilyKind::Diagonal: {
      auto [first, second] = split_diagonal(pair, pi);
      return first == second;
    }
    default: break;
  }
  for (const auto& cls : pair.classes) {
    auto hits = std::count_if(cls.begin(), cls.end(), [&](int i) { return pi.contains(i); });
    if (hits != 0 && hits != static_cast<long>(cls.size())) return false;
  }
  return true;
}

Classification classify_all(const SymmetricPair& pair, unsigned jobs) {
  require_enumerable(pair);
  const std::uint64_t count = std::uint64_t{1} << pair.rank();
  Classification c{pair, std::vector<CompatibilityResult>(count), 0};
  for_each_mask(count, jobs, [&](std::uint64_t mask) {
    c.results[mask] = is_compatible(pair, ParabolicIndex::from_mask(mask));
  });
  c.compatible_count = static_cast<std::size_t>(
      std::count_if(c.results.begin(), c.results.end(), [](const auto& r) { return r.compatible; }));
  return c;
}

CrossCheckReport cross_check(const SymmetricPair& pair, unsigned jobs) {
  Classification c = classify_all(pair, jobs);
  CrossCheckReport report;
  report.total = c.total();
  report.oracle_compatible = c.compatible_count;
  for (const auto& r : c.results) {
    bool predicted = class_predicate(pair, r.pi);
    if (predicted) ++report.predicate_compatible;
    if (predicted != r.compatible) report.mismatches.push_back(r.pi);
  }
  return report;
}

bool verify_witness(const SymmetricPair& pair, const ParabolicIndex& pi, std::span<const Rational> w) {
  pi.validate(pair.rank());
  RatVector h = pair.embed(w);
  RatVector values = pair.host.simple_values(h);
  for (int i = 1; i <= pair.rank(); ++i) {
    const Rational& v = values[i - 1];
    if (pi.contains(i) ? !v.is_zero() : v.sign() <= 0) return false;
  }
  return true;
}

RatVector coweight_expansion(const RootSystem& rs, std::span<const Rational> h) {
  RatVector values = rs.simple_values(h);
  RatVector sum = zero_vector(rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i) axpy(values[i], rs.coweights()[i], sum);
  return sum;
}

std::pair<ParabolicIndex, ParabolicIndex> split_diagonal(const SymmetricPair& pair, const ParabolicIndex& pi) {
  if (pair.family.kind != FamilyKind::Diagonal) throw std::invalid_argument("not a diagonal pair");
  const int base_rank = pair.rank() / 2;
  std::vector<int> first, second;
  for (int i : pi.indices()) (i <= base_rank ? first : second).push_back(i <= base_rank ? i : i - base_rank);
  return {ParabolicIndex(std::move(first)), ParabolicIndex(std::move(second))};
}

}  // namespace parcomp
