#include "parcomp/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace parcomp {

namespace {

struct LexLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Indices of the input constraints a derived constraint was combined from.
using History = std::vector<bool>;

std::size_t weight(const History& h) { return static_cast<std::size_t>(std::count(h.begin(), h.end(), true)); }

History merge(const History& a, const History& b) {
  History out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

// Constraints g·y > 0, deduplicated up to positive scaling.
using ConstraintSet = std::map<RatVector, History, LexLess>;

void insert_normalized(ConstraintSet& set, std::span<const Rational> g, History history) {
  auto [it, inserted] = set.try_emplace(primitive(g), history);
  if (!inserted && weight(history) < weight(it->second)) it->second = std::move(history);
}

bool has_zero_functional(const ConstraintSet& set) {
  for (const auto& [g, h] : set) {
    if (is_zero(g)) return true;
  }
  return false;
}

// Chernikov's rule: after `eliminated` eliminations a combination of more than
// eliminated + 1 inputs is implied by the others and can be dropped.
ConstraintSet eliminate(const ConstraintSet& current, std::size_t var, std::size_t eliminated) {
  ConstraintSet next;
  std::vector<ConstraintSet::const_pointer> pos, neg;
  for (const auto& entry : current) {
    int s = entry.first[var].sign();
    if (s > 0) {
      pos.push_back(&entry);
    } else if (s < 0) {
      neg.push_back(&entry);
    } else {
      next.insert(entry);
    }
  }
  for (auto p : pos) {
    for (auto n : neg) {
      // (-n_var)·p + p_var·n cancels the variable; both multipliers are positive.
      RatVector combo = scale(-n->first[var], p->first);
      axpy(p->first[var], n->first, combo);
      combo[var] = 0;
      History history = merge(p->second, n->second);
      // A zero combination certifies infeasibility and is never redundant.
      if (weight(history) > eliminated + 1 && !is_zero(combo)) continue;
      insert_normalized(next, combo, std::move(history));
    }
  }
  return next;
}

}  // namespace

void StrictSystem::validate() const {
  for (const auto& l : equalities) {
    if (l.size() != dim) throw std::invalid_argument("equality functional has wrong dimension");
  }
  for (const auto& l : strict_positives) {
    if (l.size() != dim) throw std::invalid_argument("strict functional has wrong dimension");
  }
}

FeasibilityOutcome decide(const StrictSystem& sys) {
  sys.validate();

  // x = N·y parameterizes the solutions of the equalities.
  std::vector<RatVector> basis;
  if (sys.equalities.empty()) {
    for (std::size_t k = 0; k < sys.dim; ++k) basis.push_back(unit_vector(sys.dim, k));
  } else {
    basis = null_space(RatMatrix::from_rows(sys.equalities, sys.dim));
  }
  const std::size_t vars = basis.size();
  RatMatrix param = RatMatrix::from_columns(basis, sys.dim);

  ConstraintSet current;
  const std::size_t inputs = sys.strict_positives.size();
  for (std::size_t i = 0; i < inputs; ++i) {
    History h(inputs);
    h[i] = true;
    insert_normalized(current, param.left_multiply(sys.strict_positives[i]), std::move(h));
  }

  // levels[k] holds the system in which variables 0..k-1 are already eliminated.
  std::vector<ConstraintSet> levels;
  levels.reserve(vars);
  for (std::size_t k = 0; k < vars; ++k) {
    if (has_zero_functional(current)) return {};
    levels.push_back(current);
    current = eliminate(current, k, k + 1);
  }
  // No variables left: anything remaining reads 0 > 0.
  if (!current.empty()) return {};

  RatVector y = zero_vector(vars);
  for (std::size_t k = vars; k-- > 0;) {
    std::optional<Rational> lower, upper;
    for (const auto& [g, history] : levels[k]) {
      const Rational& coef = g[k];
      if (coef.is_zero()) continue;
      Rational rest;
      for (std::size_t j = k + 1; j < vars; ++j) {
        if (!g[j].is_zero()) rest += g[j] * y[j];
      }
      Rational bound = -rest / coef;
      if (coef.sign() > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper) {
      y[k] = (*lower + *upper) / Rational(2);
    } else if (lower) {
      y[k] = *lower + Rational(1);
    } else if (upper) {
      y[k] = *upper - Rational(1);
    } else {
      y[k] = 0;
    }
  }

  RatVector x = param * y;
  if (!verify_solution(sys, x)) {
    throw std::logic_error("feasibility back-substitution produced an invalid witness " + to_string(x));
  }
  return FeasibilityOutcome{std::move(x)};
}

bool verify_solution(const StrictSystem& sys, std::span<const Rational> x) {
  sys.validate();
  if (x.size() != sys.dim) {
    throw std::invalid_argument("candidate has dimension " + std::to_string(x.size()) + ", system has " +
                                std::to_string(sys.dim));
  }
  for (const auto& l : sys.equalities) {
    if (!dot(l, x).is_zero()) return false;
  }
  for (const auto& l : sys.strict_positives) {
    if (dot(l, x).sign() <= 0) return false;
  }
  return true;
}

}  // namespace parcomp
