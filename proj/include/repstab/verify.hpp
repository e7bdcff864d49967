#pragma once

#include <string>
#include <vector>

#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/stable.hpp"

namespace repstab {

/// |Z(c_mu)| = prod_j mu_j! j^{mu_j} for mu = 1^{mu_1} 2^{mu_2} ...
inline Integer centralizer_order(const Partition& mu) {
  Integer order = 1;
  const auto counts = mu.cycle_counts();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), k + 1, static_cast<unsigned long>(counts[k]));
    order *= factorial(static_cast<unsigned long>(counts[k])) * power;
  }
  return order;
}

/// dim H^i(PConf_n(C); C) = sum over partitions mu of n with exactly n - i
/// parts of n! / |Z(c_mu)|. Requires n >= 1 and 0 <= i <= n - 1.
inline Integer dim_hi(int i, int n) {
  if (n < 1 || i < 0 || i > n - 1) {
    throw std::out_of_range("dim_hi: need n >= 1 and 0 <= i <= n - 1 (got i=" + std::to_string(i) +
                            ", n=" + std::to_string(n) + ")");
  }
  const Integer n_factorial = factorial(static_cast<unsigned long>(n));
  Integer total = 0;
  for (const Partition& mu : enumerate_partitions(n)) {
    if (mu.length() == n - i) total += n_factorial / centralizer_order(mu);
  }
  return total;
}

struct DimensionReport {
  int i = 0;
  int n = 0;
  Integer lhs;  ///< sum_lambda d_i(lambda) g_lambda(n)
  Integer rhs;  ///< dim H^i(PConf_n)
  bool pass = false;
};

/// Checks sum_{|lambda| <= 2i} d_i(lambda) g_lambda(n) = dim H^i(PConf_n) at
/// an n where the multiplicities have stabilized (n >= 3i + 1).
inline DimensionReport verify_dimension_consistency(Engine& engine, int i, int n) {
  if (i < 0 || n < 3 * i + 1) {
    throw std::out_of_range("verify_dimension_consistency: need n >= 3i + 1 (got i=" +
                            std::to_string(i) + ", n=" + std::to_string(n) + ")");
  }
  DimensionReport report;
  report.i = i;
  report.n = n;
  Rational lhs;
  for (const auto& [lambda, multiplicity] : engine.cohomology_decomposition(i).entries) {
    const Polynomial g = stable_dimension_poly(lambda, engine.characters());
    lhs += Rational(multiplicity) * g.evaluate(Rational(n));
  }
  report.lhs = lhs.to_integer();
  report.rhs = dim_hi(i, n);
  report.pass = report.lhs == report.rhs;
  return report;
}

/// A violated vanishing/sign property (fatal) or an observation about the computed range.
struct Finding {
  std::string kind;
  Partition partition;
  int degree = 0;
  std::string detail;
};

struct VerificationSummary {
  int max_i = 0;
  int sweep_degree = 0;
  std::vector<DimensionReport> reports;
  std::vector<Finding> violations;
  std::vector<Finding> observations;

  bool passed() const {
    for (const auto& r : reports) {
      if (!r.pass) return false;
    }
    return violations.empty();
  }
};

/// Dimension identity at n = 3i+1 and 3i+2 for i = 0..max_i, plus sweeps
/// over every |lambda| <= 2 max_i through z^{2 max_i}:
///  - d_i(lambda) = 0 for i < |lambda|/2 and for i < length(lambda);
///  - integrality and sign of every coefficient (checked during assembly).
/// Non-decreasing d_i for nonempty lambda, and d_i(V(0)) = 0 for i >= 2, are
/// recorded as observations only.
inline VerificationSummary verify_all(Engine& engine, int max_i) {
  if (max_i < 0) throw std::invalid_argument("verify_all: max i must be >= 0");
  VerificationSummary summary;
  summary.max_i = max_i;
  summary.sweep_degree = 2 * max_i;
  for (int i = 0; i <= max_i; ++i) {
    for (const int n : {3 * i + 1, 3 * i + 2}) {
      summary.reports.push_back(verify_dimension_consistency(engine, i, n));
    }
  }

  const int degree = summary.sweep_degree;
  const auto lambdas = enumerate_partitions_up_to(2 * max_i);
  engine.warm(2 * max_i, degree);
  for (const Partition& lambda : lambdas) {
    StableSeries s;
    try {
      s = engine.stable_coefficients(lambda, degree);
    } catch (const ConsistencyError& e) {
      summary.violations.push_back({"sign/integrality", lambda, -1, e.what()});
      continue;
    }
    const int k = lambda.size();
    for (int i = 0; i <= degree; ++i) {
      if (2 * i < k && s.d(i) != 0) {
        summary.violations.push_back(
            {"vanishing below |lambda|/2", lambda, i, "d_i = " + s.d(i).get_str()});
      }
      if (i < lambda.length() && s.d(i) != 0) {
        summary.violations.push_back(
            {"vanishing below length", lambda, i, "d_i = " + s.d(i).get_str()});
      }
      if (k > 0 && i < degree && s.d(i) > s.d(i + 1)) {
        summary.observations.push_back({"decrease", lambda, i,
                                        "d_i = " + s.d(i).get_str() + " > d_{i+1} = " +
                                            s.d(i + 1).get_str()});
      }
      if (k == 0 && i >= 2 && s.d(i) != 0) {
        summary.observations.push_back(
            {"trivial family nonzero", lambda, i, "d_i = " + s.d(i).get_str()});
      }
    }
  }
  return summary;
}

}  // namespace repstab
