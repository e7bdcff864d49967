// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "oracles.hpp"
#include "repstab/cli.hpp"
#include "repstab/repstab.hpp"
#include "test_support.hpp"

using namespace repstab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Partition padded(const Partition& lambda, int n) {
  std::vector<int> parts{n - lambda.size()};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(parts);
}

// 1. Six published series through z^30, exact.
Outcome golden_series() {
  Engine engine;
  int mismatches = 0;
  for (const auto& [name, text] : golden::series_through_30()) {
    auto expected = support::parse_signed_series(text);
    expected.resize(31);
    if (engine.stable_coefficients(parse_partition(name), 30).signed_coefficients() != expected) ++mismatches;
  }
  return {mismatches == 0, std::to_string(golden::series_through_30().size()) + " families, " +
                               std::to_string(mismatches) + " mismatching"};
}

// 2. Published decompositions of H^0 .. H^5.
Outcome golden_decompositions() {
  Engine engine;
  std::string failed;
  std::size_t terms = 0;
  for (const auto& [i, expected] : golden::decompositions()) {
    std::string got;
    const auto d = engine.cohomology_decomposition(i);
    for (const auto& [lambda, m] : d.entries) {
      if (!got.empty()) got += ' ';
      got += lambda.to_string() + ":" + m.get_str();
    }
    terms += d.entries.size();
    if (got != expected) failed += " H^" + std::to_string(i);
  }
  return {failed.empty(), failed.empty() ? "i=0..5, " + std::to_string(terms) + " terms match"
                                         : "mismatch in" + failed};
}

struct Sweep {
  std::vector<StableSeries> series;
  int consistency_errors = 0;
  std::string first_error;
};

// |lambda| <= 10 through z^20; assembly raises ConsistencyError on a
// non-integral or wrongly signed coefficient.
const Sweep& sweep() {
  static const Sweep result = [] {
    Sweep s;
    Engine engine;
    engine.warm(10, 20);
    for (const Partition& lambda : enumerate_partitions_up_to(10)) {
      try {
        s.series.push_back(engine.stable_coefficients(lambda, 20));
      } catch (const ConsistencyError& e) {
        if (s.consistency_errors++ == 0) s.first_error = e.what();
      }
    }
    return s;
  }();
  return result;
}

Outcome vanishing(const std::function<bool(const Partition&, int)>& must_vanish) {
  const Sweep& s = sweep();
  int checked = 0, nonzero = 0;
  for (const StableSeries& row : s.series) {
    for (int i = 0; i <= row.max_degree; ++i) {
      if (!must_vanish(row.partition, i)) continue;
      ++checked;
      if (row.d(i) != 0) ++nonzero;
    }
  }
  const bool complete = s.consistency_errors == 0;
  return {complete && nonzero == 0 && checked > 0,
          std::to_string(checked) + " (lambda, i) pairs, " + std::to_string(nonzero) + " nonzero" +
              (complete ? "" : ", sweep incomplete")};
}

// 5. Assembly-time assertion over the sweep, plus an independent check of the
// plain series path for |lambda| <= 6.
Outcome sign_integrality() {
  const Sweep& s = sweep();
  Engine engine;
  int bad = 0, coefficients = 0;
  for (const Partition& lambda : enumerate_partitions_up_to(6)) {
    const LaurentSeries reference = engine.stable_series_reference(lambda, 20);
    for (int i = 0; i <= 20; ++i) {
      const Rational& c = reference.coefficient(i);
      ++coefficients;
      if (!c.is_integer() || c.sign() * (i % 2 == 0 ? 1 : -1) < 0) ++bad;
    }
  }
  std::string detail = std::to_string(s.series.size()) + " series asserted, " +
                       std::to_string(s.consistency_errors) + " errors; " + std::to_string(coefficients) +
                       " reference coefficients, " + std::to_string(bad) + " bad";
  if (!s.first_error.empty()) detail += " (" + s.first_error + ")";
  return {s.consistency_errors == 0 && bad == 0, detail};
}

// 6. Dimension identity for i <= 4 and dim_hi against the Stirling recurrence.
Outcome dimension_cross_check() {
  const auto stirling = oracle::stirling_first(12);
  int stirling_bad = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i < n; ++i) stirling_bad += dim_hi(i, n) != stirling[n][n - i];
  }
  Engine engine;
  int failing = 0, reports = 0;
  for (int i = 0; i <= 4; ++i) {
    for (int n : {3 * i + 1, 3 * i + 2}) {
      ++reports;
      failing += !verify_dimension_consistency(engine, i, n).pass;
    }
  }
  return {stirling_bad == 0 && failing == 0,
          std::to_string(reports) + " reports, " + std::to_string(failing) + " failing; dim_hi vs Stirling: " +
              std::to_string(stirling_bad) + " mismatches for n <= 12"};
}

// 7. Character polynomials against the Frobenius formula for the padded
// partitions at the first two stable n.
Outcome charpoly_stability() {
  CharacterTable table;
  int classes = 0, bad = 0;
  for (const Partition& lambda : enumerate_partitions_up_to(5)) {
    const CharacterPolynomial chi = young_to_charpoly(lambda, table);
    const int first = lambda.size() + std::max(lambda.largest_part(), 1);
    for (int n = first; n <= first + 1; ++n) {
      const Partition big = padded(lambda, n);
      for (const Partition& rho : enumerate_partitions(n)) {
        ++classes;
        bad += chi.evaluate(cycle_counts_of(rho)) != Rational(oracle::frobenius_character(big, rho));
      }
    }
  }
  return {bad == 0, std::to_string(classes) + " (lambda, n, class) evaluations, " + std::to_string(bad) + " wrong"};
}

// 8. Degree and leading coefficient of g_lambda against the hook length formula.
Outcome dimension_polynomials() {
  CharacterTable table;
  int count = 0, bad = 0;
  for (const Partition& lambda : enumerate_partitions_up_to(10)) {
    ++count;
    const Polynomial g = stable_dimension_poly(young_to_charpoly(lambda, table));
    const int k = lambda.size();
    const Rational expected(oracle::hook_length_dimension(lambda), factorial(static_cast<unsigned long>(k)));
    bad += g.degree() != k || g.leading_coefficient() != expected;
  }
  return {bad == 0, std::to_string(count) + " partitions, " + std::to_string(bad) + " wrong"};
}

// 9. Constant tail of the standard family and a loose growth band at i = 50.
Outcome asymptotics() {
  Engine engine;
  const StableSeries standard = engine.stable_coefficients({1}, 50);
  int tail_bad = 0;
  for (int i = 2; i <= 50; ++i) tail_bad += standard.d(i) != 2;
  double lo = 1e9, hi = -1e9;
  for (int k = 1; k <= 4; ++k) {
    for (const Partition& lambda : enumerate_partitions(k)) {
      const double d50 = engine.stable_coefficients(lambda, 50).d(50).get_d();
      const double ratio = d50 * factorial(static_cast<unsigned long>(k - 1)).get_d() /
                           (2.0 * static_cast<double>(engine.characters().dimension(lambda)) *
                            std::pow(50.0, k - 1));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  char band[96];
  std::snprintf(band, sizeof band, "ratio range [%.4f, %.4f] within [0.75, 1.25]", lo, hi);
  return {tail_bad == 0 && lo >= 0.75 && hi <= 1.25,
          "d_i(1) = 2 for 2 <= i <= 50 (" + std::to_string(tail_bad) + " off); " + band};
}

// 10. Spot run of the batch table and a launch check of the full-size command.
Outcome spot_run() {
  Engine engine;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = engine.batch_table(12, 50);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  // The full command must get past argument validation; an unwritable output
  // path makes it stop with an I/O error before any computation.
  std::ostringstream out, err;
  const int code = cli::run({"table", "--max-size", "23", "--max-degree", "50", "--out", "/nonexistent-dir/full.csv"},
                            out, err);
  const bool launches = code == cli::kRuntimeFailure && err.str().find("cannot open") != std::string::npos;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.1f s", seconds);
  return {rows.size() == enumerate_partitions_up_to(12).size() && seconds < 1800 && launches,
          std::to_string(rows.size()) + " partitions through z^50 in " + timing +
              " (limit 1800 s); full-size command " + (launches ? "accepted" : "rejected")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden series through z^30", golden_series},
      {"golden decompositions H^0..H^5", golden_decompositions},
      {"vanishing for i < |lambda|/2, |lambda| <= 10, z^20",
       [] { return vanishing([](const Partition& l, int i) { return 2 * i < l.size(); }); }},
      {"vanishing for i < length(lambda), |lambda| <= 10, z^20",
       [] { return vanishing([](const Partition& l, int i) { return i < l.length(); }); }},
      {"coefficients are integers of sign (-1)^i", sign_integrality},
      {"dimension identity i <= 4 and dim_hi vs Stirling", dimension_cross_check},
      {"character polynomial stability, |lambda| <= 5", charpoly_stability},
      {"dimension polynomial degree and leading coefficient, |lambda| <= 10", dimension_polynomials},
      {"asymptotic smoke check at i = 50", asymptotics},
      {"spot run |lambda| <= 12, i <= 50", spot_run},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", seconds);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " -- "
              << outcome.detail << " [" << elapsed << "]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
