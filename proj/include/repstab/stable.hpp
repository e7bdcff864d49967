#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "repstab/characters.hpp"
#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/genfun.hpp"
#include "repstab/laurent_series.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"

namespace repstab {

/// Stable multiplicities d_0(lambda), ..., d_N(lambda) of V(lambda) in
/// H^i(PConf_n(C); C), n large. Values are stored unsigned; the generating
/// series is sum_i (-1)^i d_i z^i.
struct StableSeries {
  Partition partition;
  int max_degree = 0;
  std::vector<Integer> multiplicities;

  const Integer& d(int i) const { return multiplicities.at(static_cast<std::size_t>(i)); }

  Integer signed_coefficient(int i) const { return i % 2 == 0 ? d(i) : Integer(-d(i)); }

  std::vector<Integer> signed_coefficients() const {
    std::vector<Integer> out;
    out.reserve(multiplicities.size());
    for (int i = 0; i <= max_degree; ++i) out.push_back(signed_coefficient(i));
    return out;
  }
};

/// Irreducible decomposition of the stable H^i: every V(lambda) with
/// d_i(lambda) > 0, in canonical partition order.
struct CohomologyDecomposition {
  int degree = 0;
  std::vector<std::pair<Partition, Integer>> entries;
};

/// Signed series in the tabular display style: "-z^1 + 2z^2 - 2z^3".
/// The z^1 term drops its exponent when a constant term precedes it, so the
/// trivial family prints as "1 - z".
inline std::string format_signed_series(std::span<const Integer> coefficients) {
  std::string out;
  const bool has_constant = !coefficients.empty() && coefficients[0] != 0;
  for (std::size_t e = 0; e < coefficients.size(); ++e) {
    const Integer& c = coefficients[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += "z";
    if (e > 1 || !has_constant) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_series(const StableSeries& series) {
  const auto coefficients = series.signed_coefficients();
  return format_signed_series(coefficients);
}

/// "V(0) + V(1)^⊕2 + V(3,1)", multiplicities omitted when 1.
inline std::string format_decomposition(const CohomologyDecomposition& decomposition) {
  if (decomposition.entries.empty()) return "0";
  std::string out;
  for (const auto& [lambda, multiplicity] : decomposition.entries) {
    if (!out.empty()) out += " + ";
    out += "V(" + lambda.to_string(',') + ")";
    if (multiplicity != 1) out += "^⊕" + multiplicity.get_str();
  }
  return out;
}

/// CSV in the fixed schema: header "partition,i,d_i", one row per (lambda, i),
/// in the order given (callers pass canonical order), LF line endings.
inline void write_csv(std::ostream& os, std::span<const StableSeries> rows) {
  os << "partition,i,d_i\n";
  for (const StableSeries& s : rows) {
    const std::string name = s.partition.to_string();
    for (int i = 0; i <= s.max_degree; ++i) os << name << ',' << i << ',' << s.d(i).get_str() << '\n';
  }
}

/// Shared state for stable-coefficient computations: the character tables and
/// the generating-function caches. After warm(), per-partition computations
/// only read shared state and may run on several threads.
class Engine {
 public:
  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  CharacterTable& characters() { return characters_; }
  PhiCache& phi_cache() { return phi_; }

  /// Builds character tables through size `max_size` and caches Phi_rho for
  /// every |rho| <= max_size through z^max_degree.
  void warm(int max_size, int max_degree) {
    characters_.build(max_size);
    for (const Partition& rho : enumerate_partitions_up_to(max_size)) phi_.phi_scaled(rho, max_degree);
  }

  CharacterPolynomial charpoly(const Partition& lambda) {
    characters_.build(lambda.size());
    return young_to_charpoly(lambda, characters_);
  }

  /// sum_i (-1)^i d_i(lambda) z^i = sum_rho F^lambda_rho Phi_rho(z), where
  /// chi^lambda = sum_rho F^lambda_rho binom(X, rho). The terms are
  /// accumulated exactly over a common denominator; every coefficient is then
  /// checked to be an integer of sign (-1)^i.
  StableSeries stable_coefficients(const Partition& lambda, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("stable_coefficients: max degree must be >= 0");
    const CharacterPolynomial chi = charpoly(lambda);

    std::vector<std::pair<std::shared_ptr<const ScaledSeries>, Integer>> terms;
    terms.reserve(chi.terms().size());
    Integer denominator = 1;
    for (const auto& [rho, coefficient] : chi.terms()) {
      auto phi = phi_.phi_scaled(rho, max_degree);
      mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), phi->denominator.get_mpz_t());
      terms.emplace_back(std::move(phi), coefficient.to_integer());
    }

    std::vector<Integer> accumulator(static_cast<std::size_t>(max_degree) + 1);
    Integer multiplier;
    for (const auto& [phi, coefficient] : terms) {
      multiplier = coefficient * (denominator / phi->denominator);
      for (int i = 0; i <= max_degree; ++i) {
        const Integer& numerator = phi->numerators[static_cast<std::size_t>(i)];
        if (numerator == 0) continue;
        mpz_addmul(accumulator[static_cast<std::size_t>(i)].get_mpz_t(), multiplier.get_mpz_t(),
                   numerator.get_mpz_t());
      }
    }

    StableSeries out;
    out.partition = lambda;
    out.max_degree = max_degree;
    out.multiplicities.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int i = 0; i <= max_degree; ++i) {
      Integer& c = accumulator[static_cast<std::size_t>(i)];
      if (!mpz_divisible_p(c.get_mpz_t(), denominator.get_mpz_t())) {
        throw ConsistencyError("coefficient of z^" + std::to_string(i) + " for " +
                               lambda.to_string() + " is not an integer");
      }
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), denominator.get_mpz_t());
      const int expected_sign = i % 2 == 0 ? 1 : -1;
      if (sgn(c) != 0 && sgn(c) != expected_sign) {
        throw ConsistencyError("coefficient of z^" + std::to_string(i) + " for " +
                               lambda.to_string() + " has the wrong sign: " + c.get_str());
      }
      out.multiplicities[static_cast<std::size_t>(i)] = abs(c);
    }
    return out;
  }

  /// Reference assembly of the same series with plain LaurentSeries
  /// arithmetic, term by term in canonical rho order. Slower; no checks.
  LaurentSeries stable_series_reference(const Partition& lambda, int max_degree) {
    const CharacterPolynomial chi = charpoly(lambda);
    LaurentSeries total = LaurentSeries::zero_through(max_degree);
    for (const auto& [rho, coefficient] : chi.terms()) {
      total = total + phi_.phi_infinity(rho, max_degree).scaled(coefficient);
    }
    return total;
  }

  /// Every lambda with |lambda| <= 2i can contribute (larger ones vanish in
  /// degree i), and only those with at most i rows; each is computed through
  /// z^i.
  CohomologyDecomposition cohomology_decomposition(int i, int threads = 1) {
    if (i < 0) throw std::invalid_argument("cohomology_decomposition: degree must be >= 0");
    std::vector<Partition> candidates;
    for (Partition& lambda : enumerate_partitions_up_to(2 * i)) {
      if (lambda.length() <= i) candidates.push_back(std::move(lambda));
    }
    warm(2 * i, i);
    const auto series = compute_all(candidates, i, threads);
    CohomologyDecomposition out;
    out.degree = i;
    for (const StableSeries& s : series) {
      if (s.d(i) > 0) out.entries.emplace_back(s.partition, s.d(i));
    }
    return out;
  }

  /// StableSeries for every |lambda| <= max_size, canonical order.
  std::vector<StableSeries> batch_table(int max_size, int max_degree, int threads = 1) {
    if (max_size < 0) throw std::invalid_argument("batch_table: max size must be >= 0");
    warm(max_size, max_degree);
    return compute_all(enumerate_partitions_up_to(max_size), max_degree, threads);
  }

  /// stable_coefficients over `lambdas`, optionally on worker threads; the
  /// result is in input order regardless of scheduling.
  std::vector<StableSeries> compute_all(const std::vector<Partition>& lambdas, int max_degree,
                                        int threads) {
    std::vector<StableSeries> out(lambdas.size());
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), lambdas.size());
    if (workers <= 1) {
      for (std::size_t k = 0; k < lambdas.size(); ++k) out[k] = stable_coefficients(lambdas[k], max_degree);
      return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < lambdas.size(); k = next++) {
          try {
            out[k] = stable_coefficients(lambdas[k], max_degree);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
  }

 private:
  CharacterTable characters_;
  PhiCache phi_;
};

}  // namespace repstab
