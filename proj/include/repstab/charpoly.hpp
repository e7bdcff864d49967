#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "repstab/characters.hpp"
#include "repstab/errors.hpp"
#include "repstab/partition.hpp"
#include "repstab/polynomial.hpp"
#include "repstab/rational.hpp"

namespace repstab {

/// Cycle-count vector of a permutation: counts[i-1] = X_i, the number of
/// i-cycles. Entries past the end are zero.
using CycleCounts = std::vector<std::int64_t>;

inline CycleCounts cycle_counts_of(const Partition& cycle_type) {
  const auto counts = cycle_type.cycle_counts();
  return CycleCounts(counts.begin(), counts.end());
}

/// Character polynomial written in the binomial basis
///   sum_rho F_rho * binom(X, rho),  binom(X, rho) = prod_i binom(X_i, j_i(rho)).
/// Zero coefficients are never stored. Terms iterate in canonical partition
/// order.
class CharacterPolynomial {
 public:
  using Terms = std::map<Partition, Rational, CanonicalLess>;

  CharacterPolynomial() = default;

  static CharacterPolynomial constant(const Rational& c) {
    CharacterPolynomial p;
    p.add_term(Partition{}, c);
    return p;
  }

  void add_term(const Partition& rho, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(rho, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& rho) const {
    const auto it = terms_.find(rho);
    return it == terms_.end() ? Rational{} : it->second;
  }

  /// Largest |rho| with a nonzero coefficient (deg X_k = k); -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

  Rational evaluate(std::span<const std::int64_t> cycle_counts) const {
    Rational total;
    for (const auto& [rho, coefficient] : terms_) {
      Integer product = 1;
      const auto counts = rho.cycle_counts();
      for (std::size_t i = 0; i < counts.size() && product != 0; ++i) {
        if (counts[i] == 0) continue;
        const std::int64_t x = i < cycle_counts.size() ? cycle_counts[i] : 0;
        if (x < 0) throw std::invalid_argument("evaluate: negative cycle count");
        product *= binomial(static_cast<unsigned long>(x), static_cast<unsigned long>(counts[i]));
      }
      if (product != 0) total += coefficient * Rational(product);
    }
    return total;
  }

  /// e.g. "(X1 C 2) - (X1 C 1) - (X2 C 1) + 1"; terms by decreasing |rho|,
  /// canonical order within a size.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [rho, coefficient] = *it;
      const Rational magnitude = coefficient.sign() < 0 ? -coefficient : coefficient;
      if (first) {
        if (coefficient.sign() < 0) os << "-";
      } else {
        os << (coefficient.sign() < 0 ? " - " : " + ");
      }
      first = false;
      if (rho.empty()) {
        os << magnitude;
        continue;
      }
      if (magnitude != Rational(1)) os << magnitude << "*";
      const auto counts = rho.cycle_counts();
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) os << "(X" << (i + 1) << " C " << counts[i] << ")";
      }
    }
    return os.str();
  }

  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;

 private:
  Terms terms_;
};

/// Character polynomial of the family V(lambda):
///   chi^lambda = sum_{|rho| <= |lambda|} binom(X, rho) (-1)^{|lambda|-|rho|} sum_mu chi^mu_rho,
/// with mu ranging over partitions of |rho| such that lambda - mu is a vertical
/// strip.
inline CharacterPolynomial young_to_charpoly(const Partition& lambda, CharacterTable& table) {
  const int k = lambda.size();
  // Candidate mu: every partition of size <= k below lambda by a vertical strip,
  // bucketed by size.
  std::vector<std::vector<Partition>> all_mu(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    for (const Partition& mu : table.partitions(m)) {
      if (is_vertical_strip(lambda, mu)) all_mu[static_cast<std::size_t>(m)].push_back(mu);
    }
  }

  CharacterPolynomial result;
  for (int m = 0; m <= k; ++m) {
    const auto& mus = all_mu[static_cast<std::size_t>(m)];
    if (mus.empty()) continue;
    const bool negate = (k - m) % 2 != 0;
    for (const Partition& rho : table.partitions(m)) {
      std::int64_t sum = 0;
      for (const Partition& mu : mus) {
        if (__builtin_add_overflow(sum, table.value(mu, rho), &sum)) {
          throw std::overflow_error("young_to_charpoly: coefficient overflow");
        }
      }
      if (sum != 0) result.add_term(rho, Rational(static_cast<long>(negate ? -sum : sum)));
    }
  }
  return result;
}

/// g_lambda(n) = chi^lambda evaluated at the identity of S_n, expanded as a
/// polynomial in n: sum_b F_{1^b} binom(n, b).
inline Polynomial stable_dimension_poly(const CharacterPolynomial& chi) {
  Polynomial result;
  for (const auto& [rho, coefficient] : chi.terms()) {
    if (rho.size() != rho.length()) continue;  // only rho = 1^b survives at the identity
    const int b = rho.size();
    // binom(n, b) = n (n-1) ... (n-b+1) / b!
    Polynomial falling = Polynomial::constant(Rational(1));
    for (int r = 0; r < b; ++r) falling = falling * Polynomial({Rational(-r), Rational(1)});
    result = result + falling.scaled(coefficient / Rational(factorial(static_cast<unsigned long>(b))));
  }
  return result;
}

/// Same, computed from lambda; checks that the degree is |lambda| and the
/// leading coefficient is dim(lambda) / |lambda|!.
inline Polynomial stable_dimension_poly(const Partition& lambda, CharacterTable& table) {
  Polynomial g = stable_dimension_poly(young_to_charpoly(lambda, table));
  const int k = lambda.size();
  const Rational expected(to_integer(table.dimension(lambda)),
                          factorial(static_cast<unsigned long>(k)));
  if (g.degree() != k || g.leading_coefficient() != expected) {
    throw ConsistencyError("dimension polynomial of " + lambda.to_string() + " has degree " +
                           std::to_string(g.degree()) + " and leading coefficient " +
                           g.leading_coefficient().to_string());
  }
  return g;
}

}  // namespace repstab
