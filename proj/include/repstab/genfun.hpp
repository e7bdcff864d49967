#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/laurent_series.hpp"
#include "repstab/partition.hpp"
#include "repstab/polynomial.hpp"
#include "repstab/rational.hpp"

namespace repstab {

/// Moebius function by trial division.
inline int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// M_k(z) = (1/k) sum_{d | k} mu(k/d) z^d.
inline Polynomial necklace(int k) {
  if (k < 1) throw std::invalid_argument("necklace: k must be positive");
  std::vector<Rational> coefficients(static_cast<std::size_t>(k) + 1);
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) coefficients[static_cast<std::size_t>(d)] = Rational(Integer(mobius(k / d)), Integer(k));
  }
  return Polynomial(std::move(coefficients));
}

/// Coefficient of z^{l t} in (z^t - z^{2t} + z^{3t} - ...)^j, which does not
/// depend on t: (-1)^{l-j} binom(l-1, l-j), and zero for l < j.
inline Rational geometric_power_coeff(int j, int l) {
  if (j < 1) throw std::invalid_argument("geometric_power_coeff: j must be positive");
  if (l < j) return {};
  Integer c = binomial(static_cast<unsigned long>(l - 1), static_cast<unsigned long>(l - j));
  if ((l - j) % 2 != 0) c = -c;
  return Rational(c);
}

/// Exact representation of a power series truncated at `degree` as a common
/// denominator and integer numerators: coefficient of z^e is
/// numerators[e] / denominator for 0 <= e <= degree.
struct ScaledSeries {
  int degree = -1;
  Integer denominator = 1;
  std::vector<Integer> numerators;
};

namespace detail {

struct PairHash {
  std::size_t operator()(const std::pair<int, int>& p) const noexcept {
    return std::hash<long long>()((static_cast<long long>(p.first) << 32) ^ p.second);
  }
};

// Concurrent memo table. Values are immutable once inserted. A stored value
// that fails `accept` (e.g. computed to too few terms) is replaced by a fresh
// computation. Two threads may compute the same key at once; the first value
// inserted wins and the other is discarded.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  template <typename Accept, typename Compute>
  std::shared_ptr<const Value> get(const Key& key, Accept&& accept, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      const auto it = map_.find(key);
      if (it != map_.end() && accept(*it->second)) return it->second;
    }
    auto fresh = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto& slot = map_[key];
    if (slot && accept(*slot)) return slot;
    slot = fresh;
    return fresh;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, std::shared_ptr<const Value>, Hash> map_;
};

}  // namespace detail

/// Memoized building blocks of the stable generating functions
///   Phi_rho(z) = (1 - z) prod_t binom(M_t(z^{-1}), j_t) (z^t - z^{2t} + ...)^{j_t},
/// for rho = 1^{j_1} 2^{j_2} ....
///
/// Caches hold the Laurent polynomials binom(M_t(z^{-1}), j), the coefficient
/// lists of (z - z^2 + ...)^j, the factors psi_{t,j}, and Phi_rho itself. All
/// methods are safe to call concurrently.
class PhiCache {
 public:
  /// binom(M_t(z^{-1}), j) as an exact Laurent polynomial in z with terms
  /// z^{-tj} .. z^{-1} (the constant 1 when j = 0), built by
  ///   binom(M, j) = binom(M, j-1) * (M - j + 1) / j.
  std::shared_ptr<const LaurentSeries> necklace_binomial(int t, int j) {
    if (t < 1 || j < 0) throw std::invalid_argument("necklace_binomial: need t >= 1, j >= 0");
    return binomials_.get(
        {t, j}, [](const LaurentSeries&) { return true; },
        [&] {
          if (j == 0) return LaurentSeries::monomial(Rational(1), 0);
          const Polynomial m = necklace(t);
          // M_t(z^{-1}) - (j - 1): coefficient of z^{-d} is that of z^d in M_t.
          std::vector<Rational> shifted(static_cast<std::size_t>(t) + 1);
          for (int d = 0; d <= t; ++d) shifted[static_cast<std::size_t>(t - d)] = m.coefficient(d);
          shifted[static_cast<std::size_t>(t)] -= Rational(j - 1);
          const LaurentSeries factor = LaurentSeries::polynomial(-t, std::move(shifted));
          const auto previous = necklace_binomial(t, j - 1);
          return ((*previous) * factor).scaled(Rational(Integer(1), Integer(j)));
        });
  }

  /// [z^{lt}] (z^t - z^{2t} + ...)^j for l = 0 .. max_l (at least).
  std::shared_ptr<const std::vector<Rational>> geometric_coefficients(int j, int max_l) {
    if (j < 1) throw std::invalid_argument("geometric_coefficients: j must be positive");
    return geometric_.get(
        j, [&](const std::vector<Rational>& cs) { return static_cast<int>(cs.size()) > max_l; },
        [&] {
          std::vector<Rational> cs;
          cs.reserve(static_cast<std::size_t>(max_l) + 1);
          for (int l = 0; l <= max_l; ++l) cs.push_back(geometric_power_coeff(j, l));
          return cs;
        });
  }

  /// (z^t - z^{2t} + ...)^j truncated at `degree`.
  LaurentSeries geometric_power(int t, int j, int degree) {
    const int lo = std::min(t * j, degree + 1);
    const auto cs = geometric_coefficients(j, degree / t);
    std::vector<Rational> out(static_cast<std::size_t>(degree - lo + 1));
    for (int e = lo; e <= degree; ++e) {
      if (e % t == 0) out[static_cast<std::size_t>(e - lo)] = (*cs)[static_cast<std::size_t>(e / t)];
    }
    return LaurentSeries::truncated(lo, std::move(out), degree);
  }

  /// psi_{t,j} = binom(M_t(z^{-1}), j) (z^t - z^{2t} + ...)^j, valid at least
  /// through z^degree. The Laurent polynomial reaches down to z^{-tj}, so the
  /// geometric factor is carried tj terms past `degree`.
  std::shared_ptr<const LaurentSeries> psi(int t, int j, int degree) {
    if (t < 1 || j < 1) throw std::invalid_argument("psi: need t >= 1, j >= 1");
    return psis_.get(
        {t, j}, [&](const LaurentSeries& s) { return *s.truncation_degree() >= degree; },
        [&] {
          const LaurentSeries product =
              (*necklace_binomial(t, j)) * geometric_power(t, j, degree + t * j);
          LaurentSeries result = product.normalized();
          if (result.min_degree() < 0) {
            throw ConsistencyError("psi_{" + std::to_string(t) + "," + std::to_string(j) +
                                   "} has a negative exponent");
          }
          return result;
        });
  }

  /// Phi_rho truncated at `degree`.
  LaurentSeries phi_infinity(const Partition& rho, int degree) {
    return phi_cached(rho, degree)->truncated_to(degree);
  }

  /// Phi_rho valid at least through z^degree (possibly further).
  std::shared_ptr<const LaurentSeries> phi_cached(const Partition& rho, int degree) {
    if (degree < 0) throw std::invalid_argument("phi_infinity: degree must be non-negative");
    return phis_.get(
        rho, [&](const LaurentSeries& s) { return *s.truncation_degree() >= degree; },
        [&] {
          LaurentSeries result =
              LaurentSeries::polynomial(0, {Rational(1), Rational(-1)});  // 1 - z
          const auto counts = rho.cycle_counts();
          for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] == 0) continue;
            result = result * (*psi(static_cast<int>(i) + 1, counts[i], degree));
          }
          result = result.truncated_to(degree).normalized();
          if (result.min_degree() < 0) {
            throw ConsistencyError("Phi_" + rho.to_string() + " has a negative exponent");
          }
          return result.truncated_to(degree);
        });
  }

  /// Phi_rho through z^degree (at least) over a common denominator.
  std::shared_ptr<const ScaledSeries> phi_scaled(const Partition& rho, int degree) {
    return scaled_.get(
        rho, [&](const ScaledSeries& s) { return s.degree >= degree; },
        [&] {
          const auto phi = phi_cached(rho, degree);
          const int top = *phi->truncation_degree();
          ScaledSeries out;
          out.degree = top;
          for (int e = 0; e <= top; ++e) {
            mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
                    phi->coefficient(e).denominator_ref().get_mpz_t());
          }
          out.numerators.resize(static_cast<std::size_t>(top) + 1);
          for (int e = 0; e <= top; ++e) {
            const Rational& c = phi->coefficient(e);
            out.numerators[static_cast<std::size_t>(e)] =
                c.numerator_ref() * (out.denominator / c.denominator_ref());
          }
          return out;
        });
  }

  void clear() {
    binomials_.clear();
    geometric_.clear();
    psis_.clear();
    phis_.clear();
    scaled_.clear();
  }

  std::size_t cached_phi_count() const { return phis_.size(); }

 private:
  detail::ConcurrentMemo<std::pair<int, int>, LaurentSeries, detail::PairHash> binomials_;
  detail::ConcurrentMemo<int, std::vector<Rational>> geometric_;
  detail::ConcurrentMemo<std::pair<int, int>, LaurentSeries, detail::PairHash> psis_;
  detail::ConcurrentMemo<Partition, LaurentSeries, PartitionHash> phis_;
  detail::ConcurrentMemo<Partition, ScaledSeries, PartitionHash> scaled_;
};

}  // namespace repstab
