#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repstab/rational.hpp"

namespace repstab {

/// Laurent series in z with Rational coefficients and finitely many negative
/// exponents.
///
/// A series is either *exact* (a Laurent polynomial: every coefficient outside
/// the stored window is zero) or *truncated* at some degree T, in which case
/// the coefficients of z^e for e <= T are known and every coefficient above T
/// is unknown. Reading an unknown coefficient throws. Arithmetic propagates the
/// truncation degree so that every coefficient a result reports is exact.
///
/// Storage is dense, indexed from min_degree(). For a truncated series the
/// stored window is exactly [min_degree, truncation_degree].
class LaurentSeries {
 public:
  /// The exact zero series.
  LaurentSeries() = default;

  static LaurentSeries polynomial(int min_degree, std::vector<Rational> coefficients) {
    LaurentSeries s;
    s.min_degree_ = min_degree;
    s.coefficients_ = std::move(coefficients);
    s.exact_ = true;
    return s;
  }

  /// A truncated series; coefficients[k] is the coefficient of z^(min_degree + k)
  /// and the last entry is the coefficient of z^truncation_degree.
  static LaurentSeries truncated(int min_degree, std::vector<Rational> coefficients,
                                 int truncation_degree) {
    if (static_cast<long>(coefficients.size()) !=
        static_cast<long>(truncation_degree) - min_degree + 1) {
      throw std::invalid_argument("LaurentSeries: coefficient window does not match truncation");
    }
    LaurentSeries s;
    s.min_degree_ = min_degree;
    s.coefficients_ = std::move(coefficients);
    s.exact_ = false;
    s.truncation_ = truncation_degree;
    return s;
  }

  static LaurentSeries monomial(const Rational& coefficient, int exponent) {
    if (coefficient.is_zero()) return {};
    return polynomial(exponent, {coefficient});
  }

  /// A series known to vanish through z^truncation_degree.
  static LaurentSeries zero_through(int truncation_degree) {
    return truncated(truncation_degree + 1, {}, truncation_degree);
  }

  bool is_exact() const { return exact_; }
  int min_degree() const { return min_degree_; }

  /// Highest exponent whose coefficient is known; nullopt for an exact series.
  std::optional<int> truncation_degree() const {
    if (exact_) return std::nullopt;
    return truncation_;
  }

  /// Highest stored exponent (min_degree - 1 when nothing is stored).
  int top_degree() const { return min_degree_ + static_cast<int>(coefficients_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool is_known(int exponent) const { return exact_ || exponent <= truncation_; }

  const Rational& coefficient(int exponent) const {
    if (!is_known(exponent)) {
      throw std::out_of_range("LaurentSeries: coefficient of z^" + std::to_string(exponent) +
                              " is beyond truncation degree " + std::to_string(truncation_));
    }
    if (exponent < min_degree_ || exponent > top_degree()) return zero_coefficient();
    return coefficients_[static_cast<std::size_t>(exponent - min_degree_)];
  }

  /// Lowest exponent with a nonzero coefficient, if any is known.
  std::optional<int> valuation() const {
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
      if (!coefficients_[k].is_zero()) return min_degree_ + static_cast<int>(k);
    }
    return std::nullopt;
  }

  bool is_zero() const { return exact_ && !valuation().has_value(); }

  /// Trims leading zeros, and trailing zeros of an exact series. The known
  /// window and every coefficient value are unchanged.
  LaurentSeries normalized() const {
    const auto v = valuation();
    if (!v) {
      if (exact_) return {};
      return zero_through(truncation_);
    }
    std::size_t first = static_cast<std::size_t>(*v - min_degree_);
    std::size_t last = coefficients_.size();
    if (exact_) {
      while (last > first && coefficients_[last - 1].is_zero()) --last;
    }
    LaurentSeries s = *this;
    s.min_degree_ = *v;
    s.coefficients_.assign(coefficients_.begin() + static_cast<std::ptrdiff_t>(first),
                           coefficients_.begin() + static_cast<std::ptrdiff_t>(last));
    return s;
  }

  /// Forgets every coefficient above `degree`. The result is truncated at
  /// `degree`, which must not exceed the current truncation degree.
  LaurentSeries truncated_to(int degree) const {
    if (!exact_ && degree > truncation_) {
      throw std::out_of_range("LaurentSeries: cannot extend truncation from " +
                              std::to_string(truncation_) + " to " + std::to_string(degree));
    }
    const int lo = std::min(min_degree_, degree + 1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(degree - lo + 1));
    for (int e = lo; e <= degree; ++e) out.push_back(coefficient(e));
    return truncated(lo, std::move(out), degree);
  }

  LaurentSeries scaled(const Rational& factor) const {
    if (factor.is_zero()) return exact_ ? LaurentSeries{} : zero_through(truncation_);
    LaurentSeries s = *this;
    for (auto& c : s.coefficients_) c *= factor;
    return s;
  }

  friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
    return combine(f, g, false);
  }
  friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
    return combine(f, g, true);
  }
  friend LaurentSeries operator-(const LaurentSeries& f) { return f.scaled(Rational(-1)); }

  /// Cauchy product. If f is valid through T_f with valuation v_f and g through
  /// T_g with valuation v_g, the product is valid through
  /// min(T_f + v_g, T_g + v_f).
  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const int vf = f.effective_valuation();
    const int vg = g.effective_valuation();
    const bool exact = f.exact_ && g.exact_;
    int trunc = 0;
    if (exact) {
      trunc = f.top_degree() + g.top_degree();
    } else if (f.exact_) {
      trunc = g.truncation_ + vf;
    } else if (g.exact_) {
      trunc = f.truncation_ + vg;
    } else {
      trunc = std::min(f.truncation_ + vg, g.truncation_ + vf);
    }
    const int lo = vf + vg;
    if (trunc < lo) return zero_through(trunc);

    const int f_hi = f.exact_ ? f.top_degree() : f.truncation_;
    const int g_hi = g.exact_ ? g.top_degree() : g.truncation_;
    std::vector<Rational> out(static_cast<std::size_t>(trunc - lo + 1));
    for (int a = vf; a <= f_hi && a + vg <= trunc; ++a) {
      const Rational& fa = f.coefficient(a);
      if (fa.is_zero()) continue;
      const int b_hi = std::min(g_hi, trunc - a);
      for (int b = vg; b <= b_hi; ++b) {
        const Rational& gb = g.coefficient(b);
        if (gb.is_zero()) continue;
        out[static_cast<std::size_t>(a + b - lo)] += fa * gb;
      }
    }
    if (exact) return polynomial(lo, std::move(out)).normalized();
    return truncated(lo, std::move(out), trunc);
  }

  /// Semantic equality: same exactness, same truncation degree, and equal
  /// coefficients everywhere in the known window.
  friend bool operator==(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.exact_ != g.exact_) return false;
    if (!f.exact_ && f.truncation_ != g.truncation_) return false;
    const LaurentSeries a = f.normalized();
    const LaurentSeries b = g.normalized();
    if (!a.valuation() && !b.valuation()) return true;
    return a.min_degree_ == b.min_degree_ && a.coefficients_ == b.coefficients_;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
      if (coefficients_[k].is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << coefficients_[k] << ")z^" << (min_degree_ + static_cast<int>(k));
      first = false;
    }
    if (first) os << "0";
    if (!exact_) os << " + O(z^" << (truncation_ + 1) << ")";
    return os.str();
  }

 private:
  static const Rational& zero_coefficient() {
    static const Rational zero;
    return zero;
  }

  // Valuation used for truncation bookkeeping; a truncated series with no
  // known nonzero coefficient vanishes at least through its truncation degree.
  int effective_valuation() const {
    if (auto v = valuation()) return *v;
    return exact_ ? INT_MAX / 4 : truncation_ + 1;
  }

  static LaurentSeries combine(const LaurentSeries& f, const LaurentSeries& g, bool subtract) {
    const bool exact = f.exact_ && g.exact_;
    int hi = 0;
    if (exact) {
      hi = std::max(f.top_degree(), g.top_degree());
    } else if (f.exact_) {
      hi = g.truncation_;
    } else if (g.exact_) {
      hi = f.truncation_;
    } else {
      hi = std::min(f.truncation_, g.truncation_);
    }
    int lo = std::min(f.coefficients_.empty() ? INT_MAX / 4 : f.min_degree_,
                      g.coefficients_.empty() ? INT_MAX / 4 : g.min_degree_);
    lo = std::min(lo, hi + 1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
    for (int e = lo; e <= hi; ++e) {
      Rational c = f.coefficient(e);
      if (subtract) {
        c -= g.coefficient(e);
      } else {
        c += g.coefficient(e);
      }
      out.push_back(std::move(c));
    }
    if (exact) return polynomial(lo, std::move(out)).normalized();
    return truncated(lo, std::move(out), hi);
  }

  int min_degree_ = 0;
  std::vector<Rational> coefficients_;
  bool exact_ = true;
  int truncation_ = 0;
};

}  // namespace repstab
