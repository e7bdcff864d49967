#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "repstab/rational.hpp"

namespace repstab {

/// Dense univariate polynomial with Rational coefficients, lowest degree first.
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
  }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  /// x^k
  static Polynomial monomial(const Rational& c, int k) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
  }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational coefficient(int k) const {
    if (k < 0 || k > degree()) return {};
    return coefficients_[static_cast<std::size_t>(k)];
  }

  Rational leading_coefficient() const { return is_zero() ? Rational{} : coefficients_.back(); }

  Rational evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (k < a.coefficients_.size()) out[k] += a.coefficients_[k];
      if (k < b.coefficients_.size()) out[k] += b.coefficients_[k];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        out[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial scaled(const Rational& c) const {
    std::vector<Rational> out = coefficients_;
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Highest degree first, e.g. "1/2 n^2 - 3/2 n".
  std::string to_string(std::string_view variable = "n") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = coefficients_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      const Rational magnitude = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      const bool unit = magnitude == Rational(1);
      if (!unit || k == 0) os << magnitude;
      if (k > 0) {
        if (!unit) os << " ";
        os << variable;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
  }

  std::vector<Rational> coefficients_;
};

}  // namespace repstab
