#pragma once

#include "lucaskit/lucas.hpp"
#include "lucaskit/ratpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lucaskit {

/// Power series in t with RatPoly coefficients, truncated after t^order.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Coefficients c_0, c_1, ...; order = size - 1. Must be nonempty.
  explicit TruncSeries(std::vector<RatPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("TruncSeries needs at least one coefficient");
    }
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<RatPoly>& coeffs() const { return coeffs_; }
  const RatPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  RatPoly& operator[](std::size_t n) { return coeffs_.at(n); }

  TruncSeries truncated(std::size_t order) const {
    std::vector<RatPoly> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order, this->order()) + 1));
    return TruncSeries(std::move(c));
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// One "t^n: <poly>" line per coefficient.
  std::string to_string() const {
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      out += "t^" + std::to_string(n) + ": " + coeffs_[n].to_string() + "\n";
    }
    return out;
  }

 private:
  std::vector<RatPoly> coeffs_;
};

/// Cauchy product truncated to the smaller of the two orders.
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

/// Multiplicative inverse of a series whose constant term is exactly 1:
/// b_0 = 1, b_n = -sum_{j=1..n} a_j b_{n-j}.
inline TruncSeries reciprocal(const TruncSeries& a) {
  if (a[0] != RatPoly(1)) {
    throw std::domain_error("series reciprocal needs constant term 1, got " + a[0].to_string());
  }
  TruncSeries b(a.order());
  b[0] = RatPoly(1);
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j <= a.order(); ++j) {
    if (!a[j].is_zero()) {
      support.push_back(j);
    }
  }
  for (std::size_t n = 1; n <= a.order(); ++n) {
    RatPoly acc;
    for (std::size_t j : support) {
      if (j > n) {
        break;
      }
      acc -= a[j] * b[n - j];
    }
    b[n] = std::move(acc);
  }
  return b;
}

namespace detail {

// Polynomial in t given by its low coefficients, padded with zeros to order.
inline TruncSeries series_from(std::size_t order, std::vector<RatPoly> low) {
  TruncSeries s(order);
  for (std::size_t i = 0; i < low.size() && i <= order; ++i) {
    s[i] = std::move(low[i]);
  }
  return s;
}

inline TruncSeries characteristic_series(std::size_t order) {
  return series_from(order, {RatPoly(1), -RatPoly::x(), -RatPoly::y()});
}

}  // namespace detail

/// t / (1 - x t - y t^2) through t^order.
inline TruncSeries gf_fib(std::size_t order) {
  return detail::series_from(order, {RatPoly(0), RatPoly(1)}) * reciprocal(detail::characteristic_series(order));
}

/// (2 - x t) / (1 - x t - y t^2) through t^order.
inline TruncSeries gf_luc(std::size_t order) {
  return detail::series_from(order, {RatPoly(2), -RatPoly::x()}) * reciprocal(detail::characteristic_series(order));
}

inline TruncSeries generating_function(SequenceKind kind, std::size_t order) {
  return kind == SequenceKind::Fib ? gf_fib(order) : gf_luc(order);
}

}  // namespace lucaskit
