#pragma once

#include "lucaskit/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lucaskit {

/// x^deg_x * y^deg_y.
struct Monomial {
  std::uint32_t deg_x = 0;
  std::uint32_t deg_y = 0;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    return {a.deg_x + b.deg_x, a.deg_y + b.deg_y};
  }
};

/// Canonical iteration order: (deg_x, deg_y) lexicographic, descending.
struct MonomialDescending {
  constexpr bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// Sparse polynomial in x and y with rational coefficients.
///
/// The term table never stores a zero coefficient, so two polynomials are
/// equal exactly when their tables are equal, and the zero polynomial has no
/// terms at all. Every operation returns a canonical value.
class RatPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialDescending>;

  RatPoly() = default;
  RatPoly(const Rational& c) { add_term({0, 0}, c); }  // NOLINT(google-explicit-constructor)
  RatPoly(long c) : RatPoly(Rational(c)) {}            // NOLINT(google-explicit-constructor)
  RatPoly(int c) : RatPoly(Rational(c)) {}             // NOLINT(google-explicit-constructor)

  static RatPoly x() { return monomial(1, 1, 0); }
  static RatPoly y() { return monomial(1, 0, 1); }

  static RatPoly monomial(const Rational& c, std::uint32_t deg_x, std::uint32_t deg_y) {
    RatPoly p;
    p.add_term({deg_x, deg_y}, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// The value of a polynomial with no x or y, or nullopt.
  std::optional<Rational> constant_value() const {
    if (terms_.empty()) {
      return Rational(0);
    }
    if (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0}) {
      return terms_.begin()->second;
    }
    return std::nullopt;
  }

  /// Highest power of x present; 0 for constants and the zero polynomial.
  std::uint32_t degree_x() const { return terms_.empty() ? 0 : terms_.begin()->first.deg_x; }

  std::uint32_t degree_y() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
      d = std::max(d, m.deg_y);
    }
    return d;
  }

  Rational coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c*m to the table, erasing the entry if it cancels.
  void add_term(Monomial m, const Rational& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  RatPoly& operator+=(const RatPoly& q) {
    for (const auto& [m, c] : q.terms_) {
      add_term(m, c);
    }
    return *this;
  }

  RatPoly& operator-=(const RatPoly& q) {
    for (const auto& [m, c] : q.terms_) {
      add_term(m, -c);
    }
    return *this;
  }

  RatPoly& operator*=(const RatPoly& q) { return *this = *this * q; }

  friend RatPoly operator+(RatPoly p, const RatPoly& q) { return p += q; }
  friend RatPoly operator-(RatPoly p, const RatPoly& q) { return p -= q; }

  friend RatPoly operator-(RatPoly p) {
    for (auto& [m, c] : p.terms_) {
      c = -c;
    }
    return p;
  }

  friend RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) {
      return {};
    }
    RatPoly r;
    Rational prod;
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) {
        prod = cp * cq;
        r.add_term(mp * mq, prod);
      }
    }
    return r;
  }

  friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.terms_ == q.terms_; }

  RatPoly scaled(const Rational& c) const {
    if (c == 0) {
      return {};
    }
    RatPoly r = *this;
    for (auto& [m, coef] : r.terms_) {
      coef *= c;
    }
    return r;
  }

  /// Repeated squaring; p^0 = 1, including for the zero polynomial.
  RatPoly pow(unsigned long e) const {
    RatPoly acc(1);
    RatPoly sq = *this;
    for (; e != 0; e >>= 1) {
      if (e & 1UL) {
        acc *= sq;
      }
      if (e > 1) {
        sq *= sq;
      }
    }
    return acc;
  }

  /// p(px, py), by Horner's rule in x with cached powers of py.
  RatPoly subst(const RatPoly& px, const RatPoly& py) const {
    if (terms_.empty()) {
      return {};
    }
    std::vector<RatPoly> py_pow{RatPoly(1)};
    auto py_power = [&](std::uint32_t j) -> const RatPoly& {
      while (py_pow.size() <= j) {
        py_pow.push_back(py_pow.back() * py);
      }
      return py_pow[j];
    };

    // Terms are visited in descending x-degree, so each x-degree block is
    // contiguous and Horner steps can be taken between blocks.
    RatPoly acc;
    std::uint32_t current = terms_.begin()->first.deg_x;
    for (const auto& [m, c] : terms_) {
      while (current > m.deg_x) {
        acc *= px;
        --current;
      }
      acc += py_power(m.deg_y).scaled(c);
    }
    for (; current > 0; --current) {
      acc *= px;
    }
    return acc;
  }

  Rational eval(const Rational& x0, const Rational& y0) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
      sum += c * rational_pow(x0, m.deg_x) * rational_pow(y0, m.deg_y);
    }
    return sum;
  }

  /// "x^2 + 2*y", "-1/2*x*y - 3", "0".
  std::string to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) {
          out += "-";
        }
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;

      std::string vars;
      auto append_var = [&vars](char name, std::uint32_t deg) {
        if (deg == 0) {
          return;
        }
        if (!vars.empty()) {
          vars += "*";
        }
        vars += name;
        if (deg > 1) {
          vars += "^" + std::to_string(deg);
        }
      };
      append_var('x', m.deg_x);
      append_var('y', m.deg_y);

      if (vars.empty()) {
        out += lucaskit::to_string(mag);
      } else if (mag == 1) {
        out += vars;
      } else {
        out += lucaskit::to_string(mag) + "*" + vars;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

 private:
  TermMap terms_;
};

inline RatPoly pow(const RatPoly& p, unsigned long e) { return p.pow(e); }

/// True when every coefficient is an integer.
inline bool has_integer_coefficients(const RatPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (!is_integral(c)) {
      return false;
    }
  }
  return true;
}

}  // namespace lucaskit
