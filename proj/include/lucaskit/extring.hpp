#pragma once

#include "lucaskit/ratpoly.hpp"

#include <ostream>
#include <string>

namespace lucaskit {

/// The discriminant x^2 + 4y.
inline RatPoly discriminant() { return RatPoly::x().pow(2) + RatPoly::y().scaled(4); }

/// a + b*s in the ring obtained from Q[x, y] by adjoining s with s^2 = x^2 + 4y.
///
/// The doubled characteristic roots live here exactly: 2*alpha = x + s and
/// 2*beta = x - s.
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(RatPoly a, RatPoly b = {}) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT(google-explicit-constructor)

  static ExtElem s() { return {RatPoly(0), RatPoly(1)}; }
  /// 2*alpha = x + s.
  static ExtElem doubled_alpha() { return {RatPoly::x(), RatPoly(1)}; }
  /// 2*beta = x - s.
  static ExtElem doubled_beta() { return {RatPoly::x(), RatPoly(-1)}; }

  const RatPoly& rational_part() const { return a_; }
  const RatPoly& s_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend ExtElem operator+(const ExtElem& u, const ExtElem& v) { return {u.a_ + v.a_, u.b_ + v.b_}; }
  friend ExtElem operator-(const ExtElem& u, const ExtElem& v) { return {u.a_ - v.a_, u.b_ - v.b_}; }
  friend ExtElem operator-(const ExtElem& u) { return {-u.a_, -u.b_}; }

  friend ExtElem operator*(const ExtElem& u, const ExtElem& v) {
    return {u.a_ * v.a_ + u.b_ * v.b_ * discriminant(), u.a_ * v.b_ + u.b_ * v.a_};
  }

  ExtElem& operator*=(const ExtElem& v) { return *this = *this * v; }

  friend bool operator==(const ExtElem&, const ExtElem&) = default;

  ExtElem scaled(const Rational& c) const { return {a_.scaled(c), b_.scaled(c)}; }

  /// a - b*s; swaps the two roots.
  ExtElem conj() const { return {a_, -b_}; }

  /// a^2 - (x^2 + 4y) b^2, the rational part of u * conj(u).
  RatPoly norm() const { return a_ * a_ - b_ * b_ * discriminant(); }

  ExtElem pow(unsigned long e) const {
    ExtElem acc(RatPoly(1));
    ExtElem sq = *this;
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

  /// "(A) + (B)*s".
  std::string to_string() const { return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*s"; }

  friend std::ostream& operator<<(std::ostream& os, const ExtElem& u) { return os << u.to_string(); }

 private:
  RatPoly a_;
  RatPoly b_;
};

}  // namespace lucaskit
