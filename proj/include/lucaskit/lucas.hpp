#pragma once

#include "lucaskit/extring.hpp"
#include "lucaskit/ratpoly.hpp"
#include "lucaskit/report.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lucaskit {

enum class SequenceKind { Fib, Luc };

inline std::string_view to_string(SequenceKind kind) { return kind == SequenceKind::Fib ? "fib" : "luc"; }

namespace detail {

inline void require_nonnegative(long n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": negative index " + std::to_string(n));
  }
}

}  // namespace detail

/// n-th term of the sequence w_n = x w_{n-1} + y w_{n-2} with the Fibonacci
/// (0, 1) or Lucas (2, x) start, over any commutative ring.
template <class Ring>
Ring sequence_by_recurrence(SequenceKind kind, long n, const Ring& x, const Ring& y) {
  detail::require_nonnegative(n, "sequence_by_recurrence");
  Ring prev = kind == SequenceKind::Fib ? Ring(0) : Ring(2);
  Ring cur = kind == SequenceKind::Fib ? Ring(1) : x;
  if (n == 0) {
    return prev;
  }
  for (long i = 1; i < n; ++i) {
    Ring next = x * cur + y * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// F_n by fast doubling over (F_m, F_{m+1}, (-y)^m):
///   L_m      = 2 F_{m+1} - x F_m
///   F_{2m}   = F_m L_m
///   F_{2m+1} = F_{m+1} L_m - (-y)^m
template <class Ring>
Ring fib_by_doubling(long n, const Ring& x, const Ring& y) {
  detail::require_nonnegative(n, "fib_by_doubling");
  Ring f0(0);
  Ring f1(1);
  Ring q(1);
  const Ring neg_y = Ring(0) - y;
  int top = 0;
  while ((n >> top) > 1) {
    ++top;
  }
  for (int bit = n == 0 ? -1 : top; bit >= 0; --bit) {
    Ring l = Ring(2) * f1 - x * f0;
    Ring even = f0 * l;
    Ring odd = f1 * l - q;
    q = q * q;
    if ((n >> bit) & 1) {
      f1 = x * odd + y * even;
      f0 = std::move(odd);
      q = q * neg_y;
    } else {
      f0 = std::move(even);
      f1 = std::move(odd);
    }
  }
  return f0;
}

/// L_n by fast doubling over (L_m, L_{m+1}, (-y)^m):
///   L_{2m}   = L_m^2 - 2 (-y)^m
///   L_{2m+1} = L_m L_{m+1} - x (-y)^m
template <class Ring>
Ring luc_by_doubling(long n, const Ring& x, const Ring& y) {
  detail::require_nonnegative(n, "luc_by_doubling");
  Ring l0(2);
  Ring l1 = x;
  Ring q(1);
  const Ring neg_y = Ring(0) - y;
  int top = 0;
  while ((n >> top) > 1) {
    ++top;
  }
  for (int bit = n == 0 ? -1 : top; bit >= 0; --bit) {
    Ring even = l0 * l0 - Ring(2) * q;
    Ring odd = l0 * l1 - x * q;
    q = q * q;
    if ((n >> bit) & 1) {
      l1 = x * odd + y * even;
      l0 = std::move(odd);
      q = q * neg_y;
    } else {
      l0 = std::move(even);
      l1 = std::move(odd);
    }
  }
  return l0;
}

namespace detail {

// Append-only table of recurrence values; the lock makes concurrent growth
// look like a pure function to callers.
class SequenceCache {
 public:
  explicit SequenceCache(SequenceKind kind) {
    values_.push_back(kind == SequenceKind::Fib ? RatPoly(0) : RatPoly(2));
    values_.push_back(kind == SequenceKind::Fib ? RatPoly(1) : RatPoly::x());
  }

  RatPoly get(long n) {
    std::lock_guard lock(mutex_);
    const RatPoly x = RatPoly::x();
    const RatPoly y = RatPoly::y();
    while (values_.size() <= static_cast<std::size_t>(n)) {
      const std::size_t m = values_.size();
      values_.push_back(x * values_[m - 1] + y * values_[m - 2]);
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<RatPoly> values_;
};

inline SequenceCache& cache_for(SequenceKind kind) {
  static SequenceCache fib_cache(SequenceKind::Fib);
  static SequenceCache luc_cache(SequenceKind::Luc);
  return kind == SequenceKind::Fib ? fib_cache : luc_cache;
}

}  // namespace detail

/// F_n(x, y) from the recurrence, memoized.
inline RatPoly fib(long n) {
  detail::require_nonnegative(n, "fib");
  return detail::cache_for(SequenceKind::Fib).get(n);
}

/// L_n(x, y) from the recurrence, memoized.
inline RatPoly luc(long n) {
  detail::require_nonnegative(n, "luc");
  return detail::cache_for(SequenceKind::Luc).get(n);
}

inline RatPoly sequence(SequenceKind kind, long n) { return kind == SequenceKind::Fib ? fib(n) : luc(n); }

inline RatPoly fib_fast(long n) { return fib_by_doubling(n, RatPoly::x(), RatPoly::y()); }
inline RatPoly luc_fast(long n) { return luc_by_doubling(n, RatPoly::x(), RatPoly::y()); }

/// Compares (x+s)^n +- (x-s)^n against 2^n L_n or 2^n F_n s.
inline bool binet_check(SequenceKind kind, long n) {
  detail::require_nonnegative(n, "binet_check");
  const auto e = static_cast<unsigned long>(n);
  const ExtElem a = ExtElem::doubled_alpha().pow(e);
  const ExtElem b = ExtElem::doubled_beta().pow(e);
  const Rational two_n = rational_pow(2, n);
  if (kind == SequenceKind::Luc) {
    return a + b == ExtElem(luc(n).scaled(two_n), RatPoly());
  }
  return a - b == ExtElem(RatPoly(), fib(n).scaled(two_n));
}

namespace detail {

// (-1)^(k+1) y^k, the second argument of the composition identities.
inline RatPoly composition_y(long k) {
  return RatPoly::monomial(k % 2 == 1 ? 1 : -1, 0, static_cast<std::uint32_t>(k));
}

inline void require_composition_args(long n, long k) {
  require_nonnegative(n, "composition check");
  if (k < 1) {
    throw std::invalid_argument("composition check: k must be at least 1, got " + std::to_string(k));
  }
}

}  // namespace detail

/// F_n(L_k, (-1)^(k+1) y^k) * F_k == F_{kn}.
inline IdentityReport compose_fib(long n, long k) {
  detail::require_composition_args(n, k);
  RatPoly lhs = fib(n).subst(luc(k), detail::composition_y(k)) * fib(k);
  return make_report("remark_fib", n, k, std::move(lhs), fib(k * n));
}

/// L_n(L_k, (-1)^(k+1) y^k) == L_{kn}.
inline IdentityReport compose_luc(long n, long k) {
  detail::require_composition_args(n, k);
  RatPoly lhs = luc(n).subst(luc(k), detail::composition_y(k));
  return make_report("remark_luc", n, k, std::move(lhs), luc(k * n));
}

}  // namespace lucaskit
