#pragma once

#include "lucaskit/extring.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/parallel.hpp"
#include "lucaskit/ratpoly.hpp"
#include "lucaskit/report.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lucaskit {

/// sum_{k=0}^{upper(n)} term(n, k). Empty, hence zero, when upper(n) < 0.
struct GouldSum {
  std::function<long(long n)> upper;
  std::function<RatPoly(long n, long k)> term;

  RatPoly operator()(long n) const {
    RatPoly acc;
    const long hi = upper(n);
    for (long k = 0; k <= hi; ++k) {
      acc += term(n, k);
    }
    return acc;
  }
};

/// A binomial-sum identity lhs(n) == rhs(n), valid for n >= min_n.
struct GouldIdentity {
  std::string name;
  long min_n = 0;
  GouldSum lhs;
  std::function<RatPoly(long n)> rhs;
};

/// Largest number of k values iterated by the composition checks in
/// verify_range; matches the grid the composition identities are accepted on.
inline constexpr long kCompositionMaxK = 8;

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

namespace detail {

inline RatPoly x_pow(long e) { return RatPoly::monomial(1, static_cast<std::uint32_t>(e), 0); }

inline RatPoly disc_pow(long e) { return discriminant().pow(static_cast<unsigned long>(e)); }

inline Rational binom_q(long a, long b) { return Rational(binomial(a, b)); }

inline long half_floor(long n) { return floor_div(n, 2); }
inline long half_floor_minus_one(long n) { return floor_div(n - 1, 2); }

// (3x, y - 2x^2): the arguments whose characteristic roots are x + alpha, x + beta.
inline RatPoly shifted_x() { return RatPoly::x().scaled(3); }
inline RatPoly shifted_y() { return RatPoly::y() - RatPoly::monomial(2, 2, 0); }

inline std::vector<GouldIdentity> build_identities() {
  using U = std::uint32_t;
  std::vector<GouldIdentity> ids;

  // sum C(n-k,k) n/(n-k) x^{n-2k} y^k = L_n
  ids.push_back({"ex1", 1,
                 {half_floor,
                  [](long n, long k) {
                    return RatPoly::monomial(binom_q(n - k, k) * make_rational(n, n - k), U(n - 2 * k), U(k));
                  }},
                 [](long n) { return luc(n); }});

  // sum C(n,2k) (x^2+4y)^k x^{n-2k} / (2k+1) = 2^n/(n+1) F_{n+1}
  ids.push_back({"ex2", 0,
                 {half_floor,
                  [](long n, long k) {
                    return (disc_pow(k) * x_pow(n - 2 * k)).scaled(binom_q(n, 2 * k) / (2 * k + 1));
                  }},
                 [](long n) { return fib(n + 1).scaled(rational_pow(2, n) / (n + 1)); }});

  // (n+1) sum C(n,2k+1) (x^2+4y)^{k+1} x^{n-2k-1} / (k+1) = 2^{n+1} L_{n+1} - 2 x^{n+1}
  ids.push_back({"ex3", 0,
                 {half_floor_minus_one,
                  [](long n, long k) {
                    return (disc_pow(k + 1) * x_pow(n - 2 * k - 1)).scaled(binom_q(n, 2 * k + 1) * (n + 1) / (k + 1));
                  }},
                 [](long n) { return luc(n + 1).scaled(rational_pow(2, n + 1)) - x_pow(n + 1).scaled(2); }});

  // sum C(n-k,k) 2^{n-2k} y^k = F_{n+1}(2, y)
  ids.push_back({"ex4", 0,
                 {half_floor,
                  [](long n, long k) {
                    return RatPoly::monomial(binom_q(n - k, k) * rational_pow(2, n - 2 * k), 0, U(k));
                  }},
                 [](long n) { return fib(n + 1).subst(RatPoly(2), RatPoly::y()); }});

  // sum C(n,2k) (x^2+4y)^k x^{n-2k} = 2^{n-1} L_n
  ids.push_back({"ex5a", 0,
                 {half_floor,
                  [](long n, long k) { return (disc_pow(k) * x_pow(n - 2 * k)).scaled(binom_q(n, 2 * k)); }},
                 [](long n) { return luc(n).scaled(rational_pow(2, n - 1)); }});

  // 2 sum C(n,2k) L_{2k} x^{n-2k} = L_n(x,y) + L_n(3x, y-2x^2)
  ids.push_back({"ex5b", 0,
                 {half_floor,
                  [](long n, long k) { return (luc(2 * k) * x_pow(n - 2 * k)).scaled(binom_q(n, 2 * k) * 2); }},
                 [](long n) { return luc(n) + luc(n).subst(shifted_x(), shifted_y()); }});

  // sum C(n,2k+1) (x^2+4y)^k x^{n-2k-1} = 2^{n-1} F_n
  ids.push_back({"ex6a", 0,
                 {half_floor_minus_one,
                  [](long n, long k) {
                    return (disc_pow(k) * x_pow(n - 2 * k - 1)).scaled(binom_q(n, 2 * k + 1));
                  }},
                 [](long n) { return fib(n).scaled(rational_pow(2, n - 1)); }});

  // 2y sum C(n,2k+1) F_{2k} x^{n-2k-1}
  //   = -[F_{n+1} - (y-2x^2) F_{n-1}(3x, y-2x^2) - x F_n(3x, y-2x^2)]
  ids.push_back({"ex6b", 1,
                 {half_floor_minus_one,
                  [](long n, long k) {
                    return (fib(2 * k) * RatPoly::monomial(1, U(n - 2 * k - 1), 1)).scaled(binom_q(n, 2 * k + 1) * 2);
                  }},
                 [](long n) {
                   const RatPoly sx = shifted_x();
                   const RatPoly sy = shifted_y();
                   return -(fib(n + 1) - sy * fib(n - 1).subst(sx, sy) - RatPoly::x() * fib(n).subst(sx, sy));
                 }});
  return ids;
}

}  // namespace detail

/// The eight binomial-sum identities, in declaration order ex1 ... ex6b.
inline const std::vector<GouldIdentity>& gould_identities() {
  static const std::vector<GouldIdentity> ids = detail::build_identities();
  return ids;
}

/// nullptr when no identity has that name.
inline const GouldIdentity* find_identity(std::string_view name) {
  const auto& ids = gould_identities();
  auto it = std::find_if(ids.begin(), ids.end(), [&](const GouldIdentity& id) { return id.name == name; });
  return it == ids.end() ? nullptr : &*it;
}

inline IdentityReport check_identity(const GouldIdentity& id, long n) {
  if (n < id.min_n) {
    throw std::invalid_argument(id.name + " requires n >= " + std::to_string(id.min_n) + ", got " +
                                std::to_string(n));
  }
  return make_report(id.name, n, std::nullopt, id.lhs(n), id.rhs(n));
}

inline IdentityReport check_identity(std::string_view name, long n) {
  const GouldIdentity* id = find_identity(name);
  if (id == nullptr) {
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  }
  return check_identity(*id, n);
}

inline IdentityReport check_ex1(long n) { return check_identity("ex1", n); }
inline IdentityReport check_ex2(long n) { return check_identity("ex2", n); }
inline IdentityReport check_ex3(long n) { return check_identity("ex3", n); }
inline IdentityReport check_ex4(long n) { return check_identity("ex4", n); }
inline IdentityReport check_ex5a(long n) { return check_identity("ex5a", n); }
inline IdentityReport check_ex5b(long n) { return check_identity("ex5b", n); }
inline IdentityReport check_ex6a(long n) { return check_identity("ex6a", n); }
inline IdentityReport check_ex6b(long n) { return check_identity("ex6b", n); }

/// Every name accepted by verify_range.
inline std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& id : gould_identities()) {
    names.push_back(id.name);
  }
  names.emplace_back("remark_fib");
  names.emplace_back("remark_luc");
  return names;
}

/// Runs one named check for every admissible n <= n_max. The composition
/// checks walk the grid 0 <= n <= n_max, 1 <= k <= kCompositionMaxK with k
/// varying fastest. Output order does not depend on `threads`.
inline std::vector<IdentityReport> verify_range(std::string_view name, long n_max, unsigned threads = 1) {
  if (name == "remark_fib" || name == "remark_luc") {
    const bool fib_side = name == "remark_fib";
    std::vector<std::pair<long, long>> grid;
    for (long n = 0; n <= n_max; ++n) {
      for (long k = 1; k <= kCompositionMaxK; ++k) {
        grid.emplace_back(n, k);
      }
    }
    return parallel_map(grid.size(), threads, [&](std::size_t i) {
      const auto [n, k] = grid[i];
      return fib_side ? compose_fib(n, k) : compose_luc(n, k);
    });
  }

  const GouldIdentity* id = find_identity(name);
  if (id == nullptr) {
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  }
  const long first = id->min_n;
  const std::size_t count = n_max < first ? 0 : static_cast<std::size_t>(n_max - first + 1);
  return parallel_map(count, threads, [&](std::size_t i) { return check_identity(*id, first + static_cast<long>(i)); });
}

}  // namespace lucaskit
