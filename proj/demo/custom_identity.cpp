// Builds a few polynomials, then states and checks an identity that is not
// bundled: the Cassini-type relation F_{n+1} F_{n-1} - F_n^2 = -(-y)^(n-1).

#include "lucaskit/lucaskit.hpp"

#include <iostream>

int main() {
  using namespace lucaskit;

  for (long n = 0; n <= 6; ++n) {
    std::cout << "F_" << n << " = " << fib(n) << "    L_" << n << " = " << luc(n) << "\n";
  }

  const auto decl = idexpr::parse_identity(
      "cassini : n>=1 : F(n+1)*F(n-1) - F(n)^2 == -(-y)^(n-1)");
  std::cout << "\n" << idexpr::to_string(decl) << "\n";

  bool ok = true;
  for (const auto& report : idexpr::verify_identity(decl, 1, 12)) {
    std::cout << to_text(report) << "\n";
    ok = ok && report.pass;
  }
  return ok ? 0 : 1;
}
