// lucaskit: generate bivariate Fibonacci/Lucas polynomials and verify
// binomial-sum identities for them.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error,
// 3 evaluation error.

#include "lucaskit/lucaskit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace lucaskit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEval = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::optional<unsigned> threads;

  std::string kind;
  long n = 0;
  long n_max = 32;
  long order = 128;
  std::vector<std::string> names{"all"};
  std::string path;
  std::string range = "0..32";
};

unsigned resolve_threads(const Options& opt) {
  if (opt.threads) {
    return std::max(1U, *opt.threads);
  }
  if (const char* env = std::getenv("LUCASKIT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) {
        return static_cast<unsigned>(v);
      }
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("LUCASKIT_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool json_output(const Options& opt) { return opt.format == "json"; }

SequenceKind sequence_kind(const std::string& kind) {
  if (kind == "fib") {
    return SequenceKind::Fib;
  }
  if (kind == "luc") {
    return SequenceKind::Luc;
  }
  throw UsageError("unknown kind '" + kind + "'");
}

void require_nonnegative(long v, const char* flag) {
  if (v < 0) {
    throw UsageError(std::string(flag) + " must be nonnegative, got " + std::to_string(v));
  }
}

int emit_reports(const Options& opt, const std::vector<IdentityReport>& reports) {
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    if (json_output(opt)) {
      std::cout << to_json(r).dump() << "\n";
    } else {
      std::cout << to_text(r) << "\n";
    }
  }
  if (!json_output(opt)) {
    std::size_t failed = 0;
    for (const auto& r : reports) {
      failed += r.pass ? 0 : 1;
    }
    std::cout << reports.size() << " checks, " << failed << " failed\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_poly(const Options& opt) {
  require_nonnegative(opt.n, "--n");
  const SequenceKind kind = sequence_kind(opt.kind);
  const RatPoly p = sequence(kind, opt.n);
  if (json_output(opt)) {
    std::cout << nlohmann::json{{"kind", opt.kind}, {"n", opt.n}, {"poly", p.to_string()}}.dump() << "\n";
  } else {
    std::cout << p << "\n";
  }
  return kExitPass;
}

int cmd_verify(const Options& opt) {
  require_nonnegative(opt.n_max, "--n-max");
  const std::vector<std::string> known = check_names();
  std::vector<std::string> selected;
  for (const auto& name : opt.names) {
    if (name == "all") {
      selected.insert(selected.end(), known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), name) != known.end()) {
      selected.push_back(name);
    } else {
      throw UsageError("unknown identity '" + name + "'");
    }
  }
  const unsigned threads = resolve_threads(opt);
  std::vector<IdentityReport> reports;
  for (const auto& name : selected) {
    auto batch = verify_range(name, opt.n_max, threads);
    reports.insert(reports.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return emit_reports(opt, reports);
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw UsageError("range must look like A..B, got '" + text + "'");
  }
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const long from = std::stol(a, &used_a);
    const long to = std::stol(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) {
      throw std::invalid_argument(text);
    }
    if (from > to) {
      throw UsageError("empty range '" + text + "'");
    }
    return {from, to};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like A..B, got '" + text + "'");
  }
}

int cmd_verify_expr(const Options& opt) {
  const auto [from, to] = parse_range(opt.range);
  std::ifstream in(opt.path);
  if (!in) {
    throw UsageError("cannot read '" + opt.path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();

  std::vector<idexpr::IdentityDecl> decls;
  try {
    decls = idexpr::parse_identity_file(buf.str());
  } catch (const idexpr::ParseError& err) {
    std::cerr << opt.path << ":" << err.what() << "\n";
    return kExitUsage;
  }

  const unsigned threads = resolve_threads(opt);
  std::vector<IdentityReport> reports;
  try {
    for (const auto& decl : decls) {
      auto batch = idexpr::verify_identity(decl, from, to, threads);
      reports.insert(reports.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
  } catch (const idexpr::EvalError& err) {
    std::cerr << opt.path << ": " << err.what() << "\n";
    return kExitEval;
  }
  return emit_reports(opt, reports);
}

int cmd_series(const Options& opt) {
  require_nonnegative(opt.order, "--order");
  const SequenceKind kind = sequence_kind(opt.kind);
  const TruncSeries s = generating_function(kind, static_cast<std::size_t>(opt.order));
  int status = kExitPass;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    const bool matches = s[n] == sequence(kind, static_cast<long>(n));
    if (json_output(opt)) {
      std::cout << nlohmann::json{{"kind", opt.kind}, {"n", n}, {"coeff", s[n].to_string()}, {"matches", matches}}.dump()
                << "\n";
    } else {
      std::cout << "t^" << n << ": " << s[n] << "\n";
    }
    if (!matches) {
      std::cerr << "coefficient of t^" << n << " differs from the recurrence value\n";
      status = kExitFail;
    }
  }
  return status;
}

int cmd_numbers(const Options& opt) {
  require_nonnegative(opt.n_max, "--n-max");
  // Evaluation at a point commutes with ring operations, so doubling over
  // the rationals gives poly_eval(fib_fast(n), x0, y0) without the symbolic
  // intermediate.
  Rational x0 = 1;
  const Rational y0 = 1;
  SequenceKind kind;
  if (opt.kind == "pell") {
    kind = SequenceKind::Fib;
    x0 = 2;
  } else {
    kind = sequence_kind(opt.kind);
  }
  for (long n = 0; n <= opt.n_max; ++n) {
    const Rational v = kind == SequenceKind::Fib ? fib_by_doubling(n, x0, y0) : luc_by_doubling(n, x0, y0);
    if (json_output(opt)) {
      std::cout << nlohmann::json{{"kind", opt.kind}, {"n", n}, {"value", to_string(v)}}.dump() << "\n";
    } else {
      std::cout << to_string(v) << "\n";
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bivariate Fibonacci and Lucas polynomial toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", opt.threads, "Worker threads (default: LUCASKIT_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto* poly = app.add_subcommand("poly", "Print F_n(x,y) or L_n(x,y)");
  poly->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"fib", "luc"}));
  poly->add_option("--n", opt.n)->required();

  auto* verify = app.add_subcommand("verify", "Check built-in identities for every admissible n <= n-max");
  verify->add_option("--names", opt.names, "Identity names, comma separated, or 'all'")->delimiter(',');
  verify->add_option("--n-max", opt.n_max, "Largest n to check")->capture_default_str();

  auto* verify_expr = app.add_subcommand("verify-expr", "Check identities declared in a file");
  verify_expr->add_option("path", opt.path, "Identity file")->required();
  verify_expr->add_option("--n", opt.range, "Range of n as A..B")->capture_default_str();

  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"fib", "luc"}));
  series->add_option("--order", opt.order, "Truncation order")->capture_default_str();

  auto* numbers = app.add_subcommand("numbers", "Fibonacci, Lucas or Pell numbers");
  numbers->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"fib", "luc", "pell"}));
  numbers->add_option("--n-max", opt.n_max, "Largest index")->capture_default_str();

  for (auto* sub : {poly, verify, verify_expr, series, numbers}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) {
      return cmd_poly(opt);
    }
    if (*verify) {
      return cmd_verify(opt);
    }
    if (*verify_expr) {
      return cmd_verify_expr(opt);
    }
    if (*series) {
      return cmd_series(opt);
    }
    return cmd_numbers(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
}
