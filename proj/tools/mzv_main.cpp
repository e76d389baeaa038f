// mzv: expand stuffle powers of zeta words, verify the algebra's identities
// symbolically / exactly / numerically, and evaluate individual values.
//
// Exit codes: 0 all checks passed, 1 a verification check failed, 2 usage or
// argument error.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/combinatorics.hpp"
#include "mzv/json_io.hpp"
#include "mzv/numeric_eval.hpp"
#include "mzv/quasi_shuffle.hpp"

namespace {

using nlohmann::json;

std::string sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double pow_int(double base, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

mzv::Composition parse_composition(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (text.empty())
    throw std::invalid_argument("expected a comma-separated list of positive integers");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition entry '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("bad composition entry '" + token + "'");
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return mzv::Composition(parts);  // validates parts >= 1
}

mzv::ProductKind parse_kind(const std::string& name) {
  if (name == "harmonic") return mzv::ProductKind::harmonic;
  if (name == "star") return mzv::ProductKind::star;
  throw std::invalid_argument("kind must be 'harmonic' or 'star'");
}

const char* kind_name(mzv::ProductKind kind) {
  return kind == mzv::ProductKind::harmonic ? "harmonic" : "star";
}

// ---------------------------------------------------------------------------
// Reports

struct CheckRecord {
  std::string name;
  std::string lhs;
  std::string rhs;
  double difference = 0.0;
  double tolerance = 0.0;

  bool pass() const { return difference <= tolerance; }
};

struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<CheckRecord> details;

  bool pass() const {
    return std::all_of(details.begin(), details.end(),
                       [](const CheckRecord& d) { return d.pass(); });
  }

  json to_json() const {
    json det = json::array();
    for (const auto& d : details)
      det.push_back({{"name", d.name},
                     {"lhs", d.lhs},
                     {"rhs", d.rhs},
                     {"difference", d.difference},
                     {"tolerance", d.tolerance}});
    return {{"schema", 1},
            {"command", command},
            {"inputs", inputs},
            {"status", pass() ? "pass" : "fail"},
            {"details", det}};
  }
};

using Task = std::function<CheckRecord()>;

/// Runs the checks, optionally fanned across workers; results are assembled
/// in task order either way, so output does not depend on completion order.
std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, bool parallel) {
  std::vector<CheckRecord> out(tasks.size());
  if (parallel) {
    std::vector<std::future<CheckRecord>> futures;
    futures.reserve(tasks.size());
    for (const auto& t : tasks)
      futures.push_back(std::async(std::launch::async, t));
    for (std::size_t i = 0; i < futures.size(); ++i) out[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
  }
  return out;
}

int emit_report(const Report& report, const std::string& format) {
  if (format == "json") {
    std::printf("%s\n", report.to_json().dump(2).c_str());
  } else {
    std::size_t passed = 0;
    for (const auto& d : report.details) {
      std::printf("%s %s: lhs=%s rhs=%s diff=%s tol=%s\n",
                  d.pass() ? "ok  " : "FAIL", d.name.c_str(), d.lhs.c_str(),
                  d.rhs.c_str(), sig17(d.difference).c_str(),
                  sig17(d.tolerance).c_str());
      if (d.pass()) ++passed;
    }
    std::printf("%s: %s (%zu/%zu checks)\n", report.command.c_str(),
                report.pass() ? "pass" : "fail", passed, report.details.size());
    if (!report.pass()) {
      const auto worst = std::max_element(
          report.details.begin(), report.details.end(),
          [](const CheckRecord& a, const CheckRecord& b) {
            return a.difference - a.tolerance < b.difference - b.tolerance;
          });
      std::printf("worst check: %s diff=%s tol=%s\n", worst->name.c_str(),
                  sig17(worst->difference).c_str(),
                  sig17(worst->tolerance).c_str());
    }
  }
  return report.pass() ? 0 : 1;
}

/// Number of words whose coefficients differ between the two polynomials.
std::size_t differing_terms(const mzv::WordPoly& a, const mzv::WordPoly& b) {
  std::size_t n = 0;
  for (const auto& [w, c] : a.terms())
    if (b.coeff(w) != c) ++n;
  for (const auto& [w, c] : b.terms())
    if (a.coeff(w) == 0) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Subcommands

struct Options {
  int n = 2;
  int k = 2;
  int ell = -1;
  bool ell_set = false;
  double x = 1.0;
  bool x_set = false;
  std::string kind;
  std::int64_t trunc = 100000;
  double tol = 1e-3;
  std::string format = "text";
  bool parallel = false;
  std::string eval_kind;
  std::string alpha;
  std::string target;
};

int cmd_expand(const Options& opt) {
  const mzv::ProductKind kind = parse_kind(opt.kind.empty() ? "harmonic" : opt.kind);
  const mzv::WordPoly p = mzv::expand_power_closed_form(opt.n, opt.k, kind);
  if (opt.format == "json") {
    const json out = {{"schema", 1},
                      {"command", "expand"},
                      {"inputs", {{"n", opt.n}, {"k", opt.k}, {"kind", kind_name(kind)}}},
                      {"terms", mzv::to_json(p)}};
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("%s\n", mzv::to_string(p).c_str());
  }
  return 0;
}

int cmd_eval(const Options& opt) {
  const mzv::Composition alpha = parse_composition(opt.alpha);
  mzv::EvalConfig cfg{opt.trunc, opt.x};
  mzv::EvalResult r;
  if (opt.eval_kind == "zeta") {
    r = mzv::mzv(alpha, cfg);
  } else if (opt.eval_kind == "zetastar") {
    r = mzv::mzsv(alpha, cfg);
  } else if (opt.eval_kind == "hurwitz") {
    r = mzv::hurwitz_mzv(alpha, cfg);
  } else if (opt.eval_kind == "hurwitzstar") {
    r = mzv::hurwitz_mzsv(alpha, cfg);
  } else if (opt.eval_kind == "t") {
    r = mzv::t_value(alpha, mzv::TKind::plain, cfg);
  } else if (opt.eval_kind == "tstar") {
    r = mzv::t_value(alpha, mzv::TKind::star, cfg);
  } else {
    throw std::invalid_argument("unknown eval kind '" + opt.eval_kind + "'");
  }
  if (opt.format == "json") {
    json inputs = {{"kind", opt.eval_kind},
                   {"alpha", alpha.parts()},
                   {"trunc", opt.trunc}};
    if (opt.eval_kind == "hurwitz" || opt.eval_kind == "hurwitzstar")
      inputs["x"] = opt.x;
    const json out = {{"schema", 1},
                      {"command", "eval"},
                      {"inputs", inputs},
                      {"value", r.value},
                      {"tail_bound", r.tail_bound}};
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("value      %s\n", sig17(r.value).c_str());
    std::printf("tail_bound %s\n", sig17(r.tail_bound).c_str());
  }
  return 0;
}

int cmd_count(const Options& opt) {
  const int k = opt.k;
  if (k < 1) throw std::invalid_argument("count: k must be >= 1");
  std::vector<mzv::BigInt> rows;
  for (int r = 1; r <= k; ++r) rows.push_back(mzv::surjection_count(k, r));
  const mzv::BigInt total = mzv::fubini(k);

  std::optional<mzv::IdentityCheck> split;
  std::vector<std::tuple<int, int, mzv::BigInt>> split_terms;
  if (opt.ell_set) {
    const int ell = opt.ell;
    if (ell < 1 || ell >= k)
      throw std::invalid_argument("count: --ell must lie in [1, k-1]");
    split = mzv::verify_theorem3(k, ell);
    for (int p = 1; p <= ell; ++p)
      for (int q = 1; q <= k - ell; ++q)
        split_terms.emplace_back(p, q,
                                 mzv::stirling2(ell, p) * mzv::stirling2(k - ell, q) *
                                     mzv::factorial(p) * mzv::factorial(q) *
                                     mzv::delannoy(p, q));
  }

  if (opt.format == "json") {
    json jrows = json::array();
    for (int r = 1; r <= k; ++r)
      jrows.push_back({{"r", r}, {"value", rows[static_cast<std::size_t>(r - 1)].str()}});
    json inputs = {{"k", k}};
    json out = {{"schema", 1},
                {"command", "count"},
                {"inputs", inputs},
                {"rows", jrows},
                {"total", total.str()}};
    if (split) {
      out["inputs"]["ell"] = opt.ell;
      json terms = json::array();
      for (const auto& [p, q, v] : split_terms)
        terms.push_back({{"p", p}, {"q", q}, {"value", v.str()}});
      out["split"] = {{"terms", terms},
                      {"lhs", split->lhs.str()},
                      {"rhs", split->rhs.str()},
                      {"equal", split->equal}};
    }
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    for (int r = 1; r <= k; ++r)
      std::printf("r=%d %s\n", r, rows[static_cast<std::size_t>(r - 1)].str().c_str());
    std::printf("total %s\n", total.str().c_str());
    if (split) {
      std::printf("split ell=%d:\n", opt.ell);
      for (const auto& [p, q, v] : split_terms)
        std::printf("p=%d q=%d %s\n", p, q, v.str().c_str());
      std::printf("lhs %s\n", split->lhs.str().c_str());
      std::printf("rhs %s\n", split->rhs.str().c_str());
      std::printf("equal %s\n", split->equal ? "yes" : "no");
    }
  }
  return split && !split->equal ? 1 : 0;
}

// ---- verify targets -------------------------------------------------------

std::vector<mzv::ProductKind> kinds_for(const Options& opt) {
  if (opt.kind.empty())
    return {mzv::ProductKind::harmonic, mzv::ProductKind::star};
  return {parse_kind(opt.kind)};
}

void add_proposition_tasks(std::vector<Task>& tasks, const Options& opt) {
  for (const mzv::ProductKind kind : kinds_for(opt)) {
    const int n = opt.n, k = opt.k;
    tasks.push_back([n, k, kind] {
      const mzv::WordPoly closed = mzv::expand_power_closed_form(n, k, kind);
      const mzv::WordPoly iterated = mzv::power(n, k, kind);
      CheckRecord rec;
      rec.name = std::string("proposition ") + kind_name(kind) + " n=" +
                 std::to_string(n) + " k=" + std::to_string(k);
      rec.lhs = mzv::to_string(closed);
      rec.rhs = mzv::to_string(iterated);
      rec.difference = static_cast<double>(differing_terms(closed, iterated));
      return rec;
    });
  }
}

void add_main_tasks(std::vector<Task>& tasks, const Options& opt) {
  const int n = opt.n, k = opt.k;
  const mzv::EvalConfig cfg{opt.trunc, 1.0};
  const double tol = opt.tol;
  tasks.push_back([n, k, cfg, tol] {
    const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::harmonic);
    const double lhs = mzv::evaluate_poly(e, mzv::Evaluator::mzv, cfg).value;
    const double rhs = pow_int(mzv::mzv(mzv::Composition{n}, cfg).value, k);
    return CheckRecord{"main zeta n=" + std::to_string(n) + " k=" + std::to_string(k),
                       sig17(lhs), sig17(rhs), std::abs(lhs - rhs), tol};
  });
  tasks.push_back([n, k, cfg, tol] {
    const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::star);
    const double lhs = mzv::evaluate_poly(e, mzv::Evaluator::mzsv, cfg).value;
    const double rhs = pow_int(mzv::mzsv(mzv::Composition{n}, cfg).value, k);
    return CheckRecord{"main zeta-star n=" + std::to_string(n) + " k=" + std::to_string(k),
                       sig17(lhs), sig17(rhs), std::abs(lhs - rhs), tol};
  });
}

void add_theorem3_tasks(std::vector<Task>& tasks, const Options& opt) {
  if (!opt.ell_set)
    throw std::invalid_argument("verify theorem3 requires --ell in [1, k-1]");
  const int k = opt.k, ell = opt.ell;
  tasks.push_back([k, ell] {
    const mzv::IdentityCheck c = mzv::verify_theorem3(k, ell);
    return CheckRecord{"theorem3 k=" + std::to_string(k) + " ell=" + std::to_string(ell),
                       c.lhs.str(), c.rhs.str(), c.equal ? 0.0 : 1.0, 0.0};
  });
}

void add_corollary_tasks(std::vector<Task>& tasks, const Options& opt) {
  const int k = opt.k;
  tasks.push_back([k] {
    const mzv::IdentityCheck c = mzv::verify_corollary(k);
    return CheckRecord{"corollary k=" + std::to_string(k), c.lhs.str(), c.rhs.str(),
                       c.equal ? 0.0 : 1.0, 0.0};
  });
}

void add_hurwitz_tasks(std::vector<Task>& tasks, const Options& opt) {
  const int n = opt.n, k = opt.k;
  const double tol = opt.tol;
  const std::vector<double> shifts =
      opt.x_set ? std::vector<double>{opt.x} : std::vector<double>{0.5, 1.0, 1.5};
  for (const double x : shifts) {
    const mzv::EvalConfig cfg{opt.trunc, x};
    tasks.push_back([n, k, cfg, tol, x] {
      const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::harmonic);
      const double lhs = mzv::evaluate_poly(e, mzv::Evaluator::hurwitz_mzv, cfg).value;
      const double rhs = pow_int(mzv::hurwitz_mzv(mzv::Composition{n}, cfg).value, k);
      return CheckRecord{"hurwitz zeta n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             " x=" + sig17(x),
                         sig17(lhs), sig17(rhs), std::abs(lhs - rhs), tol};
    });
    tasks.push_back([n, k, cfg, tol, x] {
      const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::star);
      const double lhs = mzv::evaluate_poly(e, mzv::Evaluator::hurwitz_mzsv, cfg).value;
      const double rhs = pow_int(mzv::hurwitz_mzsv(mzv::Composition{n}, cfg).value, k);
      return CheckRecord{"hurwitz zeta-star n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             " x=" + sig17(x),
                         sig17(lhs), sig17(rhs), std::abs(lhs - rhs), tol};
    });
    if (x == 1.0) {
      // At x = 1 the shifted sums must reproduce the plain ones exactly.
      tasks.push_back([n, k, cfg] {
        const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::harmonic);
        const double lhs = mzv::evaluate_poly(e, mzv::Evaluator::hurwitz_mzv, cfg).value;
        const double rhs = mzv::evaluate_poly(e, mzv::Evaluator::mzv, cfg).value;
        return CheckRecord{"hurwitz x=1 matches zeta n=" + std::to_string(n) +
                               " k=" + std::to_string(k),
                           sig17(lhs), sig17(rhs), std::abs(lhs - rhs), 0.0};
      });
      tasks.push_back([n, k, cfg] {
        const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::star);
        const double lhs = mzv::evaluate_poly(e, mzv::Evaluator::hurwitz_mzsv, cfg).value;
        const double rhs = mzv::evaluate_poly(e, mzv::Evaluator::mzsv, cfg).value;
        return CheckRecord{"hurwitz x=1 matches zeta-star n=" + std::to_string(n) +
                               " k=" + std::to_string(k),
                           sig17(lhs), sig17(rhs), std::abs(lhs - rhs), 0.0};
      });
    }
  }
}

void add_tvalue_tasks(std::vector<Task>& tasks, const Options& opt) {
  const int n = opt.n, k = opt.k;
  const mzv::EvalConfig cfg{opt.trunc, 1.0};
  const double tol = opt.tol;
  tasks.push_back([n, k, cfg, tol] {
    const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::harmonic);
    const double lhs = mzv::evaluate_poly_t(e, mzv::TKind::plain, cfg).value;
    const double rhs = pow_int(mzv::t_value(mzv::Composition{n}, mzv::TKind::plain, cfg).value, k);
    return CheckRecord{"t sum formula n=" + std::to_string(n) + " k=" + std::to_string(k),
                       sig17(lhs), sig17(rhs), std::abs(lhs - rhs), tol};
  });
  tasks.push_back([n, k, cfg, tol] {
    const mzv::WordPoly e = mzv::expand_power_closed_form(n, k, mzv::ProductKind::star);
    const double lhs = mzv::evaluate_poly_t(e, mzv::TKind::star, cfg).value;
    const double rhs = pow_int(mzv::t_value(mzv::Composition{n}, mzv::TKind::plain, cfg).value, k);
    return CheckRecord{"t-star sum formula n=" + std::to_string(n) + " k=" + std::to_string(k),
                       sig17(lhs), sig17(rhs), std::abs(lhs - rhs), tol};
  });
  for (const mzv::Composition& alpha : {mzv::Composition{n}, mzv::Composition{n, n}}) {
    tasks.push_back([alpha, cfg] {
      mzv::EvalConfig half = cfg;
      half.shift = 0.5;
      const double lhs =
          std::ldexp(mzv::t_value(alpha, mzv::TKind::plain, cfg).value, alpha.weight());
      const double rhs = mzv::hurwitz_mzv(alpha, half).value;
      return CheckRecord{"t relation 2^w*t(a)=zeta(a;1/2) a=" + mzv::parts_string(alpha),
                         sig17(lhs), sig17(rhs), std::abs(lhs - rhs), 0.0};
    });
  }
}

int cmd_verify(const Options& opt) {
  std::vector<Task> tasks;
  Report report;
  report.command = "verify " + opt.target;
  report.inputs = {{"target", opt.target}};

  if (opt.target == "proposition") {
    report.inputs["n"] = opt.n;
    report.inputs["k"] = opt.k;
    if (!opt.kind.empty()) report.inputs["kind"] = opt.kind;
    add_proposition_tasks(tasks, opt);
  } else if (opt.target == "main") {
    report.inputs["n"] = opt.n;
    report.inputs["k"] = opt.k;
    report.inputs["trunc"] = opt.trunc;
    report.inputs["tol"] = opt.tol;
    add_main_tasks(tasks, opt);
  } else if (opt.target == "theorem3") {
    report.inputs["k"] = opt.k;
    report.inputs["ell"] = opt.ell;
    add_theorem3_tasks(tasks, opt);
  } else if (opt.target == "corollary") {
    report.inputs["k"] = opt.k;
    add_corollary_tasks(tasks, opt);
  } else if (opt.target == "hurwitz") {
    report.inputs["n"] = opt.n;
    report.inputs["k"] = opt.k;
    report.inputs["trunc"] = opt.trunc;
    report.inputs["tol"] = opt.tol;
    if (opt.x_set) report.inputs["x"] = opt.x;
    add_hurwitz_tasks(tasks, opt);
  } else if (opt.target == "tvalues") {
    report.inputs["n"] = opt.n;
    report.inputs["k"] = opt.k;
    report.inputs["trunc"] = opt.trunc;
    report.inputs["tol"] = opt.tol;
    add_tvalue_tasks(tasks, opt);
  } else {
    throw std::invalid_argument("unknown verify target '" + opt.target + "'");
  }

  report.details = run_tasks(tasks, opt.parallel);
  return emit_report(report, opt.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-shuffle word algebra of multiple zeta values: expansions, "
               "identity verification, numeric evaluation"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* expand = app.add_subcommand("expand", "print the multinomial expansion of the k-fold product of z_n");
  expand->add_option("--n", opt.n, "generator index n >= 1");
  expand->add_option("--k", opt.k, "power k >= 1");
  expand->add_option("--kind", opt.kind, "harmonic | star (default harmonic)")
      ->check(CLI::IsMember({"harmonic", "star"}));
  expand->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "check one of the identities and report pass/fail");
  verify->add_option("target", opt.target, "proposition | main | theorem3 | corollary | hurwitz | tvalues")
      ->required()
      ->check(CLI::IsMember({"proposition", "main", "theorem3", "corollary", "hurwitz", "tvalues"}));
  verify->add_option("--n", opt.n, "generator index (default 2)");
  verify->add_option("--k", opt.k, "power / weight parameter (default 2)");
  auto* ell_opt = verify->add_option("--ell", opt.ell, "split position for theorem3");
  verify->add_option("--x", opt.x, "Hurwitz shift; hurwitz target defaults to {1/2, 1, 3/2}");
  verify->add_option("--kind", opt.kind, "restrict proposition to one product kind")
      ->check(CLI::IsMember({"harmonic", "star"}));
  verify->add_option("--trunc", opt.trunc, "summation limit per index (default 100000)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", opt.tol, "numeric tolerance (default 1e-3)");
  verify->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--parallel", opt.parallel, "fan independent checks across workers");

  CLI::App* eval = app.add_subcommand("eval", "evaluate one truncated value with a tail estimate");
  eval->add_option("kind", opt.eval_kind, "zeta | zetastar | hurwitz | hurwitzstar | t | tstar")
      ->required()
      ->check(CLI::IsMember({"zeta", "zetastar", "hurwitz", "hurwitzstar", "t", "tstar"}));
  eval->add_option("alpha", opt.alpha, "composition, e.g. 2,3")->required();
  eval->add_option("--trunc", opt.trunc, "summation limit per index (default 100000)")
      ->check(CLI::PositiveNumber);
  eval->add_option("--x", opt.x, "Hurwitz shift x > 0 (default 1)");
  eval->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* count = app.add_subcommand("count", "surjection counts r!*S(k,r), the Fubini total, and the ell-split");
  count->add_option("--k", opt.k, "number of factors")->required();
  count->add_option("--ell", opt.ell, "also print the Delannoy-weighted split at ell");
  count->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opt.ell_set = ell_opt->count() > 0 || count->count("--ell") > 0;
  opt.x_set = verify->count("--x") > 0;

  try {
    if (expand->parsed()) return cmd_expand(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (eval->parsed()) return cmd_eval(opt);
    if (count->parsed()) return cmd_count(opt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
