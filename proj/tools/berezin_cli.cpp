// Command-line front end: regime classification, sharp constants and
// strict bounds, r-scans of the bound curves, Monte-Carlo transform
// evaluation, and the full verification suites with machine-readable
// reports. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berezin/ball.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/seminorm.hpp"
#include "berezin/series.hpp"
#include "berezin/verify.hpp"
#include "output.hpp"

namespace {

using namespace berezin;
using cli::CsvWriter;
using cli::format_double;
using cli::JsonWriter;

struct Options {
  int n = 1;
  double alpha = 0.0;
  std::string case_name = "complex";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string r_spec = "0:0.99:0.01";
  std::string format = "text";
  std::string out_path;
  bool oracle = false;
  std::string suite = "all";
  std::string symbol = "one";
  std::string z_spec;
};

Case parse_case(const std::string& name) {
  if (name == "complex") return Case::complex_gradient;
  if (name == "real") return Case::real_gradient;
  throw CLI::ValidationError("--case", "must be 'complex' or 'real'");
}

std::vector<double> parse_grid(const std::string& spec) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &extra) != 3) {
    throw std::invalid_argument("bad r-grid spec '" + spec + "' (want start:stop:step)");
  }
  if (!(step > 0.0) || start > stop || start < 0.0 || stop >= 1.0) {
    throw std::invalid_argument("bad r-grid range: need 0 <= start <= stop < 1 and step > 0");
  }
  const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = start + i * step;
  return grid;
}

CPoint parse_point(const std::string& spec, int n) {
  std::vector<double> xs;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) xs.push_back(std::stod(tok));
  if (static_cast<int>(xs.size()) != 2 * n) {
    throw std::invalid_argument("--z needs exactly 2n comma-separated reals (x1,y1,...,xn,yn)");
  }
  return CPoint::from_real(xs);
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const Options& opt, const std::string& content) {
  if (opt.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
  f << content;
}

QuadratureConfig quadrature_config(const Options& opt) {
  QuadratureConfig cfg;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  // Below alpha = 0 the weight (1-|w|^2)^alpha blows up at the sphere and
  // the uniform estimator has divergent variance; sample the radius from
  // the weighted density instead.
  if (opt.alpha < 0.0) cfg.method = Method::radial_importance;
  return cfg;
}

void validate_common(const Options& opt) {
  if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (!(opt.alpha > -1.0)) throw std::invalid_argument("--alpha must be > -1");
  if (opt.samples < 1000) throw std::invalid_argument("--samples must be >= 1000");
  if (opt.format != "text" && opt.format != "json" && opt.format != "csv") {
    throw std::invalid_argument("--format must be text, json or csv");
  }
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::unbounded: return "unbounded";
    case Regime::sharp: return "sharp";
    case Regime::bounded_strict: return "bounded-strict";
  }
  return "?";
}

int cmd_classify(const Options& opt, bool value_only) {
  validate_common(opt);
  const RegimeReport rep = classify(opt.n, opt.alpha, parse_case(opt.case_name));

  if (opt.format == "json") {
    JsonWriter j;
    j.begin_object();
    j.key("command");
    j.string(value_only ? "constant" : "classify");
    j.key("timestamp");
    j.string(timestamp_utc());
    j.key("n");
    j.number_int(rep.n);
    j.key("alpha");
    j.number(rep.alpha);
    j.key("case");
    j.string(opt.case_name);
    j.key("regime");
    j.string(regime_name(rep.regime));
    j.key("constant_or_bound");
    j.number(rep.constant_or_bound);
    j.key("turning_index");
    if (rep.turning_index) {
      j.number_int(*rep.turning_index);
    } else {
      j.null();
    }
    j.end_object();
    emit(opt, j.str());
  } else if (opt.format == "csv") {
    CsvWriter c;
    c.row({"n", "alpha", "case", "regime", "constant_or_bound", "turning_index"});
    c.row({std::to_string(rep.n), format_double(rep.alpha), opt.case_name,
           regime_name(rep.regime),
           std::isfinite(rep.constant_or_bound) ? format_double(rep.constant_or_bound) : "",
           rep.turning_index ? std::to_string(*rep.turning_index) : ""});
    emit(opt, c.str());
  } else {
    std::ostringstream t;
    if (value_only) {
      t << format_double(rep.constant_or_bound) << "\n";
    } else {
      t << "n:                 " << rep.n << "\n";
      t << "alpha:             " << format_double(rep.alpha) << "\n";
      t << "case:              " << opt.case_name << "\n";
      t << "regime:            " << regime_name(rep.regime) << "\n";
      t << "constant_or_bound: " << format_double(rep.constant_or_bound) << "\n";
      if (rep.turning_index) t << "turning_index:     " << *rep.turning_index << "\n";
    }
    emit(opt, t.str());
  }
  return 0;
}

int cmd_scan(const Options& opt) {
  validate_common(opt);
  const Case gradient_case = parse_case(opt.case_name);
  const std::vector<double> grid = parse_grid(opt.r_spec);
  const WeightContext ctx = make_context(opt.n, opt.alpha);

  ScanResult scan;
  if (opt.alpha >= 0.0) {
    std::optional<QuadratureConfig> oracle_cfg;
    if (opt.oracle) oracle_cfg = quadrature_config(opt);
    scan = scan_r(gradient_case, ctx, grid, oracle_cfg);
  } else {
    // Below alpha = 0 there is no convergent bound series; the scan is
    // oracle-only and the argmax is taken over the oracle column.
    if (!opt.oracle) {
      throw std::invalid_argument("scan with alpha < 0 requires --oracle");
    }
    const QuadratureConfig cfg = quadrature_config(opt);
    scan.rows.reserve(grid.size());
    for (double r : grid) {
      ScanRow row;
      row.r = r;
      row.bound = std::numeric_limits<double>::quiet_NaN();
      RealEstimate est;
      if (gradient_case == Case::complex_gradient) {
        est = oracle_bound_complex(ctx, r, cfg);
      } else {
        est = oracle_bound_real(ctx, r, 1.0, 0.0, cfg);
        const double pref = 2.0 * (ctx.n + 1) * ctx.c_alpha * std::pow(1.0 - r * r, ctx.alpha);
        est.value *= pref;
        est.std_error *= pref;
      }
      row.oracle_value = est.value;
      row.oracle_std_error = est.std_error;
      scan.rows.push_back(row);
    }
    scan.argmax_index = 0;
    for (std::size_t i = 1; i < scan.rows.size(); ++i) {
      if (*scan.rows[i].oracle_value > *scan.rows[scan.argmax_index].oracle_value) {
        scan.argmax_index = i;
      }
    }
    scan.max_value = *scan.rows[scan.argmax_index].oracle_value;
  }

  if (opt.format == "json") {
    JsonWriter j;
    j.begin_object();
    j.key("command");
    j.string("scan");
    j.key("timestamp");
    j.string(timestamp_utc());
    j.key("n");
    j.number_int(opt.n);
    j.key("alpha");
    j.number(opt.alpha);
    j.key("case");
    j.string(opt.case_name);
    j.key("argmax_r");
    j.number(scan.rows[scan.argmax_index].r);
    j.key("max_value");
    j.number(scan.max_value);
    j.key("rows");
    j.begin_array();
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      const ScanRow& row = scan.rows[i];
      j.begin_object();
      j.key("r");
      j.number(row.r);
      j.key("bound_value");
      j.number(row.bound);
      j.key("oracle_value");
      if (row.oracle_value) j.number(*row.oracle_value); else j.null();
      j.key("oracle_stderr");
      if (row.oracle_std_error) j.number(*row.oracle_std_error); else j.null();
      j.key("is_argmax");
      j.boolean(i == scan.argmax_index);
      j.end_object();
    }
    j.end_array();
    j.end_object();
    emit(opt, j.str());
  } else if (opt.format == "csv" || opt.format == "text") {
    CsvWriter c;
    c.row({"r", "bound_value", "oracle_value", "oracle_stderr", "is_argmax"});
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      const ScanRow& row = scan.rows[i];
      c.row({format_double(row.r),
             std::isfinite(row.bound) ? format_double(row.bound) : "",
             row.oracle_value ? format_double(*row.oracle_value) : "",
             row.oracle_std_error ? format_double(*row.oracle_std_error) : "",
             i == scan.argmax_index ? "true" : "false"});
    }
    emit(opt, c.str());
  }
  return 0;
}

void json_checks(JsonWriter& j, const SuiteReport& rep) {
  j.begin_object();
  j.key("suite");
  j.string(rep.suite);
  j.key("pass");
  j.boolean(rep.pass());
  j.key("checks");
  j.begin_array();
  for (const CheckResult& c : rep.checks) {
    j.begin_object();
    j.key("check");
    j.string(c.name);
    j.key("value");
    j.number(c.value);
    j.key("reference");
    j.number(c.reference);
    j.key("sigma_distance");
    j.number(c.sigma_distance);
    j.key("rel_error");
    j.number(c.rel_error);
    j.key("pass");
    j.boolean(c.pass);
    j.end_object();
  }
  j.end_array();
  j.end_object();
}

int cmd_verify(const Options& opt) {
  validate_common(opt);
  const Case gradient_case = parse_case(opt.case_name);
  const QuadratureConfig cfg = quadrature_config(opt);
  const bool all = opt.suite == "all";

  std::vector<SuiteReport> reports;
  if (all || opt.suite == "identities") reports.push_back(run_identity_suite(opt.seed));
  if (all || opt.suite == "parseval") reports.push_back(run_parseval_suite());
  if (all || opt.suite == "moments") reports.push_back(run_moment_suite(cfg));
  if (opt.suite == "series" || (all && opt.alpha >= 0.0)) {
    reports.push_back(run_series_suite(opt.n, opt.alpha, cfg));
  }
  const double sharp_limit =
      gradient_case == Case::complex_gradient ? 2.0 * opt.n + 3.0 : opt.n + 0.5;
  if (opt.suite == "sharp" ||
      (all && opt.alpha >= 0.0 && opt.alpha <= sharp_limit)) {
    reports.push_back(run_sharp_suite(gradient_case, opt.n, opt.alpha, cfg));
  }
  if (opt.suite == "unbounded" || (all && opt.alpha < 0.0)) {
    reports.push_back(run_unbounded_suite(opt.n, opt.alpha, cfg));
  }
  if (reports.empty()) {
    throw std::invalid_argument("unknown suite '" + opt.suite +
                                "' (identities|parseval|moments|series|sharp|unbounded|all)");
  }

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();

  if (opt.format == "json") {
    JsonWriter j;
    j.begin_object();
    j.key("command");
    j.string("verify");
    j.key("timestamp");
    j.string(timestamp_utc());
    j.key("n");
    j.number_int(opt.n);
    j.key("alpha");
    j.number(opt.alpha);
    j.key("case");
    j.string(opt.case_name);
    j.key("samples");
    j.number_uint(opt.samples);
    j.key("seed");
    j.number_uint(opt.seed);
    j.key("suites");
    j.begin_array();
    for (const auto& r : reports) json_checks(j, r);
    j.end_array();
    j.key("pass");
    j.boolean(pass);
    j.end_object();
    emit(opt, j.str());
  } else if (opt.format == "csv") {
    CsvWriter c;
    c.row({"suite", "check", "value", "reference", "sigma_distance", "rel_error", "pass"});
    for (const auto& r : reports) {
      for (const CheckResult& chk : r.checks) {
        c.row({r.suite, chk.name, format_double(chk.value), format_double(chk.reference),
               format_double(chk.sigma_distance), format_double(chk.rel_error),
               chk.pass ? "true" : "false"});
      }
    }
    emit(opt, c.str());
  } else {
    std::ostringstream t;
    for (const auto& r : reports) {
      t << "suite " << r.suite << "\n";
      for (const CheckResult& chk : r.checks) {
        char line[256];
        std::snprintf(line, sizeof(line), "  [%s] %-38s value=%-13.6g ref=%-13.6g sigma=%-9.3g\n",
                      chk.pass ? "PASS" : "FAIL", chk.name.c_str(), chk.value, chk.reference,
                      chk.sigma_distance);
        t << line;
      }
    }
    t << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
    emit(opt, t.str());
  }
  return pass ? 0 : 1;
}

int cmd_transform(const Options& opt) {
  validate_common(opt);
  const WeightContext ctx = make_context(opt.n, opt.alpha);
  const CPoint z = opt.z_spec.empty() ? CPoint::zero(opt.n) : parse_point(opt.z_spec, opt.n);
  if (!z.in_ball()) throw std::invalid_argument("--z must lie in the open unit ball");

  BoundedSymbol f = BoundedSymbol::constant(Complex(1.0, 0.0), opt.n);
  if (opt.symbol == "one") {
    // default
  } else if (opt.symbol == "extremal-complex") {
    f = BoundedSymbol::extremal_complex(CPoint::basis(opt.n, 0));
  } else if (opt.symbol == "extremal-real") {
    f = BoundedSymbol::extremal_real(CPoint::basis(opt.n, 0));
  } else {
    throw std::invalid_argument("--symbol must be one, extremal-complex or extremal-real");
  }

  const ComplexEstimate est = transform_at(f, z, ctx, quadrature_config(opt));

  if (opt.format == "json") {
    JsonWriter j;
    j.begin_object();
    j.key("command");
    j.string("transform");
    j.key("timestamp");
    j.string(timestamp_utc());
    j.key("n");
    j.number_int(opt.n);
    j.key("alpha");
    j.number(opt.alpha);
    j.key("symbol");
    j.string(opt.symbol);
    j.key("value_re");
    j.number(est.value.real());
    j.key("value_im");
    j.number(est.value.imag());
    j.key("std_error");
    j.number(est.std_error);
    j.key("samples");
    j.number_uint(est.samples);
    j.key("seed");
    j.number_uint(est.seed);
    j.end_object();
    emit(opt, j.str());
  } else if (opt.format == "csv") {
    CsvWriter c;
    c.row({"value_re", "value_im", "std_error", "samples", "seed"});
    c.row({format_double(est.value.real()), format_double(est.value.imag()),
           format_double(est.std_error), std::to_string(est.samples), std::to_string(est.seed)});
    emit(opt, c.str());
  } else {
    std::ostringstream t;
    t << "value:     " << format_double(est.value.real()) << " + "
      << format_double(est.value.imag()) << "i\n";
    t << "std_error: " << format_double(est.std_error) << "\n";
    t << "samples:   " << est.samples << "\n";
    emit(opt, t.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"berezin: numerical laboratory for the weighted Berezin transform on the complex unit ball"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "complex dimension (>= 1)");
    sub->add_option("--alpha", opt.alpha, "weight exponent (> -1)");
    sub->add_option("--case", opt.case_name, "gradient case: complex|real");
    sub->add_option("--samples", opt.samples, "Monte-Carlo sample count (>= 1000, default 10^6)");
    sub->add_option("--seed", opt.seed, "Monte-Carlo seed");
    sub->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    sub->add_option("--format", opt.format, "output format: text|json|csv");
    sub->add_option("--out", opt.out_path, "write output to a file instead of stdout");
  };

  CLI::App* classify = app.add_subcommand("classify", "classify (n, alpha) into its regime");
  add_common(classify);
  CLI::App* constant = app.add_subcommand("constant", "print the sharp constant or strict bound");
  add_common(constant);
  CLI::App* scan = app.add_subcommand("scan", "tabulate the bound curve over an r-grid");
  add_common(scan);
  scan->add_option("--r", opt.r_spec, "r-grid as start:stop:step (default 0:0.99:0.01)");
  scan->add_flag("--oracle", opt.oracle, "attach the Monte-Carlo oracle column");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", opt.suite,
                     "identities|parseval|moments|series|sharp|unbounded|all");
  CLI::App* transform = app.add_subcommand("transform", "evaluate (B_alpha f)(z) by Monte-Carlo");
  add_common(transform);
  transform->add_option("--symbol", opt.symbol, "one|extremal-complex|extremal-real");
  transform->add_option("--z", opt.z_spec, "evaluation point as 2n reals x1,y1,...,xn,yn");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(opt, false);
    if (app.got_subcommand(constant)) return cmd_classify(opt, true);
    if (app.got_subcommand(scan)) return cmd_scan(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(transform)) return cmd_transform(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
