#include "signsum/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "signsum/integral.hpp"
#include "signsum/rng.hpp"
#include "signsum/verify.hpp"
#include "signsum/werner.hpp"

namespace signsum {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;
constexpr int kExitMismatch = 5;

// Agreement bound between the float oracle and the exact engines.
constexpr double kCrossCheckTolerance = 1e-8;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

ordered_json make_envelope(const std::string& command, const std::string& input,
                           const std::string& engine, bool exact) {
  ordered_json envelope;
  envelope["schema"] = "signsum/1";
  envelope["command"] = command;
  envelope["input"] = input;
  envelope["engine"] = engine;
  envelope["exact"] = exact;
  return envelope;
}

struct CommandContext {
  CliConfig config;
  bool json = false;
  std::uint64_t seed = 42;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

void emit(const CommandContext& ctx, const ordered_json& envelope) {
  *ctx.out << envelope.dump(2) << '\n';
}

// --- count ----------------------------------------------------------------

Count run_count_engine(const std::string& engine, const Instance& instance,
                       const CliConfig& config) {
  if (engine == "brute") {
    return brute_force_count(instance, config.enumeration_cap);
  }
  if (engine == "dp") {
    return dp_count(instance);
  }
  return count_via_integral(instance);
}

int cmd_count(const CommandContext& ctx, const std::string& instance_text,
              const std::string& engine) {
  const Instance instance = parse_instance(instance_text);
  const std::string input = format_instance(instance);
  if (engine != "all") {
    const Count count = run_count_engine(engine, instance, ctx.config);
    if (ctx.json) {
      ordered_json envelope = make_envelope("count", input, engine, true);
      envelope["result"] = {{"count", count.get_str()}};
      emit(ctx, envelope);
    } else {
      *ctx.out << count.get_str() << '\n';
    }
    return kExitOk;
  }
  const std::vector<std::string> engines = {"brute", "dp", "integral"};
  ordered_json counts;
  bool match = true;
  Count first;
  for (std::size_t i = 0; i < engines.size(); ++i) {
    const Count count = run_count_engine(engines[i], instance, ctx.config);
    counts[engines[i]] = count.get_str();
    if (i == 0) {
      first = count;
    } else if (count != first) {
      match = false;
    }
  }
  const std::string verdict = match ? "match" : "mismatch";
  if (ctx.json) {
    ordered_json envelope = make_envelope("count", input, "all", true);
    envelope["result"] = {{"counts", counts}, {"verdict", verdict}};
    emit(ctx, envelope);
  } else {
    for (const auto& engine_name : engines) {
      *ctx.out << engine_name << " = "
               << counts[engine_name].get_ref<const std::string&>() << '\n';
    }
    *ctx.out << "verdict: " << verdict << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

// --- parity-count -----------------------------------------------------------

int cmd_parity_count(const CommandContext& ctx,
                     const std::string& instance_text, int m,
                     const std::string& engine) {
  const Instance instance = parse_instance(instance_text);
  const ParityQuery query{instance, m};
  const std::string input = format_instance(instance);
  const auto run_engine = [&](const std::string& name) {
    return name == "brute"
               ? brute_force_parity_count(query, ctx.config.enumeration_cap)
               : dp_parity_count(query);
  };
  if (engine != "all") {
    const Count count = run_engine(engine);
    if (ctx.json) {
      ordered_json envelope = make_envelope("parity-count", input, engine, true);
      envelope["result"] = {{"m", m}, {"count", count.get_str()}};
      emit(ctx, envelope);
    } else {
      *ctx.out << count.get_str() << '\n';
    }
    return kExitOk;
  }
  const Count brute = run_engine("brute");
  const Count dp = run_engine("dp");
  const bool match = brute == dp;
  const std::string verdict = match ? "match" : "mismatch";
  if (ctx.json) {
    ordered_json envelope = make_envelope("parity-count", input, "all", true);
    envelope["result"] = {{"m", m},
                          {"counts",
                           {{"brute", brute.get_str()}, {"dp", dp.get_str()}}},
                          {"verdict", verdict}};
    emit(ctx, envelope);
  } else {
    *ctx.out << "brute = " << brute.get_str() << '\n';
    *ctx.out << "dp = " << dp.get_str() << '\n';
    *ctx.out << "verdict: " << verdict << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

// --- expand -----------------------------------------------------------------

int cmd_expand(const CommandContext& ctx, const std::string& instance_text,
               int m, const std::string& format) {
  const Instance instance = parse_instance(instance_text);
  const ProductSpec spec{instance, m};
  const TrigPolynomial poly = expand_mixed_product(spec);
  const std::string input = format_instance(instance);
  if (ctx.json) {
    ordered_json envelope = make_envelope("expand", input, "fold", true);
    ordered_json result;
    result["m"] = m;
    result["format"] = format;
    if (format == "latex") {
      result["latex"] = emit_latex(poly);
    } else {
      result["terms"] = terms_to_json(poly);
    }
    envelope["result"] = result;
    emit(ctx, envelope);
  } else if (format == "latex") {
    *ctx.out << emit_latex(poly) << '\n';
  } else {
    *ctx.out << terms_to_json(poly).dump(2) << '\n';
  }
  return kExitOk;
}

// --- integrate ---------------------------------------------------------------

struct IntegrateOutcome {
  bool ran = false;
  std::string skip_reason;
  ExactValue value;
  double approx = 0.0;
  std::string stated_form;  // count-based engine only
};

int cmd_integrate(const CommandContext& ctx, const std::string& instance_text,
                  int m, std::int64_t p, std::int64_t q,
                  const std::string& engine) {
  const Instance instance = parse_instance(instance_text);
  const ProductSpec spec{instance, m};
  const PiBounds bounds{p, q};
  const std::string input = format_instance(instance);
  const bool want_all = engine == "all";

  IntegrateOutcome exact_outcome;
  if (want_all || engine == "exact") {
    exact_outcome.value = exact_integral(expand_mixed_product(spec), bounds);
    exact_outcome.approx = exact_outcome.value.to_double();
    exact_outcome.ran = true;
  }
  IntegrateOutcome counts_outcome;
  if (want_all || engine == "theorem5") {
    if (want_all && m == -1) {
      counts_outcome.skip_reason = "m = -1";
    } else if (want_all && (p + q) % 2 != 0) {
      counts_outcome.skip_reason = "p + q odd";
    } else {
      counts_outcome.value = integral_from_counts(spec, bounds);
      counts_outcome.approx = counts_outcome.value.to_double();
      counts_outcome.stated_form =
          format_rational(counts_outcome.value.pi_coefficient);
      counts_outcome.ran = true;
    }
  }
  IntegrateOutcome quad_outcome;
  if (want_all || engine == "quadrature") {
    quad_outcome.approx = integrate_product(
        spec, -static_cast<double>(q) * std::numbers::pi,
        static_cast<double>(p) * std::numbers::pi, ctx.config.quadrature);
    quad_outcome.ran = true;
  }

  bool match = true;
  if (exact_outcome.ran && counts_outcome.ran &&
      !(exact_outcome.value == counts_outcome.value)) {
    match = false;
  }
  if (exact_outcome.ran && quad_outcome.ran &&
      std::abs(exact_outcome.approx - quad_outcome.approx) >
          kCrossCheckTolerance) {
    match = false;
  }
  const std::string verdict = match ? "match" : "mismatch";

  const auto exact_json = [&](const IntegrateOutcome& outcome) {
    return ordered_json{{"value", format_exact_value(outcome.value)},
                        {"approx", outcome.approx}};
  };
  if (ctx.json) {
    ordered_json envelope =
        make_envelope("integrate", input, engine, engine != "quadrature");
    ordered_json result;
    result["m"] = m;
    result["p"] = p;
    result["q"] = q;
    if (want_all) {
      ordered_json engines;
      engines["exact"] = exact_json(exact_outcome);
      if (counts_outcome.ran) {
        ordered_json entry = exact_json(counts_outcome);
        entry["stated_form"] = counts_outcome.stated_form;
        entry["pi_factor"] = "per proof";
        engines["theorem5"] = entry;
      } else {
        engines["theorem5"] = {{"skipped", counts_outcome.skip_reason}};
      }
      engines["quadrature"] = {{"approx", quad_outcome.approx}};
      result["engines"] = engines;
      result["verdict"] = verdict;
    } else if (engine == "exact") {
      result.update(exact_json(exact_outcome));
    } else if (engine == "theorem5") {
      result.update(exact_json(counts_outcome));
      result["stated_form"] = counts_outcome.stated_form;
      result["pi_factor"] = "per proof";
    } else {
      result["approx"] = quad_outcome.approx;
    }
    envelope["result"] = result;
    emit(ctx, envelope);
  } else {
    if (exact_outcome.ran) {
      *ctx.out << (want_all ? "exact = " : "")
               << format_exact_value(exact_outcome.value) << " (approx "
               << format_double(exact_outcome.approx) << ")\n";
    }
    if (want_all || engine == "theorem5") {
      if (counts_outcome.ran) {
        *ctx.out << (want_all ? "theorem5 = " : "")
                 << format_exact_value(counts_outcome.value) << " (stated form "
                 << counts_outcome.stated_form << "; pi factor per proof)"
                 << " (approx " << format_double(counts_outcome.approx)
                 << ")\n";
      } else {
        *ctx.out << "theorem5 skipped (" << counts_outcome.skip_reason << ")\n";
      }
    }
    if (quad_outcome.ran) {
      *ctx.out << (want_all ? "quadrature " : "") << "approx "
               << format_double(quad_outcome.approx) << '\n';
    }
    if (want_all) {
      *ctx.out << "verdict: " << verdict << '\n';
    }
  }
  return match ? kExitOk : kExitMismatch;
}

// --- verify -------------------------------------------------------------------

// Restores the fault hook even if the battery throws.
struct FaultGuard {
  explicit FaultGuard(bool enable) { werner_testing::flip_mixed_sign = enable; }
  ~FaultGuard() { werner_testing::flip_mixed_sign = false; }
};

int cmd_verify(const CommandContext& ctx, int trials, int max_n, int max_coeff,
               bool inject_sign_fault) {
  if (trials < 1) {
    throw PreconditionError("verify needs trials >= 1");
  }
  PropertyOptions options;
  options.seed = ctx.seed;
  options.trials = trials;
  options.max_n = max_n;
  options.max_coeff = max_coeff;
  options.enumeration_cap = ctx.config.enumeration_cap;
  FaultGuard guard(inject_sign_fault);
  const std::vector<PropertyResult> results = run_property_battery(options);
  int failed = 0;
  for (const auto& result : results) {
    failed += result.passed ? 0 : 1;
  }
  if (ctx.json) {
    ordered_json envelope = make_envelope("verify", "", "battery", true);
    ordered_json properties = ordered_json::array();
    for (const auto& result : results) {
      ordered_json entry;
      entry["name"] = result.name;
      entry["status"] = result.passed ? "pass" : "fail";
      entry["trials"] = result.trials;
      if (!result.counterexample.empty()) {
        entry["counterexample"] = result.counterexample;
      }
      if (!result.note.empty()) {
        entry["note"] = result.note;
      }
      properties.push_back(entry);
    }
    envelope["result"] = {{"seed", ctx.seed},
                          {"trials", trials},
                          {"properties", properties},
                          {"failed", failed}};
    emit(ctx, envelope);
  } else {
    *ctx.out << "seed = " << ctx.seed << ", trials = " << trials
             << ", max-n = " << max_n << ", max-coeff = " << max_coeff << '\n';
    for (const auto& result : results) {
      if (result.passed) {
        *ctx.out << "PASS " << result.name << " (" << result.trials
                 << " trials)";
      } else {
        *ctx.out << "FAIL " << result.name << ": " << result.counterexample;
      }
      if (!result.note.empty()) {
        *ctx.out << " [" << result.note << "]";
      }
      *ctx.out << '\n';
    }
    *ctx.out << results.size() << " properties, " << results.size() - failed
             << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

// --- bench --------------------------------------------------------------------

int cmd_bench(const CommandContext& ctx, int max_n, int reps, int max_coeff) {
  if (reps < 1) {
    throw PreconditionError("bench needs reps >= 1");
  }
  struct Row {
    int n;
    std::int64_t s;
    std::string engine;
    std::int64_t mean_ns;
  };
  std::vector<Row> rows;
  Rng rng(ctx.seed);
  for (int n = 1; n <= max_n; ++n) {
    Instance instance;
    instance.coeffs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      instance.coeffs.push_back(rng.uniform(-max_coeff, max_coeff));
    }
    instance.target = rng.uniform(-max_coeff, max_coeff);
    const std::int64_t s = weight(instance).get_si();
    for (const std::string engine : {"brute", "dp", "integral"}) {
      std::int64_t total_ns = 0;
      for (int rep = 0; rep < reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const Count count = run_count_engine(engine, instance, ctx.config);
        const auto stop = std::chrono::steady_clock::now();
        (void)count;
        total_ns +=
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                .count();
      }
      rows.push_back(Row{n, s, engine, total_ns / reps});
    }
  }
  if (ctx.json) {
    ordered_json envelope = make_envelope("bench", "", "all", false);
    ordered_json json_rows = ordered_json::array();
    for (const auto& row : rows) {
      json_rows.push_back({{"n", row.n},
                           {"s", row.s},
                           {"engine", row.engine},
                           {"mean_ns", row.mean_ns}});
    }
    envelope["result"] = {{"max_n", max_n},
                          {"reps", reps},
                          {"max_coeff", max_coeff},
                          {"rows", json_rows}};
    emit(ctx, envelope);
  } else {
    *ctx.out << std::left << std::setw(6) << "n" << std::setw(8) << "s"
             << std::setw(10) << "engine" << "mean_ns\n";
    for (const auto& row : rows) {
      *ctx.out << std::left << std::setw(6) << row.n << std::setw(8) << row.s
               << std::setw(10) << row.engine << row.mean_ns << '\n';
    }
    *ctx.out << rows.size() << " rows\n";
  }
  return kExitOk;
}

// --- config -------------------------------------------------------------------

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

int parse_config_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument(value);
    }
    return parsed;
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "' needs an integer, got '" +
                     value + "'");
  }
}

double parse_config_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument(value);
    }
    return parsed;
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "' needs a number, got '" + value +
                     "'");
  }
}

}  // namespace

CliConfig load_config_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot open config file '" + path + "'");
  }
  CliConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const auto comment = line.find('#');
    if (comment != std::string::npos) {
      line.erase(comment);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) {
      continue;
    }
    const auto equals = stripped.find('=');
    if (equals == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_number) +
                       " is not 'key = value': '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, equals));
    const std::string value = trim(stripped.substr(equals + 1));
    if (key == "enumeration_cap") {
      config.enumeration_cap = parse_config_int(key, value);
    } else if (key == "panels_per_unit_frequency") {
      config.quadrature.panels_per_unit_frequency =
          parse_config_int(key, value);
    } else if (key == "nodes_per_panel") {
      config.quadrature.nodes_per_panel = parse_config_int(key, value);
    } else if (key == "absolute_tolerance") {
      config.quadrature.absolute_tolerance = parse_config_double(key, value);
    } else if (key == "oscillation_cap") {
      config.quadrature.oscillation_cap = parse_config_double(key, value);
    } else if (key == "bench_max_n") {
      config.bench_max_n = parse_config_int(key, value);
    } else if (key == "bench_reps") {
      config.bench_reps = parse_config_int(key, value);
    } else if (key == "bench_max_coeff") {
      config.bench_max_coeff = parse_config_int(key, value);
    } else {
      throw ParseError("unknown config key '" + key + "' on line " +
                       std::to_string(line_number));
    }
  }
  return config;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact target-sum counting and closed-form integrals of "
               "sine/cosine products"};
  app.fallthrough();

  bool json = false;
  std::string config_path;
  std::uint64_t seed = 42;
  app.add_flag("--json", json, "emit a JSON envelope instead of text");
  app.add_option("--config", config_path,
                 "key = value config file (SIGNSUM_CONFIG is the fallback)");
  app.add_option("--seed", seed, "seed for randomized commands");

  std::string instance_text;
  std::string count_engine = "dp";
  std::string parity_engine = "dp";
  std::string integrate_engine = "exact";
  int m = -1;
  std::string format = "latex";
  std::int64_t p = 1;
  std::int64_t q = 0;
  int trials = 100;
  int verify_max_n = 10;
  int verify_max_coeff = 9;
  bool inject_sign_fault = false;
  int bench_max_n = 0;
  int bench_reps = 0;
  int bench_max_coeff = 0;

  CLI::App* count = app.add_subcommand("count", "count target-sum solutions");
  count->add_option("instance", instance_text, "instance \"b0; b1,...,bn\"")
      ->required();
  count->add_option("--engine", count_engine, "brute | dp | integral | all")
      ->check(CLI::IsMember({"brute", "dp", "integral", "all"}));

  CLI::App* parity =
      app.add_subcommand("parity-count", "count solutions whose +1 signs in "
                                         "the prefix b1..bm are even");
  parity->add_option("instance", instance_text)->required();
  parity->add_option("-m,--prefix", m, "prefix length, -1..n")->required();
  parity->add_option("--engine", parity_engine, "brute | dp | all")
      ->check(CLI::IsMember({"brute", "dp", "all"}));

  CLI::App* expand = app.add_subcommand(
      "expand", "expand the sine/cosine product into a trig polynomial");
  expand->add_option("instance", instance_text)->required();
  expand->add_option("-m,--sines", m,
                     "factors 0..m are sines (-1 = pure cosine product)");
  expand->add_option("--format", format, "latex | json")
      ->check(CLI::IsMember({"latex", "json"}));

  CLI::App* integrate = app.add_subcommand(
      "integrate", "integrate the product over [-q*pi, p*pi]");
  integrate->add_option("instance", instance_text)->required();
  integrate->add_option("-m,--sines", m,
                        "factors 0..m are sines (-1 = pure cosine product)");
  integrate->add_option("-p", p, "upper bound p*pi");
  integrate->add_option("-q", q, "lower bound -q*pi");
  integrate->add_option("--engine", integrate_engine,
                        "exact | theorem5 | quadrature | all")
      ->check(CLI::IsMember({"exact", "theorem5", "quadrature", "all"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "run the randomized cross-engine property battery");
  verify->add_option("--trials", trials, "trials per property");
  verify->add_option("--max-n", verify_max_n, "largest instance length drawn");
  verify->add_option("--max-coeff", verify_max_coeff,
                     "largest |coefficient| drawn");
  verify->add_flag("--inject-sign-fault", inject_sign_fault)->group("");

  CLI::App* bench = app.add_subcommand(
      "bench", "time the counting engines over a size grid");
  bench->add_option("--max-n", bench_max_n, "grid runs n = 1..max-n");
  bench->add_option("--reps", bench_reps, "repetitions per measurement");
  bench->add_option("--max-coeff", bench_max_coeff, "largest |coefficient|");

  app.require_subcommand(0, 1);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("signsum");
  for (const auto& arg : args) {
    argv.push_back(arg.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& parse_error) {
    err << "error: " << parse_error.what() << '\n';
    return kExitParse;
  }

  try {
    CommandContext ctx;
    if (config_path.empty()) {
      if (const char* env = std::getenv("SIGNSUM_CONFIG")) {
        config_path = env;
      }
    }
    if (!config_path.empty()) {
      ctx.config = load_config_file(config_path);
    }
    ctx.json = json;
    ctx.seed = seed;
    ctx.out = &out;
    ctx.err = &err;

    // Config supplies bench defaults; explicit flags win.
    if (bench->count("--max-n") == 0) {
      bench_max_n = ctx.config.bench_max_n;
    }
    if (bench->count("--reps") == 0) {
      bench_reps = ctx.config.bench_reps;
    }
    if (bench->count("--max-coeff") == 0) {
      bench_max_coeff = ctx.config.bench_max_coeff;
    }

    if (count->parsed()) {
      return cmd_count(ctx, instance_text, count_engine);
    }
    if (parity->parsed()) {
      return cmd_parity_count(ctx, instance_text, m, parity_engine);
    }
    if (expand->parsed()) {
      return cmd_expand(ctx, instance_text, m, format);
    }
    if (integrate->parsed()) {
      return cmd_integrate(ctx, instance_text, m, p, q, integrate_engine);
    }
    if (verify->parsed()) {
      return cmd_verify(ctx, trials, verify_max_n, verify_max_coeff,
                        inject_sign_fault);
    }
    if (bench->parsed()) {
      return cmd_bench(ctx, bench_max_n, bench_reps, bench_max_coeff);
    }
    out << app.help();
    return kExitOk;
  } catch (const ParseError& error) {
    err << "error: " << error.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& error) {
    err << "error: " << error.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceLimitError& error) {
    err << "error: " << error.what() << '\n';
    return kExitResource;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace signsum
