#include "kacspec/cli.hpp"

#include "kacspec/charpoly.hpp"
#include "kacspec/pyramid.hpp"
#include "kacspec/spectrum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>

namespace kacspec::cli {

namespace {

std::vector<std::int64_t> all_ks(std::size_t n) {
  std::vector<std::int64_t> ks((n + 1) / 2 + 1);
  for (std::size_t k = 0; k < ks.size(); ++k) ks[k] = static_cast<std::int64_t>(k);
  return ks;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size() || (std::is_unsigned_v<T> && value < 0)) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(value));
    } catch (const std::exception&) {
      throw UsageError(std::string("invalid ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + text + "' (expected csv or json)");
}

std::filesystem::path resolve_output(const std::string& output) {
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

// Runs `body` against either `fallback` or the file named by `output`.
int with_output(const std::string& output, std::ostream& fallback, const std::function<int(std::ostream&)>& body) {
  if (output.empty()) return body(fallback);
  const auto path = resolve_output(output);
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output file '" + path.string() + "'");
  return body(file);
}

std::string describe(const IdentityReport& r) {
  std::ostringstream os;
  os << "mismatch at n=" << r.n << ", k=" << r.k << ":";
  const auto show = [&](const char* name, const std::optional<Integer>& v) {
    if (v) os << ' ' << name << '=' << to_decimal(*v);
  };
  show("lhs", r.lhs);
  show("rhs_dp", r.rhs);
  show("rhs_enum", r.rhs_enum);
  show("charpoly_abs", r.charpoly_route);
  show("pyramid_layer", r.pyramid_layer);
  show("pyramid_slice", r.pyramid_slice);
  return os.str();
}

}  // namespace

RouteSet parse_routes(const std::string& text) {
  if (text == "all") return RouteSet::all();
  RouteSet routes{false, false, false, false, false};
  for (const auto& name : split_list(text)) {
    if (name == "lhs_dp") routes.lhs_dp = true;
    else if (name == "rhs_dp") routes.rhs_dp = true;
    else if (name == "rhs_enum") routes.rhs_enum = true;
    else if (name == "charpoly") routes.charpoly = true;
    else if (name == "pyramid") routes.pyramid = true;
    else throw UsageError("unknown route '" + name + "'");
  }
  if (routes.empty()) throw UsageError("no routes selected");
  return routes;
}

void SweepConfig::validate() const {
  if (n_min == 0) throw UsageError("--n-min must be at least 1");
  if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
  if (routes.empty()) throw UsageError("no routes selected");
  if (jobs == 0) throw UsageError("--jobs must be positive");
  const Limits caps = limits();
  if (routes.pyramid && n_max > caps.pyramid_max_n) {
    throw UsageError("pyramid route needs --n-max <= " + std::to_string(caps.pyramid_max_n) + " (or --allow-large)");
  }
  if (routes.rhs_enum && n_max > caps.enumeration_max_n) {
    throw UsageError("rhs_enum route needs --n-max <= " + std::to_string(caps.enumeration_max_n) +
                     " (or --allow-large)");
  }
}

int cmd_verify(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const std::size_t count = cfg.n_max - cfg.n_min + 1;
  std::vector<std::vector<IdentityReport>> by_n(count);
  const auto limits = cfg.limits();
  const auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < count; i += cfg.jobs) {
      const std::size_t n = cfg.n_min + i;
      const auto ks = cfg.ks.empty() ? all_ks(n) : cfg.ks;
      by_n[i] = verify_identities(n, ks, cfg.routes, limits);
    }
  };
  std::vector<std::future<void>> workers;
  for (unsigned t = 1; t < cfg.jobs; ++t) workers.push_back(std::async(std::launch::async, work, t));
  work(0);
  for (auto& w : workers) w.get();

  std::vector<IdentityReport> reports;
  for (auto& chunk : by_n) std::move(chunk.begin(), chunk.end(), std::back_inserter(reports));
  bool all_equal = true;
  for (const auto& r : reports) {
    if (!r.all_equal) {
      all_equal = false;
      err << describe(r) << '\n';
    }
  }
  return with_output(cfg.output, out, [&](std::ostream& sink) {
    if (cfg.format == OutputFormat::Csv) {
      write_reports_csv(sink, reports, cfg.routes);
    } else {
      sink << reports_to_json(reports).dump(2) << '\n';
    }
    return all_equal ? kExitOk : kExitMismatch;
  });
}

int cmd_spectrum(std::size_t n, OutputFormat format, std::ostream& out, std::ostream& err) {
  if (n == 0) throw UsageError("spectrum needs n >= 1");
  const auto pairs = checked_eigenpairs(n);
  bool ok = expanded_charpoly(n) == charpoly_recurrence(kac_weights(n));
  for (const auto& p : pairs) {
    if (!p.eigen_equation || !p.functional_equation) {
      ok = false;
      err << "eigenpair check failed at n=" << n << ", d=" << p.pair.d << '\n';
    }
  }
  if (format == OutputFormat::Json) {
    out << spectrum_to_json(n, pairs).dump(2) << '\n';
  } else {
    write_spectrum_csv(out, pairs);
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.repetitions == 0) throw UsageError("--repetitions must be positive");
  if (cfg.ns.empty()) throw UsageError("bench needs at least one n");
  const Limits caps = cfg.allow_large ? Limits::unlimited() : Limits{};

  out << "n,route,status,repetitions,median_ns\n";
  for (const auto n : cfg.ns) {
    if (n == 0) throw UsageError("bench needs n >= 1");
    const auto ks = cfg.ks.empty() ? all_ks(n) : cfg.ks;
    const auto weights = kac_weights(n);
    for (const auto& route : cfg.routes) {
      std::function<void()> job;
      bool enabled = true;
      if (route == "lhs_dp") {
        job = [&] { for (auto k : ks) (void)lhs_sum(n, k); };
      } else if (route == "rhs_dp") {
        job = [&] { for (auto k : ks) (void)rhs_sum_dp(weights, k); };
      } else if (route == "charpoly") {
        job = [&] { (void)charpoly_recurrence(weights); };
      } else if (route == "rhs_enum") {
        enabled = n <= caps.enumeration_max_n;
        job = [&] { for (auto k : ks) (void)rhs_sum_enum(weights, k, caps.enumeration_max_n); };
      } else if (route == "determinant") {
        enabled = n <= caps.determinant_max_n;
        job = [&] { (void)charpoly_direct(weights, caps.determinant_max_n); };
      } else if (route == "pyramid") {
        enabled = n <= caps.pyramid_max_n;
        job = [&] {
          const auto pyramid = build_pyramid(n);
          for (auto k : ks) {
            (void)count_layer_distinct(pyramid, k, caps.pyramid_budget);
            (void)count_slice_separated(pyramid, k, caps.pyramid_budget);
          }
        };
      } else {
        throw UsageError("unknown bench route '" + route + "'");
      }
      if (!enabled) {
        out << n << ',' << route << ",skipped,0,\n";
        continue;
      }
      std::vector<std::int64_t> samples;
      for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        job();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
      std::sort(samples.begin(), samples.end());
      const auto mid = samples.size() / 2;
      const auto median = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
      out << n << ',' << route << ",ran," << cfg.repetitions << ',' << median << '\n';
    }
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the Sylvester-Kac spectrum and the parity/no-consecutive subset-sum identity"};
  app.require_subcommand(1);

  std::string format_text = "csv";
  std::string output;
  bool allow_large = false;

  SweepConfig sweep;
  std::string k_text, routes_text = "lhs_dp,rhs_dp,charpoly";
  auto* verify = app.add_subcommand("verify", "Check the identity over a range of n by several independent routes");
  verify->add_option("--n-min", sweep.n_min, "Smallest n")->capture_default_str();
  verify->add_option("--n-max", sweep.n_max, "Largest n")->capture_default_str();
  verify->add_option("--k", k_text, "Comma-separated k values (default: all 0..floor((n+1)/2))");
  verify->add_option("--routes", routes_text, "lhs_dp,rhs_dp,rhs_enum,charpoly,pyramid or 'all'")
      ->capture_default_str();
  verify->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();

  std::size_t spectrum_n = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Dump the exact eigenpairs of the Kac matrix S_n");
  spectrum->add_option("--n", spectrum_n, "Matrix parameter n")->required();

  std::string weights_path;
  std::size_t kac_n = 0;
  bool check_oracle = false;
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial coefficients d_{k,n}");
  auto* weights_opt = charpoly->add_option("--weights", weights_path, "JSON file {\"a\": [...], \"b\": [...]}");
  auto* kac_opt = charpoly->add_option("--kac", kac_n, "Use Kac weights for this n");
  weights_opt->excludes(kac_opt);
  charpoly->add_flag("--check-oracle", check_oracle, "Cross-check against the cofactor determinant");

  std::size_t pyramid_n = 0;
  auto* pyramid = app.add_subcommand("pyramid", "Dump the cube table of the stepped pyramid");
  pyramid->add_option("--n", pyramid_n, "Pyramid parameter n")->required();

  BenchConfig bench;
  std::string bench_n_text = "10,20,40", bench_routes_text;
  auto* bench_cmd = app.add_subcommand("bench", "Time each route (report only)");
  bench_cmd->add_option("--n", bench_n_text, "Comma-separated n values")->capture_default_str();
  bench_cmd->add_option("--k", k_text, "Comma-separated k values (default: all)");
  bench_cmd->add_option("--routes", bench_routes_text,
                        "lhs_dp,rhs_dp,charpoly,rhs_enum,determinant,pyramid (default: all)");
  bench_cmd->add_option("--repetitions", bench.repetitions, "Runs per route")->capture_default_str();

  for (auto* sub : {verify, spectrum, charpoly, pyramid, bench_cmd}) {
    sub->add_option("--format", format_text, "csv or json")->capture_default_str();
    sub->add_option("--output", output, "Output file (default: stdout)");
    sub->add_flag("--allow-large", allow_large, "Lift the caps on the exponential oracles");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }

    const OutputFormat format = parse_format(format_text);
    if (*verify) {
      sweep.routes = parse_routes(routes_text);
      if (!k_text.empty()) sweep.ks = parse_numbers<std::int64_t>(k_text, "--k");
      sweep.format = format;
      sweep.output = output;
      sweep.allow_large = allow_large;
      return cmd_verify(sweep, out, err);
    }
    if (*spectrum) {
      return with_output(output, out, [&](std::ostream& sink) { return cmd_spectrum(spectrum_n, format, sink, err); });
    }
    if (*charpoly) {
      std::optional<WeightSequence> weights;
      if (*kac_opt) {
        if (kac_n == 0) throw UsageError("--kac needs n >= 1");
        weights = kac_weights(kac_n);
      } else if (*weights_opt) {
        std::ifstream in(weights_path);
        if (!in) throw UsageError("cannot read weights file '" + weights_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
          weights = weights_from_json(buffer.str());
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      } else {
        throw UsageError("charpoly needs --weights FILE or --kac N");
      }
      const auto poly = charpoly_recurrence(*weights);
      int status = kExitOk;
      if (check_oracle) {
        const Limits caps = allow_large ? Limits::unlimited() : Limits{};
        if (weights->n() > caps.determinant_max_n) {
          throw UsageError("--check-oracle limited to n <= " + std::to_string(caps.determinant_max_n) +
                           " (or --allow-large)");
        }
        if (charpoly_direct(*weights, caps.determinant_max_n) != poly) {
          err << "recurrence and determinant oracle disagree\n";
          status = kExitMismatch;
        }
      }
      return with_output(output, out, [&](std::ostream& sink) {
        if (format == OutputFormat::Csv) {
          write_charpoly_csv(sink, poly);
        } else {
          sink << charpoly_to_json(poly).dump(2) << '\n';
        }
        return status;
      });
    }
    if (*pyramid) {
      if (pyramid_n == 0) throw UsageError("pyramid needs n >= 1");
      const auto model = build_pyramid(pyramid_n);
      return with_output(output, out, [&](std::ostream& sink) {
        if (format == OutputFormat::Csv) {
          write_cube_table(sink, model);
        } else {
          auto cubes = nlohmann::ordered_json::array();
          for (const auto& c : model.cubes()) {
            cubes.push_back({{"layer", c.layer}, {"row", c.row}, {"col", c.col}, {"slice", c.slice}});
          }
          sink << nlohmann::ordered_json{{"n", pyramid_n}, {"cubes", std::move(cubes)}}.dump(2) << '\n';
        }
        return kExitOk;
      });
    }
    if (format != OutputFormat::Csv) throw UsageError("bench writes CSV only");
    bench.ns = parse_numbers<std::size_t>(bench_n_text, "--n");
    if (!k_text.empty()) bench.ks = parse_numbers<std::int64_t>(k_text, "--k");
    if (!bench_routes_text.empty()) bench.routes = split_list(bench_routes_text);
    bench.allow_large = allow_large;
    return with_output(output, out, [&](std::ostream& sink) { return cmd_bench(bench, sink, err); });
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace kacspec::cli
