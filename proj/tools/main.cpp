#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scrack/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string strategy;
  std::string workload = "random";
  std::string workload_file;
  std::size_t n = 1'000'000;
  std::size_t queries = 1000;
  std::optional<double> selectivity;
  std::optional<std::int64_t> width;
  std::uint64_t seed = 1;
  std::string out;
  std::string values_file;
  bool no_timing = false;
  scrack::StrategyParams params;
};

std::vector<std::string> names(std::span<const std::string_view> src) { return {src.begin(), src.end()}; }

void add_run_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--strategy", o.strategy, "Select operator")
      ->required()
      ->check(CLI::IsMember(names(scrack::strategy_names())));
  cmd.add_option("--workload", o.workload, "Query pattern")
      ->check(CLI::IsMember(names(scrack::pattern_names())))
      ->capture_default_str();
  cmd.add_option("--workload-file", o.workload_file, "Query trace, one `low high` pair per line")
      ->check(CLI::ExistingFile);
  cmd.add_option("--n", o.n, "Column size when generating data")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--queries", o.queries, "Number of queries")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--selectivity", o.selectivity, "Query width as a fraction of the column")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--width", o.width, "Query width in values (default 10; overrides --selectivity)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", o.seed, "Seed for data, workload and strategy")->capture_default_str();
  cmd.add_option("--crack-size", o.params.stochastic.crack_size, "DDC/DDR piece size bound")->capture_default_str();
  cmd.add_option("--l2-size", o.params.stochastic.l2_size, "Pieces at or below this size are cracked fully")
      ->capture_default_str();
  cmd.add_option("--swap-frac", o.params.stochastic.swap_frac, "Progressive swap budget per query")
      ->capture_default_str();
  cmd.add_option("--period", o.params.selective.period, "Periodic: every period-th query is stochastic")
      ->capture_default_str();
  cmd.add_option("--coin-p", o.params.selective.coin_p, "Flip-coin: probability of a stochastic query")
      ->capture_default_str();
  cmd.add_option("--monitor-threshold", o.params.selective.monitor_threshold,
                 "ScrackMon: original cracks on a piece before it is cracked stochastically")
      ->capture_default_str();
  cmd.add_option("--size-threshold", o.params.selective.size_threshold,
                 "Size switch: pieces larger than this are cracked stochastically")
      ->capture_default_str();
  cmd.add_option("--out", o.out, "CSV output path (default stdout)");
  cmd.add_option("--values-file", o.values_file, "Column values, one integer per line")->check(CLI::ExistingFile);
  cmd.add_flag("--no-timing", o.no_timing, "Report elapsed_ns as 0 so the CSV is deterministic");
}

scrack::RunConfig to_config(const Options& o) {
  scrack::RunConfig cfg;
  cfg.strategy = o.strategy;
  cfg.params = o.params;
  cfg.n_tuples = o.n;
  cfg.seed = o.seed;
  cfg.timing = !o.no_timing;
  cfg.workload.count = o.queries;
  if (!o.values_file.empty()) cfg.values_file = o.values_file;
  if (!o.workload_file.empty()) {
    cfg.workload_file = o.workload_file;
  } else if (o.workload == "file") {
    throw std::invalid_argument("--workload file needs --workload-file");
  } else {
    cfg.workload.pattern = *scrack::parse_pattern(o.workload);
  }
  if (o.width) {
    cfg.workload.width = *o.width;
  } else if (o.selectivity) {
    cfg.selectivity = *o.selectivity;
  }
  return cfg;
}

int run(const Options& o, bool verify) {
  scrack::RunConfig cfg = to_config(o);
  cfg.verify = verify;

  std::ofstream file;
  std::ostream* out = verify ? nullptr : &std::cout;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kExitIo;
    }
    out = &file;
  }

  scrack::Benchmark bench(cfg);
  if (out) scrack::write_csv_header(*out);
  std::uint64_t answered = 0;
  while (auto m = bench.step()) {
    if (out) scrack::write_csv_row(*out, *m);
    ++answered;
  }
  if (out) {
    out->flush();
    if (!*out) {
      std::cerr << "error: writing CSV failed\n";
      return kExitIo;
    }
  }
  if (verify) std::cerr << "ok: " << answered << " queries verified (" << o.strategy << ")\n";
  return kExitOk;
}

void list() {
  std::cout << "strategies:";
  for (auto name : scrack::strategy_names()) std::cout << ' ' << name;
  std::cout << "\nworkloads:";
  for (auto name : scrack::pattern_names()) std::cout << ' ' << name;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic database cracking benchmark"};
  app.require_subcommand(1);

  Options run_opts;
  Options verify_opts;
  auto* run_cmd = app.add_subcommand("run", "Replay a workload and write per-query metrics as CSV");
  add_run_options(*run_cmd, run_opts);
  auto* verify_cmd = app.add_subcommand("verify", "Replay a workload checking every answer against an oracle");
  add_run_options(*verify_cmd, verify_opts);
  auto* list_cmd = app.add_subcommand("list", "Print strategy and workload names");

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
    if (list_cmd->parsed()) {
      list();
      return kExitOk;
    }
    if (run_cmd->parsed()) return run(run_opts, false);
    return run(verify_opts, true);
  } catch (const scrack::VerificationError& e) {
    std::cerr << "verification failed at " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const scrack::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
