#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pesa/benchmarks.hpp"
#include "pesa/harness.hpp"

namespace {

std::string joined_names() {
  std::string s;
  for (const std::string& n : pesa::benchmark_names()) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

struct CliOptions {
  std::vector<std::string> functions;
  std::string algo;
  std::vector<std::uint64_t> seeds;
  int dim = -1;
  int gens = -1;
  std::string out;
  std::string config_file;
  bool parallel = false;
  bool dump_memory = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--function", opt.functions, "benchmark function name(s)");
  cmd->add_option("--dim", opt.dim, "problem dimensionality");
  cmd->add_option("--seeds", opt.seeds, "random seeds (one run per seed)");
  cmd->add_option("--gens", opt.gens, "number of generations");
  cmd->add_option("--out", opt.out, "output directory");
  cmd->add_option("--config", opt.config_file, "JSON config file");
  cmd->add_flag("--parallel", opt.parallel,
                "fork-join the three algorithms within each PESA generation");
  cmd->add_flag("--dump-memory", opt.dump_memory,
                "write the final replay memory of PESA runs");
}

pesa::ExperimentConfig resolve(const CliOptions& opt,
                               const std::vector<pesa::Algorithm>& algos) {
  pesa::ExperimentConfig cfg;
  if (!opt.config_file.empty()) {
    std::ifstream f(opt.config_file);
    if (!f) throw std::invalid_argument("cannot open config file: " + opt.config_file);
    std::ostringstream ss;
    ss << f.rdbuf();
    cfg = pesa::config_from_json(ss.str());
  }
  // flags override file values override defaults
  if (!opt.functions.empty()) cfg.functions = opt.functions;
  if (!algos.empty()) cfg.algorithms = algos;
  if (!opt.seeds.empty()) cfg.seeds = opt.seeds;
  if (opt.dim >= 0) cfg.dim = opt.dim;
  if (opt.gens >= 0) cfg.base.n_gen = opt.gens;
  if (!opt.out.empty()) cfg.out_dir = opt.out;
  if (opt.parallel) cfg.parallel = true;
  if (opt.dump_memory) cfg.dump_memory = true;
  return cfg;
}

int execute(const pesa::ExperimentConfig& cfg) {
  cfg.validate();
  pesa::preflight_output_dir(cfg.out_dir);
  std::cout << "resolved config:\n" << pesa::config_to_json(cfg) << '\n';
  pesa::RunArtifacts artifacts = pesa::run_experiment(cfg);
  pesa::write_outputs(artifacts, cfg, cfg.out_dir);
  int failures = 0;
  for (const pesa::RunRecord& r : artifacts.runs) {
    if (r.failed) {
      ++failures;
      std::cerr << "run failed: " << r.function << "/" << to_string(r.algorithm)
                << "/" << r.seed << ": " << r.error << '\n';
    }
  }
  std::cout << "wrote " << cfg.out_dir << "/convergence.csv and summary.csv ("
            << artifacts.runs.size() - failures << "/" << artifacts.runs.size()
            << " runs ok)\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PESA hybrid metaheuristic benchmark harness"};
  app.require_subcommand(1);

  CliOptions run_opt, cmp_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "run one algorithm");
  run_cmd->add_option("--algo", run_opt.algo, "pesa, es, pso, or sa")
      ->required();
  add_common_flags(run_cmd, run_opt);

  CLI::App* cmp_cmd =
      app.add_subcommand("compare", "run PESA and all standalone algorithms");
  add_common_flags(cmp_cmd, cmp_opt);

  CLI::App* list_cmd = app.add_subcommand("list-functions",
                                          "print the benchmark registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (list_cmd->parsed()) {
      for (const pesa::BenchmarkSpec& s : pesa::list_benchmarks(2))
        std::printf("%-12s box [%g, %g]^n  optimum %g%s\n", s.name.c_str(),
                    s.space.lower[0], s.space.upper[0], s.optimum_y,
                    s.noisy ? "  (noisy)" : "");
      return 0;
    }
    if (run_cmd->parsed()) {
      std::vector<pesa::Algorithm> algos{
          pesa::algorithm_from_string(run_opt.algo)};
      return execute(resolve(run_opt, algos));
    }
    // compare: all four algorithms
    return execute(resolve(cmp_opt,
                           {pesa::Algorithm::pesa, pesa::Algorithm::es,
                            pesa::Algorithm::pso, pesa::Algorithm::sa}));
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    std::cerr << "valid functions: " << joined_names() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    std::cerr << "valid functions: " << joined_names() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
