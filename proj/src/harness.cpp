#include "pesa/harness.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pesa/benchmarks.hpp"

namespace pesa {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok)
      throw std::invalid_argument("config: unknown key '" + it.key() + "' in " +
                                  where);
  }
}

template <typename T>
void get_if(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

}  // namespace

void ExperimentConfig::validate() const {
  if (functions.empty())
    throw std::invalid_argument("config: at least one function required");
  if (algorithms.empty())
    throw std::invalid_argument("config: at least one algorithm required");
  if (seeds.empty())
    throw std::invalid_argument("config: at least one seed required");
  if (dim < 1) throw std::invalid_argument("config: dim must be >= 1");
  if (base.n_gen < 1) throw std::invalid_argument("config: gens must be >= 1");
  for (const std::string& f : functions) benchmark_spec(f, dim);  // throws
}

double convergence_threshold(const std::string& function_name) {
  return benchmark_spec(function_name, 2).optimum_y + 1e-2;
}

void preflight_output_dir(const std::string& dir) {
  fs::create_directories(dir);
  const fs::path probe = fs::path(dir) / ".write_probe";
  std::ofstream f(probe);
  if (!f) throw std::runtime_error("output directory not writable: " + dir);
  f.close();
  fs::remove(probe);
}

RunArtifacts run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  RunArtifacts artifacts;
  for (const std::string& fn_name : cfg.functions) {
    auto fitness = make_benchmark(fn_name, cfg.dim);
    const double threshold = convergence_threshold(fn_name);
    for (Algorithm algo : cfg.algorithms) {
      for (std::uint64_t seed : cfg.seeds) {
        RunRecord rec;
        rec.function = fn_name;
        rec.algorithm = algo;
        rec.seed = seed;

        PESAConfig run_cfg = cfg.base;
        run_cfg.seed = seed;
        run_cfg.parallel = cfg.parallel;

        const auto t0 = std::chrono::steady_clock::now();
        try {
          RunResult result;
          if (algo == Algorithm::pesa && cfg.dump_memory) {
            ReplayMemory memory;
            result = run_pesa(run_cfg, *fitness, &memory);
            for (std::size_t i = 0; i < memory.size(); ++i)
              rec.memory_dump.push_back(memory.entry(i));
          } else {
            result = run_standalone(algo, run_cfg, *fitness);
          }
          rec.history = std::move(result.history);
          rec.final_best = rec.history.back().best_so_far;
          for (const GenerationRecord& g : rec.history) {
            if (g.best_so_far <= threshold) {
              rec.gens_to_threshold = g.generation;
              break;
            }
          }
        } catch (const std::exception& e) {
          rec.failed = true;
          rec.error = e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        artifacts.runs.push_back(std::move(rec));
      }
    }
  }
  return artifacts;
}

void write_outputs(const RunArtifacts& artifacts, const ExperimentConfig& cfg,
                   const std::string& dir) {
  preflight_output_dir(dir);
  const fs::path base(dir);

  {
    std::ofstream conv(base / "convergence.csv", std::ios::binary);
    conv << "function,algorithm,seed,generation,gen_min,best_so_far,mean,std,"
            "alpha,evals\n";
    for (const RunRecord& run : artifacts.runs) {
      if (run.failed) continue;
      for (const GenerationRecord& g : run.history) {
        conv << run.function << ',' << to_string(run.algorithm) << ','
             << run.seed << ',' << g.generation << ',' << fmt(g.gen_min) << ','
             << fmt(g.best_so_far) << ',' << fmt(g.mean) << ','
             << fmt(g.stddev) << ',' << fmt(g.alpha) << ','
             << g.evals_cumulative << '\n';
      }
    }
  }

  {
    std::ofstream sum(base / "summary.csv", std::ios::binary);
    sum << "function,algorithm,seed,final_best,gens_to_1e-2,wall_seconds\n";
    for (const RunRecord& run : artifacts.runs) {
      sum << run.function << ',' << to_string(run.algorithm) << ',' << run.seed
          << ',';
      if (run.failed) {
        sum << "failed,," << fmt(run.wall_seconds) << '\n';
        continue;
      }
      sum << fmt(run.final_best) << ',';
      if (run.gens_to_threshold) sum << *run.gens_to_threshold;
      sum << ',' << fmt(run.wall_seconds) << '\n';
    }
  }

  {
    std::ofstream echo(base / "config.json", std::ios::binary);
    echo << config_to_json(cfg) << '\n';
  }

  for (const RunRecord& run : artifacts.runs) {
    if (run.memory_dump.empty()) continue;
    const std::string name = "memory_" + run.function + "_" +
                             to_string(run.algorithm) + "_" +
                             std::to_string(run.seed) + ".csv";
    std::ofstream dump(base / name, std::ios::binary);
    for (std::size_t rank0 = 0; rank0 < run.memory_dump.size(); ++rank0) {
      const Candidate& c = run.memory_dump[rank0];
      dump << (rank0 + 1) << ',' << fmt(c.y);
      for (Eigen::Index i = 0; i < c.x.size(); ++i) dump << ',' << fmt(c.x[i]);
      dump << '\n';
    }
  }
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["functions"] = cfg.functions;
  j["dim"] = cfg.dim;
  json algos = json::array();
  for (Algorithm a : cfg.algorithms) algos.push_back(to_string(a));
  j["algorithms"] = algos;
  j["seeds"] = cfg.seeds;
  j["out"] = cfg.out_dir;
  j["parallel"] = cfg.parallel;
  j["dump_memory"] = cfg.dump_memory;
  j["n_gen"] = cfg.base.n_gen;
  j["n_warmup"] = cfg.base.n_warmup;
  j["es"] = {{"mu", cfg.base.es.mu},
             {"mu_replay", cfg.base.es.mu_replay},
             {"lambda", cfg.base.es.lambda},
             {"cx_prob", cfg.base.es.cx_prob},
             {"mut_prob", cfg.base.es.mut_prob}};
  j["pso"] = {{"eta", cfg.base.pso.eta},
              {"eta_replay", cfg.base.pso.eta_replay},
              {"c1", cfg.base.pso.c1},
              {"c2", cfg.base.pso.c2}};
  j["sa"] = {{"t_max", cfg.base.sa.t_max},
             {"t_min", cfg.base.sa.t_min},
             {"chi", cfg.base.sa.chi},
             {"chain_size", cfg.base.sa.chain_size},
             {"alpha_backdoor", cfg.base.sa.alpha_backdoor},
             {"step_scale", cfg.base.sa.step_scale}};
  j["memory"] = {{"capacity_max", cfg.base.memory.capacity_max},
                 {"alpha_init", cfg.base.memory.alpha_init},
                 {"alpha_end", cfg.base.memory.alpha_end},
                 {"dedup_tol", cfg.base.memory.dedup_tol}};
  return j.dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
  const json j = json::parse(text);
  reject_unknown_keys(j,
                      {"functions", "dim", "algorithms", "seeds", "out",
                       "parallel", "dump_memory", "n_gen", "n_warmup", "es",
                       "pso", "sa", "memory"},
                      "top level");
  ExperimentConfig cfg;
  get_if(j, "functions", cfg.functions);
  get_if(j, "dim", cfg.dim);
  if (j.contains("algorithms")) {
    cfg.algorithms.clear();
    for (const auto& a : j.at("algorithms"))
      cfg.algorithms.push_back(algorithm_from_string(a.get<std::string>()));
  }
  get_if(j, "seeds", cfg.seeds);
  get_if(j, "out", cfg.out_dir);
  get_if(j, "parallel", cfg.parallel);
  get_if(j, "dump_memory", cfg.dump_memory);
  get_if(j, "n_gen", cfg.base.n_gen);
  get_if(j, "n_warmup", cfg.base.n_warmup);
  if (j.contains("es")) {
    const json& e = j.at("es");
    reject_unknown_keys(e, {"mu", "mu_replay", "lambda", "cx_prob", "mut_prob"},
                        "es");
    get_if(e, "mu", cfg.base.es.mu);
    get_if(e, "mu_replay", cfg.base.es.mu_replay);
    get_if(e, "lambda", cfg.base.es.lambda);
    get_if(e, "cx_prob", cfg.base.es.cx_prob);
    get_if(e, "mut_prob", cfg.base.es.mut_prob);
  }
  if (j.contains("pso")) {
    const json& p = j.at("pso");
    reject_unknown_keys(p, {"eta", "eta_replay", "c1", "c2"}, "pso");
    get_if(p, "eta", cfg.base.pso.eta);
    get_if(p, "eta_replay", cfg.base.pso.eta_replay);
    get_if(p, "c1", cfg.base.pso.c1);
    get_if(p, "c2", cfg.base.pso.c2);
  }
  if (j.contains("sa")) {
    const json& s = j.at("sa");
    reject_unknown_keys(
        s, {"t_max", "t_min", "chi", "chain_size", "alpha_backdoor", "step_scale"},
        "sa");
    get_if(s, "t_max", cfg.base.sa.t_max);
    get_if(s, "t_min", cfg.base.sa.t_min);
    get_if(s, "chi", cfg.base.sa.chi);
    get_if(s, "chain_size", cfg.base.sa.chain_size);
    get_if(s, "alpha_backdoor", cfg.base.sa.alpha_backdoor);
    get_if(s, "step_scale", cfg.base.sa.step_scale);
  }
  if (j.contains("memory")) {
    const json& m = j.at("memory");
    reject_unknown_keys(
        m, {"capacity_max", "alpha_init", "alpha_end", "dedup_tol"}, "memory");
    get_if(m, "capacity_max", cfg.base.memory.capacity_max);
    get_if(m, "alpha_init", cfg.base.memory.alpha_init);
    get_if(m, "alpha_end", cfg.base.memory.alpha_end);
    get_if(m, "dedup_tol", cfg.base.memory.dedup_tol);
  }
  return cfg;
}

}  // namespace pesa
