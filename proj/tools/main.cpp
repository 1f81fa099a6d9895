#include "sigmalab/errors.hpp"
#include "sigmalab/gallery.hpp"
#include "sigmalab/sequence_lab.hpp"
#include "sigmalab/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace sigmalab;

namespace {

// Exit codes: 0 success, 1 usage/parse, 2 invariant violation, 3 cap.
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitCap = 3;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ScenarioParseError*>(&e) != nullptr) return kExitUsage;
  if (dynamic_cast<const CapError*>(&e) != nullptr) return kExitCap;
  return kExitInvariant;
}

struct RunConfig {
  fs::path scenario;
  fs::path out_dir;
  bool json = true;
  bool csv = false;
  bool verbose = false;
};

void write_text(const fs::path& file, const std::string& text, bool verbose) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ScenarioParseError("cannot write output file: " + file.string());
  out << text;
  if (verbose) std::cerr << "wrote " << file.string() << "\n";
}

void write_json(const fs::path& file, const Json& j, bool verbose) {
  write_text(file, j.dump(2) + "\n", verbose);
}

Json sequence_echo(const ScenarioSpec& spec, const AlgebraSeq& seq) {
  Json out;
  out["name"] = seq.name();
  Json params = Json::object();
  for (const auto& [key, value] : seq.params()) params[key] = json_of(value);
  out["params"] = std::move(params);
  out["horizon"] = spec.horizon;
  return out;
}

// ---------------------------------------------------------------------------
// demo counterexample

int run_demo_counterexample(std::size_t n_max, const fs::path& out_dir, bool csv, bool verbose) {
  if (n_max < 2) {
    std::cerr << "error: --n-max must be at least 2\n";
    return kExitUsage;
  }
  const std::size_t horizon = typewriter::horizon_through(n_max); // caps at 14
  fs::create_directories(out_dir);

  const DSet right_half = DSet::from_intervals({{Dyadic(1, 1), Dyadic::one()}});
  const Step chi = indicator(right_half);
  AlgebraSeq seq = typewriter::sequence();

  const Rat two_thirds(2, 3);
  const ConvergenceReport report = ae_report(seq, chi, chi, horizon, {two_thirds});

  Json blocks = Json::array();
  std::vector<Rat> block_l1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t cells = std::size_t{2} << n;
    std::optional<Rat> v_core, v_block, v_rest;
    bool uniform = true;
    for (std::size_t k = 0; k < cells; ++k) {
      const Partition algebra = typewriter::partition(n, k);
      const Step e = cond_exp(chi, algebra);
      Rat core_v, block_v, rest_v;
      for (std::size_t i = 0; i < algebra.size(); ++i) {
        const DSet& atom = algebra.atoms()[i];
        if (atom == typewriter::core(n)) core_v = e.values[i];
        else if (atom == typewriter::block(n, k)) block_v = e.values[i];
        else rest_v = e.values[i];
      }
      if (!v_core) {
        v_core = core_v;
        v_block = block_v;
        v_rest = rest_v;
      } else if (core_v != *v_core || block_v != *v_block || rest_v != *v_rest) {
        uniform = false;
      }
    }
    const Rat expected_rest = Rat(2, 1 + (Int(1) << (n + 1)));
    if (!uniform || *v_core != 1 || *v_block != two_thirds || *v_rest != expected_rest) {
      throw InvariantError("demo: conditional-expectation values differ from the closed form at n = " +
                           std::to_string(n));
    }

    // L1 distance is the same for every k inside a block.
    const std::size_t first = typewriter::block_first_position(n);
    const Rat l1 = report.l1[first - 1];
    for (std::size_t k = 0; k < cells; ++k) {
      if (report.l1[first - 1 + k] != l1) {
        throw InvariantError("demo: L1 series not constant within block n = " + std::to_string(n));
      }
    }
    block_l1.push_back(l1);

    Json row;
    row["n"] = n;
    row["k_count"] = cells;
    Json values;
    values["core"] = json_of(*v_core);
    values["block"] = json_of(*v_block);
    values["rest"] = json_of(*v_rest);
    row["values"] = std::move(values);
    Json measures;
    measures["block"] = json_of(typewriter::block(n, 0).measure());
    measures["rest"] = json_of(typewriter::rest(n, 0).measure());
    row["measures"] = std::move(measures);
    row["uniform_over_k"] = true;
    row["l1"] = json_of(l1);
    blocks.push_back(std::move(row));
  }

  bool l1_decreasing = true;
  for (std::size_t i = 1; i < block_l1.size(); ++i) {
    if (!(block_l1[i] < block_l1[i - 1])) l1_decreasing = false;
  }

  // Exceedance stays >= 1/2 for every window that still contains a complete
  // sweep of [0,1/2), i.e. window starts up to the first index of the last
  // block.
  const std::size_t checked_through = typewriter::block_first_position(n_max);
  Rat min_checked = report.exceedance[0][0];
  for (std::size_t pos = 1; pos <= checked_through; ++pos) {
    min_checked = std::min(min_checked, report.exceedance[pos - 1][0]);
  }
  const bool persistent = min_checked >= Rat(1, 2);

  Json out;
  out["demo"] = "counterexample";
  out["n_max"] = n_max;
  out["horizon"] = horizon;
  out["function"] = json_of(chi);
  out["blocks"] = std::move(blocks);
  out["l1_strictly_decreasing_in_n"] = l1_decreasing;
  Json exceedance;
  exceedance["eps"] = json_of(two_thirds);
  Json rows = Json::array();
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t pos = typewriter::block_first_position(n);
    Json row;
    row["window_start"] = pos;
    row["block"] = n;
    row["measure"] = json_of(report.exceedance[pos - 1][0]);
    rows.push_back(std::move(row));
  }
  exceedance["rows_at_block_starts"] = std::move(rows);
  exceedance["checked_through_window_start"] = checked_through;
  exceedance["min_measure_over_checked"] = json_of(min_checked);
  exceedance["persistent_at_least_half"] = persistent;
  out["exceedance"] = std::move(exceedance);
  Json verdicts;
  verdicts["l1_trend"] = l1_decreasing ? "pass" : "fail";
  verdicts["ae"] = persistent ? "fail" : "undetermined";
  verdicts["ae_detail"] = "tail-sup exceedance at 2/3 persists on at least half of [0,1)";
  out["verdicts"] = std::move(verdicts);

  write_json(out_dir / "demo_counterexample.json", out, verbose);

  if (csv) {
    std::string l1_csv = "n,l1\n";
    for (std::size_t i = 0; i < block_l1.size(); ++i) {
      l1_csv += std::to_string(i + 2) + "," + rat_to_decimal(block_l1[i]) + "\n";
    }
    write_text(out_dir / "demo_l1.csv", l1_csv, verbose);
    std::string exc_csv = "window_start,measure\n";
    for (std::size_t pos = 1; pos <= horizon; ++pos) {
      exc_csv += std::to_string(pos) + "," + rat_to_decimal(report.exceedance[pos - 1][0]) + "\n";
    }
    write_text(out_dir / "demo_exceedance.csv", exc_csv, verbose);
  }

  if (!persistent || !l1_decreasing) {
    throw InvariantError("demo: expected verdicts (L1 trend pass, a.e. fail) not reproduced");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

DSet require_indicator_set(const ScenarioSpec& spec, const std::string& analysis) {
  if (!spec.function.indicator_set) {
    throw ScenarioParseError("analysis \"" + analysis + "\" needs an indicator function");
  }
  return *spec.function.indicator_set;
}

int run_analyze(const RunConfig& config) {
  const ScenarioSpec spec = load_scenario(config.scenario);
  if (spec.analyses.empty()) throw ScenarioParseError("scenario lists no analyses");
  AlgebraSeq seq = from_spec(spec);
  seq.require_horizon(spec.horizon);
  const std::size_t horizon = spec.horizon;
  const Step f = spec.function.build();
  const Step target = spec.target ? spec.target->build() : f;
  fs::create_directories(config.out_dir);

  for (const std::string& analysis : spec.analyses) {
    Json out;
    out["analysis"] = analysis;
    out["sequence"] = sequence_echo(spec, seq);
    std::string csv;

    if (analysis == "ae") {
      const ConvergenceReport report =
          ae_report(seq, f, target, horizon, spec.epsilons, spec.caps.sweep_pieces);
      out["function"] = json_of(f);
      out["target"] = json_of(target);
      out["report"] = json_of(report);
      csv = "n,l1,l2sq,sup\n";
      for (std::size_t n = 1; n <= horizon; ++n) {
        csv += std::to_string(n) + "," + rat_to_decimal(report.l1[n - 1]) + "," +
               rat_to_decimal(report.l2sq[n - 1]) + "," + rat_to_decimal(report.sup[n - 1]) +
               "\n";
      }
    } else if (analysis == "l1") {
      std::vector<Rat> series;
      series.reserve(horizon);
      for (std::size_t n = 1; n <= horizon; ++n) {
        series.push_back(lp_dist(cond_exp(f, seq.at(n)), target, Norm::l1));
      }
      Json values = Json::array();
      for (const auto& v : series) values.push_back(json_of(v));
      out["l1"] = std::move(values);
      csv = "n,l1\n";
      for (std::size_t n = 1; n <= horizon; ++n) {
        csv += std::to_string(n) + "," + rat_to_decimal(series[n - 1]) + "\n";
      }
    } else if (analysis == "boylan") {
      Json pairs = Json::array();
      csv = "i,j,distance\n";
      for (std::size_t n = 1; n + 1 <= horizon; ++n) {
        const Rat d = boylan_distance(seq.at(n), seq.at(n + 1), spec.caps.boylan_atoms);
        Json row;
        row["i"] = n;
        row["j"] = n + 1;
        row["distance"] = json_of(d);
        pairs.push_back(std::move(row));
        csv += std::to_string(n) + "," + std::to_string(n + 1) + "," + rat_to_decimal(d) + "\n";
      }
      out["consecutive_distances"] = std::move(pairs);
    } else if (analysis == "cover") {
      const DSet a = require_indicator_set(spec, analysis);
      const CoverWitness witness = uniform_cover_witness(seq, a, spec.cover_r, horizon);
      const Rat eps = spec.epsilons.empty() ? Rat(0) : spec.epsilons.front();
      const CoverVerdict verdict = check_uniform_cover(witness, a, eps);
      out["set"] = json_of(a);
      out["witness"] = json_of(witness);
      out["eps"] = json_of(eps);
      out["verdict"] = json_of(verdict);
      csv = "n,seminorm,tail_symdiff_from_n\n";
      for (std::size_t n = 1; n <= horizon; ++n) {
        csv += std::to_string(n) + "," + rat_to_decimal(witness.seminorms[n - 1]) + "," +
               rat_to_decimal(witness.tail_symdiff[n - 1]) + "\n";
      }
    } else if (analysis == "liminf_limsup") {
      const LimitAlgebraReport report = limit_algebras(seq, horizon);
      out["report"] = json_of(report);
      csv = "m,tail_meet_atoms,tail_join_atoms\n";
      for (std::size_t m = 1; m <= horizon; ++m) {
        csv += std::to_string(m) + "," + std::to_string(report.tail_meets[m - 1].size()) + "," +
               std::to_string(report.tail_joins[m - 1].size()) + "\n";
      }
    } else if (analysis == "mu_approach") {
      const DSet a = require_indicator_set(spec, analysis);
      const std::vector<Rat> profile = mu_approach_profile(seq, a, horizon);
      out["set"] = json_of(a);
      Json values = Json::array();
      for (const auto& v : profile) values.push_back(json_of(v));
      out["profile"] = std::move(values);
      csv = "n,distance\n";
      for (std::size_t n = 1; n <= horizon; ++n) {
        csv += std::to_string(n) + "," + rat_to_decimal(profile[n - 1]) + "\n";
      }
    } else if (analysis == "wperp") {
      const std::vector<Rat> profile = pairing_profile(seq, f, spec.wperp_eps, horizon);
      auto [element, pairing] = wperp_witness(seq, f, spec.wperp_eps, 1, horizon);
      out["eps"] = json_of(spec.wperp_eps);
      Json values = Json::array();
      for (const auto& v : profile) values.push_back(json_of(v));
      out["pairing_profile"] = std::move(values);
      out["first_window_witness"] = json_of(element);
      out["first_window_pairing"] = json_of(pairing);
      csv = "window_start,pairing\n";
      for (std::size_t n = 1; n < horizon; ++n) {
        csv += std::to_string(n) + "," + rat_to_decimal(profile[n - 1]) + "\n";
      }
    } else {
      throw ScenarioParseError("unknown analysis: " + analysis);
    }

    if (config.json) write_json(config.out_dir / (analysis + ".json"), out, config.verbose);
    if (config.csv && !csv.empty()) {
      write_text(config.out_dir / (analysis + ".csv"), csv, config.verbose);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// boylan

int run_boylan(const fs::path& scenario_file, std::size_t i, std::size_t j) {
  const ScenarioSpec spec = load_scenario(scenario_file);
  if (i == 0 || j == 0 || i > spec.horizon || j > spec.horizon) {
    std::cerr << "error: indices must lie in 1.." << spec.horizon << "\n";
    return kExitUsage;
  }
  AlgebraSeq seq = from_spec(spec);
  const Rat d = boylan_distance(seq.at(i), seq.at(j), spec.caps.boylan_atoms);
  std::cout << rat_to_string(d) << " = " << rat_to_decimal(d) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact laboratory for sequences of finite sigma-subalgebras on [0,1)"};
  app.require_subcommand(1);

  // demo counterexample
  auto* demo = app.add_subcommand("demo", "run a built-in demonstration");
  demo->require_subcommand(1);
  auto* demo_ce = demo->add_subcommand(
      "counterexample", "L^p convergence without a.e. convergence, reproduced exactly");
  std::size_t n_max = 6;
  std::string demo_out = "out";
  bool demo_csv = false;
  bool verbose = false;
  demo_ce->add_option("--n-max", n_max, "largest sweep block (2..14)");
  demo_ce->add_option("--out", demo_out, "output directory");
  demo_ce->add_flag("--csv", demo_csv, "also write CSV series");
  demo_ce->add_flag("--verbose", verbose, "log written files to stderr");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run the analyses listed in a scenario file");
  RunConfig config;
  std::string scenario_path;
  std::string out_path = "out";
  std::vector<std::string> formats{"json"};
  analyze->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  analyze->add_option("--out", out_path, "output directory");
  analyze->add_option("--formats", formats, "output formats (json, csv)")->delimiter(',');
  analyze->add_flag("--verbose", config.verbose, "log written files to stderr");

  // boylan
  auto* boylan = app.add_subcommand("boylan", "distance between two sequence terms");
  std::string boylan_scenario;
  std::size_t index_i = 1, index_j = 1;
  boylan->add_option("--scenario", boylan_scenario, "scenario JSON file")->required();
  boylan->add_option("--i", index_i, "first 1-based index")->required();
  boylan->add_option("--j", index_j, "second 1-based index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (demo_ce->parsed()) {
      return run_demo_counterexample(n_max, demo_out, demo_csv, verbose);
    }
    if (analyze->parsed()) {
      config.scenario = scenario_path;
      config.out_dir = out_path;
      config.json = false;
      config.csv = false;
      for (const auto& fmt : formats) {
        if (fmt == "json") config.json = true;
        else if (fmt == "csv") config.csv = true;
        else {
          std::cerr << "error: unknown format \"" << fmt << "\"\n";
          return kExitUsage;
        }
      }
      if (!config.json && !config.csv) {
        std::cerr << "error: at least one output format is required\n";
        return kExitUsage;
      }
      return run_analyze(config);
    }
    if (boylan->parsed()) {
      return run_boylan(boylan_scenario, index_i, index_j);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}
