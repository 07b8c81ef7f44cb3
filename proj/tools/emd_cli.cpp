// Command-line front end: signal synthesis, decomposition, spectra, extrema
// dumps, and one-command reproduction of the built-in experiments.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emd/csv.hpp"
#include "emd/errors.hpp"
#include "emd/experiments.hpp"
#include "emd/extrema.hpp"
#include "emd/spectral.hpp"

namespace {

using namespace emd;

struct RecipeFlags {
  std::vector<std::string> tones;
  std::vector<double> noise;
  double t0 = 0.0;
  double t1 = 0.0;
  double dt = 1.0;
};

void add_recipe_flags(CLI::App* cmd, RecipeFlags& flags) {
  cmd->add_option("--tone", flags.tones, "tone as amp,omega[,phase]; repeat for multiple tones");
  cmd->add_option("--noise", flags.noise, "perturbation tone as amp,omega")
      ->expected(2)
      ->delimiter(',');
  cmd->add_option("--t0", flags.t0, "grid start time");
  cmd->add_option("--t1", flags.t1, "grid end time");
  cmd->add_option("--dt", flags.dt, "grid step")->capture_default_str();
}

ToneRecipe parse_recipe(const RecipeFlags& flags) {
  ToneRecipe recipe;
  for (const std::string& spec : flags.tones) {
    Tone tone;
    tone.phase = 0.0;
    const int n =
        std::sscanf(spec.c_str(), "%lf,%lf,%lf", &tone.amplitude, &tone.omega, &tone.phase);
    if (n < 2) throw Error("--tone expects amp,omega[,phase], got '" + spec + "'");
    recipe.tones.push_back(tone);
  }
  if (!flags.noise.empty()) recipe.noise = NoiseTone{flags.noise[0], flags.noise[1]};
  return recipe;
}

struct ConfigFlags {
  std::string method;
  std::string interp;
  std::optional<double> epsilon;
  std::string norm;
  std::optional<int> max_iters;
  std::optional<int> max_imfs;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--method", flags.method, "classical|midpoint|hybrid")
      ->check(CLI::IsMember({"classical", "midpoint", "hybrid"}));
  cmd->add_option("--interp", flags.interp, "spline|lagrange1|lagrange2|lagrange3")
      ->check(CLI::IsMember({"spline", "lagrange1", "lagrange2", "lagrange3"}));
  cmd->add_option("--epsilon", flags.epsilon, "convergence threshold");
  cmd->add_option("--norm", flags.norm, "l2rel|sd")->check(CLI::IsMember({"l2rel", "sd"}));
  cmd->add_option("--max-iters", flags.max_iters, "sifting iteration cap");
  cmd->add_option("--max-imfs", flags.max_imfs, "maximum number of IMFs");
}

experiments::Overrides to_overrides(const ConfigFlags& flags) {
  experiments::Overrides ov;
  if (flags.method == "classical") ov.method = SiftMethod::Classical;
  if (flags.method == "midpoint") ov.method = SiftMethod::Midpoint;
  if (flags.method == "hybrid") ov.method = SiftMethod::Hybrid;
  if (flags.interp == "spline") ov.interp = InterpKind::Spline;
  if (flags.interp == "lagrange1") ov.interp = InterpKind::Lagrange1;
  if (flags.interp == "lagrange2") ov.interp = InterpKind::Lagrange2;
  if (flags.interp == "lagrange3") ov.interp = InterpKind::Lagrange3;
  if (flags.epsilon) ov.conv_epsilon = *flags.epsilon;
  if (flags.norm == "l2rel") ov.conv_norm = ConvNorm::L2Rel;
  if (flags.norm == "sd") ov.conv_norm = ConvNorm::SD;
  if (flags.max_iters) ov.max_sift_iters = *flags.max_iters;
  if (flags.max_imfs) ov.max_imfs = *flags.max_imfs;
  return ov;
}

SiftConfig to_config(const ConfigFlags& flags) {
  SiftConfig cfg;
  const experiments::Overrides ov = to_overrides(flags);
  if (ov.method) cfg.method = *ov.method;
  if (ov.interp) cfg.interp = *ov.interp;
  if (ov.conv_epsilon) cfg.conv_epsilon = *ov.conv_epsilon;
  if (ov.conv_norm) cfg.conv_norm = *ov.conv_norm;
  if (ov.max_sift_iters) cfg.max_sift_iters = *ov.max_sift_iters;
  if (ov.max_imfs) cfg.max_imfs = *ov.max_imfs;
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical mode decomposition with classical and midpoint sifting"};
  app.require_subcommand(1);

  std::filesystem::path out_dir = "out";
  app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();
  bool emit_gnuplot = false;
  app.add_flag("--emit-gnuplot", emit_gnuplot, "also write gnuplot scripts");

  auto* synth = app.add_subcommand("synth", "synthesize a multi-tone signal to CSV");
  RecipeFlags synth_recipe;
  add_recipe_flags(synth, synth_recipe);
  std::string synth_out = "signal.csv";
  synth->add_option("--out", synth_out, "output CSV path")->capture_default_str();

  auto* dec = app.add_subcommand("decompose", "decompose a signal into IMFs plus residue");
  RecipeFlags dec_recipe;
  add_recipe_flags(dec, dec_recipe);
  std::string dec_input;
  dec->add_option("--input", dec_input, "input signal CSV (header 't,value')");
  ConfigFlags dec_cfg;
  add_config_flags(dec, dec_cfg);

  auto* spec_cmd = app.add_subcommand("spectrum", "periodogram of a signal CSV");
  std::string spec_input;
  spec_cmd->add_option("--input", spec_input, "input signal CSV")->required();
  std::string spec_out = "spectrum.csv";
  spec_cmd->add_option("--out", spec_out, "output CSV path")->capture_default_str();

  auto* ext_cmd = app.add_subcommand("extrema", "extrema and midpoints of a signal CSV");
  std::string ext_input;
  ext_cmd->add_option("--input", ext_input, "input signal CSV")->required();
  std::string ext_out = "extrema.csv";
  ext_cmd->add_option("--out", ext_out, "output CSV path")->capture_default_str();

  auto* rep = app.add_subcommand("reproduce", "run a built-in experiment");
  std::string experiment_id;
  rep->add_option("id", experiment_id, "experiment id (or 'all'); see 'list'")->required();
  ConfigFlags rep_cfg;
  add_config_flags(rep, rep_cfg);

  auto* ver = app.add_subcommand("verify", "run the projection-scan verifications");

  auto* list = app.add_subcommand("list", "list experiment ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*synth) {
      const ToneRecipe recipe = parse_recipe(synth_recipe);
      const TimeGrid grid = make_grid(synth_recipe.t0, synth_recipe.t1, synth_recipe.dt);
      write_signal_csv(synthesize(recipe, grid), synth_out);
      std::printf("wrote %s (%ld samples)\n", synth_out.c_str(), static_cast<long>(grid.n));
      return 0;
    }

    if (*dec) {
      SampledSignal s;
      if (!dec_input.empty()) {
        s = read_signal_csv(dec_input);
      } else if (!dec_recipe.tones.empty()) {
        s = synthesize(parse_recipe(dec_recipe),
                       make_grid(dec_recipe.t0, dec_recipe.t1, dec_recipe.dt));
      } else {
        std::fprintf(stderr, "decompose: need --input or --tone flags\n");
        return 2;
      }
      const SiftConfig cfg = to_config(dec_cfg);
      const Decomposition d = decompose(s, cfg);
      std::filesystem::create_directories(out_dir);
      write_decomposition_csv(s, d, out_dir / "decomposition.csv");
      Metadata meta;
      meta.add("method", cfg.method == SiftMethod::Classical ? "classical"
                         : cfg.method == SiftMethod::Midpoint ? "midpoint"
                                                              : "hybrid");
      meta.add("interp", cfg.interp == InterpKind::Spline      ? "spline"
                         : cfg.interp == InterpKind::Lagrange1 ? "lagrange1"
                         : cfg.interp == InterpKind::Lagrange2 ? "lagrange2"
                                                               : "lagrange3");
      meta.add("conv_epsilon", cfg.conv_epsilon);
      meta.add("conv_norm", cfg.conv_norm == ConvNorm::SD ? "sd" : "l2rel");
      meta.add("imf_count", static_cast<long>(d.imfs.size()));
      for (std::size_t i = 0; i < d.imfs.size(); ++i) {
        meta.add("imf" + std::to_string(i + 1) + "_iterations",
                 static_cast<long>(d.imfs[i].sift_iterations));
        meta.add("imf" + std::to_string(i + 1) + "_converged",
                 d.imfs[i].converged ? "true" : "false");
      }
      meta.add("interpolant_fits", d.interpolant_fits);
      meta.write(out_dir / "metadata.txt");
      std::printf("%zu IMFs -> %s\n", d.imfs.size(), (out_dir / "decomposition.csv").c_str());
      return 0;
    }

    if (*spec_cmd) {
      const SampledSignal s = read_signal_csv(spec_input);
      const SpectrumReport report = power_spectrum(s);
      write_spectrum_csv(report, spec_out);
      std::printf("peak %.10g rad/time (refined %.10g), power %.6g -> %s\n", report.peak_freq,
                  report.peak_freq_refined, report.peak_power, spec_out.c_str());
      return 0;
    }

    if (*ext_cmd) {
      const SampledSignal s = read_signal_csv(ext_input);
      const ExtremaSet e = find_extrema(s);
      const MidpointSet mids = compute_midpoints(s, e);
      write_extrema_csv(e, &mids, ext_out);
      std::printf("%zu maxima, %zu minima, %zu midpoints -> %s\n", e.maxima.size(),
                  e.minima.size(), mids.points.size(), ext_out.c_str());
      return 0;
    }

    if (*rep) {
      experiments::Overrides ov = to_overrides(rep_cfg);
      ov.emit_gnuplot = emit_gnuplot;
      std::vector<std::string> ids;
      if (experiment_id == "all")
        ids = experiments::experiment_ids();
      else
        ids.push_back(experiment_id);
      bool all_passed = true;
      for (const std::string& id : ids) {
        const experiments::ExperimentResult result = experiments::run_experiment(id, out_dir, ov);
        std::printf("== %s ==\n", result.id.c_str());
        for (const std::string& line : result.lines) std::printf("%s\n", line.c_str());
        all_passed = all_passed && result.passed;
      }
      return all_passed ? 0 : 1;
    }

    if (*ver) {
      const experiments::ExperimentResult result = experiments::run_verification(out_dir);
      for (const std::string& line : result.lines) std::printf("%s\n", line.c_str());
      return result.passed ? 0 : 1;
    }

    if (*list) {
      for (const std::string& id : experiments::experiment_ids()) std::printf("%s\n", id.c_str());
      return 0;
    }
  } catch (const UnknownExperiment& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const MalformedCsv& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
