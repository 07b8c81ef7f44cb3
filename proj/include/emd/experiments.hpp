#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "emd/sifting.hpp"

namespace emd::experiments {

/// Command-line overrides applied on top of an experiment's built-in
/// configuration.
struct Overrides {
  std::optional<SiftMethod> method;
  std::optional<InterpKind> interp;
  std::optional<double> conv_epsilon;
  std::optional<ConvNorm> conv_norm;
  std::optional<int> max_sift_iters;
  std::optional<int> max_imfs;
  bool emit_gnuplot = false;
};

struct ExperimentResult {
  std::string id;
  bool passed = true;
  std::vector<std::string> lines; // human-readable report, one line each
};

/// Registered experiment ids, in a fixed order.
const std::vector<std::string>& experiment_ids();

/// Runs one experiment, writing its CSV outputs and a metadata sidecar under
/// out_dir/<id>/. Throws UnknownExperiment for unregistered ids. The result
/// is passed=false iff an asserted tolerance failed.
ExperimentResult run_experiment(const std::string& id, const std::filesystem::path& out_dir,
                                const Overrides& overrides = {});

/// Runs the projection-scan verifications (interpolant scaling laws and the
/// one-sift residual order), printing one pass/fail line per check. Writes
/// scan CSVs under out_dir/verify/ when out_dir is non-empty.
ExperimentResult run_verification(const std::filesystem::path& out_dir);

} // namespace emd::experiments
