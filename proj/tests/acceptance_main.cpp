// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exit status is the number
// of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emd/csv.hpp"
#include "emd/errors.hpp"
#include "emd/experiments.hpp"
#include "emd/extrema.hpp"
#include "emd/interpolant.hpp"
#include "emd/oracles.hpp"
#include "emd/sifting.hpp"
#include "emd/spectral.hpp"

using namespace emd;
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kW0 = kPi / 256.0;

struct Checker {
  bool ok = true;
  std::vector<std::string> details;

  void require(bool condition, const std::string& what) {
    char line[512];
    std::snprintf(line, sizeof line, "    %s %s", condition ? "[ok]  " : "[BAD] ", what.c_str());
    details.push_back(line);
    ok = ok && condition;
  }

  void require_rel(const std::string& label, double computed, double expected, double tol) {
    const double rel = std::abs(computed - expected) / std::abs(expected);
    char line[256];
    std::snprintf(line, sizeof line, "%s = %.6g (expected %.6g, rel %.2e, tol %.0e)",
                  label.c_str(), computed, expected, rel, tol);
    require(rel <= tol, line);
  }
};

int g_failures = 0;

void run_criterion(int number, const std::string& title, const std::function<void(Checker&)>& fn) {
  Checker checker;
  try {
    fn(checker);
  } catch (const std::exception& e) {
    checker.require(false, std::string("exception: ") + e.what());
  }
  std::printf("[%s] criterion %d: %s\n", checker.ok ? "PASS" : "FAIL", number, title.c_str());
  for (const std::string& line : checker.details) std::printf("%s\n", line.c_str());
  if (!checker.ok) ++g_failures;
}

// ---------------------------------------------------------------------------

void criterion1_rational_two_tone(Checker& c) {
  const oracles::ConstantsReport report =
      oracles::rational_two_tone_report(3.0 * kPi / 64.0, kPi / 32.0);
  c.require_rel("A_classical", report.value("A_classical"), 31.6335, 0.03);
  c.require_rel("B_classical", report.value("B_classical"), 29.7029, 0.03);
  c.require_rel("A_midpoint", report.value("A_midpoint"), 34.1965, 0.03);
  c.require_rel("B_midpoint", report.value("B_midpoint"), 20.8115, 0.03);
}

void criterion2_perturbation(Checker& c) {
  const oracles::ConstantsReport report = oracles::perturbation_constants(1.0, 1.0, 1e-3);
  c.require_rel("P classical cos * w/eps", report.value("classical_cos*w/eps"), 26.703, 0.05);
  c.require_rel("Q midpoint cos * w/eps", report.value("midpoint_cos*w/eps"), 28.274, 0.05);
  c.require_rel("classical sin slope", report.value("classical_sin_slope*w^2/eps"), -796.976,
                0.10);
  c.require_rel("midpoint sin slope", report.value("midpoint_sin_slope*w^2/eps"), -12.207, 0.10);
  char line[128];
  std::snprintf(line, sizeof line, "slope ratio %.2f exceeds 50",
                report.value("sin_slope_ratio"));
  c.require(report.value("sin_slope_ratio") > 50.0, line);
}

void criterion3_scaling_laws(Checker& c) {
  const std::vector<double> eps_list = {1e-3, 1.78e-3, 3.16e-3, 5.62e-3, 1e-2};
  for (int degree : {1, 2, 3}) {
    const oracles::ProjectionDifferenceScan scan =
        oracles::projection_difference_scan(1.0, 2.0, 1.0, degree, eps_list);
    for (const auto& [label, fit] : scan.differences) {
      const int which = label == "P1-P2" ? 0 : label == "P1-P3" ? 1 : 2;
      const double ref = oracles::three_tone_difference_reference(degree, which, 1.0, 2.0, 1.0);
      char what[256];
      std::snprintf(what, sizeof what, "deg %d %s: slope %.3f in 3.0+-0.15, r2 %.5f >= 0.99",
                    degree, label.c_str(), fit.log_log_slope, fit.r_squared);
      c.require(std::abs(fit.log_log_slope - 3.0) <= 0.15 && fit.r_squared >= 0.99, what);
      std::snprintf(what, sizeof what, "deg %d %s coefficient at eps=1e-3", degree, label.c_str());
      c.require_rel(what, fit.leading_coefficient, ref, 0.10);
    }
  }

  // Two-tone phase-shift form: differences positive with the reference
  // leading behaviour under separate eps- and phi-scans.
  const std::vector<double> phi_list = {2e-2, 4e-2, 8e-2, 1.6e-1};
  for (int degree : {1, 2, 3}) {
    const oracles::ProjectionDifferenceScan eps_scan =
        oracles::projection_difference_scan(1.0, 0.0, 1.0, degree, eps_list, 1e-4);
    const auto& efit = eps_scan.differences[0].second;
    bool positive = true, matches = true;
    for (Eigen::Index i = 0; i < efit.x_values.size(); ++i) {
      const double ref =
          oracles::two_tone_difference_reference(degree, 1.0, 1.0, efit.x_values[i], 1e-4);
      positive = positive && efit.y_values[i] > 0.0;
      matches = matches && std::abs(efit.y_values[i] / ref - 1.0) <= 0.10;
    }
    char what[256];
    std::snprintf(what, sizeof what,
                  "deg %d phase form, eps-scan: positive, within 10%% of reference, slope %.2f",
                  degree, efit.log_log_slope);
    c.require(positive && matches, what);

    const oracles::ProjectionDifferenceScan phi_scan =
        oracles::projection_phase_scan(1.0, 1.0, degree, phi_list, 1e-4);
    const auto& pfit = phi_scan.differences[0].second;
    positive = matches = true;
    for (Eigen::Index i = 0; i < pfit.x_values.size(); ++i) {
      const double ref =
          oracles::two_tone_difference_reference(degree, 1.0, 1.0, 1e-4, pfit.x_values[i]);
      positive = positive && pfit.y_values[i] > 0.0;
      matches = matches && std::abs(pfit.y_values[i] / ref - 1.0) <= 0.10;
    }
    std::snprintf(what, sizeof what,
                  "deg %d phase form, phi-scan: positive, within 10%% of reference, slope %.2f",
                  degree, pfit.log_log_slope);
    c.require(positive && matches, what);
  }
}

void criterion4_residual_order(Checker& c) {
  ToneRecipe f;
  f.tones = {{1.0, 2.7, 0.0}};
  const std::vector<double> omegas = {10.0, 20.0, 40.0, 80.0};
  const oracles::ScalingFit fit = oracles::residual_order_scan(f, omegas, 1e-2);
  char what[256];
  std::snprintf(what, sizeof what, "interior L1 residual slope %.3f in 2.0+-0.2 (r2 %.5f)",
                fit.log_log_slope, fit.r_squared);
  c.require(std::abs(fit.log_log_slope - 2.0) <= 0.2 && fit.r_squared >= 0.99, what);
}

void criterion5_lagrange(Checker& c) {
  const oracles::ConstantsReport report = oracles::lagrange_projection_report(1.0, 0.0, 1.5);
  c.require_rel("P1 classical * w", report.value("P1_classical*w"), 3.8568, 0.05);
  c.require_rel("P2 classical * w", report.value("P2_classical*w"), -1.0637, 0.05);
  c.require_rel("Q1 midpoint * w", report.value("Q1_midpoint*w"), 6.3795, 0.05);
  c.require_rel("Q2 midpoint * w", report.value("Q2_midpoint*w"), -0.2184, 0.05);
  c.require(report.value("Q1_midpoint*w") > report.value("P1_classical*w"),
            "Q1 exceeds P1 (midpoint keeps more of the probe tone)");
  c.require(std::abs(report.value("Q2_midpoint*w")) < std::abs(report.value("P2_classical*w")),
            "|Q2| below |P2| (midpoint phase shift smaller)");
}

void criterion6_convergence_ordering(Checker& c) {
  // case 1: well-separated pair, iteration counts across the threshold sweep
  ToneRecipe pair1;
  pair1.tones = {{0.5, 12.0 * kW0, 0.0}, {0.5, 8.0 * kW0, 0.0}};
  const SampledSignal s1 = synthesize(pair1, make_grid(-2048.0, 2048.0, 1.0));
  double best_ratio = 0.0;
  for (double threshold : {1e-2, 1e-3, 1e-4}) {
    SiftConfig cfg;
    cfg.conv_norm = ConvNorm::L2Rel;
    cfg.conv_epsilon = threshold;
    cfg.method = SiftMethod::Classical;
    const Imf classical = extract_imf(s1, cfg);
    cfg.method = SiftMethod::Midpoint;
    const Imf midpoint = extract_imf(s1, cfg);
    best_ratio = std::max(best_ratio, static_cast<double>(classical.sift_iterations) /
                                          midpoint.sift_iterations);
    char what[256];
    std::snprintf(what, sizeof what, "case 1 threshold %.0e: midpoint %d < classical %d",
                  threshold, midpoint.sift_iterations, classical.sift_iterations);
    c.require(midpoint.sift_iterations < classical.sift_iterations, what);
  }
  char what[256];
  std::snprintf(what, sizeof what, "case 1 iteration ratio >= 3 at some threshold (best %.2f)",
                best_ratio);
  c.require(best_ratio >= 3.0, what);

  // case 2: close pair; midpoint resolves both tones, classical misses IMF2
  const double wa = kPi / 24.0 + kPi / 288.0;
  const double wb = kPi / 24.0 - kPi / 288.0;
  ToneRecipe pair2;
  pair2.tones = {{0.5, wa, 0.0}, {0.5, wb, 0.0}};
  const SampledSignal s2 = synthesize(pair2, make_grid(-2048.0, 2048.0, 1.0));
  SiftConfig cfg;
  cfg.conv_norm = ConvNorm::L2Rel;
  cfg.max_imfs = 2;
  const Decomposition mid = decompose(s2, cfg);
  cfg.method = SiftMethod::Classical;
  const Decomposition cls = decompose(s2, cfg);
  c.require(mid.imfs.size() >= 2 && cls.imfs.size() >= 2, "both methods produced two IMFs");
  if (mid.imfs.size() >= 2 && cls.imfs.size() >= 2) {
    const double m1 = spectral_peak_distance(power_spectrum(mid.imfs[0].signal), wa);
    const double m2 = spectral_peak_distance(power_spectrum(mid.imfs[1].signal), wb);
    const double c2 = spectral_peak_distance(power_spectrum(cls.imfs[1].signal), wb);
    std::snprintf(what, sizeof what, "case 2 midpoint IMF1 within 1 bin of w1 (%.3f bins)", m1);
    c.require(m1 <= 1.0, what);
    std::snprintf(what, sizeof what, "case 2 midpoint IMF2 within 1 bin of w2 (%.3f bins)", m2);
    c.require(m2 <= 1.0, what);
    std::snprintf(what, sizeof what, "case 2 classical IMF2 misses w2 by more than 1 bin (%.3f)",
                  c2);
    c.require(c2 > 1.0, what);
  }
}

void criterion7_three_tone(Checker& c) {
  ToneRecipe recipe;
  recipe.tones = {{1.0 / 3, 12 * kW0, 0.0}, {1.0 / 3, 10 * kW0, 0.0}, {1.0 / 3, 8 * kW0, 0.0}};
  const SampledSignal s = synthesize(recipe, make_grid(-2048.0, 2048.0, 1.0));
  SiftConfig cfg;
  cfg.conv_norm = ConvNorm::L2Rel;
  cfg.max_imfs = 2;
  const Decomposition d = decompose(s, cfg);
  c.require(d.imfs.size() >= 2, "midpoint decomposition produced two IMFs");
  if (d.imfs.size() >= 2) {
    const double d1 = spectral_peak_distance(power_spectrum(d.imfs[0].signal), 12 * kW0);
    const double d2 = spectral_peak_distance(power_spectrum(d.imfs[1].signal), 10 * kW0);
    char what[256];
    std::snprintf(what, sizeof what, "IMF1 peak within 1 bin of 12*w0 (%.3f bins)", d1);
    c.require(d1 <= 1.0, what);
    std::snprintf(what, sizeof what, "IMF2 peak within 1 bin of 10*w0 (%.3f bins)", d2);
    c.require(d2 <= 1.0, what);
  }
}

void criterion8_properties(Checker& c) {
  // Reconstruction identity on 100 randomized multi-tone signals.
  {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> amp(0.2, 1.5), freq(0.02, 0.5), phase(0.0, 2 * kPi);
    std::uniform_int_distribution<int> tone_count(1, 5);
    bool all_ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      ToneRecipe r;
      const int n = tone_count(rng);
      for (int i = 0; i < n; ++i) r.tones.push_back({amp(rng), freq(rng), phase(rng)});
      const SampledSignal s = synthesize(r, make_grid(-512.0, 512.0, 1.0));
      SiftConfig cfg;
      cfg.method = trial % 3 == 0   ? SiftMethod::Classical
                   : trial % 3 == 1 ? SiftMethod::Midpoint
                                    : SiftMethod::Hybrid;
      const Decomposition d = decompose(s, cfg);
      Eigen::ArrayXd sum = d.residue.values;
      for (const Imf& imf : d.imfs) sum += imf.signal.values;
      const double rel =
          (sum - s.values).abs().maxCoeff() / std::max(1.0, s.values.abs().maxCoeff());
      worst = std::max(worst, rel);
      all_ok = all_ok && rel <= 1e-9;
    }
    char what[160];
    std::snprintf(what, sizeof what,
                  "reconstruction within 1e-9 relative on 100 random signals (worst %.2e)", worst);
    c.require(all_ok, what);
  }

  // Pure-tone fixed point: one significant converged IMF, correlation > 0.999.
  {
    ToneRecipe r;
    r.tones = {{1.0, 12 * kW0, 0.0}};
    const SampledSignal s = synthesize(r, make_grid(-2048.0, 2048.0, 1.0));
    SiftConfig cfg;
    const Decomposition d = decompose(s, cfg);
    int significant = 0;
    for (const Imf& imf : d.imfs)
      if (imf.signal.values.abs().maxCoeff() > 1e-2 * s.values.abs().maxCoeff()) ++significant;
    const auto& v = d.imfs.empty() ? s.values : d.imfs[0].signal.values;
    const double corr =
        (v * s.values).sum() / std::sqrt(v.square().sum() * s.values.square().sum());
    char what[160];
    std::snprintf(what, sizeof what,
                  "pure tone: %d significant IMF (corr %.6f, converged %d)", significant, corr,
                  d.imfs.empty() ? 0 : d.imfs[0].converged);
    c.require(significant == 1 && corr > 0.999 && !d.imfs.empty() && d.imfs[0].converged, what);
  }

  // High-pass ordering after one midpoint sift of the three-close-tone family.
  {
    const double eps = 0.05;
    ToneRecipe r;
    r.tones = {{1.0, 1.0, 0.0}, {1.0, 1.0 + eps, 0.0}, {1.0, 1.0 + 2 * eps, 0.0}};
    const SampledSignal s = synthesize(r, make_grid(-kPi, 7.0 * kPi, 8.0 * kPi / 8192.0));
    SiftConfig cfg;
    const SampledSignal after = sift_once(s, cfg);
    const MidpointSet mids = compute_midpoints(s, find_extrema(s));
    const double t1 = mids.points[1].t;
    const double t5 = mids.points[5].t;
    const auto drop = [&](double omega) {
      return project_onto_tone(s, omega, t1, t5).p_cos -
             project_onto_tone(after, omega, t1, t5).p_cos;
    };
    const double d1 = drop(1.0), d2 = drop(1.0 + eps), d3 = drop(1.0 + 2 * eps);
    char what[160];
    std::snprintf(what, sizeof what, "projection drops ordered: %.4f > %.4f > %.4f", d1, d2, d3);
    c.require(d1 > d2 && d2 > d3, what);
  }

  // Interpolant knot-exactness and C2 smoothness on random knot sets.
  {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> value(-2.0, 2.0), gap(0.3, 1.4);
    bool all_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 4 + static_cast<int>(rng() % 10);
      Eigen::ArrayXd t(m), v(m);
      double cur = 0.0;
      for (int i = 0; i < m; ++i) {
        t[i] = cur;
        cur += gap(rng);
        v[i] = value(rng);
      }
      const Knots knots(t, v);
      const Interpolant spline = fit_spline(knots);
      double curvature = 1e-12;
      for (Eigen::Index i = 1; i + 1 < m; ++i)
        curvature = std::max(curvature, std::abs(spline.second_derivative(knots.t[i])));
      for (Eigen::Index i = 0; i < m; ++i) {
        const double knot_value = spline(knots.t[i]);
        all_ok = all_ok &&
                 std::abs(knot_value - knots.v[i]) <= 1e-10 * std::max(1.0, std::abs(knots.v[i]));
        if (i > 0 && i + 1 < m) {
          const double jump = std::abs(spline.second_derivative(knots.t[i] - 1e-9) -
                                       spline.second_derivative(knots.t[i] + 1e-9));
          all_ok = all_ok && jump <= 1e-6 * curvature;
        }
      }
    }
    c.require(all_ok, "spline knot exactness (1e-10) and C2 continuity on 20 random knot sets");
  }

  // CLI determinism: identical invocations produce byte-identical outputs.
  {
    const std::filesystem::path base = std::filesystem::temp_directory_path() / "emd_acceptance";
    std::filesystem::remove_all(base);
    std::filesystem::create_directories(base);
    const std::string cli = EMD_CLI_PATH;
    bool ok = true;
    for (const char* run : {"a", "b"}) {
      const std::string cmd = "'" + cli + "' --out-dir '" + (base / run).string() +
                              "' decompose --tone 0.5,0.147 --tone 0.5,0.098 --t0 -512 --t1 512 "
                              "--dt 1 --method midpoint > /dev/null";
      ok = ok && std::system(cmd.c_str()) == 0;
    }
    const auto slurp = [](const std::filesystem::path& p) {
      std::ifstream in(p, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    };
    for (const char* file : {"decomposition.csv", "metadata.txt"}) {
      const std::string a = slurp(base / "a" / file);
      const std::string b = slurp(base / "b" / file);
      ok = ok && !a.empty() && a == b;
    }
    c.require(ok, "CLI decompose twice: byte-identical decomposition.csv and metadata.txt");
  }
}

} // namespace

int main() {
  run_criterion(1, "rational two-tone amplitudes within 3%", criterion1_rational_two_tone);
  run_criterion(2, "perturbation constants and sine slopes", criterion2_perturbation);
  run_criterion(3, "projection-difference scaling laws", criterion3_scaling_laws);
  run_criterion(4, "one-sift residual order in (pi/omega)", criterion4_residual_order);
  run_criterion(5, "cubic-Lagrange projection constants", criterion5_lagrange);
  run_criterion(6, "convergence ordering and close-pair resolution", criterion6_convergence_ordering);
  run_criterion(7, "three-tone IMF spectral peaks", criterion7_three_tone);
  run_criterion(8, "property suite", criterion8_properties);

  if (g_failures == 0)
    std::printf("all 8 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
