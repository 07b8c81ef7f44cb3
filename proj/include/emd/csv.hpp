#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "emd/extrema.hpp"
#include "emd/sifting.hpp"
#include "emd/spectral.hpp"

namespace emd {

/// All numeric CSV output uses 17 significant digits so files round-trip
/// bit-exactly through a double.
std::string format_double(double x);

/// Signal CSV: header "t,value", one row per sample.
void write_signal_csv(const SampledSignal& s, const std::filesystem::path& path);
SampledSignal read_signal_csv(const std::filesystem::path& path);

/// Decomposition CSV: header "t,imf1,...,imfK,residue".
void write_decomposition_csv(const SampledSignal& original, const Decomposition& d,
                             const std::filesystem::path& path);

/// Spectrum CSV: header "freq_rad_per_time,power".
void write_spectrum_csv(const SpectrumReport& spec, const std::filesystem::path& path);

/// Extrema/midpoint CSV: header "t,v,kind" with kind in {max,min,mid}.
void write_extrema_csv(const ExtremaSet& e, const MidpointSet* midpoints,
                       const std::filesystem::path& path);

/// Flat key=value sidecar, written in insertion order.
struct Metadata {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, long value);
  void write(const std::filesystem::path& path) const;
};

} // namespace emd
