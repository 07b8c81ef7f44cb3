#include "emd/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "emd/errors.hpp"

namespace emd {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

} // namespace

void write_signal_csv(const SampledSignal& s, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "t,value\n";
  for (Eigen::Index k = 0; k < s.grid.n; ++k)
    out << format_double(s.grid.t(k)) << ',' << format_double(s.values[k]) << '\n';
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedCsv("cannot open " + path.string());

  std::string line;
  long line_no = 0;
  auto fail = [&](const std::string& what) {
    throw MalformedCsv(path.string() + ":" + std::to_string(line_no) + ": " + what);
  };

  if (!std::getline(in, line)) fail("empty file");
  ++line_no;
  if (line != "t,value" && line != "t,value\r") fail("expected header 't,value'");

  std::vector<double> times, values;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail("missing comma");
    try {
      std::size_t used = 0;
      times.push_back(std::stod(line.substr(0, comma), &used));
      values.push_back(std::stod(line.substr(comma + 1), &used));
    } catch (const std::exception&) {
      fail("cannot parse numbers");
    }
  }
  if (times.size() < 2) fail("need at least 2 samples");

  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) fail("times must be strictly increasing");
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double step = times[k] - times[k - 1];
    if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
      throw MalformedCsv(path.string() + ":" + std::to_string(k + 2) + ": non-uniform time step");
  }

  SampledSignal s;
  s.grid.t_start = times[0];
  s.grid.dt = dt;
  s.grid.n = static_cast<Eigen::Index>(times.size());
  s.values = Eigen::Map<const Eigen::ArrayXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return s;
}

void write_decomposition_csv(const SampledSignal& original, const Decomposition& d,
                             const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "t";
  for (std::size_t i = 0; i < d.imfs.size(); ++i) out << ",imf" << (i + 1);
  out << ",residue\n";
  for (Eigen::Index k = 0; k < original.grid.n; ++k) {
    out << format_double(original.grid.t(k));
    for (const Imf& imf : d.imfs) out << ',' << format_double(imf.signal.values[k]);
    out << ',' << format_double(d.residue.values[k]) << '\n';
  }
}

void write_spectrum_csv(const SpectrumReport& spec, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "freq_rad_per_time,power\n";
  for (Eigen::Index i = 0; i < spec.freqs.size(); ++i)
    out << format_double(spec.freqs[i]) << ',' << format_double(spec.power[i]) << '\n';
}

void write_extrema_csv(const ExtremaSet& e, const MidpointSet* midpoints,
                       const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "t,v,kind\n";
  struct Row {
    TimedValue p;
    const char* kind;
  };
  std::vector<Row> rows;
  for (const TimedValue& p : e.maxima) rows.push_back({p, "max"});
  for (const TimedValue& p : e.minima) rows.push_back({p, "min"});
  if (midpoints)
    for (const TimedValue& p : midpoints->points) rows.push_back({p, "mid"});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.p.t < b.p.t; });
  for (const Row& r : rows)
    out << format_double(r.p.t) << ',' << format_double(r.p.v) << ',' << r.kind << '\n';
}

void Metadata::add(const std::string& key, const std::string& value) {
  entries.emplace_back(key, value);
}

void Metadata::add(const std::string& key, double value) {
  entries.emplace_back(key, format_double(value));
}

void Metadata::add(const std::string& key, long value) {
  entries.emplace_back(key, std::to_string(value));
}

void Metadata::write(const std::filesystem::path& path) const {
  std::ofstream out = open_out(path);
  for (const auto& [key, value] : entries) out << key << '=' << value << '\n';
}

} // namespace emd
