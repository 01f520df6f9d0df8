#include <glob.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "undergrad/errors.hpp"
#include "undergrad/harness.hpp"

namespace undergrad {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Series {
  std::string label;
  std::vector<double> t;
  std::vector<double> gap;
};

std::vector<std::string> expand(const std::string& pattern) {
  glob_t g{};
  const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
  std::vector<std::string> out;
  if (rc == 0) {
    for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  }
  globfree(&g);
  if (out.empty()) throw ConfigError("no files match '" + pattern + "'");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Series> load(const std::string& path, std::string& experiment) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open summary '" + path + "'");
  json doc;
  try {
    in >> doc;
    experiment = doc.at("experiment").get<std::string>();
    std::vector<Series> out;
    for (const auto& s : doc.at("series")) {
      Series series{s.at("label").get<std::string>(), {}, {}};
      for (const auto& t : s.at("t")) series.t.push_back(t.get<double>());
      for (const auto& g : s.at("mean_gap")) {
        series.gap.push_back(g.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                         : g.get<double>());
      }
      if (series.gap.empty() || series.gap.size() != series.t.size()) {
        throw ConfigError("summary '" + path + "' has an empty or ragged gap column for '" +
                          series.label + "'");
      }
      out.push_back(std::move(series));
    }
    if (out.empty()) throw ConfigError("summary '" + path + "' holds no series");
    return out;
  } catch (const json::exception& e) {
    throw ConfigError("summary '" + path + "' is malformed: " + e.what());
  }
}

void write_series(const fs::path& path, const std::vector<Series>& series) {
  std::ofstream out(path, std::ios::trunc);
  out << "# t";
  for (const auto& s : series) out << ' ' << s.label;
  out << '\n';
  // grids are shared within an experiment, but tolerate ragged inputs
  const Series& ref = *std::max_element(
      series.begin(), series.end(),
      [](const Series& a, const Series& b) { return a.t.size() < b.t.size(); });
  for (std::size_t i = 0; i < ref.t.size(); ++i) {
    out << format_double(ref.t[i]);
    for (const auto& s : series) out << ' ' << (i < s.gap.size() ? format_double(s.gap[i]) : "nan");
    out << '\n';
  }
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

void write_svg(const fs::path& path, const std::string& title, const std::vector<Series>& series) {
  constexpr double kW = 720, kH = 480, kLeft = 80, kRight = 180, kTop = 40, kBottom = 60;
  double tmin = INFINITY, tmax = -INFINITY, gmin = INFINITY, gmax = -INFINITY;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      if (!(s.gap[i] > 0.0) || !(s.t[i] > 0.0)) continue;
      tmin = std::min(tmin, s.t[i]);
      tmax = std::max(tmax, s.t[i]);
      gmin = std::min(gmin, s.gap[i]);
      gmax = std::max(gmax, s.gap[i]);
    }
  }
  if (!std::isfinite(tmin) || !std::isfinite(gmin)) {
    throw InvalidInput("no positive gaps to plot in '" + title + "'");
  }
  const double lx0 = std::floor(std::log10(tmin)), lx1 = std::max(lx0 + 1, std::ceil(std::log10(tmax)));
  const double ly0 = std::floor(std::log10(gmin)), ly1 = std::max(ly0 + 1, std::ceil(std::log10(gmax)));
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  auto px = [&](double t) { return kLeft + (std::log10(t) - lx0) / (lx1 - lx0) * pw; };
  auto py = [&](double g) { return kTop + (ly1 - std::log10(g)) / (ly1 - ly0) * ph; };

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  FILE* f = std::fopen(path.c_str(), "w");
  if (f == nullptr) throw ConfigError("cannot write '" + path.string() + "'");
  std::fprintf(f,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
               "font-family=\"sans-serif\" font-size=\"12\">\n",
               kW, kH);
  std::fprintf(f, "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n");
  std::fprintf(f, "<text x=\"%g\" y=\"22\" font-size=\"15\">%s</text>\n", kLeft, title.c_str());
  std::fprintf(f, "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" stroke=\"black\"/>\n",
               kLeft, kTop, pw, ph);
  for (double e = lx0; e <= lx1; e += 1) {
    const double x = px(std::pow(10.0, e));
    std::fprintf(f, "<line x1=\"%.2f\" y1=\"%g\" x2=\"%.2f\" y2=\"%g\" stroke=\"#ddd\"/>\n", x, kTop,
                 x, kTop + ph);
    std::fprintf(f, "<text x=\"%.2f\" y=\"%g\" text-anchor=\"middle\">1e%g</text>\n", x,
                 kTop + ph + 18, e);
  }
  for (double e = ly0; e <= ly1; e += 1) {
    const double y = py(std::pow(10.0, e));
    std::fprintf(f, "<line x1=\"%g\" y1=\"%.2f\" x2=\"%g\" y2=\"%.2f\" stroke=\"#ddd\"/>\n", kLeft, y,
                 kLeft + pw, y);
    std::fprintf(f, "<text x=\"%g\" y=\"%.2f\" text-anchor=\"end\">1e%g</text>\n", kLeft - 6, y + 4, e);
  }
  std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">T</text>\n", kLeft + pw / 2,
               kH - 15);
  std::fprintf(f,
               "<text x=\"18\" y=\"%g\" text-anchor=\"middle\" transform=\"rotate(-90 18 %g)\">"
               "gap &#916;(T)</text>\n",
               kTop + ph / 2, kTop + ph / 2);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kColors[k % 8];
    std::fprintf(f, "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" points=\"", color);
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      if (s.gap[i] > 0.0 && s.t[i] > 0.0) std::fprintf(f, "%.2f,%.2f ", px(s.t[i]), py(s.gap[i]));
    }
    std::fprintf(f, "\"/>\n");
    const double ly = kTop + 14 + 18 * static_cast<double>(k);
    std::fprintf(f, "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" stroke-width=\"2\"/>\n",
                 kLeft + pw + 12, ly - 4, kLeft + pw + 32, ly - 4, color);
    std::fprintf(f, "<text x=\"%g\" y=\"%g\">%s</text>\n", kLeft + pw + 38, ly, s.label.c_str());
  }
  std::fprintf(f, "</svg>\n");
  const bool ok = std::fclose(f) == 0;
  if (!ok) throw ConfigError("failed writing '" + path.string() + "'");
}

}  // namespace

std::vector<std::string> plot(const std::string& pattern, const std::string& out_dir) {
  const std::vector<std::string> inputs = expand(pattern);
  fs::create_directories(out_dir);
  std::vector<std::string> written;
  for (const auto& input : inputs) {
    std::string experiment;
    const std::vector<Series> series = load(input, experiment);
    const fs::path dat = fs::path(out_dir) / (experiment + ".dat");
    const fs::path svg = fs::path(out_dir) / (experiment + ".svg");
    write_series(dat, series);
    write_svg(svg, experiment, series);
    written.push_back(dat.string());
    written.push_back(svg.string());
  }
  return written;
}

}  // namespace undergrad
