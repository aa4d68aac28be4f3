#pragma once

#include "georamsey/coloring.hpp"
#include "georamsey/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace georamsey {

inline constexpr long double kLogCompressThreshold = 1e6L;

struct SvgOptions {
  double size = 800.0;
  double margin = 40.0;
};

/// y-range divided by the smallest positive gap between y values; 1 for flat sets.
inline long double y_spread_ratio(std::span<const ExactPoint> pts) {
  std::vector<Integer> ys;
  for (const auto& p : pts) {
    ys.push_back(p.y);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.size() < 2) {
    return 1.0L;
  }
  Integer gap = ys[1] - ys[0];
  for (std::size_t i = 2; i < ys.size(); ++i) {
    gap = std::min(gap, Integer(ys[i] - ys[i - 1]));
  }
  return (ys.back() - ys.front()).convert_to<long double>() / gap.convert_to<long double>();
}

namespace detail {

inline const char* palette(std::size_t c) {
  static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[c % (sizeof(colors) / sizeof(colors[0]))];
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

/// Deterministic SVG of a point set: pair edges colored by class, highlighted
/// vertices enlarged and joined by their hull. Coordinates are mapped affinely
/// into the view box, with log-compressed y when the y spread exceeds 10^6.
inline std::string render_svg(std::span<const ExactPoint> pts, const EdgeColoring* coloring = nullptr,
                              std::span<const std::size_t> highlight = {}, const SvgOptions& options = {}) {
  if (coloring && coloring->arity() != 2) {
    throw BadInput("only colorings of pairs can be drawn as edges");
  }
  if (coloring && coloring->vertex_count() != pts.size()) {
    throw BadInput("coloring and point set sizes differ");
  }
  for (std::size_t h : highlight) {
    if (h >= pts.size()) {
      throw BadInput("highlight vertex " + std::to_string(h) + " out of range");
    }
  }

  const long double ratio = pts.empty() ? 1.0L : y_spread_ratio(pts);
  const bool log_y = ratio > kLogCompressThreshold;
  Integer xmin, xmax, ymin, ymax;
  if (!pts.empty()) {
    xmin = xmax = pts[0].x;
    ymin = ymax = pts[0].y;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const long double xr = std::max<long double>(1.0L, (xmax - xmin).convert_to<long double>());
  const long double yr_raw = std::max<long double>(1.0L, (ymax - ymin).convert_to<long double>());
  const long double yr = log_y ? std::log1p(yr_raw) : yr_raw;
  const double inner = options.size - 2 * options.margin;

  std::vector<std::pair<double, double>> at;
  for (const auto& p : pts) {
    const long double fx = (p.x - xmin).convert_to<long double>() / xr;
    long double fy = (p.y - ymin).convert_to<long double>();
    fy = (log_y ? std::log1p(fy) : fy) / yr;
    at.emplace_back(options.margin + inner * static_cast<double>(fx),
                    options.size - options.margin - inner * static_cast<double>(fy));
  }

  std::string s;
  const std::string sz = detail::fmt(options.size);
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + sz + "\" height=\"" + sz + "\" viewBox=\"0 0 " + sz +
       " " + sz + "\">\n";
  s += "<title>" + std::to_string(pts.size()) + " points";
  if (log_y) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3Le", ratio);
    s += std::string("; log-compressed y (spread ratio ") + buf + ")";
  }
  s += "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (coloring) {
    s += "<g stroke-width=\"0.6\" stroke-opacity=\"0.55\">\n";
    for (std::size_t u = 0; u < pts.size(); ++u) {
      for (std::size_t v = u + 1; v < pts.size(); ++v) {
        s += "<line x1=\"" + detail::fmt(at[u].first) + "\" y1=\"" + detail::fmt(at[u].second) + "\" x2=\"" +
             detail::fmt(at[v].first) + "\" y2=\"" + detail::fmt(at[v].second) + "\" stroke=\"" +
             detail::palette(coloring->color({u, v})) + "\"/>\n";
      }
    }
    s += "</g>\n";
  }

  std::vector<std::size_t> marked(highlight.begin(), highlight.end());
  std::sort(marked.begin(), marked.end());
  if (marked.size() >= 3) {
    const auto sub = [&] {
      std::vector<ExactPoint> out;
      for (std::size_t h : marked) {
        out.push_back(pts[h]);
      }
      return out;
    }();
    s += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (std::size_t k : convex_hull_indices(sub)) {
      s += (first ? "" : " ") + detail::fmt(at[marked[k]].first) + "," + detail::fmt(at[marked[k]].second);
      first = false;
    }
    s += "\"/>\n";
  }

  s += "<g fill=\"black\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool hi = std::binary_search(marked.begin(), marked.end(), i);
    s += "<circle cx=\"" + detail::fmt(at[i].first) + "\" cy=\"" + detail::fmt(at[i].second) + "\" r=\"" +
         (hi ? "6" : "3.5") + "\"" + (hi ? " fill=\"#ffbf00\" stroke=\"black\"" : "") + "/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace georamsey
