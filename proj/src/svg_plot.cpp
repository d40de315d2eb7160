/*
 * Copyright 2026 The equivprobe contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "equivprobe/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "equivprobe/serialize.hpp"

namespace equivprobe {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;  // legend space
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

using Series = std::map<std::string, std::vector<std::pair<double, double>>>;

std::string render_chart(const Series& series, const std::string& title,
                         const std::string& x_label) {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool have = false;
  for (const auto& [key, pts] : series) {
    for (const auto& [x, y] : pts) {
      if (!have) {
        xmin = xmax = x;
        ymin = ymax = y;
        have = true;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](double y) {
    return kMarginTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(kWidth) + "\" height=\"" +
         fmt2(kHeight) + "\" viewBox=\"0 0 " + fmt2(kWidth) + " " + fmt2(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt2(kMarginLeft) + "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + title + "</text>\n";

  // axes
  svg += "<line x1=\"" + fmt2(kMarginLeft) + "\" y1=\"" + fmt2(kMarginTop) + "\" x2=\"" +
         fmt2(kMarginLeft) + "\" y2=\"" + fmt2(kMarginTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt2(kMarginLeft) + "\" y1=\"" + fmt2(kMarginTop + plot_h) + "\" x2=\"" +
         fmt2(kMarginLeft + plot_w) + "\" y2=\"" + fmt2(kMarginTop + plot_h) +
         "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    svg += "<text x=\"" + fmt2(px(fx)) + "\" y=\"" + fmt2(kMarginTop + plot_h + 18.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           fmt_tick(fx) + "</text>\n";
    svg += "<text x=\"" + fmt2(kMarginLeft - 6.0) + "\" y=\"" + fmt2(py(fy) + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + fmt_tick(fy) +
           "</text>\n";
    if (i > 0) {
      svg += "<line x1=\"" + fmt2(kMarginLeft) + "\" y1=\"" + fmt2(py(fy)) + "\" x2=\"" +
             fmt2(kMarginLeft + plot_w) + "\" y2=\"" + fmt2(py(fy)) +
             "\" stroke=\"#dddddd\"/>\n";
    }
  }
  svg += "<text x=\"" + fmt2(kMarginLeft + plot_w / 2.0) + "\" y=\"" + fmt2(kHeight - 12.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" + x_label +
         "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt2(kMarginTop + plot_h / 2.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 " + fmt2(kMarginTop + plot_h / 2.0) +
         ")\">residual (linf)</text>\n";

  if (series.empty()) {
    svg += "<text x=\"" + fmt2(kMarginLeft + plot_w / 2.0) + "\" y=\"" +
           fmt2(kMarginTop + plot_h / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">no data"
           "</text>\n";
  }

  std::size_t color = 0;
  double legend_y = kMarginTop + 10.0;
  for (const auto& [key, pts] : series) {
    auto sorted = pts;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const char* stroke = kPalette[color % std::size(kPalette)];
    std::string points;
    for (const auto& [x, y] : sorted) {
      points += fmt2(px(x)) + "," + fmt2(py(y)) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    for (const auto& [x, y] : sorted) {
      svg += "<circle cx=\"" + fmt2(px(x)) + "\" cy=\"" + fmt2(py(y)) +
             "\" r=\"2.5\" fill=\"" + stroke + "\"/>\n";
    }
    svg += "<text x=\"" + fmt2(kWidth - kMarginRight + 14.0) + "\" y=\"" + fmt2(legend_y) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" + stroke + "\">" + key +
           "</text>\n";
    legend_y += 16.0;
    ++color;
  }

  svg += "</svg>\n";
  return svg;
}

std::string series_suffix(const ResidualRecord& r) {
  return to_string(r.scheme) + "/" + to_string(r.boundary) + "/" + to_string(r.discretizer);
}

}  // namespace

std::string render_residual_vs_delta_svg(const std::vector<ResidualRecord>& records) {
  Series series;
  for (const auto& r : records) {
    if (r.skipped) continue;
    series["n=" + std::to_string(r.n) + " " + series_suffix(r)].push_back({r.delta, r.linf});
  }
  return render_chart(series, "equivariance residual vs translation", "delta (signal units)");
}

std::string render_residual_vs_n_svg(const std::vector<ResidualRecord>& records) {
  Series series;
  for (const auto& r : records) {
    if (r.skipped) continue;
    series["delta=" + format_double(r.delta) + " " + series_suffix(r)].push_back(
        {static_cast<double>(r.n), r.linf});
  }
  return render_chart(series, "equivariance residual vs grid size", "n (pixels)");
}

}  // namespace equivprobe
