/*
 * Copyright (C) 2026 The angvel authors
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
#include "angvel/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "angvel/error.hpp"

namespace angvel {

namespace {

constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// Fixed-point with two decimals for pixel coordinates.
std::string px(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

// Six significant digits for axis labels.
std::string label(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
  return std::string(buf.data(), res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Table& table, std::span<const std::string> columns, const SvgOptions& opts) {
  if (columns.empty()) throw DomainError("render_svg: no columns requested");
  const std::vector<double> xs = table.column(opts.x_column);
  std::vector<std::vector<double>> ys;
  for (const auto& c : columns) ys.push_back(table.column(c));

  const auto usable = [&](double v) { return std::isfinite(v) && (!opts.log_y || v > 0.0); };
  const auto ymap = [&](double v) { return opts.log_y ? std::log10(v) : v; };

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) continue;
    xmin = std::min(xmin, xs[i]);
    xmax = std::max(xmax, xs[i]);
    for (const auto& y : ys) {
      if (!usable(y[i])) continue;
      ymin = std::min(ymin, ymap(y[i]));
      ymax = std::max(ymax, ymap(y[i]));
    }
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0;
  if (!std::isfinite(ymin)) ymin = 0.0, ymax = 1.0;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    const double pad = std::max(0.5 * std::abs(ymin), 0.5);
    ymin -= pad;
    ymax += pad;
  }

  const double W = opts.width, H = opts.height;
  const double left = 80.0, right = 150.0, top = 20.0, bottom = 50.0;
  const double pw = W - left - right, ph = H - top - bottom;
  const auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  const auto sy = [&](double y) { return top + (ymax - ymap(y)) / (ymax - ymin) * ph; };
  const auto ylabel = [&](double v) { return opts.log_y ? "1e" + label(v) : label(v); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(W) + "\" height=\"" + px(H) +
         "\" viewBox=\"0 0 " + px(W) + " " + px(H) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + px(W) + "\" height=\"" + px(H) + "\" fill=\"white\"/>\n";

  // Axes box and min/max labels.
  out += "<rect x=\"" + px(left) + "\" y=\"" + px(top) + "\" width=\"" + px(pw) + "\" height=\"" + px(ph) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  out += "<text x=\"" + px(left) + "\" y=\"" + px(top + ph + 18) + "\" text-anchor=\"start\">" + label(xmin) + "</text>\n";
  out += "<text x=\"" + px(left + pw) + "\" y=\"" + px(top + ph + 18) + "\" text-anchor=\"end\">" + label(xmax) +
         "</text>\n";
  out += "<text x=\"" + px(left + 0.5 * pw) + "\" y=\"" + px(top + ph + 38) + "\" text-anchor=\"middle\">" +
         escape(opts.x_column) + "</text>\n";
  out += "<text x=\"" + px(left - 6) + "\" y=\"" + px(top + ph) + "\" text-anchor=\"end\">" + ylabel(ymin) + "</text>\n";
  out += "<text x=\"" + px(left - 6) + "\" y=\"" + px(top + 12) + "\" text-anchor=\"end\">" + ylabel(ymax) + "</text>\n";
  out += "</g>\n";

  for (std::size_t c = 0; c < ys.size(); ++c) {
    out += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[c % kPalette.size()]) +
           "\" stroke-width=\"1.5\" points=\"";
    std::string last;
    bool first = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(xs[i]) || !usable(ys[c][i])) continue;
      std::string pt = px(sx(xs[i])) + "," + px(sy(ys[c][i]));
      if (pt == last) continue;  // same pixel as the previous point
      if (!first) out += ' ';
      out += pt;
      last = std::move(pt);
      first = false;
    }
    out += "\"/>\n";
  }

  // Legend.
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const double y = top + 14.0 + 18.0 * static_cast<double>(c);
    const double x = left + pw + 12.0;
    const std::string color = kPalette[c % kPalette.size()];
    out += "<line x1=\"" + px(x) + "\" y1=\"" + px(y - 4) + "\" x2=\"" + px(x + 20) + "\" y2=\"" + px(y - 4) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + px(x + 26) + "\" y=\"" + px(y) + "\">" + escape(columns[c]) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace angvel
