/*
 * This file is part of the kohmoto spectral toolkit.
 *
 * Copyright 2026 the kohmoto authors
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

#include "emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace kohmoto {

namespace {

using ordered_json = nlohmann::ordered_json;

// Darker with growing magnitude; one overflow bucket per sign.
constexpr const char* kPositiveRamp[8] = {"#6baed6", "#4292c6", "#2171b5", "#08519c",
                                          "#083d7f", "#08306b", "#062252", "#04173d"};
constexpr const char* kNegativeRamp[8] = {"#fb6a4a", "#ef3b2c", "#cb181d", "#a50f15",
                                          "#7f0310", "#67000d", "#4d000a", "#330007"};
constexpr const char* kPositiveOverflow = "#020c29";
constexpr const char* kNegativeOverflow = "#1c0004";

ordered_json json_int(const Int128& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.str();  // beyond 64-bit JSON integers; emit digits as a string
}

ordered_json json_energy(double e) {
  if (std::isinf(e)) return e > 0 ? "inf" : "-inf";
  return e;
}

std::string csv_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return nlohmann::json(x).dump();  // shortest round-trip form
}

ordered_json config_object(const std::string& config) {
  ordered_json obj = ordered_json::object();
  std::istringstream lines(config);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      obj[line] = "";
    } else {
      obj[line.substr(0, eq)] = line.substr(eq + 1);
    }
  }
  return obj;
}

void attach_config(ordered_json& doc, const std::string& config) {
  if (!config.empty()) doc["config"] = config_object(config);
}

ordered_json spectrum_object(const Spectrum& spectrum) {
  ordered_json doc;
  doc["p"] = json_int(spectrum.alpha().num());
  doc["q"] = json_int(spectrum.alpha().den());
  doc["lambda"] = spectrum.potential.lambda;
  doc["bands"] = ordered_json::array();
  for (const BandInterval& band : spectrum.bands) {
    doc["bands"].push_back({band.lo, band.hi});
  }
  doc["gaps"] = ordered_json::array();
  for (const GapInterval& gap : spectrum.gaps) {
    ordered_json g;
    g["n"] = gap.number;
    g["lo"] = json_energy(gap.lo);
    g["hi"] = json_energy(gap.hi);
    g["index"] = json_int(gap.index);
    g["degenerate"] = gap.degenerate;
    doc["gaps"].push_back(g);
  }
  doc["edge_residual"] = spectrum.max_edge_residual;
  return doc;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string palette_color(Int128 index) {
  if (index.is_zero()) return "none";
  const bool negative = index.is_negative();
  // |index| clamped into the ramp; anything beyond falls into the overflow
  // bucket, so the function is total on all integers.
  Int128 magnitude = negative ? -index : index;
  if (magnitude > Int128(8)) return negative ? kNegativeOverflow : kPositiveOverflow;
  const std::int64_t m = magnitude.to_int64();
  return negative ? kNegativeRamp[m - 1] : kPositiveRamp[m - 1];
}

std::string tree_json(const SpectralTree& tree, bool annotate, const std::string& config) {
  ordered_json doc;
  attach_config(doc, config);
  doc["digits"] = tree.digits().digits;
  doc["depth"] = tree.depth();
  doc["convergents"] = ordered_json::array();
  for (int k = 0; k <= tree.depth(); ++k) {
    const Convergent& c = tree.convergent(k);
    doc["convergents"].push_back({{"level", k}, {"p", json_int(c.p)}, {"q", json_int(c.q)}});
  }
  doc["levels"] = ordered_json::array();
  for (int k = 0; k <= tree.depth(); ++k) {
    const TreeLevel& lvl = tree.level(k);
    ordered_json level;
    level["level"] = k;
    level["labels"] = lvl.labels;
    level["parents"] = lvl.parent;
    if (annotate) {
      ordered_json gaps = ordered_json::array();
      for (std::int64_t v = 0; v < lvl.size(); ++v) {
        if (lvl.labels[static_cast<std::size_t>(v)] != 'G') continue;
        const GapIndex idx = gap_index(tree, k, v);
        gaps.push_back({{"position", v},
                        {"n", idx.gap_number},
                        {"raw", json_int(idx.raw)},
                        {"index", json_int(idx.value)}});
      }
      level["gaps"] = gaps;
    }
    doc["levels"].push_back(level);
  }
  return doc.dump(2) + "\n";
}

std::string spectrum_json(const Spectrum& spectrum, const std::string& config) {
  ordered_json doc = spectrum_object(spectrum);
  if (!config.empty()) {
    ordered_json with_config;
    attach_config(with_config, config);
    for (auto& [key, value] : doc.items()) with_config[key] = value;
    doc = std::move(with_config);
  }
  return doc.dump(2) + "\n";
}

std::string dataset_json(const ButterflyDataset& dataset, const std::string& config) {
  ordered_json doc;
  attach_config(doc, config);
  doc["lambda"] = dataset.lambda;
  doc["q_max"] = dataset.q_max;
  doc["rows"] = ordered_json::array();
  for (const ButterflyRow& row : dataset.rows) {
    if (row.failed) {
      doc["rows"].push_back({{"p", json_int(row.alpha.num())},
                             {"q", json_int(row.alpha.den())},
                             {"failed", true},
                             {"error", row.error}});
    } else {
      doc["rows"].push_back(spectrum_object(row.spectrum));
    }
  }
  return doc.dump(2) + "\n";
}

std::string dataset_csv(const ButterflyDataset& dataset, const std::string& config) {
  std::string out;
  if (!config.empty()) {
    std::istringstream lines(config);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty()) out += "# " + line + "\n";
    }
  }
  out += "p,q,kind,ordinal,lo,hi,index\n";
  for (const ButterflyRow& row : dataset.rows) {
    if (row.failed) continue;
    const std::string p = row.alpha.num().str();
    const std::string q = row.alpha.den().str();
    for (const BandInterval& band : row.spectrum.bands) {
      out += p + "," + q + ",band," + std::to_string(band.ordinal) + "," +
             csv_number(band.lo) + "," + csv_number(band.hi) + ",\n";
    }
    for (const GapInterval& gap : row.spectrum.gaps) {
      out += p + "," + q + ",gap," + std::to_string(gap.number) + "," + csv_number(gap.lo) +
             "," + csv_number(gap.hi) + "," + gap.index.str() + "\n";
    }
  }
  return out;
}

std::string dataset_svg(const ButterflyDataset& dataset, const SvgOptions& options,
                        const std::string& config) {
  if (dataset.rows.empty()) throw InvalidArgument("cannot render an empty dataset");
  const bool gaps_mode = options.mode == SvgOptions::Mode::Gaps;

  double e_min = 0.0, e_max = 0.0;
  bool first = true;
  for (const ButterflyRow& row : dataset.rows) {
    if (row.failed) continue;
    for (const BandInterval& band : row.spectrum.bands) {
      e_min = first ? band.lo : std::min(e_min, band.lo);
      e_max = first ? band.hi : std::max(e_max, band.hi);
      first = false;
    }
  }
  if (first) throw InvalidArgument("dataset contains no computed rows");
  const double pad = 0.02 * (e_max - e_min);
  e_min -= pad;
  e_max += pad;

  const double legend_gutter = gaps_mode ? options.legend_width : 0;
  const double plot_w = options.width - 2.0 * options.margin - legend_gutter;
  const double plot_h = options.height - 2.0 * options.margin;
  const double x0 = options.margin;
  const double y0 = options.margin;
  const auto x_of = [&](double e) { return x0 + (e - e_min) / (e_max - e_min) * plot_w; };
  const auto y_of = [&](double alpha) { return y0 + (1.0 - alpha) * plot_h; };
  const auto thickness = [&](double q) {
    return std::max(0.3, options.row_scale * plot_h / (static_cast<double>(dataset.q_max) * q));
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(options.width) + "\" height=\"" + std::to_string(options.height) +
         "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
         std::to_string(options.height) + "\">\n";
  if (!config.empty()) {
    svg += "  <metadata id=\"config\">" + xml_escape(config) + "</metadata>\n";
  }
  svg += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" fill=\"#ffffff\"/>\n";

  // Data rows in dataset order (q, then p); segments in spectral order.
  svg += "  <g id=\"rows\">\n";
  for (const ButterflyRow& row : dataset.rows) {
    if (row.failed) continue;
    const double alpha = row.alpha.to_double();
    const double q = row.alpha.den().to_double();
    const double t = thickness(q);
    const double y = y_of(alpha) - t / 2.0;
    if (gaps_mode) {
      for (const GapInterval& gap : row.spectrum.gaps) {
        if (gap.number == 0 || gap.number == row.spectrum.period()) continue;
        if (gap.degenerate) continue;
        const std::string color = palette_color(gap.index);
        svg += "    <rect x=\"" + fmt(x_of(gap.lo)) + "\" y=\"" + fmt(y) + "\" width=\"" +
               fmt(x_of(gap.hi) - x_of(gap.lo)) + "\" height=\"" + fmt(t) + "\" fill=\"" +
               color + "\" data-index=\"" + gap.index.str() + "\"/>\n";
      }
    } else {
      for (const BandInterval& band : row.spectrum.bands) {
        svg += "    <rect x=\"" + fmt(x_of(band.lo)) + "\" y=\"" + fmt(y) + "\" width=\"" +
               fmt(x_of(band.hi) - x_of(band.lo)) + "\" height=\"" + fmt(t) +
               "\" fill=\"#333333\"/>\n";
      }
    }
  }
  svg += "  </g>\n";

  // Frame and axes.
  svg += "  <rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(plot_w) +
         "\" height=\"" + fmt(plot_h) + "\" fill=\"none\" stroke=\"#222222\"/>\n";
  for (double e = std::ceil(e_min); e <= std::floor(e_max); e += 1.0) {
    svg += "  <line x1=\"" + fmt(x_of(e)) + "\" y1=\"" + fmt(y0 + plot_h) + "\" x2=\"" +
           fmt(x_of(e)) + "\" y2=\"" + fmt(y0 + plot_h + 5) + "\" stroke=\"#222222\"/>\n";
    svg += "  <text x=\"" + fmt(x_of(e)) + "\" y=\"" + fmt(y0 + plot_h + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           fmt(e).substr(0, fmt(e).find('.')) + "</text>\n";
  }
  for (double a : {0.0, 0.5, 1.0}) {
    svg += "  <line x1=\"" + fmt(x0 - 5) + "\" y1=\"" + fmt(y_of(a)) + "\" x2=\"" + fmt(x0) +
           "\" y2=\"" + fmt(y_of(a)) + "\" stroke=\"#222222\"/>\n";
    svg += "  <text x=\"" + fmt(x0 - 8) + "\" y=\"" + fmt(y_of(a) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
           (a == 0.5 ? std::string("1/2") : std::to_string(static_cast<int>(a))) + "</text>\n";
  }
  svg += "  <text x=\"" + fmt(x0 + plot_w / 2) + "\" y=\"" + fmt(y0 + plot_h + 34) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">E</text>\n";
  svg += "  <text x=\"" + fmt(x0 - 34) + "\" y=\"" + fmt(y0 + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">&#945;</text>\n";

  if (gaps_mode) {
    // Legend: every index present in the dataset, ascending.
    std::set<std::int64_t> indices;
    for (const ButterflyRow& row : dataset.rows) {
      if (row.failed) continue;
      for (const GapInterval& gap : row.spectrum.gaps) {
        if (gap.number == 0 || gap.number == row.spectrum.period()) continue;
        indices.insert(gap.index.to_int64());
      }
    }
    const double lx = x0 + plot_w + 16;
    svg += "  <g id=\"legend\">\n";
    svg += "    <text x=\"" + fmt(lx) + "\" y=\"" + fmt(y0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">index</text>\n";
    // Wrap into columns so a large index range stays on the canvas.
    const std::int64_t per_column = std::max<std::int64_t>(1, static_cast<std::int64_t>(plot_h / 16) - 1);
    std::int64_t slot = 0;
    for (std::int64_t index : indices) {
      const double ex = lx + static_cast<double>(slot / per_column) * 52;
      const double ey = y0 + 8 + static_cast<double>(slot % per_column) * 16;
      svg += "    <rect x=\"" + fmt(ex) + "\" y=\"" + fmt(ey) +
             "\" width=\"12\" height=\"12\" fill=\"" + palette_color(Int128(index)) +
             "\" data-index=\"" + std::to_string(index) + "\"/>\n";
      svg += "    <text x=\"" + fmt(ex + 18) + "\" y=\"" + fmt(ey + 10) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + std::to_string(index) +
             "</text>\n";
      ++slot;
    }
    svg += "  </g>\n";
  }

  svg += "</svg>\n";
  return svg;
}

std::string width_report_json(const GapWidthReport& report, const std::string& config) {
  ordered_json doc;
  attach_config(doc, config);
  doc["classes"] = ordered_json::array();
  for (const auto& cls : report.classes) {
    doc["classes"].push_back({{"abs_index", cls.abs_index},
                              {"count", cls.count},
                              {"mean_width", cls.mean_width},
                              {"min_width", cls.min_width},
                              {"max_width", cls.max_width}});
  }
  doc["signed_pairs"] = ordered_json::array();
  for (const auto& pair : report.pairs) {
    doc["signed_pairs"].push_back({{"p", json_int(pair.alpha.num())},
                                   {"q", json_int(pair.alpha.den())},
                                   {"abs_index", pair.abs_index},
                                   {"width_negative", pair.width_negative},
                                   {"width_positive", pair.width_positive},
                                   {"negative_wider", pair.width_negative > pair.width_positive}});
  }
  doc["pairs_total"] = static_cast<std::int64_t>(report.pairs.size());
  doc["pairs_negative_wider"] = report.pairs_negative_wider;
  return doc.dump(2) + "\n";
}

}  // namespace kohmoto
