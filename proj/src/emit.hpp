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

#pragma once

#include <string>

#include "butterfly.hpp"
#include "spectrum.hpp"
#include "tree.hpp"

namespace kohmoto {

/// Every emitter is a pure function of its inputs and produces byte-identical
/// output for identical inputs. `config` is an optional block of "key=value"
/// lines (one per line) echoed verbatim into the artifact for provenance;
/// pass an empty string to omit it.

/// Signed color scheme for gap indices: blue hues for positive indices, red
/// hues for negative ones, darker with growing magnitude, one overflow bucket
/// per sign beyond |8|. Total on all integers; index 0 (the unbounded gaps)
/// maps to the reserved value "none" and is never painted.
std::string palette_color(Int128 index);

std::string tree_json(const SpectralTree& tree, bool annotate, const std::string& config);

std::string spectrum_json(const Spectrum& spectrum, const std::string& config);

std::string dataset_json(const ButterflyDataset& dataset, const std::string& config);

/// CSV schema: p,q,kind(band|gap),ordinal,lo,hi,index. Bands leave the index
/// column empty; unbounded gap endpoints render as "inf"/"-inf". Rows follow
/// dataset order (q, then p); bands precede gaps within a row.
std::string dataset_csv(const ButterflyDataset& dataset, const std::string& config);

struct SvgOptions {
  enum class Mode { Gaps, Bands };
  Mode mode = Mode::Gaps;
  int width = 960;
  int height = 720;
  int margin = 56;
  int legend_width = 120;  // only used in Gaps mode
  double row_scale = 1.0;  // multiplier on the default 1/q row thickness
};

/// Standalone SVG 1.1 document. Per rational row at height alpha: band
/// segments in a neutral color (Bands mode) or bounded-gap segments filled by
/// the palette (Gaps mode). Row thickness is row_scale * plot_height /
/// (q_max * q), which keeps neighboring Farey rows from overlapping.
std::string dataset_svg(const ButterflyDataset& dataset, const SvgOptions& options,
                        const std::string& config);

std::string width_report_json(const GapWidthReport& report, const std::string& config);

}  // namespace kohmoto
