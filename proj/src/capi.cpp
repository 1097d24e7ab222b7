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

#include "kohmoto/kohmoto.h"

#include <cstring>
#include <string>

#include "butterfly.hpp"
#include "emit.hpp"
#include "errors.hpp"
#include "indexing.hpp"
#include "spectrum.hpp"
#include "tree.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error = "no error";

kohmoto_status set_error(kohmoto_status status, const char* message) {
  g_last_error = message;
  return status;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(::operator new(text.size() + 1, std::nothrow));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

kohmoto_status export_string(const std::string& text, char** out) {
  *out = copy_string(text);
  if (*out == nullptr) return set_error(KOHMOTO_ERROR_INTERNAL, "out of memory");
  return KOHMOTO_OK;
}

// Runs the body, translating C++ exceptions into status codes.
template <typename Fn>
kohmoto_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const kohmoto::InvalidArgument& e) {
    return set_error(KOHMOTO_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const kohmoto::OverflowError& e) {
    return set_error(KOHMOTO_ERROR_OVERFLOW, e.what());
  } catch (const kohmoto::ComputeError& e) {
    return set_error(KOHMOTO_ERROR_COMPUTE, e.what());
  } catch (const std::exception& e) {
    return set_error(KOHMOTO_ERROR_INTERNAL, e.what());
  } catch (...) {
    return set_error(KOHMOTO_ERROR_INTERNAL, "unknown error");
  }
}

kohmoto_status require(bool ok, const char* message) {
  if (!ok) throw kohmoto::InvalidArgument(message);
  return KOHMOTO_OK;
}

kohmoto::ContinuedFraction parse_digits_arg(const char* digits, int depth) {
  require(digits != nullptr, "digits must not be NULL");
  if (std::strcmp(digits, "1s") == 0) {
    return kohmoto::ContinuedFraction::ones(depth < 0 ? 0 : depth);
  }
  return kohmoto::ContinuedFraction::parse(digits);
}

std::string config_text(const char* config) { return config == nullptr ? "" : config; }

}  // namespace

struct kohmoto_tree {
  kohmoto::SpectralTree tree;
};

struct kohmoto_spectrum {
  kohmoto::Spectrum spectrum;
};

struct kohmoto_dataset {
  kohmoto::ButterflyDataset dataset;
};

extern "C" {

const char* kohmoto_last_error(void) { return g_last_error.c_str(); }

void kohmoto_string_free(char* s) { ::operator delete(s); }

kohmoto_status kohmoto_cf_expand(const char* rational, char** digits_out) {
  return guarded([&] {
    require(rational != nullptr && digits_out != nullptr, "NULL argument");
    const auto cf = kohmoto::cf_expand(kohmoto::Rational::parse(rational));
    return export_string(cf.str(), digits_out);
  });
}

kohmoto_status kohmoto_convergent(const char* digits, int32_t level, int64_t* p_out,
                                  int64_t* q_out) {
  return guarded([&] {
    require(p_out != nullptr && q_out != nullptr, "NULL argument");
    const auto cf = parse_digits_arg(digits, level);
    const auto convs = kohmoto::convergents(cf, level);
    *p_out = convs.back().p.to_int64();
    *q_out = convs.back().q.to_int64();
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_centered_mod(int64_t x, int64_t q, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "NULL argument");
    *out = kohmoto::centered_mod(kohmoto::Int128(x), kohmoto::Int128(q)).to_int64();
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_solve_diophantine(int64_t n, int64_t p, int64_t q, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "NULL argument");
    *out = kohmoto::solve_diophantine(kohmoto::Int128(n), kohmoto::Int128(p),
                                      kohmoto::Int128(q))
               .to_int64();
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_tree_build(const char* digits, int32_t depth, kohmoto_tree** out) {
  return guarded([&] {
    require(out != nullptr, "NULL argument");
    auto cf = parse_digits_arg(digits, depth);
    *out = new kohmoto_tree{kohmoto::SpectralTree::build(cf, depth)};
    return KOHMOTO_OK;
  });
}

void kohmoto_tree_free(kohmoto_tree* tree) { delete tree; }

int32_t kohmoto_tree_depth(const kohmoto_tree* tree) {
  return tree == nullptr ? -1 : tree->tree.depth();
}

kohmoto_status kohmoto_tree_level_size(const kohmoto_tree* tree, int32_t level,
                                       int64_t* size_out) {
  return guarded([&] {
    require(tree != nullptr && size_out != nullptr, "NULL argument");
    *size_out = tree->tree.level(level).size();
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_tree_label(const kohmoto_tree* tree, int32_t level, int64_t position,
                                  char* label_out) {
  return guarded([&] {
    require(tree != nullptr && label_out != nullptr, "NULL argument");
    *label_out = static_cast<char>(tree->tree.label(level, position));
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_tree_gap_index(const kohmoto_tree* tree, int32_t level,
                                      int64_t position, int64_t* raw_out, int64_t* value_out) {
  return guarded([&] {
    require(tree != nullptr && raw_out != nullptr && value_out != nullptr, "NULL argument");
    const auto idx = kohmoto::gap_index(tree->tree, level, position);
    *raw_out = idx.raw.to_int64();
    *value_out = idx.value.to_int64();
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_tree_to_json(const kohmoto_tree* tree, int32_t annotate,
                                    const char* config, char** json_out) {
  return guarded([&] {
    require(tree != nullptr && json_out != nullptr, "NULL argument");
    return export_string(kohmoto::tree_json(tree->tree, annotate != 0, config_text(config)),
                         json_out);
  });
}

kohmoto_status kohmoto_spectrum_compute(const char* alpha, double lambda,
                                        kohmoto_spectrum** out) {
  return guarded([&] {
    require(alpha != nullptr && out != nullptr, "NULL argument");
    const auto frequency = kohmoto::Rational::parse(alpha);
    require(!frequency.num().is_zero() && frequency.num() != frequency.den(),
            "frequency must lie strictly between 0 and 1");
    *out = new kohmoto_spectrum{
        kohmoto::compute_spectrum(kohmoto::potential_sequence(frequency, lambda))};
    return KOHMOTO_OK;
  });
}

void kohmoto_spectrum_free(kohmoto_spectrum* spectrum) { delete spectrum; }

int64_t kohmoto_spectrum_band_count(const kohmoto_spectrum* spectrum) {
  return spectrum == nullptr ? -1 : static_cast<int64_t>(spectrum->spectrum.bands.size());
}

kohmoto_status kohmoto_spectrum_band(const kohmoto_spectrum* spectrum, int64_t ordinal,
                                     double* lo_out, double* hi_out) {
  return guarded([&] {
    require(spectrum != nullptr && lo_out != nullptr && hi_out != nullptr, "NULL argument");
    require(ordinal >= 1 && ordinal <= spectrum->spectrum.period(), "band ordinal out of range");
    const auto& band = spectrum->spectrum.bands[static_cast<std::size_t>(ordinal - 1)];
    *lo_out = band.lo;
    *hi_out = band.hi;
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_spectrum_gap(const kohmoto_spectrum* spectrum, int64_t number,
                                    double* lo_out, double* hi_out, int64_t* index_out) {
  return guarded([&] {
    require(spectrum != nullptr && lo_out != nullptr && hi_out != nullptr &&
                index_out != nullptr,
            "NULL argument");
    require(number >= 0 && number <= spectrum->spectrum.period(), "gap number out of range");
    const auto& gap = spectrum->spectrum.gaps[static_cast<std::size_t>(number)];
    *lo_out = gap.lo;
    *hi_out = gap.hi;
    *index_out = gap.index.to_int64();
    return KOHMOTO_OK;
  });
}

kohmoto_status kohmoto_spectrum_to_json(const kohmoto_spectrum* spectrum, const char* config,
                                        char** json_out) {
  return guarded([&] {
    require(spectrum != nullptr && json_out != nullptr, "NULL argument");
    return export_string(kohmoto::spectrum_json(spectrum->spectrum, config_text(config)),
                         json_out);
  });
}

kohmoto_status kohmoto_verify(const kohmoto_verify_options* options, char** report_out,
                              int64_t* checks_out, int64_t* failures_out) {
  return guarded([&] {
    require(options != nullptr && report_out != nullptr && failures_out != nullptr,
            "NULL argument");
    kohmoto::VerifyOptions opts;
    opts.suite = options->suite == nullptr ? "all" : options->suite;
    if (options->digits != nullptr) {
      opts.digits = parse_digits_arg(options->digits, options->depth);
    }
    opts.depth = options->depth;
    opts.fuzz = options->fuzz;
    opts.max_digit = options->max_digit;
    opts.seed = options->seed;
    opts.lambda = options->lambda;
    opts.tolerance = options->tolerance > 0 ? options->tolerance : 1e-8;
    opts.origin_level = options->origin_level;
    opts.origin_position = options->origin_position;
    const auto result = kohmoto::run_verify(opts);
    if (checks_out != nullptr) *checks_out = result.checks;
    *failures_out = result.failures;
    return export_string(result.report_jsonl, report_out);
  });
}

kohmoto_status kohmoto_butterfly_build(int64_t q_max, double lambda, kohmoto_dataset** out) {
  return guarded([&] {
    require(out != nullptr, "NULL argument");
    *out = new kohmoto_dataset{kohmoto::build_dataset(q_max, lambda)};
    return KOHMOTO_OK;
  });
}

void kohmoto_dataset_free(kohmoto_dataset* dataset) { delete dataset; }

int64_t kohmoto_dataset_row_count(const kohmoto_dataset* dataset) {
  return dataset == nullptr ? -1 : static_cast<int64_t>(dataset->dataset.rows.size());
}

int64_t kohmoto_dataset_failed_row_count(const kohmoto_dataset* dataset) {
  if (dataset == nullptr) return -1;
  int64_t failed = 0;
  for (const auto& row : dataset->dataset.rows) {
    if (row.failed) ++failed;
  }
  return failed;
}

kohmoto_status kohmoto_dataset_to_json(const kohmoto_dataset* dataset, const char* config,
                                       char** json_out) {
  return guarded([&] {
    require(dataset != nullptr && json_out != nullptr, "NULL argument");
    return export_string(kohmoto::dataset_json(dataset->dataset, config_text(config)),
                         json_out);
  });
}

kohmoto_status kohmoto_dataset_to_csv(const kohmoto_dataset* dataset, const char* config,
                                      char** csv_out) {
  return guarded([&] {
    require(dataset != nullptr && csv_out != nullptr, "NULL argument");
    return export_string(kohmoto::dataset_csv(dataset->dataset, config_text(config)), csv_out);
  });
}

kohmoto_status kohmoto_dataset_width_report(const kohmoto_dataset* dataset, const char* config,
                                            char** json_out) {
  return guarded([&] {
    require(dataset != nullptr && json_out != nullptr, "NULL argument");
    return export_string(
        kohmoto::width_report_json(kohmoto::gap_width_report(dataset->dataset),
                                   config_text(config)),
        json_out);
  });
}

kohmoto_status kohmoto_dataset_render_svg(const kohmoto_dataset* dataset,
                                          const kohmoto_svg_options* options,
                                          const char* config, char** svg_out) {
  return guarded([&] {
    require(dataset != nullptr && svg_out != nullptr, "NULL argument");
    kohmoto::SvgOptions opts;
    if (options != nullptr) {
      require(options->mode == KOHMOTO_SVG_GAPS || options->mode == KOHMOTO_SVG_BANDS,
              "unknown SVG mode");
      opts.mode = options->mode == KOHMOTO_SVG_BANDS ? kohmoto::SvgOptions::Mode::Bands
                                                     : kohmoto::SvgOptions::Mode::Gaps;
      if (options->width > 0) opts.width = options->width;
      if (options->height > 0) opts.height = options->height;
      if (options->margin > 0) opts.margin = options->margin;
      if (options->row_scale > 0) opts.row_scale = options->row_scale;
    }
    return export_string(kohmoto::dataset_svg(dataset->dataset, opts, config_text(config)),
                         svg_out);
  });
}

kohmoto_status kohmoto_palette_color(int64_t index, char** color_out) {
  return guarded([&] {
    require(color_out != nullptr, "NULL argument");
    return export_string(kohmoto::palette_color(kohmoto::Int128(index)), color_out);
  });
}

}  // extern "C"
