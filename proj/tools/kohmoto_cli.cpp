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

// Command-line front end. All domain work goes through the public C API in
// kohmoto/kohmoto.h; this file only parses flags, assembles the effective
// configuration, and writes files atomically.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kohmoto/kohmoto.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputeError = 1;
constexpr int kExitUsageError = 2;
constexpr int kExitCounterexample = 3;

struct CliError {
  int exit_code;
  std::string message;
};

void throw_status(kohmoto_status status) {
  const int code =
      status == KOHMOTO_ERROR_INVALID_ARGUMENT ? kExitUsageError : kExitComputeError;
  throw CliError{code, kohmoto_last_error()};
}

void check(kohmoto_status status) {
  if (status != KOHMOTO_OK) throw_status(status);
}

std::string take_string(char* owned) {
  std::string out = owned == nullptr ? "" : owned;
  kohmoto_string_free(owned);
  return out;
}

// Writes via a temporary file in the same directory plus rename, so readers
// never observe a partial artifact.
void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kExitComputeError, "cannot open " + tmp.string()};
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw CliError{kExitComputeError, "cannot write " + tmp.string()};
  }
  std::filesystem::rename(tmp, path);
}

void deliver(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_atomic(out_path, content);
  }
}

std::string format_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

struct ConfigEcho {
  std::string text;

  void add(const std::string& key, const std::string& value) {
    text += key + "=" + value + "\n";
  }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, std::int64_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, double value) { add(key, format_double(value)); }
};

struct SpectrumArgs {
  std::string alpha;
  double lambda = 1.0;
  std::string out;
};

int run_spectrum(const SpectrumArgs& args) {
  ConfigEcho config;
  config.add("subcommand", "spectrum");
  config.add("alpha", args.alpha);
  config.add("lambda", args.lambda);

  kohmoto_spectrum* spectrum = nullptr;
  check(kohmoto_spectrum_compute(args.alpha.c_str(), args.lambda, &spectrum));
  char* json = nullptr;
  const kohmoto_status status = kohmoto_spectrum_to_json(spectrum, config.text.c_str(), &json);
  kohmoto_spectrum_free(spectrum);
  check(status);
  deliver(args.out, take_string(json));
  return kExitOk;
}

struct TreeArgs {
  std::string digits;
  int depth = 0;
  bool annotate = false;
  std::string out;
};

int run_tree(const TreeArgs& args) {
  ConfigEcho config;
  config.add("subcommand", "tree");
  config.add("digits", args.digits);
  config.add("depth", args.depth);
  config.add("annotate", args.annotate ? "true" : "false");

  kohmoto_tree* tree = nullptr;
  check(kohmoto_tree_build(args.digits.c_str(), args.depth, &tree));
  char* json = nullptr;
  const kohmoto_status status =
      kohmoto_tree_to_json(tree, args.annotate ? 1 : 0, config.text.c_str(), &json);
  kohmoto_tree_free(tree);
  check(status);
  deliver(args.out, take_string(json));
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::string digits;
  int depth = 8;
  int fuzz = 0;
  int max_digit = 5;
  std::uint64_t seed = 0;
  double lambda = 1.0;
  double tolerance = 1e-8;
  int origin_level = -1;
  std::int64_t origin_position = -1;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  ConfigEcho config;
  config.add("subcommand", "verify");
  config.add("suite", args.suite);
  if (!args.digits.empty()) config.add("digits", args.digits);
  config.add("depth", args.depth);
  if (args.digits.empty()) {
    config.add("fuzz", args.fuzz);
    config.add("max_digit", args.max_digit);
    config.add("seed", static_cast<std::int64_t>(args.seed));
  }
  config.add("lambda", args.lambda);
  config.add("tolerance", args.tolerance);

  kohmoto_verify_options options{};
  options.suite = args.suite.c_str();
  options.digits = args.digits.empty() ? nullptr : args.digits.c_str();
  options.depth = args.depth;
  options.fuzz = args.fuzz;
  options.max_digit = args.max_digit;
  options.seed = args.seed;
  options.lambda = args.lambda;
  options.tolerance = args.tolerance;
  options.origin_level = args.origin_level;
  options.origin_position = args.origin_position;

  char* report = nullptr;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  check(kohmoto_verify(&options, &report, &checks, &failures));

  // Provenance header, then the per-check JSON lines from the library.
  std::string head = "{\"record\":\"config\"";
  std::istringstream lines(config.text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    head += ",\"" + line.substr(0, eq) + "\":\"" + line.substr(eq + 1) + "\"";
  }
  head += "}\n";
  deliver(args.out, head + take_string(report));

  std::cerr << "verify: suite=" << args.suite << " checks=" << checks
            << " failures=" << failures << "\n";
  return failures == 0 ? kExitOk : kExitCounterexample;
}

struct ButterflyArgs {
  std::int64_t q_max = 0;
  double lambda = 1.0;
  std::string out_dir;
  bool keep_going = false;
  int svg_width = 0;
  int svg_height = 0;
  double row_scale = 0.0;
};

int run_butterfly(const ButterflyArgs& args) {
  ConfigEcho config;
  config.add("subcommand", "butterfly");
  config.add("qmax", args.q_max);
  config.add("lambda", args.lambda);

  kohmoto_dataset* dataset = nullptr;
  check(kohmoto_butterfly_build(args.q_max, args.lambda, &dataset));

  struct Guard {
    kohmoto_dataset* d;
    ~Guard() { kohmoto_dataset_free(d); }
  } guard{dataset};

  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);

  char* text = nullptr;
  check(kohmoto_dataset_to_json(dataset, config.text.c_str(), &text));
  write_atomic(dir / "butterfly.json", take_string(text));
  check(kohmoto_dataset_to_csv(dataset, config.text.c_str(), &text));
  write_atomic(dir / "butterfly.csv", take_string(text));
  check(kohmoto_dataset_width_report(dataset, config.text.c_str(), &text));
  write_atomic(dir / "width_report.json", take_string(text));

  kohmoto_svg_options svg{};
  svg.width = args.svg_width;
  svg.height = args.svg_height;
  svg.row_scale = args.row_scale;
  svg.mode = KOHMOTO_SVG_GAPS;
  check(kohmoto_dataset_render_svg(dataset, &svg, config.text.c_str(), &text));
  write_atomic(dir / "butterfly_gaps.svg", take_string(text));
  svg.mode = KOHMOTO_SVG_BANDS;
  check(kohmoto_dataset_render_svg(dataset, &svg, config.text.c_str(), &text));
  write_atomic(dir / "butterfly_bands.svg", take_string(text));

  const std::int64_t failed = kohmoto_dataset_failed_row_count(dataset);
  if (failed > 0) {
    std::cerr << "butterfly: " << failed << " row(s) failed\n";
    if (!args.keep_going) return kExitComputeError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, gap indices, and the colored butterfly of the Kohmoto model"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read defaults from a key=value config file");

  SpectrumArgs spectrum_args;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Bands, gaps, and gap indices of one periodic approximant");
  spectrum->add_option("--alpha", spectrum_args.alpha, "Frequency p/q in (0,1), lowest terms")
      ->required();
  spectrum->add_option("--lambda", spectrum_args.lambda, "Coupling constant")->capture_default_str();
  spectrum->add_option("--out", spectrum_args.out, "Output file (default: stdout)");

  TreeArgs tree_args;
  CLI::App* tree = app.add_subcommand("tree", "Spectral tree of a continued fraction");
  tree->add_option("--digits", tree_args.digits,
                   "Comma-separated digits starting with 0, or '1s' for the all-ones tail")
      ->required();
  tree->add_option("--depth", tree_args.depth, "Deepest level to build")->required();
  tree->add_flag("--annotate", tree_args.annotate, "Attach gap indices to every G-vertex");
  tree->add_option("--out", tree_args.out, "Output file (default: stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("--suite", verify_args.suite,
                   "recursion|conservation|range|oracle|nesting|convergence|all")
      ->required();
  verify->add_option("--digits", verify_args.digits, "Explicit digit sequence (or '1s')");
  verify->add_option("--depth", verify_args.depth, "Tree depth")->capture_default_str();
  verify->add_option("--fuzz", verify_args.fuzz, "Number of random digit sequences")->capture_default_str();
  verify->add_option("--max-digit", verify_args.max_digit, "Largest random digit")->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "Random seed")->capture_default_str();
  verify->add_option("--lambda", verify_args.lambda, "Coupling (nesting/convergence)")->capture_default_str();
  verify->add_option("--tolerance", verify_args.tolerance, "Interval slack (nesting)")->capture_default_str();
  verify->add_option("--origin-level", verify_args.origin_level,
                     "Convergence origin level (-1 = first bounded gap)")
      ->capture_default_str();
  verify->add_option("--origin-pos", verify_args.origin_position,
                     "Convergence origin position")
      ->capture_default_str();
  verify->add_option("--out", verify_args.out, "Report file (default: stdout)");

  ButterflyArgs butterfly_args;
  CLI::App* butterfly =
      app.add_subcommand("butterfly", "Dataset, CSV/JSON, and both panel SVGs");
  butterfly->add_option("--qmax", butterfly_args.q_max, "Largest denominator")->required();
  butterfly->add_option("--lambda", butterfly_args.lambda, "Coupling constant")->capture_default_str();
  butterfly->add_option("--out", butterfly_args.out_dir, "Output directory")->required();
  butterfly->add_flag("--keep-going", butterfly_args.keep_going,
                      "Exit 0 even if some rows failed");
  butterfly->add_option("--svg-width", butterfly_args.svg_width, "SVG width in px");
  butterfly->add_option("--svg-height", butterfly_args.svg_height, "SVG height in px");
  butterfly->add_option("--row-scale", butterfly_args.row_scale, "Row thickness multiplier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    if (tree->parsed()) return run_tree(tree_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (butterfly->parsed()) return run_butterfly(butterfly_args);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputeError;
  }
  return kExitUsageError;
}
