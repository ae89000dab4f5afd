#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "itsec/itsec.h"

namespace {

// Exit codes: 0 ok, 1 property violation, 2 validation or parse failure,
// 3 enumeration cap exceeded.
int exit_code(itsec_status status) {
  switch (status) {
    case ITSEC_OK:
      return 0;
    case ITSEC_ERR_PROPERTY:
      return 1;
    case ITSEC_ERR_CAP:
      return 3;
    case ITSEC_ERR_VALIDATION:
    case ITSEC_ERR_ARGUMENT:
      return 2;
  }
  return 2;
}

int report_failure(itsec_status status) {
  std::cerr << "error: " << itsec_last_error() << "\n";
  return exit_code(status);
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open \"" << path << "\"\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  out = buffer.str();
  return true;
}

bool parse_format(const std::string& name, itsec_format& out) {
  if (name == "json") {
    out = ITSEC_FORMAT_JSON;
  } else if (name == "csv") {
    out = ITSEC_FORMAT_CSV;
  } else if (name == "text") {
    out = ITSEC_FORMAT_TEXT;
  } else {
    std::cerr << "error: unknown format \"" << name
              << "\", expected json, csv, or text\n";
    return false;
  }
  return true;
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { itsec_string_free(value); }
};

struct OwnedInput {
  itsec_input* value = nullptr;
  ~OwnedInput() { itsec_input_free(value); }
};

struct OwnedReport {
  itsec_report* value = nullptr;
  ~OwnedReport() { itsec_report_free(value); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact security analysis for finite symmetric ciphers"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string format_name = "json";
  int grid_resolution = 4;
  int ss_cap = 10;

  auto* analyze = app.add_subcommand(
      "analyze", "compute the five security epsilons for a channel or cipher");
  analyze->add_option("--input", input_path, "input JSON file, - for stdin");
  analyze->add_option("--grid", grid_resolution, "simplex grid resolution");
  analyze->add_option("--ss-cap", ss_cap, "semantic-security alphabet cap");
  analyze->add_option("--format", format_name, "json, csv, or text");

  auto* synthesize = app.add_subcommand(
      "synthesize", "build a cipher achieving a doubly stochastic channel");
  synthesize->add_option("--input", input_path, "input JSON file, - for stdin");
  synthesize->add_option("--format", format_name, "json, csv, or text");

  std::size_t gap_degree = 4;
  std::string gap_delta = "1/8";
  auto* gap = app.add_subcommand(
      "gap-demo", "show the wobble family separating the posterior notion");
  gap->add_option("-n,--degree", gap_degree, "even degree of the family");
  gap->add_option("--delta", gap_delta, "wobble size, 0 < delta <= 1/degree");
  gap->add_option("--grid", grid_resolution, "simplex grid resolution");
  int gap_ss_cap = 8;
  gap->add_option("--ss-cap", gap_ss_cap, "semantic-security alphabet cap");
  gap->add_option("--format", format_name, "json, csv, or text");

  itsec_verify_options verify_options;
  itsec_verify_options_init(&verify_options);
  auto* verify = app.add_subcommand(
      "verify-theorems", "exercise the asserted theorems on random instances");
  verify->add_option("--seed", verify_options.seed, "random seed");
  verify->add_option("--count", verify_options.count, "number of instances");
  verify->add_option("--min-size", verify_options.min_size, "smallest alphabet");
  verify->add_option("--max-size", verify_options.max_size, "largest alphabet");
  verify->add_option("--grid", grid_resolution, "simplex grid resolution");
  verify->add_option("--ss-cap", ss_cap, "semantic-security alphabet cap");
  verify->add_option("--format", format_name, "json, csv, or text");

  std::string lemma_p00, lemma_p01, lemma_p10, lemma_p11;
  auto* lemma = app.add_subcommand(
      "lemma-check", "evaluate the two-bit correlation lemma on a joint");
  lemma->add_option("p00", lemma_p00, "Pr[X=0, Y=0]")->required();
  lemma->add_option("p01", lemma_p01, "Pr[X=0, Y=1]")->required();
  lemma->add_option("p10", lemma_p10, "Pr[X=1, Y=0]")->required();
  lemma->add_option("p11", lemma_p11, "Pr[X=1, Y=1]")->required();
  lemma->add_option("--format", format_name, "json, csv, or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  itsec_format format;
  if (!parse_format(format_name, format)) return 2;

  if (analyze->parsed() || synthesize->parsed()) {
    std::string text;
    if (!read_input(input_path, text)) return 2;
    OwnedInput input;
    if (itsec_status status = itsec_input_parse(text.c_str(), &input.value);
        status != ITSEC_OK) {
      return report_failure(status);
    }
    OwnedString rendered;
    if (analyze->parsed()) {
      itsec_analyze_options options;
      itsec_analyze_options_init(&options);
      options.grid_resolution = grid_resolution;
      options.ss_cap = ss_cap;
      OwnedReport report;
      if (itsec_status status = itsec_analyze(input.value, &options, &report.value);
          status != ITSEC_OK) {
        return report_failure(status);
      }
      if (itsec_status status =
              itsec_report_render(report.value, format, &rendered.value);
          status != ITSEC_OK) {
        return report_failure(status);
      }
    } else {
      if (itsec_status status = itsec_synthesize(input.value, format, &rendered.value);
          status != ITSEC_OK) {
        return report_failure(status);
      }
    }
    std::cout << rendered.value << "\n";
    return 0;
  }

  if (gap->parsed()) {
    itsec_gap_options options;
    itsec_gap_options_init(&options);
    options.grid_resolution = grid_resolution;
    options.ss_cap = gap_ss_cap;
    OwnedString rendered;
    if (itsec_status status = itsec_gap_demo(gap_degree, gap_delta.c_str(), &options,
                                             format, &rendered.value);
        status != ITSEC_OK) {
      return report_failure(status);
    }
    std::cout << rendered.value << "\n";
    return 0;
  }

  if (verify->parsed()) {
    verify_options.grid_resolution = grid_resolution;
    verify_options.ss_cap = ss_cap;
    OwnedString transcript;
    itsec_status status = itsec_verify_theorems(&verify_options, format,
                                                &transcript.value);
    if (transcript.value != nullptr) {
      std::cout << transcript.value << "\n";
    }
    if (status != ITSEC_OK) {
      std::cerr << "error: " << itsec_last_error() << "\n";
      return exit_code(status);
    }
    return 0;
  }

  if (lemma->parsed()) {
    OwnedString rendered;
    if (itsec_status status =
            itsec_lemma_check(lemma_p00.c_str(), lemma_p01.c_str(), lemma_p10.c_str(),
                              lemma_p11.c_str(), format, &rendered.value);
        status != ITSEC_OK) {
      return report_failure(status);
    }
    std::cout << rendered.value << "\n";
    return 0;
  }

  return 2;
}
