#include "itsec/itsec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "gap.hpp"
#include "notions.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "synthesis.hpp"
#include "verify.hpp"

struct itsec_input {
  itsec::ParsedInput value;
};

struct itsec_report {
  itsec::NotionReport report;
};

namespace {

thread_local std::string g_last_error;

itsec_status fail(itsec_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

itsec_status fail(const itsec::Error& error) {
  switch (error.kind()) {
    case itsec::ErrorKind::invariant_violation:
      return fail(ITSEC_ERR_PROPERTY, error.what());
    case itsec::ErrorKind::cap_exceeded:
      return fail(ITSEC_ERR_CAP, error.what());
    default:
      return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) {
    std::memcpy(out, text.c_str(), text.size() + 1);
  }
  return out;
}

bool to_format(itsec_format format, itsec::OutputFormat& out) {
  switch (format) {
    case ITSEC_FORMAT_JSON:
      out = itsec::OutputFormat::json;
      return true;
    case ITSEC_FORMAT_CSV:
      out = itsec::OutputFormat::csv;
      return true;
    case ITSEC_FORMAT_TEXT:
      out = itsec::OutputFormat::text;
      return true;
  }
  return false;
}

bool fill_caps(int ss_cap, itsec::Caps& caps) {
  if (ss_cap < 2) return false;
  caps.ss_cryptograms = static_cast<std::size_t>(ss_cap);
  caps.ss_messages = static_cast<std::size_t>(ss_cap);
  return true;
}

}  // namespace

extern "C" {

void itsec_analyze_options_init(itsec_analyze_options* options) {
  if (options == nullptr) return;
  options->grid_resolution = 4;
  options->ss_cap = 10;
}

void itsec_verify_options_init(itsec_verify_options* options) {
  if (options == nullptr) return;
  options->seed = 42;
  options->count = 100;
  options->min_size = 2;
  options->max_size = 6;
  options->grid_resolution = 4;
  options->ss_cap = 10;
}

void itsec_gap_options_init(itsec_gap_options* options) {
  if (options == nullptr) return;
  options->grid_resolution = 4;
  options->ss_cap = 8;
  options->grid_point_limit = 2000;
}

itsec_status itsec_input_parse(const char* json_text, itsec_input** out_input) {
  if (json_text == nullptr || out_input == nullptr) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_input_parse: null argument");
  }
  *out_input = nullptr;
  try {
    auto parsed = itsec::parse_input(json_text);
    *out_input = new itsec_input{std::move(parsed)};
    return ITSEC_OK;
  } catch (const itsec::Error& error) {
    return fail(error);
  } catch (const std::exception& error) {
    return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

int itsec_input_is_cryptosystem(const itsec_input* input) {
  if (input == nullptr) return 0;
  return std::holds_alternative<itsec::Cryptosystem>(input->value) ? 1 : 0;
}

void itsec_input_free(itsec_input* input) { delete input; }

itsec_status itsec_analyze(const itsec_input* input,
                           const itsec_analyze_options* options,
                           itsec_report** out_report) {
  if (input == nullptr || out_report == nullptr) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_analyze: null argument");
  }
  *out_report = nullptr;
  itsec_analyze_options defaults;
  itsec_analyze_options_init(&defaults);
  const itsec_analyze_options& opts = options != nullptr ? *options : defaults;
  if (opts.grid_resolution < 1) {
    return fail(ITSEC_ERR_VALIDATION, "grid resolution must be at least 1");
  }
  itsec::AnalyzeOptions analyze_options;
  analyze_options.grid_resolution = static_cast<unsigned>(opts.grid_resolution);
  if (!fill_caps(opts.ss_cap, analyze_options.caps)) {
    return fail(ITSEC_ERR_VALIDATION, "semantic-security cap must be at least 2");
  }
  try {
    itsec::NotionReport report =
        std::holds_alternative<itsec::ChannelMatrix>(input->value)
            ? itsec::analyze(std::get<itsec::ChannelMatrix>(input->value),
                             analyze_options)
            : itsec::analyze(std::get<itsec::Cryptosystem>(input->value),
                             analyze_options);
    *out_report = new itsec_report{std::move(report)};
    return ITSEC_OK;
  } catch (const itsec::Error& error) {
    return fail(error);
  } catch (const std::exception& error) {
    return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

itsec_status itsec_report_render(const itsec_report* report, itsec_format format,
                                 char** out_text) {
  if (report == nullptr || out_text == nullptr) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_report_render: null argument");
  }
  *out_text = nullptr;
  itsec::OutputFormat render_format;
  if (!to_format(format, render_format)) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_report_render: unknown format");
  }
  try {
    *out_text = copy_out(itsec::render_report(report->report, render_format));
    return *out_text != nullptr ? ITSEC_OK
                                : fail(ITSEC_ERR_ARGUMENT, "out of memory");
  } catch (const itsec::Error& error) {
    return fail(error);
  } catch (const std::exception& error) {
    return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

void itsec_report_free(itsec_report* report) { delete report; }

itsec_status itsec_synthesize(const itsec_input* input, itsec_format format,
                              char** out_text) {
  if (input == nullptr || out_text == nullptr) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_synthesize: null argument");
  }
  *out_text = nullptr;
  itsec::OutputFormat render_format;
  if (!to_format(format, render_format)) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_synthesize: unknown format");
  }
  try {
    const itsec::ChannelMatrix* channel =
        std::get_if<itsec::ChannelMatrix>(&input->value);
    if (channel == nullptr) {
      return fail(ITSEC_ERR_VALIDATION,
                  "synthesis starts from a channel; this input is a cryptosystem");
    }
    itsec::Cryptosystem system = itsec::synthesize(*channel);
    *out_text = copy_out(itsec::render_cryptosystem(system, render_format));
    return *out_text != nullptr ? ITSEC_OK
                                : fail(ITSEC_ERR_ARGUMENT, "out of memory");
  } catch (const itsec::Error& error) {
    return fail(error);
  } catch (const std::exception& error) {
    return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

itsec_status itsec_gap_demo(size_t degree, const char* delta,
                            const itsec_gap_options* options, itsec_format format,
                            char** out_text) {
  if (delta == nullptr || out_text == nullptr) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_gap_demo: null argument");
  }
  *out_text = nullptr;
  itsec::OutputFormat render_format;
  if (!to_format(format, render_format)) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_gap_demo: unknown format");
  }
  itsec_gap_options defaults;
  itsec_gap_options_init(&defaults);
  const itsec_gap_options& opts = options != nullptr ? *options : defaults;
  if (opts.grid_resolution < 1) {
    return fail(ITSEC_ERR_VALIDATION, "grid resolution must be at least 1");
  }
  try {
    itsec::GapOptions gap_options;
    gap_options.grid_resolution = static_cast<unsigned>(opts.grid_resolution);
    gap_options.grid_point_limit = opts.grid_point_limit;
    if (!fill_caps(opts.ss_cap, gap_options.caps)) {
      return fail(ITSEC_ERR_VALIDATION, "semantic-security cap must be at least 2");
    }
    itsec::GapParams params{degree, itsec::rational_from_string(delta)};
    itsec::GapReport report = itsec::gap_report(params, gap_options);
    *out_text = copy_out(itsec::render_gap_report(report, render_format));
    return *out_text != nullptr ? ITSEC_OK
                                : fail(ITSEC_ERR_ARGUMENT, "out of memory");
  } catch (const itsec::Error& error) {
    return fail(error);
  } catch (const std::exception& error) {
    return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

itsec_status itsec_verify_theorems(const itsec_verify_options* options,
                                   itsec_format format, char** out_transcript) {
  if (out_transcript == nullptr) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_verify_theorems: null argument");
  }
  *out_transcript = nullptr;
  itsec::OutputFormat render_format;
  if (!to_format(format, render_format)) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_verify_theorems: unknown format");
  }
  itsec_verify_options defaults;
  itsec_verify_options_init(&defaults);
  const itsec_verify_options& opts = options != nullptr ? *options : defaults;
  if (opts.grid_resolution < 1) {
    return fail(ITSEC_ERR_VALIDATION, "grid resolution must be at least 1");
  }
  try {
    itsec::VerifyOptions verify_options;
    verify_options.seed = opts.seed;
    verify_options.count = opts.count;
    verify_options.min_size = opts.min_size;
    verify_options.max_size = opts.max_size;
    verify_options.grid_resolution = static_cast<unsigned>(opts.grid_resolution);
    if (!fill_caps(opts.ss_cap, verify_options.caps)) {
      return fail(ITSEC_ERR_VALIDATION, "semantic-security cap must be at least 2");
    }
    itsec::VerifyOutcome outcome = itsec::verify_theorems(verify_options);
    *out_transcript = copy_out(itsec::render_verify_outcome(outcome, render_format));
    if (*out_transcript == nullptr) {
      return fail(ITSEC_ERR_ARGUMENT, "out of memory");
    }
    if (!outcome.all_passed()) {
      return fail(ITSEC_ERR_PROPERTY, "theorem verification found a counterexample");
    }
    return ITSEC_OK;
  } catch (const itsec::Error& error) {
    return fail(error);
  } catch (const std::exception& error) {
    return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

itsec_status itsec_lemma_check(const char* p00, const char* p01, const char* p10,
                               const char* p11, itsec_format format, char** out_text) {
  if (p00 == nullptr || p01 == nullptr || p10 == nullptr || p11 == nullptr ||
      out_text == nullptr) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_lemma_check: null argument");
  }
  *out_text = nullptr;
  itsec::OutputFormat render_format;
  if (!to_format(format, render_format)) {
    return fail(ITSEC_ERR_ARGUMENT, "itsec_lemma_check: unknown format");
  }
  try {
    itsec::BinaryJoint joint{
        itsec::rational_from_string(p00), itsec::rational_from_string(p01),
        itsec::rational_from_string(p10), itsec::rational_from_string(p11)};
    itsec::Lemma1Result result = itsec::lemma1_check(joint);
    *out_text = copy_out(itsec::render_lemma(joint, result, render_format));
    return *out_text != nullptr ? ITSEC_OK
                                : fail(ITSEC_ERR_ARGUMENT, "out of memory");
  } catch (const itsec::Error& error) {
    return fail(error);
  } catch (const std::exception& error) {
    return fail(ITSEC_ERR_VALIDATION, error.what());
  }
}

const char* itsec_last_error(void) { return g_last_error.c_str(); }

void itsec_string_free(char* text) { std::free(text); }

const char* itsec_version(void) { return "1.0.0"; }

}  // extern "C"
