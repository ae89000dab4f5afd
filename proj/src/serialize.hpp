#pragma once

#include <string>
#include <variant>

#include "cryptosystem.hpp"
#include "gap.hpp"
#include "notions.hpp"
#include "prob.hpp"
#include "verify.hpp"

namespace itsec {

enum class OutputFormat { json, csv, text };

// Accepts "json", "csv", "text".
OutputFormat output_format_from_string(const std::string& name);

// An input document holds exactly one of a channel or a cryptosystem.
using ParsedInput = std::variant<ChannelMatrix, Cryptosystem>;
ParsedInput parse_input(const std::string& json_text);

std::string channel_to_json_text(const ChannelMatrix& channel);
std::string cryptosystem_to_json_text(const Cryptosystem& system);

std::string render_report(const NotionReport& report, OutputFormat format);
// Inverse of the JSON rendering, for round trips and archived reports.
NotionReport report_from_json_text(const std::string& json_text);

std::string render_cryptosystem(const Cryptosystem& system, OutputFormat format);
std::string render_gap_report(const GapReport& report, OutputFormat format);
std::string render_verify_outcome(const VerifyOutcome& outcome, OutputFormat format);
std::string render_lemma(const BinaryJoint& joint, const Lemma1Result& result,
                         OutputFormat format);

}  // namespace itsec
