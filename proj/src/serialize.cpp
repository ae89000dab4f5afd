#include "serialize.hpp"

#include <json.hpp>

#include <sstream>

#include "error.hpp"

namespace itsec {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& error) {
    throw Error(ErrorKind::parse, std::string("invalid JSON: ") + error.what());
  }
}

const json& member(const json& object, const char* key, const char* where) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorKind::parse,
                std::string(where) + " is missing the \"" + key + "\" field");
  }
  return object.at(key);
}

std::string string_field(const json& value, const char* where) {
  if (!value.is_string()) {
    throw Error(ErrorKind::parse, std::string(where) + " must be a string");
  }
  return value.get<std::string>();
}

Rational rational_field(const json& value, const char* where) {
  if (!value.is_string()) {
    throw Error(ErrorKind::parse,
                std::string(where) +
                    " must be a rational written as a string, like \"1/2\"");
  }
  return rational_from_string(value.get<std::string>());
}

std::vector<std::string> label_list(const json& value, const char* where) {
  if (!value.is_array() || value.empty()) {
    throw Error(ErrorKind::parse,
                std::string(where) + " must be a non-empty array of strings");
  }
  std::vector<std::string> labels;
  labels.reserve(value.size());
  for (const auto& entry : value) {
    labels.push_back(string_field(entry, where));
  }
  return labels;
}

std::vector<Rational> rational_list(const json& value, const char* where) {
  if (!value.is_array()) {
    throw Error(ErrorKind::parse, std::string(where) + " must be an array");
  }
  std::vector<Rational> out;
  out.reserve(value.size());
  for (const auto& entry : value) {
    out.push_back(rational_field(entry, where));
  }
  return out;
}

ojson rationals_to_json(const std::vector<Rational>& values) {
  ojson out = ojson::array();
  for (const auto& value : values) {
    out.push_back(rational_to_string(value));
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string join(const std::vector<std::string>& parts, const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += separator;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> mask_labels(std::uint64_t mask, const Alphabet& alphabet) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if ((mask >> i) & 1ULL) labels.push_back(alphabet.label(i));
  }
  return labels;
}

std::string dist_text(const std::vector<Rational>& weights) {
  std::vector<std::string> parts;
  parts.reserve(weights.size());
  for (const auto& w : weights) parts.push_back(rational_to_string(w));
  return "[" + join(parts, ", ") + "]";
}

ChannelMatrix channel_from_json(const json& body) {
  Alphabet messages(label_list(member(body, "messages", "channel"), "channel.messages"));
  Alphabet cryptograms(
      label_list(member(body, "cryptograms", "channel"), "channel.cryptograms"));
  const json& matrix = member(body, "matrix", "channel");
  if (!matrix.is_array() || matrix.size() != cryptograms.size()) {
    throw Error(ErrorKind::parse,
                "channel.matrix must have one row per cryptogram (" +
                    std::to_string(cryptograms.size()) + " rows)");
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(matrix.size());
  for (const auto& row : matrix) {
    if (!row.is_array() || row.size() != messages.size()) {
      throw Error(ErrorKind::parse,
                  "channel.matrix rows must have one entry per message (" +
                      std::to_string(messages.size()) + " entries)");
    }
    rows.push_back(rational_list(row, "channel.matrix entry"));
  }
  std::vector<Distribution> columns;
  columns.reserve(messages.size());
  for (std::size_t m = 0; m < messages.size(); ++m) {
    std::vector<Rational> column(cryptograms.size());
    for (std::size_t c = 0; c < cryptograms.size(); ++c) {
      column[c] = rows[c][m];
    }
    try {
      columns.emplace_back(cryptograms, std::move(column));
    } catch (const Error& error) {
      throw Error(ErrorKind::validation,
                  "channel column for message \"" + messages.label(m) +
                      "\": " + error.what());
    }
  }
  return ChannelMatrix(std::move(messages), std::move(columns));
}

ojson channel_to_json(const ChannelMatrix& channel) {
  ojson body;
  body["messages"] = channel.messages().labels();
  body["cryptograms"] = channel.cryptograms().labels();
  ojson matrix = ojson::array();
  for (std::size_t c = 0; c < channel.cryptogram_count(); ++c) {
    ojson row = ojson::array();
    for (std::size_t m = 0; m < channel.message_count(); ++m) {
      row.push_back(rational_to_string(channel.at(c, m)));
    }
    matrix.push_back(std::move(row));
  }
  body["matrix"] = std::move(matrix);
  return ojson{{"channel", std::move(body)}};
}

Cryptosystem cryptosystem_from_json(const json& body) {
  Alphabet messages(
      label_list(member(body, "messages", "cryptosystem"), "cryptosystem.messages"));
  Alphabet keys(label_list(member(body, "keys", "cryptosystem"), "cryptosystem.keys"));
  Alphabet cryptograms(label_list(member(body, "cryptograms", "cryptosystem"),
                                  "cryptosystem.cryptograms"));
  std::vector<Rational> key_weights =
      rational_list(member(body, "key_dist", "cryptosystem"), "cryptosystem.key_dist");
  const json& enc = member(body, "enc", "cryptosystem");
  const json& dec = member(body, "dec", "cryptosystem");

  std::vector<std::vector<std::size_t>> enc_table(keys.size());
  std::vector<std::vector<std::optional<std::size_t>>> dec_table(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const std::string& key = keys.label(k);
    if (!enc.contains(key)) {
      throw Error(ErrorKind::parse,
                  "cryptosystem.enc is missing key \"" + key + "\"");
    }
    const json& enc_row = enc.at(key);
    if (!enc_row.is_array() || enc_row.size() != messages.size()) {
      throw Error(ErrorKind::parse, "cryptosystem.enc[\"" + key +
                                        "\"] must list one cryptogram per message");
    }
    for (const auto& entry : enc_row) {
      enc_table[k].push_back(
          cryptograms.require_index(string_field(entry, "cryptosystem.enc entry")));
    }

    if (!dec.contains(key)) {
      throw Error(ErrorKind::parse,
                  "cryptosystem.dec is missing key \"" + key + "\"");
    }
    const json& dec_row = dec.at(key);
    if (!dec_row.is_array() || dec_row.size() != cryptograms.size()) {
      throw Error(ErrorKind::parse, "cryptosystem.dec[\"" + key +
                                        "\"] must list one message per cryptogram");
    }
    for (const auto& entry : dec_row) {
      if (entry.is_null()) {
        dec_table[k].push_back(std::nullopt);
      } else {
        dec_table[k].push_back(
            messages.require_index(string_field(entry, "cryptosystem.dec entry")));
      }
    }
  }

  Distribution key_dist(keys, std::move(key_weights));
  return Cryptosystem(std::move(messages), std::move(keys), std::move(cryptograms),
                      std::move(key_dist), std::move(enc_table), std::move(dec_table));
}

ojson cryptosystem_to_json(const Cryptosystem& system) {
  ojson body;
  body["messages"] = system.messages().labels();
  body["keys"] = system.keys().labels();
  body["cryptograms"] = system.cryptograms().labels();
  body["key_dist"] = rationals_to_json(system.key_dist().weights());
  ojson enc;
  ojson dec;
  for (std::size_t k = 0; k < system.keys().size(); ++k) {
    ojson enc_row = ojson::array();
    for (std::size_t m = 0; m < system.messages().size(); ++m) {
      enc_row.push_back(system.cryptograms().label(system.encrypt(m, k)));
    }
    enc[system.keys().label(k)] = std::move(enc_row);
    ojson dec_row = ojson::array();
    for (std::size_t c = 0; c < system.cryptograms().size(); ++c) {
      if (auto m = system.decrypt(c, k)) {
        dec_row.push_back(system.messages().label(*m));
      } else {
        dec_row.push_back(nullptr);
      }
    }
    dec[system.keys().label(k)] = std::move(dec_row);
  }
  body["enc"] = std::move(enc);
  body["dec"] = std::move(dec);
  return ojson{{"cryptosystem", std::move(body)}};
}

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw Error(ErrorKind::validation,
              "unknown output format \"" + name + "\", expected json, csv, or text");
}

ParsedInput parse_input(const std::string& json_text) {
  json document = parse_json(json_text);
  if (!document.is_object()) {
    throw Error(ErrorKind::parse, "input document must be a JSON object");
  }
  bool has_channel = document.contains("channel");
  bool has_system = document.contains("cryptosystem");
  if (has_channel == has_system) {
    throw Error(ErrorKind::parse,
                "input document must contain exactly one of \"channel\" or "
                "\"cryptosystem\"");
  }
  if (has_channel) {
    return channel_from_json(document.at("channel"));
  }
  return cryptosystem_from_json(document.at("cryptosystem"));
}

std::string channel_to_json_text(const ChannelMatrix& channel) {
  return channel_to_json(channel).dump(2);
}

std::string cryptosystem_to_json_text(const Cryptosystem& system) {
  return cryptosystem_to_json(system).dump(2);
}

namespace {

ojson report_to_json(const NotionReport& report) {
  Rational ind = report.ind.value;
  ojson notions;
  notions["eps_ind"] = ojson{
      {"value", rational_to_string(report.ind.value)},
      {"exact", true},
      {"certificate",
       ojson{{"message_pair", ojson::array({report.messages.label(report.ind.message_a),
                                            report.messages.label(report.ind.message_b)})}}}};
  notions["eps_ps_cs_sup"] = ojson{
      {"value", rational_to_string(report.ps_cs.value)},
      {"exact", true},
      {"certificate", ojson{{"message_dist", rationals_to_json(report.ps_cs_witness)},
                            {"message", report.messages.label(report.ps_cs.message)},
                            {"grid_index", report.ps_cs.grid_index}}}};
  notions["eps_ps_cm_sup"] = ojson{
      {"value", rational_to_string(report.ps_cm.value)},
      {"exact", false},
      {"bracket", ojson::array({rational_to_string(ind / 2), rational_to_string(ind)})},
      {"certificate", ojson{{"message_dist", rationals_to_json(report.ps_cm_witness)},
                            {"grid_index", report.ps_cm.grid_index}}}};
  notions["eps_ps_sm_sup"] = ojson{
      {"value", rational_to_string(report.ps_sm.value)},
      {"exact", false},
      {"certificate", ojson{{"message_dist", rationals_to_json(report.ps_sm_witness)},
                            {"cryptogram", report.cryptograms.label(report.ps_sm.cryptogram)},
                            {"grid_index", report.ps_sm.grid_index}}}};
  notions["eps_ss_sup"] = ojson{
      {"value", rational_to_string(report.ss.value)},
      {"exact", false},
      {"bracket", ojson::array({rational_to_string(ind / 4), rational_to_string(ind)})},
      {"certificate",
       ojson{{"message_dist", rationals_to_json(report.ss_witness)},
             {"cryptogram_test", mask_labels(report.ss.test_mask, report.cryptograms)},
             {"coin_bias", rational_to_string(report.ss.coin_bias)},
             {"grid_index", report.ss.grid_index}}}};

  ojson body;
  body["input"] = report.input_kind;
  body["messages"] = report.messages.labels();
  body["cryptograms"] = report.cryptograms.labels();
  body["grid_resolution"] = report.grid_resolution;
  body["caps"] = ojson{{"ss_cryptograms", report.caps.ss_cryptograms},
                       {"ss_messages", report.caps.ss_messages},
                       {"distinguisher_tests", report.caps.distinguisher_tests}};
  body["notions"] = std::move(notions);
  return ojson{{"report", std::move(body)}};
}

std::string report_to_csv(const NotionReport& report) {
  Rational ind = report.ind.value;
  std::ostringstream out;
  out << "notion,value,exact,lower_bound,upper_bound,certificate\n";
  out << "eps_ind," << rational_to_string(report.ind.value) << ",true,"
      << rational_to_string(report.ind.value) << "," << rational_to_string(report.ind.value)
      << ","
      << csv_escape("messages " + report.messages.label(report.ind.message_a) + " " +
                    report.messages.label(report.ind.message_b))
      << "\n";
  out << "eps_ps_cs_sup," << rational_to_string(report.ps_cs.value) << ",true,"
      << rational_to_string(report.ps_cs.value) << ","
      << rational_to_string(report.ps_cs.value) << ","
      << csv_escape("P_M " + dist_text(report.ps_cs_witness) + " message " +
                    report.messages.label(report.ps_cs.message))
      << "\n";
  out << "eps_ps_cm_sup," << rational_to_string(report.ps_cm.value) << ",false,"
      << rational_to_string(ind / 2) << "," << rational_to_string(ind) << ","
      << csv_escape("P_M " + dist_text(report.ps_cm_witness)) << "\n";
  out << "eps_ps_sm_sup," << rational_to_string(report.ps_sm.value) << ",false,"
      << rational_to_string(report.ps_sm.value) << ",,"
      << csv_escape("P_M " + dist_text(report.ps_sm_witness) + " cryptogram " +
                    report.cryptograms.label(report.ps_sm.cryptogram))
      << "\n";
  out << "eps_ss_sup," << rational_to_string(report.ss.value) << ",false,"
      << rational_to_string(ind / 4) << "," << rational_to_string(ind) << ","
      << csv_escape("P_M " + dist_text(report.ss_witness) + " test {" +
                    join(mask_labels(report.ss.test_mask, report.cryptograms), " ") +
                    "} coin_bias " + rational_to_string(report.ss.coin_bias))
      << "\n";
  return out.str();
}

std::string report_to_text(const NotionReport& report) {
  Rational ind = report.ind.value;
  std::ostringstream out;
  out << "input: " << report.input_kind << " (" << report.messages.size()
      << " messages, " << report.cryptograms.size() << " cryptograms)\n";
  out << "grid resolution: " << report.grid_resolution << "\n";
  out << "eps_ind        = " << rational_to_string(report.ind.value)
      << "  exact  messages " << report.messages.label(report.ind.message_a) << ", "
      << report.messages.label(report.ind.message_b) << "\n";
  out << "eps_ps_cs_sup  = " << rational_to_string(report.ps_cs.value)
      << "  exact  P_M " << dist_text(report.ps_cs_witness) << ", message "
      << report.messages.label(report.ps_cs.message) << "\n";
  out << "eps_ps_cm_sup  = " << rational_to_string(report.ps_cm.value)
      << "  grid lower bound, true value in [" << rational_to_string(ind / 2) << ", "
      << rational_to_string(ind) << "]  P_M " << dist_text(report.ps_cm_witness) << "\n";
  out << "eps_ps_sm_sup  = " << rational_to_string(report.ps_sm.value)
      << "  grid lower bound  P_M " << dist_text(report.ps_sm_witness) << ", cryptogram "
      << report.cryptograms.label(report.ps_sm.cryptogram) << "\n";
  out << "eps_ss_sup     = " << rational_to_string(report.ss.value)
      << "  grid lower bound, true value in [" << rational_to_string(ind / 4) << ", "
      << rational_to_string(ind) << "]  P_M " << dist_text(report.ss_witness) << ", test {"
      << join(mask_labels(report.ss.test_mask, report.cryptograms), ", ")
      << "}, coin bias " << rational_to_string(report.ss.coin_bias) << "\n";
  return out.str();
}

}  // namespace

std::string render_report(const NotionReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return report_to_json(report).dump(2);
    case OutputFormat::csv:
      return report_to_csv(report);
    case OutputFormat::text:
      return report_to_text(report);
  }
  throw Error(ErrorKind::validation, "unknown output format");
}

NotionReport report_from_json_text(const std::string& json_text) {
  json document = parse_json(json_text);
  const json& body = member(document, "report", "document");
  Alphabet messages(label_list(member(body, "messages", "report"), "report.messages"));
  Alphabet cryptograms(
      label_list(member(body, "cryptograms", "report"), "report.cryptograms"));
  const json& grid_resolution = member(body, "grid_resolution", "report");
  const json& caps = member(body, "caps", "report");
  const json& notions = member(body, "notions", "report");

  auto index_of = [](const Alphabet& alphabet, const json& value, const char* where) {
    return alphabet.require_index(string_field(value, where));
  };

  const json& ind_j = member(notions, "eps_ind", "report.notions");
  const json& ind_cert = member(ind_j, "certificate", "eps_ind");
  const json& pair = member(ind_cert, "message_pair", "eps_ind.certificate");
  if (!pair.is_array() || pair.size() != 2) {
    throw Error(ErrorKind::parse, "eps_ind.certificate.message_pair must have 2 entries");
  }
  IndResult ind{rational_field(member(ind_j, "value", "eps_ind"), "eps_ind.value"),
                index_of(messages, pair.at(0), "eps_ind certificate"),
                index_of(messages, pair.at(1), "eps_ind certificate")};

  const json& cs_j = member(notions, "eps_ps_cs_sup", "report.notions");
  const json& cs_cert = member(cs_j, "certificate", "eps_ps_cs_sup");
  PsCsSupResult ps_cs{
      rational_field(member(cs_j, "value", "eps_ps_cs_sup"), "eps_ps_cs_sup.value"),
      member(cs_cert, "grid_index", "eps_ps_cs_sup.certificate").get<std::size_t>(),
      index_of(messages, member(cs_cert, "message", "eps_ps_cs_sup.certificate"),
               "eps_ps_cs_sup certificate")};
  std::vector<Rational> cs_witness = rational_list(
      member(cs_cert, "message_dist", "eps_ps_cs_sup.certificate"), "message_dist");

  const json& cm_j = member(notions, "eps_ps_cm_sup", "report.notions");
  const json& cm_cert = member(cm_j, "certificate", "eps_ps_cm_sup");
  PsCmSupResult ps_cm{
      rational_field(member(cm_j, "value", "eps_ps_cm_sup"), "eps_ps_cm_sup.value"),
      member(cm_cert, "grid_index", "eps_ps_cm_sup.certificate").get<std::size_t>()};
  std::vector<Rational> cm_witness = rational_list(
      member(cm_cert, "message_dist", "eps_ps_cm_sup.certificate"), "message_dist");

  const json& sm_j = member(notions, "eps_ps_sm_sup", "report.notions");
  const json& sm_cert = member(sm_j, "certificate", "eps_ps_sm_sup");
  PsSmSupResult ps_sm{
      rational_field(member(sm_j, "value", "eps_ps_sm_sup"), "eps_ps_sm_sup.value"),
      member(sm_cert, "grid_index", "eps_ps_sm_sup.certificate").get<std::size_t>(),
      index_of(cryptograms, member(sm_cert, "cryptogram", "eps_ps_sm_sup.certificate"),
               "eps_ps_sm_sup certificate")};
  std::vector<Rational> sm_witness = rational_list(
      member(sm_cert, "message_dist", "eps_ps_sm_sup.certificate"), "message_dist");

  const json& ss_j = member(notions, "eps_ss_sup", "report.notions");
  const json& ss_cert = member(ss_j, "certificate", "eps_ss_sup");
  std::uint64_t mask = 0;
  for (const auto& label : member(ss_cert, "cryptogram_test", "eps_ss_sup.certificate")) {
    mask |= 1ULL << cryptograms.require_index(
                string_field(label, "eps_ss_sup cryptogram_test entry"));
  }
  SsSupResult ss{
      rational_field(member(ss_j, "value", "eps_ss_sup"), "eps_ss_sup.value"),
      member(ss_cert, "grid_index", "eps_ss_sup.certificate").get<std::size_t>(), mask,
      rational_field(member(ss_cert, "coin_bias", "eps_ss_sup.certificate"),
                     "eps_ss_sup.coin_bias")};
  std::vector<Rational> ss_witness = rational_list(
      member(ss_cert, "message_dist", "eps_ss_sup.certificate"), "message_dist");

  return NotionReport{
      string_field(member(body, "input", "report"), "report.input"),
      std::move(messages),
      std::move(cryptograms),
      grid_resolution.get<unsigned>(),
      Caps{member(caps, "ss_cryptograms", "report.caps").get<std::size_t>(),
           member(caps, "ss_messages", "report.caps").get<std::size_t>(),
           member(caps, "distinguisher_tests", "report.caps").get<std::size_t>()},
      std::move(ind),
      std::move(ps_cs),
      std::move(cs_witness),
      std::move(ps_cm),
      std::move(cm_witness),
      std::move(ps_sm),
      std::move(sm_witness),
      std::move(ss),
      std::move(ss_witness)};
}

std::string render_cryptosystem(const Cryptosystem& system, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return cryptosystem_to_json_text(system);
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "key,probability,encryption,decryption\n";
      for (std::size_t k = 0; k < system.keys().size(); ++k) {
        std::vector<std::string> enc_parts;
        for (std::size_t m = 0; m < system.messages().size(); ++m) {
          enc_parts.push_back(system.messages().label(m) + ">" +
                              system.cryptograms().label(system.encrypt(m, k)));
        }
        std::vector<std::string> dec_parts;
        for (std::size_t c = 0; c < system.cryptograms().size(); ++c) {
          auto m = system.decrypt(c, k);
          dec_parts.push_back(system.cryptograms().label(c) + ">" +
                              (m ? system.messages().label(*m) : std::string("-")));
        }
        out << csv_escape(system.keys().label(k)) << ","
            << rational_to_string(system.key_dist().weight(k)) << ","
            << csv_escape(join(enc_parts, " ")) << "," << csv_escape(join(dec_parts, " "))
            << "\n";
      }
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << "cryptosystem: " << system.messages().size() << " messages, "
          << system.keys().size() << " keys, " << system.cryptograms().size()
          << " cryptograms\n";
      for (std::size_t k = 0; k < system.keys().size(); ++k) {
        out << system.keys().label(k) << " (probability "
            << rational_to_string(system.key_dist().weight(k)) << "):";
        for (std::size_t m = 0; m < system.messages().size(); ++m) {
          out << " " << system.messages().label(m) << "->"
              << system.cryptograms().label(system.encrypt(m, k));
        }
        out << "\n";
      }
      return out.str();
    }
  }
  throw Error(ErrorKind::validation, "unknown output format");
}

namespace {

ojson gap_sweep_json(const GapReport& report) {
  ojson sweeps;
  if (!report.grid_skip_reason.empty()) {
    sweeps["eps_ps_cs_sup"] = ojson{{"skipped", report.grid_skip_reason}};
    sweeps["eps_ps_cm_sup"] = ojson{{"skipped", report.grid_skip_reason}};
    sweeps["eps_ps_sm_sup"] = ojson{{"skipped", report.grid_skip_reason}};
  } else {
    sweeps["eps_ps_cs_sup"] = ojson{{"value", rational_to_string(report.cs_sup->value)}};
    sweeps["eps_ps_cm_sup"] = ojson{{"value", rational_to_string(report.cm_sup->value)}};
    sweeps["eps_ps_sm_sup"] = ojson{{"value", rational_to_string(report.sm_sup->value)}};
  }
  if (!report.ss_skip_reason.empty()) {
    sweeps["eps_ss_sup"] = ojson{{"skipped", report.ss_skip_reason}};
  } else {
    sweeps["eps_ss_sup"] = ojson{{"value", rational_to_string(report.ss_sup->value)}};
  }
  return sweeps;
}

}  // namespace

std::string render_gap_report(const GapReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      ojson body;
      body["degree"] = report.params.degree;
      body["delta"] = rational_to_string(report.params.delta);
      body["eps_ind"] = rational_to_string(report.ind.value);
      body["eps_ps_sm_uniform"] = rational_to_string(report.sm_uniform);
      body["posterior_distances"] = rationals_to_json(report.posterior_distances);
      body["revealing_mass"] = rational_to_string(report.insecure_mass);
      body["grid_resolution"] = report.grid_resolution;
      body["sweeps"] = gap_sweep_json(report);
      body["system"] = cryptosystem_to_json(report.system);
      return ojson{{"gap", std::move(body)}}.dump(2);
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "field,value\n";
      out << "degree," << report.params.degree << "\n";
      out << "delta," << rational_to_string(report.params.delta) << "\n";
      out << "eps_ind," << rational_to_string(report.ind.value) << "\n";
      out << "eps_ps_sm_uniform," << rational_to_string(report.sm_uniform) << "\n";
      std::vector<std::string> parts;
      for (const auto& d : report.posterior_distances) {
        parts.push_back(rational_to_string(d));
      }
      out << "posterior_distances," << csv_escape(join(parts, " ")) << "\n";
      out << "revealing_mass," << rational_to_string(report.insecure_mass) << "\n";
      auto sweep = [&](const char* name, const auto& optional_result,
                       const std::string& skip) {
        out << name << ",";
        if (!skip.empty()) {
          out << csv_escape("skipped: " + skip);
        } else {
          out << rational_to_string(optional_result->value);
        }
        out << "\n";
      };
      sweep("eps_ps_cs_sup", report.cs_sup, report.grid_skip_reason);
      sweep("eps_ps_cm_sup", report.cm_sup, report.grid_skip_reason);
      sweep("eps_ps_sm_sup", report.sm_sup, report.grid_skip_reason);
      sweep("eps_ss_sup", report.ss_sup, report.ss_skip_reason);
      out << "synthesized_keys," << report.system.keys().size() << "\n";
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << "gap family: degree " << report.params.degree << ", delta "
          << rational_to_string(report.params.delta) << "\n";
      out << "eps_ind = " << rational_to_string(report.ind.value) << " (messages "
          << report.system.messages().label(report.ind.message_a) << ", "
          << report.system.messages().label(report.ind.message_b) << ")\n";
      out << "eps_ps_sm under uniform messages = "
          << rational_to_string(report.sm_uniform) << "\n";
      std::vector<std::string> parts;
      for (const auto& d : report.posterior_distances) {
        parts.push_back(rational_to_string(d));
      }
      out << "posterior distances: " << join(parts, " ") << "\n";
      out << "revealing cryptograms c1, c2 carry total probability "
          << rational_to_string(report.insecure_mass) << "\n";
      auto sweep = [&](const char* name, const auto& optional_result,
                       const std::string& skip) {
        out << name << " = ";
        if (!skip.empty()) {
          out << "skipped (" << skip << ")";
        } else {
          out << rational_to_string(optional_result->value);
        }
        out << "\n";
      };
      out << "grid sweeps at resolution " << report.grid_resolution << ":\n";
      sweep("  eps_ps_cs_sup", report.cs_sup, report.grid_skip_reason);
      sweep("  eps_ps_cm_sup", report.cm_sup, report.grid_skip_reason);
      sweep("  eps_ps_sm_sup", report.sm_sup, report.grid_skip_reason);
      sweep("  eps_ss_sup", report.ss_sup, report.ss_skip_reason);
      out << "synthesized cipher uses " << report.system.keys().size() << " keys\n";
      return out.str();
    }
  }
  throw Error(ErrorKind::validation, "unknown output format");
}

namespace {

ojson tally_json(const CheckTally& tally) {
  return ojson{{"passed", tally.passed}, {"failed", tally.failed}, {"skipped", tally.skipped}};
}

}  // namespace

std::string render_verify_outcome(const VerifyOutcome& outcome, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      ojson body;
      body["seed"] = outcome.options.seed;
      body["count"] = outcome.options.count;
      body["min_size"] = outcome.options.min_size;
      body["max_size"] = outcome.options.max_size;
      body["grid_resolution"] = outcome.options.grid_resolution;
      body["checks"] = ojson{{"decomposition", tally_json(outcome.decomposition)},
                             {"marginal_equivalence", tally_json(outcome.marginal_equivalence)},
                             {"joint_bracket", tally_json(outcome.joint_bracket)},
                             {"semantic_bracket", tally_json(outcome.semantic_bracket)},
                             {"binary_lemma", tally_json(outcome.binary_lemma)},
                             {"subset_tests", tally_json(outcome.subset_tests)}};
      body["instances"] = outcome.instance_lines;
      body["failures"] = outcome.failures;
      body["all_passed"] = outcome.all_passed();
      return ojson{{"verify", std::move(body)}}.dump(2);
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "check,passed,failed,skipped\n";
      auto row = [&](const char* name, const CheckTally& tally) {
        out << name << "," << tally.passed << "," << tally.failed << "," << tally.skipped
            << "\n";
      };
      row("decomposition", outcome.decomposition);
      row("marginal_equivalence", outcome.marginal_equivalence);
      row("joint_bracket", outcome.joint_bracket);
      row("semantic_bracket", outcome.semantic_bracket);
      row("binary_lemma", outcome.binary_lemma);
      row("subset_tests", outcome.subset_tests);
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << "verify seed=" << outcome.options.seed << " count=" << outcome.options.count
          << " sizes=" << outcome.options.min_size << ".." << outcome.options.max_size
          << " grid=" << outcome.options.grid_resolution << "\n";
      for (const auto& line : outcome.instance_lines) {
        out << line << "\n";
      }
      auto row = [&](const char* name, const CheckTally& tally) {
        out << name << ": " << tally.passed << " passed, " << tally.failed << " failed, "
            << tally.skipped << " skipped\n";
      };
      row("decomposition", outcome.decomposition);
      row("marginal-equivalence", outcome.marginal_equivalence);
      row("joint-bracket", outcome.joint_bracket);
      row("semantic-bracket", outcome.semantic_bracket);
      row("binary-lemma", outcome.binary_lemma);
      row("subset-tests", outcome.subset_tests);
      for (const auto& failure : outcome.failures) {
        out << "counterexample: " << failure << "\n";
      }
      out << (outcome.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
      return out.str();
    }
  }
  throw Error(ErrorKind::validation, "unknown output format");
}

std::string render_lemma(const BinaryJoint& joint, const Lemma1Result& result,
                         OutputFormat format) {
  Rational cross = rational_abs(joint.p00 * joint.p11 - joint.p01 * joint.p10);
  switch (format) {
    case OutputFormat::json: {
      ojson body;
      body["joint"] = ojson{{"p00", rational_to_string(joint.p00)},
                            {"p01", rational_to_string(joint.p01)},
                            {"p10", rational_to_string(joint.p10)},
                            {"p11", rational_to_string(joint.p11)}};
      body["lhs"] = rational_to_string(result.lhs);
      body["rhs"] = rational_to_string(result.rhs);
      body["cross_term"] = rational_to_string(cross);
      body["bound_holds"] = result.lhs <= 2 * result.rhs;
      return ojson{{"lemma", std::move(body)}}.dump(2);
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "field,value\n";
      out << "p00," << rational_to_string(joint.p00) << "\n";
      out << "p01," << rational_to_string(joint.p01) << "\n";
      out << "p10," << rational_to_string(joint.p10) << "\n";
      out << "p11," << rational_to_string(joint.p11) << "\n";
      out << "lhs," << rational_to_string(result.lhs) << "\n";
      out << "rhs," << rational_to_string(result.rhs) << "\n";
      out << "cross_term," << rational_to_string(cross) << "\n";
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << "joint: p00=" << rational_to_string(joint.p00)
          << " p01=" << rational_to_string(joint.p01)
          << " p10=" << rational_to_string(joint.p10)
          << " p11=" << rational_to_string(joint.p11) << "\n";
      out << "agreement gap |Pr[X=Y] - Pr[X'=Y']|  = " << rational_to_string(result.lhs)
          << "\n";
      out << "worst single-symbol correlation gap = " << rational_to_string(result.rhs)
          << "\n";
      out << "|p00*p11 - p01*p10| = " << rational_to_string(cross) << "\n";
      out << "bound lhs <= 2*rhs " << (result.lhs <= 2 * result.rhs ? "holds" : "FAILS")
          << "\n";
      return out.str();
    }
  }
  throw Error(ErrorKind::validation, "unknown output format");
}

}  // namespace itsec
