#include "cryptosystem.hpp"

#include "error.hpp"

namespace itsec {

Cryptosystem::Cryptosystem(Alphabet messages, Alphabet keys, Alphabet cryptograms,
                           Distribution key_dist,
                           std::vector<std::vector<std::size_t>> enc_table,
                           std::vector<std::vector<std::optional<std::size_t>>> dec_table)
    : messages_(std::move(messages)),
      keys_(std::move(keys)),
      cryptograms_(std::move(cryptograms)),
      key_dist_(std::move(key_dist)),
      enc_table_(std::move(enc_table)),
      dec_table_(std::move(dec_table)) {
  if (!(key_dist_.alphabet() == keys_)) {
    throw Error(ErrorKind::alphabet_mismatch,
                "key distribution is not over the key alphabet");
  }
  if (enc_table_.size() != keys_.size() || dec_table_.size() != keys_.size()) {
    throw Error(ErrorKind::validation, "tables must cover every key");
  }
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    if (enc_table_[k].size() != messages_.size()) {
      throw Error(ErrorKind::validation,
                  "encryption table for key \"" + keys_.label(k) +
                      "\" must cover every message");
    }
    for (std::size_t c : enc_table_[k]) {
      if (c >= cryptograms_.size()) {
        throw Error(ErrorKind::validation, "encryption table entry out of range");
      }
    }
    if (dec_table_[k].size() != cryptograms_.size()) {
      throw Error(ErrorKind::validation,
                  "decryption table for key \"" + keys_.label(k) +
                      "\" must cover every cryptogram");
    }
    for (const auto& m : dec_table_[k]) {
      if (m && *m >= messages_.size()) {
        throw Error(ErrorKind::validation, "decryption table entry out of range");
      }
    }
  }
}

std::vector<CorrectnessViolation> check_correctness(const Cryptosystem& system) {
  std::vector<CorrectnessViolation> violations;
  for (std::size_t k = 0; k < system.keys().size(); ++k) {
    for (std::size_t m = 0; m < system.messages().size(); ++m) {
      std::size_t c = system.encrypt(m, k);
      auto back = system.decrypt(c, k);
      if (!back) {
        violations.push_back(
            {m, k,
             "decryption of \"" + system.cryptograms().label(c) + "\" under key \"" +
                 system.keys().label(k) + "\" is undefined"});
      } else if (*back != m) {
        violations.push_back(
            {m, k,
             "\"" + system.messages().label(m) + "\" encrypts to \"" +
                 system.cryptograms().label(c) + "\" under key \"" +
                 system.keys().label(k) + "\" but decrypts to \"" +
                 system.messages().label(*back) + "\""});
      }
    }
  }
  return violations;
}

ChannelMatrix induced_channel(const Cryptosystem& system) {
  if (auto violations = check_correctness(system); !violations.empty()) {
    throw Error(ErrorKind::validation,
                "cryptosystem is not correct: " + violations.front().detail);
  }
  std::size_t rows = system.cryptograms().size();
  std::vector<std::vector<Rational>> columns(
      system.messages().size(), std::vector<Rational>(rows, Rational(0)));
  for (std::size_t k = 0; k < system.keys().size(); ++k) {
    for (std::size_t m = 0; m < system.messages().size(); ++m) {
      columns[m][system.encrypt(m, k)] += system.key_dist().weight(k);
    }
  }
  std::vector<Distribution> dists;
  dists.reserve(columns.size());
  for (auto& column : columns) {
    dists.emplace_back(system.cryptograms(), std::move(column));
  }
  return ChannelMatrix(system.messages(), std::move(dists));
}

bool is_doubly_stochastic(const ChannelMatrix& channel) {
  if (!channel.square()) {
    throw Error(ErrorKind::not_applicable,
                "doubly stochastic test needs a square channel, got " +
                    std::to_string(channel.cryptogram_count()) + "x" +
                    std::to_string(channel.message_count()));
  }
  // Columns sum to 1 by construction; only the rows are in question.
  for (std::size_t c = 0; c < channel.cryptogram_count(); ++c) {
    Rational row = 0;
    for (std::size_t m = 0; m < channel.message_count(); ++m) {
      row += channel.at(c, m);
    }
    if (row != 1) return false;
  }
  return true;
}

}  // namespace itsec
