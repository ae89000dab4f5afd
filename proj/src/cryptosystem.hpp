#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prob.hpp"

namespace itsec {

// Symmetric-key cipher over finite alphabets: an encryption table indexed by
// (key, message), a decryption table indexed by (key, cryptogram), and a key
// distribution. Construction checks shapes and index ranges only; whether
// decryption actually inverts encryption is check_correctness's question, so
// broken ciphers can be built and reported on.
class Cryptosystem {
 public:
  Cryptosystem(Alphabet messages, Alphabet keys, Alphabet cryptograms,
               Distribution key_dist,
               std::vector<std::vector<std::size_t>> enc_table,
               std::vector<std::vector<std::optional<std::size_t>>> dec_table);

  const Alphabet& messages() const noexcept { return messages_; }
  const Alphabet& keys() const noexcept { return keys_; }
  const Alphabet& cryptograms() const noexcept { return cryptograms_; }
  const Distribution& key_dist() const noexcept { return key_dist_; }

  std::size_t encrypt(std::size_t message, std::size_t key) const {
    return enc_table_.at(key).at(message);
  }
  std::optional<std::size_t> decrypt(std::size_t cryptogram, std::size_t key) const {
    return dec_table_.at(key).at(cryptogram);
  }

  const std::vector<std::vector<std::size_t>>& enc_table() const noexcept {
    return enc_table_;
  }
  const std::vector<std::vector<std::optional<std::size_t>>>& dec_table() const noexcept {
    return dec_table_;
  }

 private:
  Alphabet messages_;
  Alphabet keys_;
  Alphabet cryptograms_;
  Distribution key_dist_;
  std::vector<std::vector<std::size_t>> enc_table_;
  std::vector<std::vector<std::optional<std::size_t>>> dec_table_;
};

struct CorrectnessViolation {
  std::size_t message;
  std::size_t key;
  std::string detail;
};

// Empty result means every message decrypts back under every key. Decryption
// entries for cryptograms outside a key's encryption image are not
// constrained; a missing entry on the image is a violation.
std::vector<CorrectnessViolation> check_correctness(const Cryptosystem& system);

// P_{C|M}(c|m) = sum of key probabilities over keys encrypting m to c.
// Requires a correct cryptosystem.
ChannelMatrix induced_channel(const Cryptosystem& system);

// Every row and every column sums to 1. Only square channels qualify.
bool is_doubly_stochastic(const ChannelMatrix& channel);

}  // namespace itsec
