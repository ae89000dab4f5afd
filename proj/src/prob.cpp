#include "prob.hpp"

#include <bit>

#include "error.hpp"

namespace itsec {

namespace {

void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorKind::alphabet_mismatch,
                std::string(what) + " must share one alphabet");
  }
}

Rational sum_of(const std::vector<Rational>& weights) {
  Rational total = 0;
  for (const auto& w : weights) total += w;
  return total;
}

}  // namespace

Distribution::Distribution(Alphabet alphabet, std::vector<Rational> weights)
    : alphabet_(std::move(alphabet)), weights_(std::move(weights)) {
  if (weights_.size() != alphabet_.size()) {
    throw Error(ErrorKind::validation,
                "distribution has " + std::to_string(weights_.size()) +
                    " weights for " + std::to_string(alphabet_.size()) + " symbols");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw Error(ErrorKind::validation,
                  "negative weight at symbol \"" + alphabet_.label(i) + "\"");
    }
  }
  if (Rational total = sum_of(weights_); total != 1) {
    throw Error(ErrorKind::validation,
                "weights sum to " + rational_to_string(total) + ", expected 1");
  }
}

Distribution Distribution::uniform(Alphabet alphabet) {
  std::size_t n = alphabet.size();
  std::vector<Rational> weights(n, Rational(1, static_cast<unsigned long>(n)));
  return Distribution(std::move(alphabet), std::move(weights));
}

Distribution Distribution::point_mass(Alphabet alphabet, std::size_t index) {
  if (index >= alphabet.size()) {
    throw Error(ErrorKind::validation, "point mass index out of range");
  }
  std::vector<Rational> weights(alphabet.size(), Rational(0));
  weights[index] = 1;
  return Distribution(std::move(alphabet), std::move(weights));
}

Distribution Distribution::two_point_uniform(Alphabet alphabet, std::size_t first,
                                             std::size_t second) {
  if (first >= alphabet.size() || second >= alphabet.size() || first == second) {
    throw Error(ErrorKind::validation, "two-point uniform needs two distinct symbols");
  }
  std::vector<Rational> weights(alphabet.size(), Rational(0));
  weights[first] = Rational(1, 2);
  weights[second] = Rational(1, 2);
  return Distribution(std::move(alphabet), std::move(weights));
}

bool operator==(const Distribution& a, const Distribution& b) {
  return a.alphabet() == b.alphabet() && a.weights() == b.weights();
}

ChannelMatrix::ChannelMatrix(Alphabet messages, std::vector<Distribution> columns)
    : messages_(std::move(messages)), columns_(std::move(columns)) {
  if (columns_.size() != messages_.size()) {
    throw Error(ErrorKind::validation,
                "channel has " + std::to_string(columns_.size()) +
                    " columns for " + std::to_string(messages_.size()) + " messages");
  }
  for (std::size_t m = 1; m < columns_.size(); ++m) {
    require_same_alphabet(columns_[m].alphabet(), columns_[0].alphabet(),
                          "channel columns");
  }
}

const Alphabet& ChannelMatrix::cryptograms() const noexcept {
  return columns_.front().alphabet();
}

bool operator==(const ChannelMatrix& a, const ChannelMatrix& b) {
  if (!(a.messages() == b.messages()) || !(a.cryptograms() == b.cryptograms())) {
    return false;
  }
  for (std::size_t m = 0; m < a.message_count(); ++m) {
    if (!(a.column(m) == b.column(m))) return false;
  }
  return true;
}

JointDistribution::JointDistribution(Alphabet cryptograms, Alphabet messages,
                                     std::vector<std::vector<Rational>> probs)
    : cryptograms_(std::move(cryptograms)),
      messages_(std::move(messages)),
      probs_(std::move(probs)) {
  if (probs_.size() != cryptograms_.size()) {
    throw Error(ErrorKind::validation, "joint distribution has wrong row count");
  }
  Rational total = 0;
  for (std::size_t c = 0; c < probs_.size(); ++c) {
    if (probs_[c].size() != messages_.size()) {
      throw Error(ErrorKind::validation, "joint distribution has wrong column count");
    }
    for (const auto& p : probs_[c]) {
      if (p < 0) throw Error(ErrorKind::validation, "negative joint probability");
      total += p;
    }
  }
  if (total != 1) {
    throw Error(ErrorKind::validation,
                "joint probabilities sum to " + rational_to_string(total) + ", expected 1");
  }
}

Distribution JointDistribution::cryptogram_marginal() const {
  std::vector<Rational> weights(cryptograms_.size(), Rational(0));
  for (std::size_t c = 0; c < cryptograms_.size(); ++c) {
    for (const auto& p : probs_[c]) weights[c] += p;
  }
  return Distribution(cryptograms_, std::move(weights));
}

Distribution JointDistribution::message_marginal() const {
  std::vector<Rational> weights(messages_.size(), Rational(0));
  for (const auto& row : probs_) {
    for (std::size_t m = 0; m < row.size(); ++m) weights[m] += row[m];
  }
  return Distribution(messages_, std::move(weights));
}

Rational variational_distance(const Distribution& p, const Distribution& q) {
  require_same_alphabet(p.alphabet(), q.alphabet(), "distance arguments");
  Rational total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    total += rational_abs(p.weight(i) - q.weight(i));
  }
  return total / 2;
}

Rational variational_distance(const JointDistribution& p, const JointDistribution& q) {
  require_same_alphabet(p.cryptograms(), q.cryptograms(), "distance arguments");
  require_same_alphabet(p.messages(), q.messages(), "distance arguments");
  Rational total = 0;
  for (std::size_t c = 0; c < p.cryptograms().size(); ++c) {
    for (std::size_t m = 0; m < p.messages().size(); ++m) {
      total += rational_abs(p.at(c, m) - q.at(c, m));
    }
  }
  return total / 2;
}

Rational variational_distance_via_tests(const Distribution& p, const Distribution& q,
                                        std::size_t cap) {
  require_same_alphabet(p.alphabet(), q.alphabet(), "distance arguments");
  std::size_t n = p.size();
  if (n > cap || n > 62) {
    throw Error(ErrorKind::cap_exceeded,
                "subset enumeration over " + std::to_string(n) +
                    " symbols exceeds the cap of " + std::to_string(cap));
  }
  // Walk subsets in Gray-code order; each step toggles one symbol in the
  // running advantage p(A) - q(A).
  std::vector<Rational> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = p.weight(i) - q.weight(i);
  Rational advantage = 0;
  Rational best = 0;
  for (unsigned long long i = 1; i < (1ULL << n); ++i) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(i));
    bool now_in = ((i ^ (i >> 1)) >> bit) & 1ULL;
    if (now_in) {
      advantage += diff[bit];
    } else {
      advantage -= diff[bit];
    }
    Rational magnitude = rational_abs(advantage);
    if (magnitude > best) best = magnitude;
  }
  return best;
}

Distribution cryptogram_marginal(const ChannelMatrix& channel,
                                 const Distribution& message_dist) {
  require_same_alphabet(channel.messages(), message_dist.alphabet(),
                        "channel and message distribution");
  std::vector<Rational> weights(channel.cryptogram_count(), Rational(0));
  for (std::size_t m = 0; m < channel.message_count(); ++m) {
    const Rational& pm = message_dist.weight(m);
    if (pm == 0) continue;
    for (std::size_t c = 0; c < weights.size(); ++c) {
      weights[c] += channel.at(c, m) * pm;
    }
  }
  return Distribution(channel.cryptograms(), std::move(weights));
}

JointDistribution joint_distribution(const ChannelMatrix& channel,
                                     const Distribution& message_dist) {
  require_same_alphabet(channel.messages(), message_dist.alphabet(),
                        "channel and message distribution");
  std::vector<std::vector<Rational>> probs(
      channel.cryptogram_count(), std::vector<Rational>(channel.message_count()));
  for (std::size_t c = 0; c < channel.cryptogram_count(); ++c) {
    for (std::size_t m = 0; m < channel.message_count(); ++m) {
      probs[c][m] = channel.at(c, m) * message_dist.weight(m);
    }
  }
  return JointDistribution(channel.cryptograms(), channel.messages(), std::move(probs));
}

Distribution posterior(const ChannelMatrix& channel, const Distribution& message_dist,
                       std::size_t cryptogram) {
  require_same_alphabet(channel.messages(), message_dist.alphabet(),
                        "channel and message distribution");
  if (cryptogram >= channel.cryptogram_count()) {
    throw Error(ErrorKind::validation, "cryptogram index out of range");
  }
  Rational pc = 0;
  for (std::size_t m = 0; m < channel.message_count(); ++m) {
    pc += channel.at(cryptogram, m) * message_dist.weight(m);
  }
  if (pc == 0) {
    throw Error(ErrorKind::undefined_conditioning,
                "cryptogram \"" + channel.cryptograms().label(cryptogram) +
                    "\" has probability zero, posterior undefined");
  }
  std::vector<Rational> weights(channel.message_count());
  for (std::size_t m = 0; m < channel.message_count(); ++m) {
    weights[m] = channel.at(cryptogram, m) * message_dist.weight(m) / pc;
  }
  return Distribution(channel.messages(), std::move(weights));
}

JointDistribution product_distribution(const Distribution& cryptogram_dist,
                                       const Distribution& message_dist) {
  std::vector<std::vector<Rational>> probs(
      cryptogram_dist.size(), std::vector<Rational>(message_dist.size()));
  for (std::size_t c = 0; c < cryptogram_dist.size(); ++c) {
    for (std::size_t m = 0; m < message_dist.size(); ++m) {
      probs[c][m] = cryptogram_dist.weight(c) * message_dist.weight(m);
    }
  }
  return JointDistribution(cryptogram_dist.alphabet(), message_dist.alphabet(),
                           std::move(probs));
}

namespace {

void compositions_into(const Alphabet& alphabet, unsigned resolution,
                       std::vector<unsigned>& parts, std::size_t position,
                       unsigned remaining, std::vector<Distribution>& out) {
  if (position + 1 == parts.size()) {
    parts[position] = remaining;
    std::vector<Rational> weights(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      weights[i] = Rational(parts[i], resolution);
      weights[i].canonicalize();
    }
    out.emplace_back(alphabet, std::move(weights));
    return;
  }
  for (unsigned take = remaining + 1; take-- > 0;) {
    parts[position] = take;
    compositions_into(alphabet, resolution, parts, position + 1, remaining - take, out);
  }
}

}  // namespace

std::vector<Distribution> simplex_grid(const Alphabet& alphabet, unsigned resolution) {
  if (resolution == 0) {
    throw Error(ErrorKind::validation, "grid resolution must be at least 1");
  }
  std::vector<Distribution> grid;
  std::vector<unsigned> parts(alphabet.size(), 0);
  compositions_into(alphabet, resolution, parts, 0, resolution, grid);
  // Point masses are compositions for every resolution. Two-point uniforms
  // are compositions exactly when the resolution is even, so appending them
  // for odd resolutions keeps the witness families present without duplicates.
  if (resolution % 2 == 1) {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
        grid.push_back(Distribution::two_point_uniform(alphabet, i, j));
      }
    }
  }
  return grid;
}

}  // namespace itsec
