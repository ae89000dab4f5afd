#pragma once

#include <cstddef>
#include <vector>

#include "alphabet.hpp"
#include "rational.hpp"

namespace itsec {

// Exact probability distribution over an Alphabet: nonnegative rational
// weights summing to exactly 1.
class Distribution {
 public:
  Distribution(Alphabet alphabet, std::vector<Rational> weights);

  static Distribution uniform(Alphabet alphabet);
  static Distribution point_mass(Alphabet alphabet, std::size_t index);
  static Distribution two_point_uniform(Alphabet alphabet, std::size_t first,
                                        std::size_t second);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& weight(std::size_t index) const { return weights_.at(index); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

 private:
  Alphabet alphabet_;
  std::vector<Rational> weights_;
};

bool operator==(const Distribution& a, const Distribution& b);

// Column-stochastic conditional family: one distribution over the cryptogram
// alphabet per message symbol. Entry (c, m) is the probability of cryptogram
// c given message m, i.e. column(m).weight(c).
class ChannelMatrix {
 public:
  ChannelMatrix(Alphabet messages, std::vector<Distribution> columns);

  const Alphabet& messages() const noexcept { return messages_; }
  const Alphabet& cryptograms() const noexcept;
  const Distribution& column(std::size_t message) const { return columns_.at(message); }
  const Rational& at(std::size_t cryptogram, std::size_t message) const {
    return columns_.at(message).weight(cryptogram);
  }
  std::size_t message_count() const noexcept { return messages_.size(); }
  std::size_t cryptogram_count() const noexcept { return cryptograms().size(); }
  bool square() const noexcept { return message_count() == cryptogram_count(); }

 private:
  Alphabet messages_;
  std::vector<Distribution> columns_;
};

bool operator==(const ChannelMatrix& a, const ChannelMatrix& b);

// Joint distribution over (cryptogram, message) pairs; probs[c][m].
class JointDistribution {
 public:
  JointDistribution(Alphabet cryptograms, Alphabet messages,
                    std::vector<std::vector<Rational>> probs);

  const Alphabet& cryptograms() const noexcept { return cryptograms_; }
  const Alphabet& messages() const noexcept { return messages_; }
  const Rational& at(std::size_t cryptogram, std::size_t message) const {
    return probs_.at(cryptogram).at(message);
  }

  Distribution cryptogram_marginal() const;
  Distribution message_marginal() const;

 private:
  Alphabet cryptograms_;
  Alphabet messages_;
  std::vector<std::vector<Rational>> probs_;
};

inline constexpr std::size_t kDefaultTestCap = 20;

// Variational distance d(p, q) = (1/2) * sum_i |p_i - q_i|.
// Both arguments must live on the same alphabet.
Rational variational_distance(const Distribution& p, const Distribution& q);
Rational variational_distance(const JointDistribution& p, const JointDistribution& q);

// Same quantity as max_{A subset of the alphabet} |p(A) - q(A)|, by
// enumerating all 2^n subsets. Refuses alphabets larger than cap.
Rational variational_distance_via_tests(const Distribution& p, const Distribution& q,
                                        std::size_t cap = kDefaultTestCap);

// P_C(c) = sum_m P_{C|M}(c|m) * P_M(m).
Distribution cryptogram_marginal(const ChannelMatrix& channel,
                                 const Distribution& message_dist);

// P_{CM}(c, m) = P_{C|M}(c|m) * P_M(m).
JointDistribution joint_distribution(const ChannelMatrix& channel,
                                     const Distribution& message_dist);

// P_{M|C}(.|c), defined only when P_C(c) > 0.
Distribution posterior(const ChannelMatrix& channel, const Distribution& message_dist,
                       std::size_t cryptogram);

// Independent product P_C x P_M on (cryptogram, message) pairs.
JointDistribution product_distribution(const Distribution& cryptogram_dist,
                                       const Distribution& message_dist);

// All distributions with weights j/resolution (the compositions of
// `resolution` into |alphabet| parts), augmented with every point mass and
// every two-point uniform so the known extremal witnesses are always present.
std::vector<Distribution> simplex_grid(const Alphabet& alphabet, unsigned resolution);

}  // namespace itsec
