#include "notions.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace itsec {

namespace {

void require_ss_caps(const ChannelMatrix& channel, const Caps& caps) {
  std::size_t c = channel.cryptogram_count();
  std::size_t m = channel.message_count();
  if (c > caps.ss_cryptograms || c > 62) {
    throw Error(ErrorKind::cap_exceeded,
                "semantic security enumerates 2^" + std::to_string(c) +
                    " cryptogram tests, above the cap of " +
                    std::to_string(caps.ss_cryptograms));
  }
  if (m > caps.ss_messages || m > 62) {
    throw Error(ErrorKind::cap_exceeded,
                "semantic security enumerates 2^" + std::to_string(m) +
                    " message predicates, above the cap of " +
                    std::to_string(caps.ss_messages));
  }
}

// min over q of sum_m weight_m * |s_m - q|, attained at a weighted median.
// Returns the minimum and sets q_out to the median used.
Rational weighted_deviation_minimum(const std::vector<Rational>& s,
                                    const std::vector<Rational>& weight,
                                    Rational& q_out) {
  std::size_t n = s.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (s[a] != s[b]) return s[a] < s[b];
    return a < b;
  });
  Rational cumulative = 0;
  std::size_t median = order.back();
  for (std::size_t i : order) {
    cumulative += weight[i];
    if (2 * cumulative >= 1) {
      median = i;
      break;
    }
  }
  q_out = s[median];
  Rational total = 0;
  for (std::size_t m = 0; m < n; ++m) {
    if (weight[m] == 0) continue;
    total += weight[m] * rational_abs(s[m] - q_out);
  }
  return total;
}

}  // namespace

IndResult eps_ind(const ChannelMatrix& channel) {
  IndResult result{Rational(0), 0, 0};
  for (std::size_t a = 0; a < channel.message_count(); ++a) {
    for (std::size_t b = a + 1; b < channel.message_count(); ++b) {
      Rational d = variational_distance(channel.column(a), channel.column(b));
      if (d > result.value) {
        result = {std::move(d), a, b};
      }
    }
  }
  return result;
}

PsCsResult eps_ps_cs(const ChannelMatrix& channel, const Distribution& message_dist) {
  Distribution marginal = cryptogram_marginal(channel, message_dist);
  PsCsResult result{Rational(0), 0};
  for (std::size_t m = 0; m < channel.message_count(); ++m) {
    Rational d = variational_distance(channel.column(m), marginal);
    if (d > result.value) {
      result = {std::move(d), m};
    }
  }
  return result;
}

PsCsSupResult eps_ps_cs_sup(const ChannelMatrix& channel,
                            const std::vector<Distribution>& grid) {
  if (grid.empty()) {
    throw Error(ErrorKind::validation, "grid must not be empty");
  }
  PsCsSupResult result{Rational(0), 0, 0};
  for (std::size_t g = 0; g < grid.size(); ++g) {
    PsCsResult inner = eps_ps_cs(channel, grid[g]);
    if (inner.value > result.value) {
      result = {std::move(inner.value), g, inner.message};
    }
  }
  Rational ind = eps_ind(channel).value;
  if (result.value != ind) {
    throw Error(ErrorKind::invariant_violation,
                "ciphertext-only supremum " + rational_to_string(result.value) +
                    " differs from eps_ind " + rational_to_string(ind));
  }
  return result;
}

Rational eps_ps_cm(const ChannelMatrix& channel, const Distribution& message_dist) {
  JointDistribution observed = joint_distribution(channel, message_dist);
  JointDistribution independent =
      product_distribution(cryptogram_marginal(channel, message_dist), message_dist);
  return variational_distance(observed, independent);
}

PsCmSupResult eps_ps_cm_sup(const ChannelMatrix& channel,
                            const std::vector<Distribution>& grid) {
  if (grid.empty()) {
    throw Error(ErrorKind::validation, "grid must not be empty");
  }
  PsCmSupResult result{Rational(0), 0};
  for (std::size_t g = 0; g < grid.size(); ++g) {
    Rational value = eps_ps_cm(channel, grid[g]);
    if (value > result.value) {
      result = {std::move(value), g};
    }
  }
  Rational ind = eps_ind(channel).value;
  if (2 * result.value < ind || result.value > ind) {
    throw Error(ErrorKind::invariant_violation,
                "joint-form supremum " + rational_to_string(result.value) +
                    " leaves the bracket [" + rational_to_string(ind / 2) + ", " +
                    rational_to_string(ind) + "]");
  }
  return result;
}

PsSmResult eps_ps_sm(const ChannelMatrix& channel, const Distribution& message_dist) {
  Distribution marginal = cryptogram_marginal(channel, message_dist);
  PsSmResult result{Rational(0), 0};
  for (std::size_t c = 0; c < channel.cryptogram_count(); ++c) {
    if (marginal.weight(c) == 0) continue;
    Rational d = variational_distance(posterior(channel, message_dist, c), message_dist);
    if (d > result.value) {
      result = {std::move(d), c};
    }
  }
  return result;
}

PsSmSupResult eps_ps_sm_sup(const ChannelMatrix& channel,
                            const std::vector<Distribution>& grid) {
  if (grid.empty()) {
    throw Error(ErrorKind::validation, "grid must not be empty");
  }
  PsSmSupResult result{Rational(0), 0, 0};
  for (std::size_t g = 0; g < grid.size(); ++g) {
    PsSmResult inner = eps_ps_sm(channel, grid[g]);
    if (inner.value > result.value) {
      result = {std::move(inner.value), g, inner.cryptogram};
    }
  }
  return result;
}

SsResult eps_ss(const ChannelMatrix& channel, const Distribution& message_dist,
                const Caps& caps) {
  if (!(channel.messages() == message_dist.alphabet())) {
    throw Error(ErrorKind::alphabet_mismatch,
                "channel and message distribution must share one alphabet");
  }
  require_ss_caps(channel, caps);
  std::size_t message_count = channel.message_count();
  std::size_t cryptogram_count = channel.cryptogram_count();

  // s[m] tracks Pr[f(C)=1 | m] while f walks the masks in Gray-code order.
  std::vector<Rational> s(message_count, Rational(0));
  SsResult result{Rational(0), 0, Rational(0)};
  for (std::uint64_t i = 1; i < (1ULL << cryptogram_count); ++i) {
    unsigned c = static_cast<unsigned>(std::countr_zero(i));
    std::uint64_t mask = i ^ (i >> 1);
    bool now_in = (mask >> c) & 1ULL;
    for (std::size_t m = 0; m < message_count; ++m) {
      if (now_in) {
        s[m] += channel.at(c, m);
      } else {
        s[m] -= channel.at(c, m);
      }
    }
    Rational q;
    Rational value = weighted_deviation_minimum(s, message_dist.weights(), q);
    if (value > result.value) {
      result = {std::move(value), mask, std::move(q)};
    }
  }
  return result;
}

SsSupResult eps_ss_sup(const ChannelMatrix& channel,
                       const std::vector<Distribution>& grid, const Caps& caps) {
  if (grid.empty()) {
    throw Error(ErrorKind::validation, "grid must not be empty");
  }
  SsSupResult result{Rational(0), 0, 0, Rational(0)};
  for (std::size_t g = 0; g < grid.size(); ++g) {
    SsResult inner = eps_ss(channel, grid[g], caps);
    if (inner.value > result.value) {
      result = {std::move(inner.value), g, inner.test_mask, std::move(inner.coin_bias)};
    }
  }
  Rational ind = eps_ind(channel).value;
  if (4 * result.value < ind || result.value > ind) {
    throw Error(ErrorKind::invariant_violation,
                "semantic-security supremum " + rational_to_string(result.value) +
                    " leaves the bracket [" + rational_to_string(ind / 4) + ", " +
                    rational_to_string(ind) + "]");
  }
  return result;
}

Rational ss_witness_bound(const ChannelMatrix& channel, const Distribution& message_dist,
                          const Caps& caps) {
  if (!(channel.messages() == message_dist.alphabet())) {
    throw Error(ErrorKind::alphabet_mismatch,
                "channel and message distribution must share one alphabet");
  }
  require_ss_caps(channel, caps);
  std::size_t message_count = channel.message_count();
  std::size_t cryptogram_count = channel.cryptogram_count();

  std::vector<Rational> s(message_count, Rational(0));
  Rational s_mean = 0;  // Pr[f(C)=1] under the real pair, = Pr[f(C*)=1]
  Rational best = 0;
  for (std::uint64_t i = 1; i < (1ULL << cryptogram_count); ++i) {
    unsigned c = static_cast<unsigned>(std::countr_zero(i));
    bool now_in = (((i ^ (i >> 1)) >> c) & 1ULL) != 0;
    for (std::size_t m = 0; m < message_count; ++m) {
      const Rational& step = channel.at(c, m);
      if (now_in) {
        s[m] += step;
        s_mean += step * message_dist.weight(m);
      } else {
        s[m] -= step;
        s_mean -= step * message_dist.weight(m);
      }
    }
    // Walk the message predicates h the same way. agreement tracks
    // Pr[f(C)=h(M)]; the independent baseline needs only Pr[h(M)=1].
    Rational agreement = 0;
    Rational h_mass = 0;
    for (std::size_t m = 0; m < message_count; ++m) {
      agreement += message_dist.weight(m) * (1 - s[m]);
    }
    Rational baseline_slope = 2 * s_mean - 1;
    Rational gap = rational_abs(agreement - (1 - s_mean));
    if (gap > best) best = gap;
    for (std::uint64_t j = 1; j < (1ULL << message_count); ++j) {
      unsigned m = static_cast<unsigned>(std::countr_zero(j));
      bool m_in = (((j ^ (j >> 1)) >> m) & 1ULL) != 0;
      const Rational& w = message_dist.weight(m);
      if (m_in) {
        agreement += w * (2 * s[m] - 1);
        h_mass += w;
      } else {
        agreement -= w * (2 * s[m] - 1);
        h_mass -= w;
      }
      Rational independent = (1 - s_mean) + h_mass * baseline_slope;
      gap = rational_abs(agreement - independent);
      if (gap > best) best = gap;
    }
  }
  return best;
}

void BinaryJoint::validate() const {
  for (const Rational* p : {&p00, &p01, &p10, &p11}) {
    if (*p < 0) {
      throw Error(ErrorKind::validation, "negative probability in binary joint");
    }
  }
  if (p00 + p01 + p10 + p11 != 1) {
    throw Error(ErrorKind::validation, "binary joint probabilities must sum to 1");
  }
}

Lemma1Result lemma1_check(const BinaryJoint& joint) {
  joint.validate();
  Rational x0 = joint.p00 + joint.p01;
  Rational x1 = joint.p10 + joint.p11;
  Rational y0 = joint.p00 + joint.p10;
  Rational y1 = joint.p01 + joint.p11;
  Rational lhs = rational_abs(joint.p00 + joint.p11 - (x0 * y0 + x1 * y1));
  Rational rhs = std::max(rational_abs(joint.p00 - x0 * y0),
                          rational_abs(joint.p11 - x1 * y1));
  return {std::move(lhs), std::move(rhs)};
}

bool NotionReport::equals(const NotionReport& other) const {
  return input_kind == other.input_kind && messages == other.messages &&
         cryptograms == other.cryptograms &&
         grid_resolution == other.grid_resolution &&
         caps.ss_cryptograms == other.caps.ss_cryptograms &&
         caps.ss_messages == other.caps.ss_messages &&
         caps.distinguisher_tests == other.caps.distinguisher_tests &&
         ind.value == other.ind.value && ind.message_a == other.ind.message_a &&
         ind.message_b == other.ind.message_b && ps_cs.value == other.ps_cs.value &&
         ps_cs.grid_index == other.ps_cs.grid_index &&
         ps_cs.message == other.ps_cs.message && ps_cs_witness == other.ps_cs_witness &&
         ps_cm.value == other.ps_cm.value && ps_cm.grid_index == other.ps_cm.grid_index &&
         ps_cm_witness == other.ps_cm_witness && ps_sm.value == other.ps_sm.value &&
         ps_sm.grid_index == other.ps_sm.grid_index &&
         ps_sm.cryptogram == other.ps_sm.cryptogram &&
         ps_sm_witness == other.ps_sm_witness && ss.value == other.ss.value &&
         ss.grid_index == other.ss.grid_index && ss.test_mask == other.ss.test_mask &&
         ss.coin_bias == other.ss.coin_bias && ss_witness == other.ss_witness;
}

NotionReport analyze(const ChannelMatrix& channel, const AnalyzeOptions& options,
                     const std::string& input_kind) {
  std::vector<Distribution> grid = simplex_grid(channel.messages(), options.grid_resolution);
  IndResult ind = eps_ind(channel);
  PsCsSupResult ps_cs = eps_ps_cs_sup(channel, grid);
  PsCmSupResult ps_cm = eps_ps_cm_sup(channel, grid);
  PsSmSupResult ps_sm = eps_ps_sm_sup(channel, grid);
  SsSupResult ss = eps_ss_sup(channel, grid, options.caps);
  return NotionReport{input_kind,
                      channel.messages(),
                      channel.cryptograms(),
                      options.grid_resolution,
                      options.caps,
                      ind,
                      ps_cs,
                      grid[ps_cs.grid_index].weights(),
                      ps_cm,
                      grid[ps_cm.grid_index].weights(),
                      ps_sm,
                      grid[ps_sm.grid_index].weights(),
                      ss,
                      grid[ss.grid_index].weights()};
}

NotionReport analyze(const Cryptosystem& system, const AnalyzeOptions& options) {
  return analyze(induced_channel(system), options, "cryptosystem");
}

}  // namespace itsec
