#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cryptosystem.hpp"
#include "prob.hpp"

namespace itsec {

// Enumeration limits for the semantic-security search, which is exponential
// in the alphabet sizes. Exceeding a cap raises ErrorKind::cap_exceeded.
struct Caps {
  std::size_t ss_cryptograms = 10;
  std::size_t ss_messages = 10;
  std::size_t distinguisher_tests = kDefaultTestCap;
};

// Indistinguishability: max pairwise distance between channel columns.
// The certificate is the first message pair attaining the maximum.
struct IndResult {
  Rational value;
  std::size_t message_a = 0;
  std::size_t message_b = 0;
};
IndResult eps_ind(const ChannelMatrix& channel);

// Perfect secrecy, ciphertext-only comparison form: how far any single
// message's column sits from the cryptogram marginal.
struct PsCsResult {
  Rational value;
  std::size_t message = 0;
};
PsCsResult eps_ps_cs(const ChannelMatrix& channel, const Distribution& message_dist);

struct PsCsSupResult {
  Rational value;
  std::size_t grid_index = 0;
  std::size_t message = 0;
};
// Max of eps_ps_cs over the grid. Equals eps_ind exactly whenever the grid
// contains the point masses; that identity is asserted.
PsCsSupResult eps_ps_cs_sup(const ChannelMatrix& channel,
                            const std::vector<Distribution>& grid);

// Perfect secrecy, joint-vs-product form.
Rational eps_ps_cm(const ChannelMatrix& channel, const Distribution& message_dist);

struct PsCmSupResult {
  Rational value;
  std::size_t grid_index = 0;
};
// Max over the grid; the bracket eps_ind/2 <= value <= eps_ind is asserted
// (the lower half needs the two-point uniforms in the grid).
PsCmSupResult eps_ps_cm_sup(const ChannelMatrix& channel,
                            const std::vector<Distribution>& grid);

// Perfect secrecy, posterior-vs-prior form: worst posterior shift over
// cryptograms with positive probability.
struct PsSmResult {
  Rational value;
  std::size_t cryptogram = 0;
};
PsSmResult eps_ps_sm(const ChannelMatrix& channel, const Distribution& message_dist);

struct PsSmSupResult {
  Rational value;
  std::size_t grid_index = 0;
  std::size_t cryptogram = 0;
};
// Max over the grid. This one is only a certified lower bound on the true
// supremum; no collapsing identity is known for it.
PsSmSupResult eps_ps_sm_sup(const ChannelMatrix& channel,
                            const std::vector<Distribution>& grid);

// Semantic security. For a binary cryptogram test f (bitmask over the
// cryptogram alphabet) the adversary's best advantage over all binary message
// predicates reduces to sum_m P_M(m) * |s_m - q| where s_m = Pr[f(C)=1 | m]
// and q is the simulator's coin bias; the optimal q is a weighted median of
// the s_m, so the value is exact. The certificate records f and that q.
struct SsResult {
  Rational value;
  std::uint64_t test_mask = 0;
  Rational coin_bias;
};
SsResult eps_ss(const ChannelMatrix& channel, const Distribution& message_dist,
                const Caps& caps = {});

struct SsSupResult {
  Rational value;
  std::size_t grid_index = 0;
  std::uint64_t test_mask = 0;
  Rational coin_bias;
};
// Max over the grid; the bracket eps_ind/4 <= value <= eps_ind is asserted.
SsSupResult eps_ss_sup(const ChannelMatrix& channel,
                       const std::vector<Distribution>& grid, const Caps& caps = {});

// Best advantage of a (f, h) pair at telling the real cryptogram from one
// drawn for an independent message: max |Pr[f(C)=h(M)] - Pr[f(C*)=h(M)]|,
// enumerated over all binary f and h. Sits between eps_ss and eps_ind.
Rational ss_witness_bound(const ChannelMatrix& channel, const Distribution& message_dist,
                          const Caps& caps = {});

// Joint distribution of two bits; p01 is Pr[X=0, Y=1].
struct BinaryJoint {
  Rational p00, p01, p10, p11;
  void validate() const;
};

// Compares the distance of a two-bit joint from the product of its marginals
// (lhs) with the best single-symbol agreement gap (rhs); lhs = 2 * rhs holds
// identically, making the agreement form lossless up to the factor 2.
struct Lemma1Result {
  Rational lhs;
  Rational rhs;
};
Lemma1Result lemma1_check(const BinaryJoint& joint);

struct AnalyzeOptions {
  unsigned grid_resolution = 4;
  Caps caps;
};

// Everything analyze computes, with enough certificate data to reproduce
// each value by hand.
struct NotionReport {
  std::string input_kind;  // "channel" | "cryptosystem"
  Alphabet messages;
  Alphabet cryptograms;
  unsigned grid_resolution = 4;
  Caps caps;
  IndResult ind;
  PsCsSupResult ps_cs;
  std::vector<Rational> ps_cs_witness;
  PsCmSupResult ps_cm;
  std::vector<Rational> ps_cm_witness;
  PsSmSupResult ps_sm;
  std::vector<Rational> ps_sm_witness;
  SsSupResult ss;
  std::vector<Rational> ss_witness;

  bool equals(const NotionReport& other) const;
};

NotionReport analyze(const ChannelMatrix& channel, const AnalyzeOptions& options = {},
                     const std::string& input_kind = "channel");
NotionReport analyze(const Cryptosystem& system, const AnalyzeOptions& options = {});

}  // namespace itsec
