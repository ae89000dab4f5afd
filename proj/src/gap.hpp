#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cryptosystem.hpp"
#include "notions.hpp"
#include "prob.hpp"
#include "synthesis.hpp"

namespace itsec {

// Family of doubly stochastic channels whose first two rows wobble around
// uniform by +-delta in opposite phase. Degree must be even and
// 0 < delta <= 1/degree.
struct GapParams {
  std::size_t degree = 4;
  Rational delta;
};

ChannelMatrix gap_matrix(const GapParams& params);

struct GapOptions {
  unsigned grid_resolution = 4;
  // Grid sweeps are skipped once the grid would exceed this many points, and
  // the semantic-security sweep is skipped above the cryptogram cap; the
  // closed-form quantities are computed at any size.
  std::size_t grid_point_limit = 2000;
  Caps caps{8, 8, kDefaultTestCap};
};

// Demonstration record for the family: indistinguishability stays at
// 2*delta while the posterior shift under uniform messages reaches
// degree*delta/2, concentrated on the first two cryptograms which together
// carry probability 2/degree. The closed forms are asserted against the
// measured values, and the synthesized cipher is verified to induce the
// matrix back.
struct GapReport {
  GapParams params;
  IndResult ind;                          // value 2*delta
  Rational sm_uniform;                    // degree*delta/2
  std::vector<Rational> posterior_distances;  // per cryptogram, uniform prior
  Rational insecure_mass;                 // 2/degree
  Cryptosystem system;
  unsigned grid_resolution;
  std::optional<PsCsSupResult> cs_sup;
  std::optional<PsCmSupResult> cm_sup;
  std::optional<PsSmSupResult> sm_sup;
  std::optional<SsSupResult> ss_sup;
  std::string grid_skip_reason;  // set when the grid sweeps were skipped
  std::string ss_skip_reason;    // set when the semantic-security sweep was skipped
};

GapReport gap_report(const GapParams& params, const GapOptions& options = {});

}  // namespace itsec
