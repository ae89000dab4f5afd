#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "notions.hpp"
#include "prob.hpp"

namespace itsec {

// All randomness flows through one seeded engine with explicit modulo draws,
// so a (seed, count) pair pins the whole instance stream byte for byte.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % bound);
  }

 private:
  std::mt19937_64 engine_;
};

// Convex mixture of random permutation matrices with small rational weights:
// doubly stochastic by construction, exact by construction.
ChannelMatrix random_doubly_stochastic(DeterministicRng& rng, std::size_t degree);

Distribution random_distribution(DeterministicRng& rng, const Alphabet& alphabet);

BinaryJoint random_binary_joint(DeterministicRng& rng);

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::size_t min_size = 2;
  std::size_t max_size = 6;
  unsigned grid_resolution = 4;
  Caps caps;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

// One randomized sweep over the library's asserted properties: every
// instance gets a synthesized-cipher round trip, the marginal-form
// equivalence with indistinguishability, both bracket theorems, the two-bit
// lemma identity, and the subset-test form of the distance.
struct VerifyOutcome {
  VerifyOptions options;
  CheckTally decomposition;
  CheckTally marginal_equivalence;
  CheckTally joint_bracket;
  CheckTally semantic_bracket;
  CheckTally binary_lemma;
  CheckTally subset_tests;
  std::vector<std::string> instance_lines;
  std::vector<std::string> failures;  // serialized counterexamples

  bool all_passed() const {
    for (const CheckTally* tally :
         {&decomposition, &marginal_equivalence, &joint_bracket, &semantic_bracket,
          &binary_lemma, &subset_tests}) {
      if (tally->failed != 0) return false;
    }
    return true;
  }
};

VerifyOutcome verify_theorems(const VerifyOptions& options);

}  // namespace itsec
