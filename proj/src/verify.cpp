#include "verify.hpp"

#include <numeric>

#include "error.hpp"
#include "serialize.hpp"
#include "synthesis.hpp"

namespace itsec {

namespace {

std::vector<std::size_t> random_permutation(DeterministicRng& rng, std::size_t degree) {
  std::vector<std::size_t> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = degree; i-- > 1;) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }
  return perm;
}

std::vector<Rational> random_weights(DeterministicRng& rng, std::size_t count,
                                     std::size_t numerator_bound) {
  std::vector<unsigned long> numerators(count);
  unsigned long total = 0;
  do {
    total = 0;
    for (auto& numerator : numerators) {
      numerator = static_cast<unsigned long>(rng.below(numerator_bound));
      total += numerator;
    }
  } while (total == 0);
  std::vector<Rational> weights(count);
  for (std::size_t i = 0; i < count; ++i) {
    weights[i] = Rational(numerators[i], total);
    weights[i].canonicalize();
  }
  return weights;
}

}  // namespace

ChannelMatrix random_doubly_stochastic(DeterministicRng& rng, std::size_t degree) {
  std::size_t term_count = 1 + rng.below(degree);
  std::vector<std::vector<std::size_t>> perms;
  perms.reserve(term_count);
  for (std::size_t t = 0; t < term_count; ++t) {
    perms.push_back(random_permutation(rng, degree));
  }
  // Positive weights, so every permutation actually shows up in the support.
  std::vector<Rational> weights(term_count);
  unsigned long total = 0;
  std::vector<unsigned long> numerators(term_count);
  for (auto& numerator : numerators) {
    numerator = 1 + static_cast<unsigned long>(rng.below(60));
    total += numerator;
  }
  for (std::size_t t = 0; t < term_count; ++t) {
    weights[t] = Rational(numerators[t], total);
    weights[t].canonicalize();
  }

  std::vector<std::vector<Rational>> columns(degree,
                                             std::vector<Rational>(degree, Rational(0)));
  for (std::size_t t = 0; t < term_count; ++t) {
    for (std::size_t m = 0; m < degree; ++m) {
      columns[m][perms[t][m]] += weights[t];
    }
  }
  Alphabet cryptograms = Alphabet::indexed("c", degree);
  std::vector<Distribution> dists;
  dists.reserve(degree);
  for (auto& column : columns) {
    dists.emplace_back(cryptograms, std::move(column));
  }
  return ChannelMatrix(Alphabet::indexed("m", degree), std::move(dists));
}

Distribution random_distribution(DeterministicRng& rng, const Alphabet& alphabet) {
  return Distribution(alphabet, random_weights(rng, alphabet.size(), 8));
}

BinaryJoint random_binary_joint(DeterministicRng& rng) {
  std::vector<Rational> weights = random_weights(rng, 4, 13);
  return BinaryJoint{weights[0], weights[1], weights[2], weights[3]};
}

namespace {

struct InstanceChecks {
  std::string decomposition = "ok";
  std::string marginal_equivalence = "ok";
  std::string joint_bracket = "ok";
  std::string semantic_bracket = "ok";
  std::string binary_lemma = "ok";
  std::string subset_tests = "ok";
  std::size_t term_count = 0;
};

void tally(CheckTally& into, const std::string& state) {
  if (state == "ok") {
    ++into.passed;
  } else if (state == "skipped") {
    ++into.skipped;
  } else {
    ++into.failed;
  }
}

}  // namespace

VerifyOutcome verify_theorems(const VerifyOptions& options) {
  if (options.min_size < 2 || options.min_size > options.max_size) {
    throw Error(ErrorKind::validation,
                "instance sizes need 2 <= min <= max, got " +
                    std::to_string(options.min_size) + ".." +
                    std::to_string(options.max_size));
  }
  if (options.count == 0) {
    throw Error(ErrorKind::validation, "instance count must be positive");
  }

  VerifyOutcome outcome;
  outcome.options = options;
  DeterministicRng rng(options.seed);

  for (std::size_t instance = 1; instance <= options.count; ++instance) {
    std::size_t degree =
        options.min_size + rng.below(options.max_size - options.min_size + 1);
    ChannelMatrix channel = random_doubly_stochastic(rng, degree);
    BinaryJoint binary = random_binary_joint(rng);
    Distribution first = random_distribution(rng, channel.messages());
    Distribution second = random_distribution(rng, channel.messages());
    std::vector<Distribution> grid =
        simplex_grid(channel.messages(), options.grid_resolution);

    InstanceChecks checks;
    auto record_failure = [&](const std::string& check, const std::string& detail) {
      outcome.failures.push_back("instance " + std::to_string(instance) + " " + check +
                                 ": " + detail + "\n" + channel_to_json_text(channel));
    };

    try {
      Cryptosystem system = synthesize(channel);
      checks.term_count = system.keys().size();
      if (!check_correctness(system).empty()) {
        checks.decomposition = "FAIL";
        record_failure("decomposition", "synthesized cipher fails correctness");
      }
    } catch (const Error& error) {
      checks.decomposition = "FAIL";
      record_failure("decomposition", error.what());
    }

    try {
      eps_ps_cs_sup(channel, grid);
    } catch (const Error& error) {
      checks.marginal_equivalence = "FAIL";
      record_failure("marginal-equivalence", error.what());
    }

    try {
      eps_ps_cm_sup(channel, grid);
      for (std::size_t a = 0; a < degree && checks.joint_bracket == "ok"; ++a) {
        for (std::size_t b = a + 1; b < degree; ++b) {
          Rational value = eps_ps_cm(
              channel, Distribution::two_point_uniform(channel.messages(), a, b));
          Rational expected =
              variational_distance(channel.column(a), channel.column(b)) / 2;
          if (value != expected) {
            checks.joint_bracket = "FAIL";
            record_failure("joint-bracket",
                           "two-point value " + rational_to_string(value) +
                               " differs from half the column distance " +
                               rational_to_string(expected));
            break;
          }
        }
      }
    } catch (const Error& error) {
      checks.joint_bracket = "FAIL";
      record_failure("joint-bracket", error.what());
    }

    if (degree > options.caps.ss_cryptograms || degree > options.caps.ss_messages) {
      checks.semantic_bracket = "skipped";
    } else {
      try {
        eps_ss_sup(channel, grid, options.caps);
        Distribution uniform = Distribution::uniform(channel.messages());
        Rational ss = eps_ss(channel, uniform, options.caps).value;
        Rational witness = ss_witness_bound(channel, uniform, options.caps);
        Rational ind = eps_ind(channel).value;
        if (ss > witness || witness > ind) {
          checks.semantic_bracket = "FAIL";
          record_failure("semantic-bracket",
                         "chain " + rational_to_string(ss) + " <= " +
                             rational_to_string(witness) + " <= " +
                             rational_to_string(ind) + " broken under uniform messages");
        }
      } catch (const Error& error) {
        checks.semantic_bracket = "FAIL";
        record_failure("semantic-bracket", error.what());
      }
    }

    try {
      Lemma1Result lemma = lemma1_check(binary);
      if (lemma.lhs != 2 * lemma.rhs) {
        checks.binary_lemma = "FAIL";
        record_failure("binary-lemma",
                       "lhs " + rational_to_string(lemma.lhs) + " is not twice rhs " +
                           rational_to_string(lemma.rhs));
      }
    } catch (const Error& error) {
      checks.binary_lemma = "FAIL";
      record_failure("binary-lemma", error.what());
    }

    try {
      Rational direct = variational_distance(first, second);
      Rational via_tests = variational_distance_via_tests(
          first, second, options.caps.distinguisher_tests);
      if (direct != via_tests) {
        checks.subset_tests = "FAIL";
        record_failure("subset-tests",
                       "half-sum form " + rational_to_string(direct) +
                           " differs from subset form " + rational_to_string(via_tests));
      }
    } catch (const Error& error) {
      checks.subset_tests = "FAIL";
      record_failure("subset-tests", error.what());
    }

    tally(outcome.decomposition, checks.decomposition);
    tally(outcome.marginal_equivalence, checks.marginal_equivalence);
    tally(outcome.joint_bracket, checks.joint_bracket);
    tally(outcome.semantic_bracket, checks.semantic_bracket);
    tally(outcome.binary_lemma, checks.binary_lemma);
    tally(outcome.subset_tests, checks.subset_tests);

    outcome.instance_lines.push_back(
        "instance " + std::to_string(instance) + ": n=" + std::to_string(degree) +
        " terms=" + std::to_string(checks.term_count) +
        " decomposition=" + checks.decomposition +
        " marginal-equivalence=" + checks.marginal_equivalence +
        " joint-bracket=" + checks.joint_bracket +
        " semantic-bracket=" + checks.semantic_bracket +
        " binary-lemma=" + checks.binary_lemma +
        " subset-tests=" + checks.subset_tests);
  }

  return outcome;
}

}  // namespace itsec
