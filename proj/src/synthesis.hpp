#pragma once

#include <cstddef>
#include <vector>

#include "cryptosystem.hpp"
#include "prob.hpp"

namespace itsec {

// One term of a Birkhoff decomposition: a positive weight on the permutation
// sending message m to cryptogram perm[m].
struct BirkhoffTerm {
  Rational weight;
  std::vector<std::size_t> perm;
};

struct BirkhoffDecomposition {
  std::size_t degree = 0;
  std::vector<BirkhoffTerm> terms;
};

// Largest number of permutations ever needed for an n x n doubly stochastic
// matrix: n^2 - 2n + 2.
inline std::size_t birkhoff_term_bound(std::size_t degree) {
  return degree * degree - 2 * degree + 2;
}

// Writes a doubly stochastic channel as a convex combination of permutation
// matrices. Deterministic: each round extracts the lexicographically smallest
// perfect matching on the positive support and peels off the minimum entry
// along it; if the greedy pass overshoots the term bound, exact linear
// dependencies among the extracted permutations are eliminated until it fits.
// The result recomposes to the input exactly.
BirkhoffDecomposition birkhoff_decompose(const ChannelMatrix& channel);

// Cipher with one key per term, key probabilities equal to the weights, and
// encryption by the term's permutation.
Cryptosystem cryptosystem_from_decomposition(const BirkhoffDecomposition& decomposition,
                                             const Alphabet& messages,
                                             const Alphabet& cryptograms);

// birkhoff_decompose + cryptosystem_from_decomposition on the channel's own
// alphabets, with the round trip through induced_channel verified.
Cryptosystem synthesize(const ChannelMatrix& channel);

}  // namespace itsec
