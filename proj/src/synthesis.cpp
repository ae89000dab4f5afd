#include "synthesis.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "error.hpp"

namespace itsec {

namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

// Kuhn's augmenting-path search. adj[m][c] marks a usable edge; fixed
// cryptograms are off limits.
struct Matcher {
  const std::vector<std::vector<char>>& adj;
  std::vector<std::size_t> match_of_message;
  std::vector<std::size_t> match_of_cryptogram;
  std::vector<char> fixed_cryptogram;
  std::vector<char> visited;

  explicit Matcher(const std::vector<std::vector<char>>& adjacency)
      : adj(adjacency),
        match_of_message(adj.size(), kUnmatched),
        match_of_cryptogram(adj.size(), kUnmatched),
        fixed_cryptogram(adj.size(), 0),
        visited(adj.size(), 0) {}

  bool augment(std::size_t message) {
    for (std::size_t c = 0; c < adj.size(); ++c) {
      if (!adj[message][c] || fixed_cryptogram[c] || visited[c]) continue;
      visited[c] = 1;
      if (match_of_cryptogram[c] == kUnmatched || augment(match_of_cryptogram[c])) {
        match_of_message[message] = c;
        match_of_cryptogram[c] = message;
        return true;
      }
    }
    return false;
  }

  bool build_perfect() {
    for (std::size_t m = 0; m < adj.size(); ++m) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(m)) return false;
    }
    return true;
  }
};

// Lexicographically smallest perfect matching on the support: messages are
// fixed in order, each to its smallest cryptogram that still leaves the rest
// matchable. Empty result means no perfect matching exists.
std::vector<std::size_t> lex_min_perfect_matching(
    const std::vector<std::vector<char>>& adj) {
  std::size_t n = adj.size();
  Matcher matcher(adj);
  if (!matcher.build_perfect()) return {};

  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!adj[m][c] || matcher.fixed_cryptogram[c]) continue;
      if (matcher.match_of_message[m] == c) break;
      // Tentatively give c to m; its current owner must find a replacement,
      // and the only free cryptogram is the one m vacated.
      std::size_t owner = matcher.match_of_cryptogram[c];
      std::size_t vacated = matcher.match_of_message[m];
      matcher.match_of_message[m] = c;
      matcher.match_of_cryptogram[c] = m;
      matcher.match_of_message[owner] = kUnmatched;
      matcher.match_of_cryptogram[vacated] = kUnmatched;
      matcher.fixed_cryptogram[c] = 1;
      std::fill(matcher.visited.begin(), matcher.visited.end(), 0);
      if (matcher.augment(owner)) break;
      matcher.fixed_cryptogram[c] = 0;
      matcher.match_of_message[m] = vacated;
      matcher.match_of_cryptogram[vacated] = m;
      matcher.match_of_message[owner] = c;
      matcher.match_of_cryptogram[c] = owner;
    }
    matcher.fixed_cryptogram[matcher.match_of_message[m]] = 1;
  }
  return matcher.match_of_message;
}

// Finds rational lambda != 0 with sum_k lambda_k * vec(P_k) = 0 by Gaussian
// elimination over the n^2 x t coefficient matrix. Exists whenever t exceeds
// the dimension of the span of permutation matrices.
std::vector<Rational> permutation_dependency(const std::vector<BirkhoffTerm>& terms,
                                             std::size_t n) {
  std::size_t t = terms.size();
  std::vector<std::vector<Rational>> rows(n * n, std::vector<Rational>(t, Rational(0)));
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      rows[terms[k].perm[m] * n + m][k] = 1;
    }
  }

  std::vector<std::size_t> pivot_row_of_column(t, kUnmatched);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < t && rank < rows.size(); ++col) {
    std::size_t pivot = kUnmatched;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == kUnmatched) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t j = 0; j < t; ++j) {
        rows[r][j] -= factor * rows[rank][j];
      }
    }
    pivot_row_of_column[col] = rank;
    ++rank;
  }

  std::size_t free_column = kUnmatched;
  for (std::size_t col = 0; col < t; ++col) {
    if (pivot_row_of_column[col] == kUnmatched) {
      free_column = col;
      break;
    }
  }
  if (free_column == kUnmatched) {
    throw Error(ErrorKind::invariant_violation,
                "expected a linear dependency among extracted permutations");
  }

  std::vector<Rational> lambda(t, Rational(0));
  lambda[free_column] = 1;
  for (std::size_t col = 0; col < t; ++col) {
    std::size_t r = pivot_row_of_column[col];
    if (r == kUnmatched) continue;
    lambda[col] = -rows[r][free_column] / rows[r][col];
  }
  return lambda;
}

// Carathéodory step: shift the weights along a dependency until at least one
// hits zero, drop the zeroed terms. Preserves the recomposed matrix and the
// weight total exactly.
void prune_to_bound(std::vector<BirkhoffTerm>& terms, std::size_t n) {
  std::size_t bound = birkhoff_term_bound(n);
  while (terms.size() > bound) {
    std::vector<Rational> lambda = permutation_dependency(terms, n);
    if (std::none_of(lambda.begin(), lambda.end(),
                     [](const Rational& v) { return v > 0; })) {
      for (auto& v : lambda) v = -v;
    }
    bool have_step = false;
    Rational step;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (lambda[k] <= 0) continue;
      Rational ratio = terms[k].weight / lambda[k];
      if (!have_step || ratio < step) {
        step = ratio;
        have_step = true;
      }
    }
    std::vector<BirkhoffTerm> kept;
    kept.reserve(terms.size() - 1);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      Rational weight = terms[k].weight - step * lambda[k];
      if (weight < 0) {
        throw Error(ErrorKind::invariant_violation, "pruning produced a negative weight");
      }
      if (weight > 0) {
        kept.push_back({std::move(weight), terms[k].perm});
      }
    }
    if (kept.size() >= terms.size()) {
      throw Error(ErrorKind::invariant_violation, "pruning failed to drop a term");
    }
    terms = std::move(kept);
  }
}

void verify_decomposition(const BirkhoffDecomposition& decomposition,
                          const ChannelMatrix& channel) {
  std::size_t n = decomposition.degree;
  if (decomposition.terms.empty() || decomposition.terms.size() > birkhoff_term_bound(n)) {
    throw Error(ErrorKind::invariant_violation,
                "decomposition size " + std::to_string(decomposition.terms.size()) +
                    " is outside [1, " + std::to_string(birkhoff_term_bound(n)) + "]");
  }
  std::vector<std::vector<Rational>> recomposed(n, std::vector<Rational>(n, Rational(0)));
  Rational total = 0;
  for (const auto& term : decomposition.terms) {
    if (term.weight <= 0) {
      throw Error(ErrorKind::invariant_violation, "nonpositive term weight");
    }
    total += term.weight;
    for (std::size_t m = 0; m < n; ++m) {
      recomposed[term.perm[m]][m] += term.weight;
    }
  }
  if (total != 1) {
    throw Error(ErrorKind::invariant_violation, "term weights do not sum to 1");
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t m = 0; m < n; ++m) {
      if (recomposed[c][m] != channel.at(c, m)) {
        throw Error(ErrorKind::invariant_violation,
                    "decomposition does not recompose the input at entry (" +
                        channel.cryptograms().label(c) + ", " +
                        channel.messages().label(m) + ")");
      }
    }
  }
}

}  // namespace

BirkhoffDecomposition birkhoff_decompose(const ChannelMatrix& channel) {
  if (!channel.square()) {
    throw Error(ErrorKind::not_applicable,
                "Birkhoff decomposition needs a square channel, got " +
                    std::to_string(channel.cryptogram_count()) + "x" +
                    std::to_string(channel.message_count()));
  }
  std::size_t n = channel.message_count();
  for (std::size_t c = 0; c < n; ++c) {
    Rational row = 0;
    for (std::size_t m = 0; m < n; ++m) row += channel.at(c, m);
    if (row != 1) {
      throw Error(ErrorKind::validation,
                  "channel is not doubly stochastic: row \"" +
                      channel.cryptograms().label(c) + "\" sums to " +
                      rational_to_string(row));
    }
  }

  // residual[c][m], peeled down to zero.
  std::vector<std::vector<Rational>> residual(n, std::vector<Rational>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t m = 0; m < n; ++m) residual[c][m] = channel.at(c, m);
  }

  BirkhoffDecomposition decomposition;
  decomposition.degree = n;
  Rational remaining = 1;
  while (remaining > 0) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t c = 0; c < n; ++c) {
        adj[m][c] = residual[c][m] > 0;
      }
    }
    std::vector<std::size_t> perm = lex_min_perfect_matching(adj);
    if (perm.empty()) {
      throw Error(ErrorKind::invariant_violation,
                  "positive residual support lost its perfect matching");
    }
    Rational theta = residual[perm[0]][0];
    for (std::size_t m = 1; m < n; ++m) {
      theta = std::min(theta, residual[perm[m]][m]);
    }
    for (std::size_t m = 0; m < n; ++m) {
      residual[perm[m]][m] -= theta;
    }
    remaining -= theta;
    decomposition.terms.push_back({std::move(theta), std::move(perm)});
    if (decomposition.terms.size() > n * n + 1) {
      throw Error(ErrorKind::invariant_violation, "decomposition failed to terminate");
    }
  }

  prune_to_bound(decomposition.terms, n);
  verify_decomposition(decomposition, channel);
  return decomposition;
}

Cryptosystem cryptosystem_from_decomposition(const BirkhoffDecomposition& decomposition,
                                             const Alphabet& messages,
                                             const Alphabet& cryptograms) {
  std::size_t n = decomposition.degree;
  if (messages.size() != n || cryptograms.size() != n) {
    throw Error(ErrorKind::validation,
                "decomposition degree " + std::to_string(n) +
                    " does not match the alphabets");
  }
  if (decomposition.terms.empty()) {
    throw Error(ErrorKind::validation, "decomposition has no terms");
  }

  std::size_t key_count = decomposition.terms.size();
  Alphabet keys = Alphabet::indexed("k", key_count);
  std::vector<Rational> key_weights;
  key_weights.reserve(key_count);
  std::vector<std::vector<std::size_t>> enc_table;
  enc_table.reserve(key_count);
  std::vector<std::vector<std::optional<std::size_t>>> dec_table;
  dec_table.reserve(key_count);
  for (const auto& term : decomposition.terms) {
    if (term.weight <= 0) {
      throw Error(ErrorKind::validation, "decomposition weights must be positive");
    }
    key_weights.push_back(term.weight);
    enc_table.push_back(term.perm);
    std::vector<std::optional<std::size_t>> inverse(n);
    for (std::size_t m = 0; m < n; ++m) {
      inverse.at(term.perm.at(m)) = m;
    }
    dec_table.push_back(std::move(inverse));
  }

  return Cryptosystem(messages, std::move(keys), cryptograms,
                      Distribution(Alphabet::indexed("k", key_count), std::move(key_weights)),
                      std::move(enc_table), std::move(dec_table));
}

Cryptosystem synthesize(const ChannelMatrix& channel) {
  BirkhoffDecomposition decomposition = birkhoff_decompose(channel);
  Cryptosystem system = cryptosystem_from_decomposition(decomposition, channel.messages(),
                                                        channel.cryptograms());
  if (!(induced_channel(system) == channel)) {
    throw Error(ErrorKind::invariant_violation,
                "synthesized cryptosystem does not induce the input channel");
  }
  return system;
}

}  // namespace itsec
