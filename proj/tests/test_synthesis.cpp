#include <doctest.h>

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "helpers.hpp"
#include "synthesis.hpp"
#include "verify.hpp"

using namespace itsec;
using testutil::channel_from_rows;
using testutil::identity_channel;
using testutil::q;
using testutil::uniform_channel;

namespace {

// Independent recomposition: sum of weight * permutation matrix.
ChannelMatrix recompose(const BirkhoffDecomposition& d, const ChannelMatrix& shape) {
    std::vector<std::vector<Rational>> entries(d.degree, std::vector<Rational>(d.degree, 0));
    for (const auto& term : d.terms) {
        for (std::size_t m = 0; m < d.degree; ++m) entries[term.perm[m]][m] += term.weight;
    }
    std::vector<Distribution> columns;
    for (std::size_t m = 0; m < d.degree; ++m) {
        std::vector<Rational> column(d.degree);
        for (std::size_t c = 0; c < d.degree; ++c) column[c] = entries[c][m];
        columns.emplace_back(shape.cryptograms(), std::move(column));
    }
    return ChannelMatrix(shape.messages(), std::move(columns));
}

void check_decomposition(const BirkhoffDecomposition& d, const ChannelMatrix& input) {
    REQUIRE(d.degree == input.message_count());
    Rational total = 0;
    for (const auto& term : d.terms) {
        CHECK(term.weight > 0);
        total += term.weight;
        std::vector<bool> seen(d.degree, false);
        REQUIRE(term.perm.size() == d.degree);
        for (std::size_t image : term.perm) {
            REQUIRE(image < d.degree);
            CHECK(!seen[image]);
            seen[image] = true;
        }
    }
    CHECK(total == 1);
    CHECK(d.terms.size() <= birkhoff_term_bound(d.degree));
    CHECK(recompose(d, input) == input);
}

}  // namespace

TEST_SUITE("synthesis") {

TEST_CASE("identity matrix decomposes to one term") {
    auto d = birkhoff_decompose(identity_channel(3));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].weight == 1);
    CHECK(d.terms[0].perm == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("uniform 2x2 splits into identity and swap") {
    auto d = birkhoff_decompose(uniform_channel(2));
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].weight == q("1/2"));
    CHECK(d.terms[0].perm == std::vector<std::size_t>{0, 1});
    CHECK(d.terms[1].weight == q("1/2"));
    CHECK(d.terms[1].perm == std::vector<std::size_t>{1, 0});
}

TEST_CASE("circulant golden trace") {
    auto circulant = channel_from_rows(
        {{"1/2", "1/4", "1/4"}, {"1/4", "1/2", "1/4"}, {"1/4", "1/4", "1/2"}});
    auto d = birkhoff_decompose(circulant);
    REQUIRE(d.terms.size() == 3);
    CHECK(d.terms[0].weight == q("1/2"));
    CHECK(d.terms[0].perm == std::vector<std::size_t>{0, 1, 2});
    CHECK(d.terms[1].weight == q("1/4"));
    CHECK(d.terms[1].perm == std::vector<std::size_t>{1, 2, 0});
    CHECK(d.terms[2].weight == q("1/4"));
    CHECK(d.terms[2].perm == std::vector<std::size_t>{2, 0, 1});
    check_decomposition(d, circulant);
}

TEST_CASE("decomposition is deterministic") {
    DeterministicRng rng(11);
    auto ch = random_doubly_stochastic(rng, 5);
    auto d1 = birkhoff_decompose(ch);
    auto d2 = birkhoff_decompose(ch);
    REQUIRE(d1.terms.size() == d2.terms.size());
    for (std::size_t i = 0; i < d1.terms.size(); ++i) {
        CHECK(d1.terms[i].weight == d2.terms[i].weight);
        CHECK(d1.terms[i].perm == d2.terms[i].perm);
    }
}

TEST_CASE("random round trips stay within the term bound") {
    DeterministicRng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng.below(7);
        auto ch = random_doubly_stochastic(rng, n);
        check_decomposition(birkhoff_decompose(ch), ch);
    }
}

TEST_CASE("dense matrices respect the term bound") {
    // Mixtures of many permutations push the greedy loop past the bound, so
    // these exercise the dependency elimination.
    DeterministicRng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 4 + rng.below(2);
        std::size_t t = 3 * n;
        std::vector<std::vector<Rational>> entries(n, std::vector<Rational>(n, 0));
        for (std::size_t i = 0; i < t; ++i) {
            std::vector<std::size_t> perm(n);
            for (std::size_t j = 0; j < n; ++j) perm[j] = j;
            for (std::size_t j = n; j > 1; --j) std::swap(perm[j - 1], perm[rng.below(j)]);
            Rational w(1 + rng.below(7), t * 7);
            w.canonicalize();
            for (std::size_t m = 0; m < n; ++m) entries[perm[m]][m] += w;
        }
        Rational assigned = 0;
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t m = 0; m < n; ++m) assigned += entries[c][m];
        }
        assigned /= n;  // column total so far, same for every column
        Rational leftover = 1 - assigned;
        REQUIRE(leftover >= 0);
        for (std::size_t i = 0; i < n; ++i) entries[i][i] += leftover;

        std::vector<Distribution> columns;
        auto cryptograms = Alphabet::indexed("c", n);
        for (std::size_t m = 0; m < n; ++m) {
            std::vector<Rational> column(n);
            for (std::size_t c = 0; c < n; ++c) column[c] = entries[c][m];
            columns.emplace_back(cryptograms, std::move(column));
        }
        ChannelMatrix ch(Alphabet::indexed("m", n), std::move(columns));
        check_decomposition(birkhoff_decompose(ch), ch);
    }
}

TEST_CASE("synthesize round trips through the induced channel") {
    auto circulant = channel_from_rows(
        {{"1/2", "1/4", "1/4"}, {"1/4", "1/2", "1/4"}, {"1/4", "1/4", "1/2"}});
    auto system = synthesize(circulant);
    CHECK(system.keys().size() == 3);
    CHECK(system.key_dist().weight(0) == q("1/2"));
    CHECK(check_correctness(system).empty());
    CHECK(induced_channel(system) == circulant);
    CHECK(system.messages() == circulant.messages());
    CHECK(system.cryptograms() == circulant.cryptograms());
}

TEST_CASE("synthesize rejects non-square and non-doubly-stochastic inputs") {
    auto rect = channel_from_rows({{"1/2", "1/2"}, {"1/2", "1/2"}, {"0", "0"}});
    try {
        synthesize(rect);
        FAIL("expected not_applicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_applicable);
    }

    auto skewed = channel_from_rows({{"1", "1"}, {"0", "0"}});
    try {
        synthesize(skewed);
        FAIL("expected validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::validation);
        CHECK(std::string(e.what()).find("c1") != std::string::npos);
    }
}

TEST_CASE("cryptosystem_from_decomposition validates its terms") {
    auto messages = Alphabet::indexed("m", 2);
    auto cryptograms = Alphabet::indexed("c", 2);
    BirkhoffDecomposition zero_weight{2, {{q("1"), {0, 1}}, {q("0"), {1, 0}}}};
    CHECK_THROWS_AS(
        (void)cryptosystem_from_decomposition(zero_weight, messages, cryptograms), Error);
    BirkhoffDecomposition bad_sum{2, {{q("1/2"), {0, 1}}}};
    CHECK_THROWS_AS(
        (void)cryptosystem_from_decomposition(bad_sum, messages, cryptograms), Error);
    BirkhoffDecomposition wrong_degree{3, {{q("1"), {0, 1}}}};
    CHECK_THROWS_AS(
        (void)cryptosystem_from_decomposition(wrong_degree, messages, cryptograms), Error);
}

TEST_CASE("decomposition keys decrypt by the inverse permutation") {
    auto ch = channel_from_rows({{"0", "1"}, {"1", "0"}});  // the swap
    auto system = synthesize(ch);
    REQUIRE(system.keys().size() == 1);
    CHECK(system.encrypt(0, 0) == 1);
    CHECK(system.encrypt(1, 0) == 0);
    CHECK(system.decrypt(1, 0) == std::optional<std::size_t>{0});
    CHECK(system.decrypt(0, 0) == std::optional<std::size_t>{1});
}

TEST_CASE("term bound formula") {
    CHECK(birkhoff_term_bound(1) == 1);
    CHECK(birkhoff_term_bound(2) == 2);
    CHECK(birkhoff_term_bound(3) == 5);
    CHECK(birkhoff_term_bound(4) == 10);
    CHECK(birkhoff_term_bound(10) == 82);
}

}
