#include <doctest.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "cryptosystem.hpp"
#include "error.hpp"
#include "helpers.hpp"
#include "verify.hpp"

using namespace itsec;
using testutil::channel_from_rows;
using testutil::dist;
using testutil::q;

namespace {

// One-time-pad on two symbols: key k1 is the identity, k2 the swap.
Cryptosystem binary_otp(const std::vector<std::string>& key_weights) {
    auto messages = Alphabet::indexed("m", 2);
    auto keys = Alphabet::indexed("k", 2);
    auto cryptograms = Alphabet::indexed("c", 2);
    auto key_dist = dist(keys, key_weights);
    std::vector<std::vector<std::size_t>> enc = {{0, 1}, {1, 0}};
    std::vector<std::vector<std::optional<std::size_t>>> dec = {{0, 1}, {1, 0}};
    return Cryptosystem(messages, keys, cryptograms, key_dist, enc, dec);
}

}  // namespace

TEST_SUITE("cryptosystem") {

TEST_CASE("one-time pad is correct and induces the uniform channel") {
    auto otp = binary_otp({"1/2", "1/2"});
    CHECK(check_correctness(otp).empty());
    auto ch = induced_channel(otp);
    CHECK(ch == testutil::uniform_channel(2));
    CHECK(is_doubly_stochastic(ch));
}

TEST_CASE("biased key distribution shows through the induced channel") {
    auto otp = binary_otp({"3/4", "1/4"});
    auto ch = induced_channel(otp);
    CHECK(ch == channel_from_rows({{"3/4", "1/4"}, {"1/4", "3/4"}}));
}

TEST_CASE("point-mass key induces a permutation matrix") {
    auto otp = binary_otp({"0", "1"});
    auto ch = induced_channel(otp);
    CHECK(ch == channel_from_rows({{"0", "1"}, {"1", "0"}}));
}

TEST_CASE("circulant key mixture") {
    auto messages = Alphabet::indexed("m", 3);
    auto keys = Alphabet::indexed("k", 3);
    auto cryptograms = Alphabet::indexed("c", 3);
    auto key_dist = dist(keys, {"1/2", "1/4", "1/4"});
    std::vector<std::vector<std::size_t>> enc = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<std::optional<std::size_t>>> dec = {
        {0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
    Cryptosystem system(messages, keys, cryptograms, key_dist, enc, dec);
    CHECK(check_correctness(system).empty());
    CHECK(induced_channel(system) == channel_from_rows({{"1/2", "1/4", "1/4"},
                                                        {"1/4", "1/2", "1/4"},
                                                        {"1/4", "1/4", "1/2"}}));
}

TEST_CASE("wrong round trip is reported per message and key") {
    auto messages = Alphabet::indexed("m", 2);
    auto keys = Alphabet::indexed("k", 1);
    auto cryptograms = Alphabet::indexed("c", 2);
    auto key_dist = Distribution::point_mass(keys, 0);
    std::vector<std::vector<std::size_t>> enc = {{0, 1}};
    std::vector<std::vector<std::optional<std::size_t>>> dec = {{0, 0}};  // c2 -> m1
    Cryptosystem system(messages, keys, cryptograms, key_dist, enc, dec);
    auto violations = check_correctness(system);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].message == 1);
    CHECK(violations[0].key == 0);
    CHECK_THROWS_AS((void)induced_channel(system), Error);
}

TEST_CASE("missing decryption on the image is a violation") {
    auto messages = Alphabet::indexed("m", 2);
    auto keys = Alphabet::indexed("k", 1);
    auto cryptograms = Alphabet::indexed("c", 2);
    auto key_dist = Distribution::point_mass(keys, 0);
    std::vector<std::vector<std::size_t>> enc = {{0, 1}};
    std::vector<std::vector<std::optional<std::size_t>>> dec = {{0, std::nullopt}};
    Cryptosystem system(messages, keys, cryptograms, key_dist, enc, dec);
    auto violations = check_correctness(system);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].message == 1);
}

TEST_CASE("decryption is unconstrained off the image") {
    auto messages = Alphabet::indexed("m", 2);
    auto keys = Alphabet::indexed("k", 2);
    auto cryptograms = Alphabet::indexed("c", 3);
    auto key_dist = dist(keys, {"1/2", "1/2"});
    // k1 uses {c1, c2}, k2 uses {c2, c3}; the off-image entries are null.
    std::vector<std::vector<std::size_t>> enc = {{0, 1}, {1, 2}};
    std::vector<std::vector<std::optional<std::size_t>>> dec = {
        {0, 1, std::nullopt}, {std::nullopt, 0, 1}};
    Cryptosystem system(messages, keys, cryptograms, key_dist, enc, dec);
    CHECK(check_correctness(system).empty());
    auto ch = induced_channel(system);
    CHECK(ch.cryptogram_count() == 3);
    CHECK(ch.at(0, 0) == q("1/2"));
    CHECK(ch.at(1, 0) == q("1/2"));
    CHECK(ch.at(1, 1) == q("1/2"));
    CHECK(ch.at(2, 1) == q("1/2"));
    try {
        is_doubly_stochastic(ch);
        FAIL("expected not_applicable for a non-square channel");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_applicable);
    }
}

TEST_CASE("zero-probability keys are allowed in a cryptosystem") {
    auto otp = binary_otp({"1", "0"});
    CHECK(check_correctness(otp).empty());
    CHECK(induced_channel(otp) == testutil::identity_channel(2));
}

TEST_CASE("construction rejects bad shapes and indices") {
    auto messages = Alphabet::indexed("m", 2);
    auto keys = Alphabet::indexed("k", 1);
    auto cryptograms = Alphabet::indexed("c", 2);
    auto key_dist = Distribution::point_mass(keys, 0);
    std::vector<std::vector<std::optional<std::size_t>>> dec = {{0, 1}};
    CHECK_THROWS_AS(Cryptosystem(messages, keys, cryptograms, key_dist,
                                 {{0, 1}, {1, 0}}, dec),
                    Error);  // more enc rows than keys
    CHECK_THROWS_AS(Cryptosystem(messages, keys, cryptograms, key_dist, {{0}}, dec),
                    Error);  // short enc row
    CHECK_THROWS_AS(Cryptosystem(messages, keys, cryptograms, key_dist, {{0, 2}}, dec),
                    Error);  // cryptogram index out of range
    CHECK_THROWS_AS(Cryptosystem(messages, keys, cryptograms, key_dist, {{0, 1}},
                                 {{0, 5}}),
                    Error);  // message index out of range
    auto other_keys = Alphabet::indexed("j", 2);
    CHECK_THROWS_AS(Cryptosystem(messages, other_keys, cryptograms, key_dist, {{0, 1}},
                                 dec),
                    Error);  // key_dist alphabet mismatch
}

TEST_CASE("induced channel of a permutation mixture is the weighted sum") {
    DeterministicRng rng(5);
    for (std::size_t n : {2u, 3u, 4u, 5u}) {
        auto messages = Alphabet::indexed("m", n);
        auto cryptograms = Alphabet::indexed("c", n);
        std::size_t t = 2 + rng.below(3);
        auto keys = Alphabet::indexed("k", t);

        std::vector<std::vector<std::size_t>> enc;
        for (std::size_t i = 0; i < t; ++i) {
            std::vector<std::size_t> perm(n);
            for (std::size_t j = 0; j < n; ++j) perm[j] = j;
            for (std::size_t j = n; j > 1; --j) std::swap(perm[j - 1], perm[rng.below(j)]);
            enc.push_back(perm);
        }
        std::vector<Rational> weights(t, 0);
        Rational total = 0;
        for (std::size_t i = 0; i < t; ++i) {
            weights[i] = Rational(1 + rng.below(9));
            total += weights[i];
        }
        for (auto& w : weights) {
            w /= total;
            w.canonicalize();
        }
        std::vector<std::vector<std::optional<std::size_t>>> dec(
            t, std::vector<std::optional<std::size_t>>(n));
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t m = 0; m < n; ++m) dec[i][enc[i][m]] = m;
        }
        Cryptosystem system(messages, keys, cryptograms,
                            Distribution(keys, weights), enc, dec);
        CHECK(check_correctness(system).empty());
        auto ch = induced_channel(system);
        CHECK(is_doubly_stochastic(ch));
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t m = 0; m < n; ++m) {
                Rational expected = 0;
                for (std::size_t i = 0; i < t; ++i) {
                    if (enc[i][m] == c) expected += weights[i];
                }
                CHECK(ch.at(c, m) == expected);
            }
        }
    }
}

TEST_CASE("doubly stochastic check notices a bad row") {
    auto ch = channel_from_rows({{"1", "1"}, {"0", "0"}});  // columns fine, rows not
    CHECK(!is_doubly_stochastic(ch));
}

}
