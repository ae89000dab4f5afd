#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "gap.hpp"
#include "helpers.hpp"
#include "prob.hpp"
#include "verify.hpp"

using namespace itsec;
using testutil::channel_from_rows;
using testutil::dist;
using testutil::identity_channel;
using testutil::q;
using testutil::uniform_channel;

TEST_SUITE("prob") {

TEST_CASE("distribution construction validates") {
    auto a2 = Alphabet::indexed("x", 2);
    CHECK_NOTHROW(Distribution(a2, {q("1/2"), q("1/2")}));
    CHECK_NOTHROW(Distribution(a2, {q("1"), q("0")}));
    CHECK_THROWS_AS(Distribution(a2, {q("1/2"), q("1/3")}), Error);       // sum != 1
    CHECK_THROWS_AS(Distribution(a2, {q("3/2"), q("-1/2")}), Error);      // negative
    CHECK_THROWS_AS(Distribution(a2, {q("1")}), Error);                   // wrong arity
}

TEST_CASE("named constructors") {
    auto a3 = Alphabet::indexed("x", 3);
    auto u = Distribution::uniform(a3);
    CHECK(u.weight(0) == q("1/3"));
    CHECK(u.weight(2) == q("1/3"));
    auto p = Distribution::point_mass(a3, 1);
    CHECK(p.weight(0) == 0);
    CHECK(p.weight(1) == 1);
    auto t = Distribution::two_point_uniform(a3, 0, 2);
    CHECK(t.weight(0) == q("1/2"));
    CHECK(t.weight(1) == 0);
    CHECK(t.weight(2) == q("1/2"));
    CHECK_THROWS_AS(Distribution::two_point_uniform(a3, 1, 1), Error);
}

TEST_CASE("variational distance basics") {
    auto a2 = Alphabet::indexed("x", 2);
    auto p = dist(a2, {"1/2", "1/2"});
    auto r = dist(a2, {"3/4", "1/4"});
    CHECK(variational_distance(p, p) == 0);
    CHECK(variational_distance(p, r) == q("1/4"));
    CHECK(variational_distance(r, p) == q("1/4"));
    CHECK(variational_distance(dist(a2, {"1", "0"}), dist(a2, {"0", "1"})) == 1);
}

TEST_CASE("variational distance rejects mismatched alphabets") {
    auto p = Distribution::uniform(Alphabet::indexed("x", 2));
    auto r = Distribution::uniform(Alphabet::indexed("y", 2));
    try {
        variational_distance(p, r);
        FAIL("expected alphabet mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::alphabet_mismatch);
    }
}

TEST_CASE("subset-test form agrees with the half-sum form") {
    auto a2 = Alphabet::indexed("x", 2);
    CHECK(variational_distance_via_tests(dist(a2, {"1/2", "1/2"}), dist(a2, {"3/4", "1/4"})) ==
          q("1/4"));

    DeterministicRng rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng.below(7);
        auto alphabet = Alphabet::indexed("x", n);
        auto p = random_distribution(rng, alphabet);
        auto r = random_distribution(rng, alphabet);
        CHECK(variational_distance_via_tests(p, r) == variational_distance(p, r));
    }
}

TEST_CASE("subset-test form honors its cap") {
    auto a6 = Alphabet::indexed("x", 6);
    auto p = Distribution::uniform(a6);
    auto r = Distribution::point_mass(a6, 0);
    CHECK_NOTHROW(variational_distance_via_tests(p, r, 6));
    try {
        variational_distance_via_tests(p, r, 5);
        FAIL("expected cap error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::cap_exceeded);
    }
}

TEST_CASE("distance is a metric bounded by 1") {
    DeterministicRng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng.below(5);
        auto alphabet = Alphabet::indexed("x", n);
        auto p = random_distribution(rng, alphabet);
        auto r = random_distribution(rng, alphabet);
        auto s = random_distribution(rng, alphabet);
        auto d_pr = variational_distance(p, r);
        CHECK(d_pr >= 0);
        CHECK(d_pr <= 1);
        CHECK(d_pr == variational_distance(r, p));
        CHECK(variational_distance(p, s) <= d_pr + variational_distance(r, s));
        CHECK((d_pr == 0) == (p == r));
    }
}

TEST_CASE("cryptogram marginal") {
    auto id3 = identity_channel(3);
    auto pm = dist(id3.messages(), {"1/2", "1/3", "1/6"});
    auto marginal = cryptogram_marginal(id3, pm);
    CHECK(marginal.weights() == pm.weights());

    auto gap = gap_matrix({4, q("1/8")});
    auto u = Distribution::uniform(gap.messages());
    CHECK(cryptogram_marginal(gap, u) == Distribution::uniform(gap.cryptograms()));
}

TEST_CASE("joint distribution and marginals") {
    auto ch = channel_from_rows({{"1/2", "1/4"}, {"1/2", "3/4"}});
    auto pm = dist(ch.messages(), {"1/3", "2/3"});
    auto joint = joint_distribution(ch, pm);
    CHECK(joint.at(0, 0) == q("1/6"));
    CHECK(joint.at(0, 1) == q("1/6"));
    CHECK(joint.at(1, 0) == q("1/6"));
    CHECK(joint.at(1, 1) == q("1/2"));
    CHECK(joint.message_marginal() == pm);
    CHECK(joint.cryptogram_marginal() == cryptogram_marginal(ch, pm));
}

TEST_CASE("joint distances: disjoint priors saturate, mixing halves the column gap") {
    auto ch = channel_from_rows({{"1/2", "1/4"}, {"1/2", "3/4"}});
    auto j0 = joint_distribution(ch, Distribution::point_mass(ch.messages(), 0));
    auto j1 = joint_distribution(ch, Distribution::point_mass(ch.messages(), 1));
    CHECK(variational_distance(j0, j1) == 1);  // message coordinates never overlap
    auto tp = Distribution::two_point_uniform(ch.messages(), 0, 1);
    auto joint = joint_distribution(ch, tp);
    auto indep = product_distribution(cryptogram_marginal(ch, tp), tp);
    CHECK(variational_distance(joint, indep) ==
          variational_distance(ch.column(0), ch.column(1)) / 2);
}

TEST_CASE("posterior on the identity channel is a point mass") {
    auto id3 = identity_channel(3);
    auto u = Distribution::uniform(id3.messages());
    CHECK(posterior(id3, u, 1) == Distribution::point_mass(id3.messages(), 1));
}

TEST_CASE("posterior of the wobble family row") {
    auto gap = gap_matrix({4, q("1/8")});
    auto u = Distribution::uniform(gap.messages());
    CHECK(posterior(gap, u, 0) == dist(gap.messages(), {"3/8", "1/8", "3/8", "1/8"}));
    CHECK(posterior(gap, u, 1) == dist(gap.messages(), {"1/8", "3/8", "1/8", "3/8"}));
    CHECK(posterior(gap, u, 2) == u);
    CHECK(posterior(gap, u, 3) == u);
}

TEST_CASE("posterior is undefined on a zero-probability cryptogram") {
    auto ch = channel_from_rows({{"1/2", "1/2"}, {"1/2", "1/2"}, {"0", "0"}});
    auto u = Distribution::uniform(ch.messages());
    CHECK_NOTHROW(posterior(ch, u, 0));
    try {
        posterior(ch, u, 2);
        FAIL("expected undefined conditioning");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::undefined_conditioning);
    }
}

TEST_CASE("Bayes round trip recovers the prior") {
    DeterministicRng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.below(4);
        auto ch = random_doubly_stochastic(rng, n);
        auto pm = random_distribution(rng, ch.messages());
        auto marginal = cryptogram_marginal(ch, pm);
        std::vector<Rational> mixed(n, 0);
        bool all_defined = true;
        for (std::size_t c = 0; c < n; ++c) {
            if (marginal.weight(c) == 0) {
                all_defined = false;
                break;
            }
            auto post = posterior(ch, pm, c);
            for (std::size_t m = 0; m < n; ++m) mixed[m] += marginal.weight(c) * post.weight(m);
        }
        if (!all_defined) continue;
        CHECK(mixed == pm.weights());
    }
}

TEST_CASE("product distribution multiplies marginals") {
    auto mc = Alphabet::indexed("c", 2);
    auto mm = Alphabet::indexed("m", 3);
    auto pc = dist(mc, {"1/4", "3/4"});
    auto pm = dist(mm, {"1/2", "1/3", "1/6"});
    auto prod = product_distribution(pc, pm);
    CHECK(prod.at(0, 0) == q("1/8"));
    CHECK(prod.at(1, 2) == q("1/8"));
    CHECK(prod.cryptogram_marginal() == pc);
    CHECK(prod.message_marginal() == pm);
}

TEST_CASE("simplex grid, even resolution") {
    auto a2 = Alphabet::indexed("x", 2);
    auto grid = simplex_grid(a2, 2);
    REQUIRE(grid.size() == 3);
    CHECK(grid[0] == Distribution::point_mass(a2, 0));
    CHECK(grid[1] == Distribution::uniform(a2));
    CHECK(grid[2] == Distribution::point_mass(a2, 1));

    auto a3 = Alphabet::indexed("x", 3);
    auto grid3 = simplex_grid(a3, 2);
    CHECK(grid3.size() == 6);  // C(4, 2), two-point uniforms already inside
}

TEST_CASE("simplex grid, odd resolution appends the two-point uniforms") {
    auto a2 = Alphabet::indexed("x", 2);
    auto grid = simplex_grid(a2, 3);
    REQUIRE(grid.size() == 5);  // 4 compositions + the midpoint
    CHECK(grid[4] == Distribution::uniform(a2));

    auto a3 = Alphabet::indexed("x", 3);
    auto grid3 = simplex_grid(a3, 1);
    CHECK(grid3.size() == 6);  // 3 point masses + 3 two-point uniforms
}

TEST_CASE("simplex grid always carries the extremal witnesses, without duplicates") {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto alphabet = Alphabet::indexed("x", n);
        for (unsigned k : {1u, 2u, 3u, 4u}) {
            auto grid = simplex_grid(alphabet, k);
            for (std::size_t i = 0; i < n; ++i) {
                auto pm = Distribution::point_mass(alphabet, i);
                CHECK(std::find(grid.begin(), grid.end(), pm) != grid.end());
                for (std::size_t j = i + 1; j < n; ++j) {
                    auto tp = Distribution::two_point_uniform(alphabet, i, j);
                    CHECK(std::find(grid.begin(), grid.end(), tp) != grid.end());
                }
            }
            for (std::size_t i = 0; i < grid.size(); ++i) {
                for (std::size_t j = i + 1; j < grid.size(); ++j) {
                    CHECK(!(grid[i] == grid[j]));
                }
            }
        }
    }
}

TEST_CASE("simplex grid points are valid distributions on the resolution lattice") {
    auto a3 = Alphabet::indexed("x", 3);
    auto grid = simplex_grid(a3, 4);
    CHECK(grid.size() == 15);  // C(6, 2)
    for (const auto& point : grid) {
        Rational total = 0;
        for (const auto& w : point.weights()) {
            CHECK(w >= 0);
            total += w;
        }
        CHECK(total == 1);
    }
    CHECK(grid.front() == Distribution::point_mass(a3, 0));
}

}
