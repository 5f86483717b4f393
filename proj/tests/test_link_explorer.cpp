#include <doctest.h>

#include "pretzel/agreement.hpp"
#include "pretzel/link_explorer.hpp"

using namespace pretzel;

TEST_CASE("residual blocks under the corrected rule") {
    const auto seq = SignSeq::parse("+-+-");
    const auto a = pair_iterative(seq, Direction::Ccw);
    REQUIRE(a.pairs == std::vector<BandPair>{{1, 2}, {3, 0}});
    const auto p = link_components_after(a, 1, ResidualRule::Corrected);
    CHECK(p.block_count == 3);
    const auto blocks = p.blocks();
    CHECK(blocks[0] == std::vector<std::size_t>{1, 2});
    CHECK(blocks[1] == std::vector<std::size_t>{0, 3});
    CHECK(blocks[2].empty());

    const auto naive = link_components_after(a, 1, ResidualRule::Naive);
    CHECK(naive.block_count == 3);
    CHECK(naive.block_of[0] != naive.block_of[3]);

    CHECK_THROWS_AS(link_components_after(a, 2, ResidualRule::Corrected), std::invalid_argument);
}

TEST_CASE("block count is n+1 for every drop") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const SignSeq& s : enumerate_balanced(n, Mode::EvenLink)) {
            const auto a = pair_iterative(s, Direction::Ccw);
            for (std::size_t d = 0; d < n; ++d) {
                CHECK(link_components_after(a, d, ResidualRule::Corrected).block_count == n + 1);
                CHECK(link_components_after(a, d, ResidualRule::Naive).block_count == n + 1);
            }
        }
    }
}

TEST_CASE("two boxes: the residual link is already the target") {
    const auto t = run_link_trial(SignSeq::parse("+-"), 0, 0);
    CHECK(t.passes);
    CHECK(t.b_onto_a.counts == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(run_link_trial(SignSeq::parse("+-"), 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_link_trial(SignSeq::parse("+-+"), 0, 0), std::invalid_argument);
}

TEST_CASE("four boxes") {
    // Frozen from machine enumeration of the four drop choices.
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(run_link_trial(SignSeq::parse("+-+-"), a, b).passes);

    bool saw_self_band = false;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            const auto t = run_link_trial(SignSeq::parse("++--"), a, b);
            CHECK_FALSE(t.passes);
            saw_self_band = saw_self_band || t.residual_self_band;
        }
    }
    CHECK(saw_self_band);
}

TEST_CASE("enclosed drops") {
    // +++---: A runs are {5,0} inside {4,5,0,1} inside the whole cycle from 3.
    const auto a = pair_iterative(SignSeq::parse("+++---"), Direction::Ccw);
    REQUIRE(a.pairs == std::vector<BandPair>{{3, 2}, {4, 1}, {5, 0}});
    CHECK_FALSE(drop_is_enclosed(a, 0));
    CHECK(drop_is_enclosed(a, 1));
    CHECK(drop_is_enclosed(a, 2));
    const auto alt = pair_iterative(SignSeq::parse("+-+-+-"), Direction::Cw);
    for (std::size_t d = 0; d < 3; ++d) CHECK_FALSE(drop_is_enclosed(alt, d));
}

TEST_CASE("passing trials never drop an enclosed band") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const SignSeq& s : enumerate_balanced(n, Mode::EvenLink))
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const auto t = run_link_trial(s, a, b);
                    if (t.passes) CHECK_FALSE((t.drop_a_enclosed || t.drop_b_enclosed));
                }
}

TEST_CASE("exploration supports the conjecture for small n") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = explore_link_case(n);
        CAPTURE(n);
        CHECK(r.matches_conjecture);
        CHECK(r.nonconforming.empty());
        CHECK(r.sequences.size() == balanced_count(n, Mode::EvenLink));
        for (const auto& s : r.sequences) CHECK(s.passing.empty() != s.alternating);
    }
    const auto two = explore_link_case(2);
    CHECK(two.classes.size() == 2);
}

TEST_CASE("the naive residual rule changes verdicts") {
    const auto corrected = explore_link_case(2, ResidualRule::Corrected);
    const auto naive = explore_link_case(2, ResidualRule::Naive);
    CHECK_FALSE(naive.matches_conjecture);
    bool differs = false;
    for (std::size_t i = 0; i < corrected.sequences.size(); ++i)
        differs = differs || corrected.sequences[i].passing != naive.sequences[i].passing;
    CHECK(differs);
}

TEST_CASE("parallel exploration is deterministic") {
    const auto one = explore_link_case(4, ResidualRule::Corrected, 1);
    const auto many = explore_link_case(4, ResidualRule::Corrected, 6);
    REQUIRE(one.sequences.size() == many.sequences.size());
    for (std::size_t i = 0; i < one.sequences.size(); ++i) {
        CHECK(one.sequences[i].seq == many.sequences[i].seq);
        CHECK(one.sequences[i].passing == many.sequences[i].passing);
    }
}

TEST_CASE("literal surgery agrees with the corrected rule, not the naive one") {
    std::size_t naive_disagreements = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const SignSeq& s : enumerate_balanced(n, Mode::EvenLink)) {
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    const auto r = check_link_agreement(run_link_trial(s, a, b));
                    CAPTURE(s.str());
                    CAPTURE(r.b_onto_a.detail);
                    CHECK(r.agrees);
                    if (run_link_trial(s, a, b).passes) {
                        CHECK(r.b_onto_a.blocks_agree);
                        CHECK(r.a_onto_b.blocks_agree);
                    }
                    naive_disagreements +=
                        !check_link_agreement(run_link_trial(s, a, b, ResidualRule::Naive)).agrees;
                }
            }
        }
    }
    CHECK(naive_disagreements > 0);
}
