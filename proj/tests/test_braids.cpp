#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "paracert/braids.hpp"
#include "paracert/errors.hpp"
#include "test_util.hpp"

using namespace paracert;
using braids::BraidWord;

TEST_CASE("parse_braid") {
    CHECK(braids::parse_braid("2 | 1 1 1") == BraidWord{2, {1, 1, 1}});
    CHECK(braids::parse_braid("1 |") == BraidWord{1, {}});
    CHECK(braids::parse_braid("3 | -1 2 -2") == BraidWord{3, {-1, 2, -2}});
    CHECK_THROWS_AS(braids::parse_braid("2 | 3"), ParseError);
    CHECK_THROWS_AS(braids::parse_braid("2 | 0"), ParseError);
    CHECK_THROWS_AS(braids::parse_braid("0 |"), ParseError);
    CHECK_THROWS_AS(braids::parse_braid("2 1 1"), ParseError);
    CHECK_THROWS_AS(braids::parse_braid("x | 1"), ParseError);
    CHECK_THROWS_AS(braids::parse_braid("2 | x"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        braids::parse_braid("2 | 1 3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() == 7);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("braid text round-trips") {
    CHECK(braids::to_text(BraidWord{2, {1, 1, 1}}) == "2 | 1 1 1");
    CHECK(braids::to_text(BraidWord{1, {}}) == "1 |");
    for (const char* text : {"2 | 1 1 1", "1 |", "4 | -3 2 -1 3"}) {
        CHECK(braids::to_text(braids::parse_braid(text)) == text);
    }
    std::mt19937_64 rng(0x5eed010);
    for (int trial = 0; trial < 200; ++trial) {
        const int strands = 1 + static_cast<int>(rng() % 6);
        const auto b = testutil::random_braid(
            strands, strands == 1 ? 0 : rng() % 12, rng);
        CHECK(braids::parse_braid(braids::to_text(b)) == b);
    }
}

TEST_CASE("closure_components") {
    CHECK(braids::closure_components(BraidWord{1, {}}).count == 1);
    // Hopf link: sigma_1^2 closes to two circles
    const auto hopf = braids::closure_components(BraidWord{2, {1, 1}});
    CHECK(hopf.count == 2);
    CHECK(hopf.assignment == std::vector<std::size_t>{0, 1});
    // trefoil: sigma_1^3 closes to a knot on two strands
    const auto tref = braids::closure_components(BraidWord{2, {1, 1, 1}});
    CHECK(tref.count == 1);
    CHECK(tref.strands_per_component == std::vector<std::size_t>{2});
    // components are numbered by least strand
    const auto mixed = braids::closure_components(BraidWord{3, {2}});
    CHECK(mixed.count == 2);
    CHECK(mixed.assignment == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("writhe") {
    CHECK(braids::writhe(BraidWord{2, {}}) == 0);
    CHECK(braids::writhe(BraidWord{2, {1, 1, 1}}) == 3);
    CHECK(braids::writhe(BraidWord{3, {1, -2, 1, -2}}) == 0);
}

TEST_CASE("linking_matrix") {
    using M = std::vector<std::vector<std::int64_t>>;
    CHECK(braids::linking_matrix(BraidWord{2, {1, 1}}) ==
          M{{0, 1}, {1, 0}});
    CHECK(braids::linking_matrix(BraidWord{2, {-1, -1}}) ==
          M{{0, -1}, {-1, 0}});
    CHECK(braids::linking_matrix(BraidWord{2, {}}) == M{{0, 0}, {0, 0}});
    // chain of two Hopf links
    CHECK(braids::linking_matrix(BraidWord{3, {1, 1, 2, 2}}) ==
          M{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    // knot closure: 1x1 zero matrix
    CHECK(braids::linking_matrix(BraidWord{2, {1, 1, 1}}) == M{{0}});
}

TEST_CASE("linking_parity") {
    const auto hopf = braids::linking_parity(BraidWord{2, {1, 1}});
    CHECK(hopf.matrix() == gf2::Gf2Matrix::from_rows({{1, 1}, {1, 1}}));
    const auto unlink = braids::linking_parity(BraidWord{2, {}});
    CHECK(unlink.matrix() == gf2::Gf2Matrix::from_rows({{1, 0}, {0, 1}}));
    const auto chain = braids::linking_parity(BraidWord{3, {1, 1, 2, 2}});
    CHECK(chain.matrix() ==
          gf2::Gf2Matrix::from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
}

TEST_CASE("self_linking: frozen examples") {
    CHECK(braids::self_linking(BraidWord{1, {}}, 0) == -1);
    CHECK(braids::self_linking(BraidWord{2, {1, 1, 1}}, 0) == 1);
    CHECK(braids::self_linking(BraidWord{2, {-1, -1, -1}}, 0) == -5);
    CHECK(braids::self_linking(BraidWord{2, {1, 1}}, 0) == -1);
    CHECK(braids::self_linking(BraidWord{2, {1, 1}}, 1) == -1);
    CHECK_THROWS_AS(braids::self_linking(BraidWord{2, {1, 1}}, 2),
                    std::invalid_argument);
}

TEST_CASE("push_off_linking: frozen examples") {
    CHECK(braids::push_off_linking(BraidWord{1, {}}, 0) == -1);
    CHECK(braids::push_off_linking(BraidWord{2, {1, 1, 1}}, 0) == 1);
    CHECK(braids::push_off_linking(BraidWord{2, {1, 1}}, 0) == -1);
    CHECK_THROWS_AS(braids::push_off_linking(BraidWord{2, {1, 1}}, 2),
                    std::invalid_argument);
}

TEST_CASE("doubled braid keeps linking with the other components") {
    // doubling one Hopf component: each copy still links the other
    // component once
    const auto d = braids::double_component(BraidWord{2, {1, 1}}, 0);
    const auto lc = braids::closure_components(d.braid);
    CHECK(lc.count == 3);
    const auto lk = braids::linking_matrix(d.braid);
    const std::size_t c1 = lc.assignment[d.copy1_strand];
    const std::size_t c2 = lc.assignment[d.copy2_strand];
    const std::size_t other = 3 - c1 - c2;
    CHECK(lk[c1][other] == 1);
    CHECK(lk[c2][other] == 1);
}

TEST_CASE("self_linking equals the push-off oracle on small words") {
    testutil::for_each_word(3, 5, [](const BraidWord& b) {
        const auto lc = braids::closure_components(b);
        for (std::size_t c = 0; c < lc.count; ++c) {
            REQUIRE(braids::self_linking(b, c) ==
                    braids::push_off_linking(b, c));
        }
    });
}

TEST_CASE("sl of a knot closure is odd (small exhaustive)") {
    for (int strands = 1; strands <= 3; ++strands) {
        testutil::for_each_word(strands, 5, [](const BraidWord& b) {
            const auto lc = braids::closure_components(b);
            for (std::size_t c = 0; c < lc.count; ++c) {
                const auto sl = braids::self_linking(b, c);
                REQUIRE(((sl % 2) + 2) % 2 == 1);
            }
        });
    }
}

TEST_CASE("sl of every component is odd (random large words)") {
    std::mt19937_64 rng(0x5eed015);
    for (int trial = 0; trial < 300; ++trial) {
        const int strands = 2 + static_cast<int>(rng() % 6);
        const auto b = testutil::random_braid(strands, rng() % 40, rng);
        const auto lc = braids::closure_components(b);
        for (std::size_t c = 0; c < lc.count; ++c) {
            const auto sl = braids::self_linking(b, c);
            REQUIRE(((sl % 2) + 2) % 2 == 1);
        }
    }
}

TEST_CASE("linking matrix is symmetric with zero diagonal") {
    std::mt19937_64 rng(0x5eed011);
    for (int trial = 0; trial < 300; ++trial) {
        const int strands = 2 + static_cast<int>(rng() % 5);
        const auto b = testutil::random_braid(strands, rng() % 14, rng);
        const auto lk = braids::linking_matrix(b);
        for (std::size_t i = 0; i < lk.size(); ++i) {
            REQUIRE(lk[i][i] == 0);
            for (std::size_t j = 0; j < lk.size(); ++j)
                REQUIRE(lk[i][j] == lk[j][i]);
        }
    }
}

TEST_CASE("stabilization: positive preserves sl, negative shifts by -2") {
    std::mt19937_64 rng(0x5eed012);
    for (int trial = 0; trial < 200; ++trial) {
        const int strands = 2 + static_cast<int>(rng() % 4);
        const auto b = testutil::random_knot_braid(strands, 2 + rng() % 10, rng);
        const auto sl = braids::self_linking(b, 0);

        BraidWord pos{b.strands + 1, b.letters};
        pos.letters.push_back(b.strands);
        REQUIRE(braids::closure_components(pos).count == 1);
        REQUIRE(braids::self_linking(pos, 0) == sl);

        BraidWord neg{b.strands + 1, b.letters};
        neg.letters.push_back(-b.strands);
        REQUIRE(braids::self_linking(neg, 0) == sl - 2);
    }
}

TEST_CASE("conjugation: cyclic rotation preserves sl and linking matrix") {
    std::mt19937_64 rng(0x5eed013);
    for (int trial = 0; trial < 200; ++trial) {
        const int strands = 2 + static_cast<int>(rng() % 4);
        BraidWord b = testutil::random_braid(strands, 1 + rng() % 12, rng);
        const std::size_t steps = 1 + rng() % b.letters.size();
        for (std::size_t step = 0; step < steps; ++step) {
            const auto oc = braids::closure_components(b);
            const auto olk = braids::linking_matrix(b);
            const auto r = testutil::rotate_once(b);
            const auto nc = braids::closure_components(r.braid);
            REQUIRE(nc.count == oc.count);

            // component relabeling induced by the rotation
            std::vector<std::size_t> to_old(nc.count, SIZE_MAX);
            for (std::size_t p = 0; p < nc.assignment.size(); ++p) {
                const std::size_t cnew = nc.assignment[p];
                const std::size_t cold =
                    oc.assignment[r.old_strand_of_new[p]];
                if (to_old[cnew] == SIZE_MAX)
                    to_old[cnew] = cold;
                else
                    REQUIRE(to_old[cnew] == cold);
            }

            const auto nlk = braids::linking_matrix(r.braid);
            for (std::size_t i = 0; i < nc.count; ++i) {
                REQUIRE(braids::self_linking(r.braid, i) ==
                        braids::self_linking(b, to_old[i]));
                for (std::size_t j = 0; j < nc.count; ++j)
                    REQUIRE(nlk[i][j] == olk[to_old[i]][to_old[j]]);
            }
            b = r.braid;
        }
    }
}

TEST_CASE("braid relation and far commutation preserve invariants") {
    std::mt19937_64 rng(0x5eed014);
    int applied = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int strands = 3 + static_cast<int>(rng() % 3);
        BraidWord b = testutil::random_braid(strands, 4 + rng() % 10, rng);
        const auto lc = braids::closure_components(b);
        const auto lk = braids::linking_matrix(b);
        std::vector<std::int64_t> sl(lc.count);
        for (std::size_t c = 0; c < lc.count; ++c)
            sl[c] = braids::self_linking(b, c);

        for (int step = 0; step < 6; ++step) {
            std::optional<BraidWord> next =
                (rng() & 1u) ? testutil::apply_braid_relation(b, rng)
                             : testutil::apply_far_commutation(b, rng);
            if (!next) continue;
            ++applied;
            b = *next;
            // both moves fix the strand permutation, so components and
            // their numbering are unchanged
            const auto nc = braids::closure_components(b);
            REQUIRE(nc.assignment == lc.assignment);
            REQUIRE(braids::linking_matrix(b) == lk);
            for (std::size_t c = 0; c < lc.count; ++c)
                REQUIRE(braids::self_linking(b, c) == sl[c]);
        }
    }
    CHECK(applied > 200);
}

TEST_CASE("framed link validates framing count") {
    CHECK_THROWS_AS(braids::make_framed_link(BraidWord{2, {1, 1}}, {0}),
                    std::invalid_argument);
    const auto fl = braids::make_framed_link(BraidWord{2, {1, 1}}, {0, 2});
    CHECK(fl.framings == std::vector<std::int64_t>{0, 2});
}
