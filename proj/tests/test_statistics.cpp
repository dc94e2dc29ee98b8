#include <doctest.h>

#include <vector>

#include "denstat/enumeration.hpp"
#include "denstat/statistics.hpp"
#include "stat_oracles.hpp"

using namespace denstat;

namespace {
const Permutation kRunning{2, 7, 1, 5, 6, 4, 3};  // 2715643
}

TEST_CASE("descent profiles") {
    const DescentProfile full_reversal = descent_profile(Permutation{3, 2, 1}, 1);
    CHECK(full_reversal.rdes_positions == std::vector<int>{1, 2});
    CHECK(full_reversal.rdes == 2);
    CHECK(full_reversal.rinv == 0);
    CHECK(full_reversal.rmaj == 3);

    for (int r = 1; r <= 9; ++r) {
        const DescentProfile id = descent_profile(Permutation::identity(6), r);
        CHECK(id.rdes == 0);
        CHECK(id.rmaj == 0);
    }

    // r >= n collapses rmaj to inv.
    const Permutation w{2, 1, 5, 4, 3};
    CHECK(descent_profile(w, 5).rmaj == 4);
    CHECK(descent_profile(w, 5).rmaj == inv_count(w));
}

TEST_CASE("gap/level profiles of 2715643") {
    const GapLevelProfile p1 = gap_level_profile(kRunning, 1, 1, 1);
    CHECK(p1.exclp_positions == std::vector<int>{1, 2, 4, 5});
    CHECK(p1.exc_positions == std::vector<int>{1, 2, 4, 5});
    CHECK(p1.excl_letters == std::vector<int>{2, 7, 5, 6});

    const GapLevelProfile p3 = gap_level_profile(kRunning, 1, 3, 3);
    CHECK(p3.exclp_positions == std::vector<int>{2, 4, 5});
    CHECK(p3.excl_letters == std::vector<int>{7, 5, 6});
    CHECK(p3.nexcl_letters == std::vector<int>{2, 1, 4, 3});
    CHECK(p3.exc_positions == std::vector<int>{4, 5});

    const GapLevelProfile p6 = gap_level_profile(kRunning, 1, 6, 6);
    CHECK(p6.exclp_positions == std::vector<int>{2, 5});
    CHECK(p6.excl_letters == std::vector<int>{7, 6});
    CHECK(p6.nexcl_letters == std::vector<int>{2, 1, 5, 4, 3});
    CHECK(p6.exc_positions.empty());
}

TEST_CASE("excl/nexcl interleave back to sigma") {
    for_each_permutation(5, [](const Permutation& sigma) {
        for (int g = 1; g <= 4; ++g) {
            for (int h = 1; h <= 4; ++h) {
                const GapLevelProfile profile = gap_level_profile(sigma, g, 1, h);
                std::vector<int> rebuilt;
                size_t ie = 0, in = 0;
                size_t next_exclp = 0;
                for (int i = 1; i <= sigma.size(); ++i) {
                    if (next_exclp < profile.exclp_positions.size() &&
                        profile.exclp_positions[next_exclp] == i) {
                        rebuilt.push_back(profile.excl_letters[ie++]);
                        ++next_exclp;
                    } else {
                        rebuilt.push_back(profile.nexcl_letters[in++]);
                    }
                }
                CHECK(rebuilt == sigma.letters());
            }
        }
    });
}

TEST_CASE("gap/level den fixtures") {
    CHECK(gap_level_den(Permutation::parse("7 1 5 4 9 2 6 3 8"), 1, 1) == 13);
    CHECK(gap_level_den(kRunning, 1, 3) == 15);
    CHECK(gap_level_den(kRunning, 1, 6) == 12);
    for (int g = 1; g <= 5; ++g) {
        for (int h = 1; h <= 5; ++h) {
            CHECK(gap_level_den(Permutation::identity(6), g, h) == 0);
        }
    }
}

TEST_CASE("the engine matches the per-definition oracles exhaustively") {
    for (int n = 0; n <= 7; ++n) {
        for_each_permutation(n, [&](const Permutation& sigma) {
            CHECK(gap_level_den(sigma, 1, 1) == oracle::den(sigma));
            for (int r = 1; r <= n + 1; ++r) {
                CHECK(gap_level_den(sigma, r, 1) == oracle::rden(sigma, r));
                CHECK(gap_level_den(sigma, 1, r) == oracle::den_level(sigma, r));
                CHECK(gap_level_exc_count(sigma, 1, r) == oracle::exc_level(sigma, r));
                const auto [rdes, rmaj] = oracle::rdes_rmaj(sigma, r);
                const DescentProfile profile = descent_profile(sigma, r);
                CHECK(profile.rdes == rdes);
                CHECK(profile.rmaj == rmaj);
            }
            // r >= n collapses both den variants to inv.
            if (n >= 1) {
                CHECK(gap_level_den(sigma, n, 1) == inv_count(sigma));
                CHECK(descent_profile(sigma, n).rmaj == inv_count(sigma));
            }
            CHECK(gap_level_den(sigma, n + 1, 1) == inv_count(sigma));
            CHECK(gap_level_den(sigma, 1, n + 1) == inv_count(sigma));
        });
    }
}

TEST_CASE("level splits") {
    const auto [a3, b3] = level_split(kRunning, 1, 1, 3);
    CHECK(a3 == std::vector<int>{1, 2});
    CHECK(b3.empty());

    const auto [a1, b1] = level_split(kRunning, 1, 1, 1);
    CHECK(a1.empty());
    CHECK(b1.empty());

    for_each_permutation(5, [](const Permutation& sigma) {
        for (int level = 1; level <= 7; ++level) {
            const auto [a, b] = level_split(sigma, 1, 1, level);
            CHECK(static_cast<int>(a.size() + b.size()) == level - 1);
        }
    });
}

TEST_CASE("eval_stat dispatch") {
    CHECK(eval_stat(StatDescriptor::den(), Permutation::parse("7 1 5 4 9 2 6 3 8")) == 13);
    CHECK(eval_stat(StatDescriptor::exc_level(2), kRunning) == 3);
    CHECK(eval_stat(StatDescriptor::zero_stat(), kRunning) == 0);
    const std::vector<int> expected_exc{4, 3, 2, 2, 1, 0};
    for (int r = 1; r <= 6; ++r) {
        CHECK(eval_stat(StatDescriptor::exc_level(r), kRunning) ==
              expected_exc[static_cast<size_t>(r) - 1]);
    }
    CHECK(eval_stat(StatDescriptor::inv(), kRunning) == inv_count(kRunning));
    CHECK(eval_stat(StatDescriptor::des(), Permutation{3, 2, 1}) == 2);
    CHECK(eval_stat(StatDescriptor::maj(), Permutation{3, 2, 1}) == 3);
}

TEST_CASE("descriptor text format") {
    CHECK(StatDescriptor::parse("gden:g=2,h=3") == StatDescriptor::gap_den(2, 3));
    CHECK(StatDescriptor::parse("gexc:g=2,l=3") == StatDescriptor::gap_exc(2, 3));
    CHECK(StatDescriptor::parse("exc_l:l=3") == StatDescriptor::exc_level(3));
    CHECK(StatDescriptor::parse("den_h:h=4") == StatDescriptor::den_level(4));
    CHECK(StatDescriptor::parse("rmaj:r=2") == StatDescriptor::rmaj(2));
    CHECK(StatDescriptor::parse("rden:r=3") == StatDescriptor::rden(3));
    CHECK(StatDescriptor::parse("des") == StatDescriptor::des());
    CHECK(StatDescriptor::parse("zero") == StatDescriptor::zero_stat());
    CHECK(StatDescriptor::parse("rexc") == StatDescriptor::rexc(1));

    CHECK_THROWS_WITH_AS(StatDescriptor::parse("denn"), doctest::Contains("'denn'"),
                         invalid_input_error);
    CHECK_THROWS_WITH_AS(StatDescriptor::parse("gden:q=2"), doctest::Contains("'q'"),
                         invalid_input_error);
    CHECK_THROWS_AS(StatDescriptor::parse("exc_l:l=0"), invalid_input_error);
    CHECK_THROWS_AS(StatDescriptor::parse("des:r=2"), invalid_input_error);
    CHECK_THROWS_AS(StatDescriptor::parse("gexc:h=2"), invalid_input_error);

    // Canonical names round-trip.
    const std::vector<StatDescriptor> all{
        StatDescriptor::des(),         StatDescriptor::maj(),
        StatDescriptor::inv(),         StatDescriptor::exc(),
        StatDescriptor::den(),         StatDescriptor::zero_stat(),
        StatDescriptor::rdes(2),       StatDescriptor::rmaj(2),
        StatDescriptor::rexc(3),       StatDescriptor::rden(3),
        StatDescriptor::exc_level(2),  StatDescriptor::den_level(5),
        StatDescriptor::gap_exc(2, 3), StatDescriptor::gap_den(4, 2)};
    for (const StatDescriptor& d : all) {
        CHECK(StatDescriptor::parse(d.str()) == d);
    }
}

TEST_CASE("statistics of the empty and singleton permutations are zero") {
    const std::vector<StatDescriptor> all{
        StatDescriptor::des(),        StatDescriptor::maj(),
        StatDescriptor::inv(),        StatDescriptor::exc(),
        StatDescriptor::den(),        StatDescriptor::rdes(3),
        StatDescriptor::rmaj(3),      StatDescriptor::rexc(2),
        StatDescriptor::rden(2),      StatDescriptor::exc_level(2),
        StatDescriptor::den_level(2), StatDescriptor::gap_den(2, 2)};
    for (const StatDescriptor& d : all) {
        CHECK(eval_stat(d, Permutation{}) == 0);
        CHECK(eval_stat(d, Permutation{1}) == 0);
    }
}
