#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "denstat/bijections.hpp"
#include "denstat/enumeration.hpp"
#include "denstat/statistics.hpp"

using namespace denstat;

namespace {

const Permutation kSigma14 =
    Permutation::parse("3 10 1 14 7 2 8 9 5 4 13 6 12 11");
const Permutation kSigma6{6, 2, 1, 5, 3, 4};

std::vector<std::string> step_names(const BijectionTrace& trace) {
    std::vector<std::string> names;
    for (const auto& step : trace.steps) names.push_back(step.name);
    return names;
}

std::vector<int> exclp_positions(const Permutation& p, int g, int h) {
    return gap_level_profile(p, g, 1, h).exclp_positions;
}

}  // namespace

TEST_CASE("case-2 worked example with full trace") {
    const auto [image, trace] = phi_den(kSigma14, 6);
    CHECK(image == Permutation::parse("3 14 1 15 10 2 8 9 7 5 13 4 6 12 11"));
    CHECK(trace.case_tag == MapCase::case2);
    CHECK(trace.s == 7);
    CHECK(trace.d == 2);
    CHECK(trace.exc_letters == std::vector<int>{3, 7, 8, 9, 10, 13, 14});
    CHECK(trace.nonexc_positions == std::vector<int>{3, 6, 9, 10, 12, 13, 14});
    CHECK(trace.chain_letters == std::vector<int>{7, 10, 14});
    CHECK(trace.y == 3);
    CHECK(trace.z == 4);

    CHECK(step_names(trace) ==
          std::vector<std::string>{"Initial", "Adjusting Excedance-Letters",
                                   "Shifting Non-Excedance-Letters", "Placing e_d"});
    CHECK(trace.steps[0].sequence ==
          std::vector<int>{3, 10, 1, 14, 7, 2, 8, 9, 5, 4, 13, 6, 12, 11});
    CHECK(trace.steps[1].sequence ==
          std::vector<int>{3, 14, 1, 15, 10, 2, 8, 9, 5, 4, 13, 6, 12, 11});
    CHECK(trace.steps[2].sequence ==
          std::vector<int>{3, 14, 1, 15, 10, 2, 8, 9, 0, 5, 13, 4, 6, 12, 11});
    CHECK(trace.steps[3].sequence ==
          std::vector<int>{3, 14, 1, 15, 10, 2, 8, 9, 7, 5, 13, 4, 6, 12, 11});
}

TEST_CASE("case-3 worked example with full trace") {
    const auto [image, trace] = phi_den(kSigma14, 9);
    CHECK(image == Permutation::parse("3 10 1 14 7 15 8 9 2 5 13 4 6 12 11"));
    CHECK(trace.case_tag == MapCase::case3);
    CHECK(trace.d == 2);
    CHECK(trace.u == 4);
    CHECK(trace.v == 3);
    CHECK(trace.z == 6);

    CHECK(step_names(trace) ==
          std::vector<std::string>{"Initial", "Shifting Non-Excedance-Letters",
                                   "Placing n"});
    CHECK(trace.steps[1].sequence ==
          std::vector<int>{3, 10, 1, 14, 7, 0, 8, 9, 2, 5, 13, 4, 6, 12, 11});
    CHECK(trace.steps[2].sequence ==
          std::vector<int>{3, 10, 1, 14, 7, 15, 8, 9, 2, 5, 13, 4, 6, 12, 11});
}

TEST_CASE("images of (621534, c)") {
    const std::vector<std::string> expected{
        "6 2 1 5 3 4 7", "7 2 1 5 3 6 4", "7 2 1 6 5 3 4", "6 7 2 5 1 3 4",
        "6 2 7 5 1 3 4", "6 2 1 5 7 3 4", "6 2 1 5 3 7 4"};
    for (int c = 0; c <= 6; ++c) {
        CHECK(phi_den(kSigma6, c).image.str() == expected[static_cast<size_t>(c)]);
    }
}

TEST_CASE("phi_den rejects c outside [0, n-1]") {
    CHECK_THROWS_AS(phi_den(kSigma6, -1), range_error);
    CHECK_THROWS_AS(phi_den(kSigma6, 7), range_error);
    CHECK_NOTHROW(phi_den(Permutation{}, 0));
    CHECK(phi_den(Permutation{}, 0).image == Permutation{1});
}

TEST_CASE("critical non-excedance-letters") {
    CHECK(critical_nonexc_positions(Permutation::identity(5)) ==
          std::vector<int>{1, 2, 3, 4, 5});
    CHECK(critical_nonexc_positions(Permutation{6, 2, 1, 5, 3, 4, 7}) ==
          std::vector<int>{2, 7});

    // In a case-2 image the rightmost critical letter is e_d, right of z.
    const auto [image, trace] = phi_den(kSigma14, 6);
    const std::vector<int> crit = critical_nonexc_positions(image);
    CHECK(crit == std::vector<int>{3, 9});
    CHECK(image.at(crit.back()) == 7);
    CHECK(crit.back() > *trace.z);

    // Every permutation has at least one critical non-excedance-letter.
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [](const Permutation& w) {
            CHECK(!critical_nonexc_positions(w).empty());
        });
    }
}

TEST_CASE("inverse fixtures") {
    const auto r1 = phi_den_inverse(Permutation{6, 7, 2, 5, 1, 3, 4});
    CHECK(r1.preimage == kSigma6);
    CHECK(r1.c == 3);

    const auto r2 =
        phi_den_inverse(Permutation::parse("3 14 1 15 10 2 8 9 7 5 13 4 6 12 11"));
    CHECK(r2.preimage == kSigma14);
    CHECK(r2.c == 6);
    CHECK(r2.trace.z == 4);
    CHECK(r2.trace.a == 7);

    const auto r3 = phi_den_inverse(Permutation{6, 2, 1, 5, 3, 4, 7});
    CHECK(r3.preimage == kSigma6);
    CHECK(r3.c == 0);

    CHECK(phi_den_inverse(Permutation{1}).preimage == Permutation{});
    CHECK(phi_den_inverse(Permutation{1}).c == 0);
}

TEST_CASE("phi_den is a bijection with the stated recurrence, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> images;
        for_each_permutation(n - 1, [&](const Permutation& sigma) {
            const std::vector<int> exc_sigma = exclp_positions(sigma, 1, 1);
            const int s = static_cast<int>(exc_sigma.size());
            std::vector<int> k;
            for (int i = 1; i < n; ++i) {
                if (!std::binary_search(exc_sigma.begin(), exc_sigma.end(), i))
                    k.push_back(i);
            }
            for (int c = 0; c <= n - 1; ++c) {
                const auto [w, trace] = phi_den(sigma, c);
                CHECK(images.insert(w.letters()).second);

                std::vector<int> expected = exc_sigma;
                if (c > s) expected.push_back(k[static_cast<size_t>(c - s) - 1]);
                std::sort(expected.begin(), expected.end());
                CHECK(exclp_positions(w, 1, 1) == expected);
                CHECK(gap_level_den(w, 1, 1) == gap_level_den(sigma, 1, 1) + c);

                const auto back = phi_den_inverse(w);
                CHECK(back.preimage == sigma);
                CHECK(back.c == c);

                // The inverse classifies by the same case.
                CHECK(back.trace.case_tag == trace.case_tag);
                // Case 2: the chain read off the image is the forward chain
                // shifted once, capped by n.
                if (trace.case_tag == MapCase::case2) {
                    std::vector<int> shifted(trace.chain_letters.begin() + 1,
                                             trace.chain_letters.end());
                    shifted.push_back(n);
                    CHECK(back.trace.chain_letters == shifted);
                }
                if (trace.case_tag == MapCase::case3) {
                    CHECK(*trace.u + *trace.v == trace.s);
                    CHECK(back.trace.u == trace.u);
                }
            }
        });
        CHECK(static_cast<std::int64_t>(images.size()) == factorial(n));
    }
}

TEST_CASE("level excedance counts follow the shifted threshold, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for_each_permutation(n - 1, [&](const Permutation& sigma) {
            for (int c = 0; c <= n - 1; ++c) {
                const Permutation w = phi_den(sigma, c).image;
                for (int r = 1; r <= n; ++r) {
                    const int before = gap_level_exc_count(sigma, 1, r);
                    const int after = gap_level_exc_count(w, 1, r);
                    if (c <= before + r - 1) {
                        CHECK(after == before);
                    } else {
                        CHECK(after == before + 1);
                    }
                }
            }
        });
    }
}

TEST_CASE("general map fixtures") {
    CHECK(phi_gh_den(1, 1, kSigma6, 3).image == Permutation{6, 7, 2, 5, 1, 3, 4});
    const auto [image, trace] = phi_gh_den(2, 1, kSigma6, 1);
    CHECK(image == Permutation{6, 2, 1, 5, 3, 7, 4});
    CHECK(trace.case_tag == MapCase::case1);
    CHECK(gap_level_den(image, 2, 1) == gap_level_den(kSigma6, 2, 1) + 1);

    const auto back = phi_gh_den_inverse(2, 1, Permutation{6, 2, 1, 5, 3, 7, 4});
    CHECK(back.preimage == kSigma6);
    CHECK(back.c == 1);

    // g >= n puts every c in case 1, down to prepending at c = n-1.
    const auto prepend = phi_gh_den(7, 1, kSigma6, 6);
    CHECK(prepend.image == Permutation{7, 6, 2, 1, 5, 3, 4});
    CHECK(prepend.trace.case_tag == MapCase::case1);

    CHECK_THROWS_AS(phi_gh_den(1, 8, kSigma6, 0), range_error);
    CHECK_THROWS_AS(phi_gh_den(1, 1, kSigma6, 7), range_error);
    CHECK_THROWS_AS(phi_gh_den(0, 1, kSigma6, 0), range_error);
    CHECK_THROWS_AS(phi_gh_den_inverse(1, 8, Permutation{6, 2, 1, 5, 3, 4, 7}),
                    range_error);
}

TEST_CASE("phi_gh_den_inverse at g=h=1 inverts every table image") {
    for (int c = 0; c <= 6; ++c) {
        const Permutation w = phi_den(kSigma6, c).image;
        const auto back = phi_gh_den_inverse(1, 1, w);
        CHECK(back.preimage == kSigma6);
        CHECK(back.c == c);
    }
}

TEST_CASE("general map step names") {
    // sigma = 621534, g=2, h=1: 2Exclp_1 = {1}, letters e = (6).
    // c=2 hits case 2 (d = s+g-c = 1), c=3..6 case 3.
    const auto case2 = phi_gh_den(2, 1, kSigma6, 2);
    CHECK(case2.trace.case_tag == MapCase::case2);
    CHECK(step_names(case2.trace) ==
          std::vector<std::string>{"Initial", "Step 1", "Step 2", "Step 3"});
    const auto case3 = phi_gh_den(2, 1, kSigma6, 3);
    CHECK(case3.trace.case_tag == MapCase::case3);
    CHECK(step_names(case3.trace) ==
          std::vector<std::string>{"Initial", "Step i", "Step ii"});
}

TEST_CASE("critical non-g-gap excedance-letters") {
    // g = 1 coincides with the classical notion.
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [](const Permutation& w) {
            CHECK(critical_gap_nonexc_positions(1, w) == critical_nonexc_positions(w));
        });
    }
    // For g >= 2 the interval [w_i-g+1, i) is no longer empty on the
    // identity, so not every position is critical.
    CHECK(critical_gap_nonexc_positions(2, Permutation::identity(3)) ==
          std::vector<int>{1});
    CHECK(critical_gap_nonexc_positions(2, Permutation{6, 2, 1, 5, 3, 7, 4}) ==
          std::vector<int>{2, 4, 6});
    // Totality: at least one critical letter for every permutation and gap.
    for (int n = 1; n <= 6; ++n) {
        for (int g = 1; g <= 4; ++g) {
            for_each_permutation(n, [&](const Permutation& w) {
                CHECK(!critical_gap_nonexc_positions(g, w).empty());
            });
        }
    }
}

TEST_CASE("phi_gh_den is a bijection with the stated recurrence, n <= 5") {
    // g up to n+1 exercises the degenerate regime where every c falls in
    // case 1 or case 3.
    for (int n = 1; n <= 5; ++n) {
        for (int g = 1; g <= n + 1; ++g) {
            for (int h = 1; h <= n; ++h) {
                std::set<std::vector<int>> images;
                for_each_permutation(n - 1, [&](const Permutation& sigma) {
                    const std::vector<int> exclp = exclp_positions(sigma, g, h);
                    const int s = static_cast<int>(exclp.size());
                    std::vector<int> k;
                    for (int i = 1; i < n; ++i) {
                        if (!std::binary_search(exclp.begin(), exclp.end(), i))
                            k.push_back(i);
                    }
                    for (int c = 0; c <= n - 1; ++c) {
                        const auto [w, trace] = phi_gh_den(g, h, sigma, c);
                        CHECK(images.insert(w.letters()).second);
                        std::vector<int> expected = exclp;
                        if (c > s + g - 1) {
                            expected.push_back(k[static_cast<size_t>(c - s - g + 1) - 1]);
                        }
                        std::sort(expected.begin(), expected.end());
                        CHECK(exclp_positions(w, g, h) == expected);
                        CHECK(gap_level_den(w, g, h) == gap_level_den(sigma, g, h) + c);

                        const auto back = phi_gh_den_inverse(g, h, w);
                        CHECK(back.preimage == sigma);
                        CHECK(back.c == c);
                        CHECK(back.trace.case_tag == trace.case_tag);
                        if (trace.case_tag == MapCase::case2) {
                            std::vector<int> shifted(trace.chain_letters.begin() + 1,
                                                     trace.chain_letters.end());
                            shifted.push_back(n);
                            CHECK(back.trace.chain_letters == shifted);
                        }
                    }
                });
                CHECK(static_cast<std::int64_t>(images.size()) == factorial(n));
            }
        }
    }
}

TEST_CASE("phi_gh_den at g=h=1 specializes to phi_den, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n - 1, [&](const Permutation& sigma) {
            for (int c = 0; c <= n - 1; ++c) {
                CHECK(phi_gh_den(1, 1, sigma, c).image == phi_den(sigma, c).image);
            }
        });
    }
}

TEST_CASE("trace text rendering") {
    const auto [image, trace] = phi_den(kSigma6, 2);
    const std::string text = format_trace(trace);
    CHECK(text.find("Case2") != std::string::npos);
    CHECK(text.find("Adjusting Excedance-Letters") != std::string::npos);
    CHECK(text.find("*") != std::string::npos);  // hole in the shift snapshot
    CHECK(text.find("7 2 1 6 5 3 4") != std::string::npos);
}
