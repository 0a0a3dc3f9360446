#include <catch2/catch_amalgamated.hpp>

#include "richdegen/permutation.hpp"
#include "richdegen/restriction.hpp"
#include "richdegen/subset.hpp"

using namespace rdg;

namespace {
Subset S(std::initializer_list<int> e, int n) { return Subset(std::vector<int>(e), n); }
Permutation P(std::initializer_list<int> e) { return Permutation(std::vector<int>(e)); }
}  // namespace

TEST_CASE("bruhat comparison of subsets") {
    CHECK(bruhat_leq(S({2, 3}, 4), S({2, 4}, 4)));
    CHECK(bruhat_leq(S({1, 3}, 4), S({1, 3}, 4)));
    CHECK_FALSE(bruhat_leq(S({1, 4}, 4), S({2, 3}, 4)));
    CHECK_FALSE(bruhat_leq(S({2, 3}, 4), S({1, 4}, 4)));
    CHECK_THROWS_AS(bruhat_leq(S({1}, 4), S({1, 2}, 4)), std::invalid_argument);
    CHECK_THROWS_AS(bruhat_leq(S({1, 2}, 4), S({1, 2}, 5)), std::invalid_argument);
}

TEST_CASE("sorted prefixes") {
    CHECK(prefix_sorted(P({4, 2, 3, 1}), 2) == S({2, 4}, 4));
    CHECK(prefix_sorted(P({2, 3, 1, 4}), 3) == S({1, 2, 3}, 4));
    CHECK(prefix_sorted(P({3, 1, 4, 2}), 4) == S({1, 2, 3, 4}, 4));
    CHECK_THROWS_AS(prefix_sorted(P({1, 2}), 3), std::invalid_argument);
}

TEST_CASE("bruhat comparison of permutations") {
    CHECK(bruhat_leq(P({2, 3, 1, 4}), P({4, 2, 3, 1})));
    CHECK(bruhat_leq(P({1, 3, 2}), P({2, 3, 1})));
    CHECK_FALSE(bruhat_leq(P({2, 3, 1}), P({3, 1, 2})));
    // agreement with the all-prefix definition on all of S_4 x S_4
    const auto perms = all_permutations(4);
    for (const auto& v : perms)
        for (const auto& w : perms) {
            bool expect = true;
            for (int m = 1; m <= 4; ++m)
                if (!bruhat_leq(prefix_sorted(v, m), prefix_sorted(w, m))) expect = false;
            CHECK(bruhat_leq(v, w) == expect);
        }
}

TEST_CASE("w0 complement") {
    CHECK(w0_complement(S({2, 4, 5}, 5), 5) == S({1, 2, 4}, 5));
    CHECK(w0_complement(S({1, 2, 3}, 4), 4) == S({2, 3, 4}, 4));
    for (const Subset& I : k_subsets(6, 3))
        CHECK(w0_complement(w0_complement(I, 6), 6) == I);
}

TEST_CASE("restriction sets for the flag variety") {
    const auto rs = vanishing_sets_flag(P({2, 3, 1, 4}), P({4, 2, 3, 1}));
    const std::vector<Subset> surv = {S({2}, 4),       S({3}, 4),       S({4}, 4),
                                      S({2, 3}, 4),    S({2, 4}, 4),    S({1, 2, 3}, 4),
                                      S({1, 2, 4}, 4), S({1, 3, 4}, 4), S({2, 3, 4}, 4)};
    const std::vector<Subset> vanish = {S({1}, 4), S({1, 2}, 4), S({1, 3}, 4), S({1, 4}, 4),
                                        S({3, 4}, 4)};
    auto sorted = [](std::vector<Subset> v) {
        std::sort(v.begin(), v.end(), [](const Subset& a, const Subset& b) {
            return std::make_pair(a.size(), a.elems) < std::make_pair(b.size(), b.elems);
        });
        return v;
    };
    CHECK(sorted(rs.surviving) == sorted(surv));
    CHECK(sorted(rs.vanishing) == sorted(vanish));

    // v = w = id keeps exactly the prefixes
    const auto rs_id = vanishing_sets_flag(P({1, 2, 3}), P({1, 2, 3}));
    REQUIRE(rs_id.surviving.size() == 2);
    CHECK(rs_id.surviving[0] == S({1}, 3));
    CHECK(rs_id.surviving[1] == S({1, 2}, 3));

    // extremes survive everything
    const auto rs_all = vanishing_sets_flag(P({1, 2, 3, 4}), P({4, 3, 2, 1}));
    CHECK(rs_all.vanishing.empty());

    CHECK_THROWS_AS(vanishing_sets_flag(P({2, 3, 1}), P({3, 1, 2})), std::invalid_argument);
}

TEST_CASE("restriction sets for the Grassmannian") {
    const auto rs = vanishing_sets_grassmannian(S({1, 3, 5}, 5), S({2, 4, 5}, 5), 3, 5);
    const std::vector<Subset> vanish = {S({1, 2, 3}, 5), S({1, 2, 4}, 5), S({1, 2, 5}, 5),
                                        S({1, 3, 4}, 5), S({2, 3, 4}, 5), S({3, 4, 5}, 5)};
    const std::vector<Subset> surv = {S({1, 3, 5}, 5), S({1, 4, 5}, 5), S({2, 3, 5}, 5),
                                      S({2, 4, 5}, 5)};
    CHECK(rs.vanishing == vanish);
    CHECK(rs.surviving == surv);

    const auto one = vanishing_sets_grassmannian(S({1, 2}, 4), S({1, 2}, 4), 2, 4);
    REQUIRE(one.surviving.size() == 1);
    CHECK(one.surviving[0] == S({1, 2}, 4));

    const auto full = vanishing_sets_grassmannian(S({1, 2}, 4), S({3, 4}, 4), 2, 4);
    CHECK(full.vanishing.empty());

    CHECK_THROWS_AS(vanishing_sets_grassmannian(S({2, 3}, 4), S({1, 4}, 4), 2, 4),
                    std::invalid_argument);
}

TEST_CASE("remove_top deletes the largest entry") {
    CHECK(remove_top(P({2, 4, 3, 1})) == P({2, 3, 1}));
    CHECK(remove_top(P({4, 1, 3, 2})) == P({1, 3, 2}));
    CHECK(remove_top(P({1, 2, 3, 4, 5})) == P({1, 2, 3, 4}));
}

TEST_CASE("W_v sets") {
    auto W = wv_set(P({2, 3, 1}));
    CHECK(ascent_run_positions(P({2, 3, 1})) == std::vector<int>{1});
    REQUIRE(W.size() == 2);
    CHECK(std::count(W.begin(), W.end(), P({2, 3, 1})) == 1);
    CHECK(std::count(W.begin(), W.end(), P({3, 2, 1})) == 1);

    W = wv_set(P({1, 2, 3}));
    CHECK(ascent_run_positions(P({1, 2, 3})) == std::vector<int>{1, 2});
    REQUIRE(W.size() == 3);  // {1,2} is adjacent, so only {}, {1}, {2}
    CHECK(std::count(W.begin(), W.end(), P({2, 1, 3})) == 1);
    CHECK(std::count(W.begin(), W.end(), P({1, 3, 2})) == 1);

    W = wv_set(P({1, 3, 2}));
    CHECK(W == std::vector<Permutation>{P({1, 3, 2})});
}

TEST_CASE("monotone profiles") {
    auto p = monotone_profile(P({1, 3, 2}));
    CHECK(p.ascending);
    CHECK(p.descending);
    CHECK(p.top_position == 2);
    CHECK_FALSE(monotone_profile(P({2, 1, 3})).ascending);
    p = monotone_profile(P({1, 2, 3, 4}));
    CHECK(p.ascending);
    CHECK(p.top_position == 4);
}

TEST_CASE("compatible pairs") {
    CHECK(compatible(P({1, 3, 4, 2}), P({2, 4, 3, 1})));
    CHECK_FALSE(compatible(P({1, 3, 4, 2}), P({4, 2, 3, 1})));
    // equal top position: only v <= w binds
    CHECK(compatible(P({1, 3, 2, 4}), P({2, 3, 1, 4})));
    CHECK(compatible(P({4, 1, 3, 2}), P({4, 2, 3, 1})));
}

TEST_CASE("serialization of permutations and subsets") {
    CHECK(to_string(P({2, 4, 3, 1})) == "2,4,3,1");
    CHECK(parse_permutation("2,4,3,1") == P({2, 4, 3, 1}));
    CHECK(to_string(S({1, 3, 4}, 5)) == "134");
    CHECK(parse_subset("134", 5) == S({1, 3, 4}, 5));
    CHECK(parse_subset("1,3,14", 14).elems == std::vector<int>({1, 3, 14}));
    CHECK(to_string(S({1, 3, 14}, 14)) == "1,3,14");
    CHECK_THROWS(parse_subset("190", 5));
}
