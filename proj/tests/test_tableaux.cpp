#include <catch2/catch_amalgamated.hpp>

#include "richdegen/classifiers.hpp"
#include "richdegen/tableaux.hpp"

using namespace rdg;

namespace {
Subset S(std::initializer_list<int> e, int n) { return Subset(std::vector<int>(e), n); }
Permutation P(std::initializer_list<int> e) { return Permutation(std::vector<int>(e)); }
}  // namespace

TEST_CASE("bounded two-column SSYT enumeration") {
    CHECK(enumerate_two_column_ssyt(S({1, 2}, 4), S({3, 4}, 4), 2, 4).size() == 20);
    const auto one = enumerate_two_column_ssyt(S({1, 3}, 4), S({1, 3}, 4), 2, 4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].left == S({1, 3}, 4));
    CHECK(one[0].right == S({1, 3}, 4));
    for (const auto& T : enumerate_two_column_ssyt(S({1, 3}, 4), S({2, 4}, 4), 2, 4)) {
        CHECK(bruhat_leq(S({1, 3}, 4), T.left));
        CHECK(bruhat_leq(T.right, S({2, 4}, 4)));
    }
}

TEST_CASE("Gamma_ell rearrangement") {
    // swap-case with the single small entry on the left column
    auto T = make_semistandard(S({1, 4}, 5), S({3, 5}, 5));
    auto G = gamma_ell(T, 1);
    CHECK(G.left == S({3, 4}, 5));
    CHECK(G.right == S({1, 5}, 5));
    CHECK(G.left_rendered == std::vector<int>({3, 4}));
    CHECK(G.right_rendered == std::vector<int>({5, 1}));

    // swap-case with three small entries
    T = make_semistandard(S({1, 3}, 4), S({2, 4}, 4));
    G = gamma_ell(T, 3);
    CHECK(G.left == S({2, 3}, 4));
    CHECK(G.right == S({1, 4}, 4));
    CHECK(G.left_rendered == std::vector<int>({2, 3}));
    CHECK(G.right_rendered == std::vector<int>({4, 1}));

    // otherwise-branch keeps the column sets
    T = make_semistandard(S({1, 2}, 4), S({3, 4}, 4));
    G = gamma_ell(T, 2);
    CHECK(G.left == S({1, 2}, 4));
    CHECK(G.right == S({3, 4}, 4));
    CHECK(G.left_rendered == std::vector<int>({1, 2}));
    CHECK(G.right_rendered == std::vector<int>({3, 4}));

    CHECK_THROWS_AS(gamma_ell(T, 0), std::invalid_argument);
}

TEST_CASE("row multisets of rendered tableaux") {
    TwoColumnTableau T{S({1, 3, 5}, 5), S({2, 4, 5}, 5), {1, 3, 5}, {2, 4, 5},
                       TableauForm::MatchingField, 0};
    CHECK(row_multisets(T) ==
          std::vector<std::pair<int, int>>({{1, 2}, {3, 4}, {5, 5}}));
    TwoColumnTableau U{S({1, 2, 5}, 5), S({3, 4, 5}, 5), {1, 2, 5}, {4, 3, 5},
                       TableauForm::MatchingField, 3};
    CHECK(row_multisets(U) ==
          std::vector<std::pair<int, int>>({{1, 4}, {2, 3}, {5, 5}}));
}

TEST_CASE("Gamma bijection report") {
    KernelModel gr1(Family::grassmannian(2, 4), MatchingField::block_diagonal(2, 4, 1));
    auto rep = verify_gamma_bijection(gr1, S({1, 2}, 4), S({3, 4}, 4), 1);
    CHECK(rep.injective);
    CHECK(rep.surjective);
    CHECK(rep.ssyt_count == 20);
    CHECK(rep.std_count == 20);

    rep = verify_gamma_bijection(gr1, S({1, 3}, 4), S({1, 3}, 4), 1);
    CHECK(rep.ssyt_count == 1);
    CHECK(rep.std_count == 1);
}

TEST_CASE("flag SSYT counts match degree-d standard monomials on T u Z pairs") {
    KernelModel fl3(Family::flag(3), MatchingField::block_diagonal(2, 3, 0));
    const Permutation id3 = identity_perm(3), w03 = longest_perm(3);
    CHECK(flag_ssyt_count(id3, w03, 2) == 20);
    CHECK(standard_monomial_count_deg(fl3, fl3.full_mask(), 2) == 20);
    CHECK(flag_ssyt_count(id3, w03, 3) ==
          standard_monomial_count_deg(fl3, fl3.full_mask(), 3));

    FlagClassifier closed;
    KernelModel fl4(Family::flag(4), MatchingField::block_diagonal(3, 4, 0));
    const auto perms = all_permutations(4);
    for (const auto& v : perms)
        for (const auto& w : perms) {
            if (!bruhat_leq(v, w)) continue;
            if (closed.richardson(v, w) == Verdict::NonToric) continue;
            const auto alive = fl4.alive_mask(v, w);
            for (int d = 1; d <= 3; ++d)
                CHECK(flag_ssyt_count(v, w, d) ==
                      standard_monomial_count_deg(fl4, alive, d));
        }
}

TEST_CASE("tableau printing") {
    TwoColumnTableau T{S({1, 2}, 4), S({3, 4}, 4), {1, 2}, {3, 4},
                       TableauForm::SemiStandard, 0};
    CHECK(to_string(T) == "[1 3][2 4]");
}
