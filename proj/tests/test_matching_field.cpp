#include <catch2/catch_amalgamated.hpp>

#include "richdegen/matching_field.hpp"

using namespace rdg;

namespace {
Subset S(std::initializer_list<int> e, int n) { return Subset(std::vector<int>(e), n); }
}  // namespace

TEST_CASE("block diagonal weight matrices") {
    const WeightMatrix M0 = build_block_diagonal(3, 5, 0);
    const long long want0[3][5] = {{0, 0, 0, 0, 0}, {5, 4, 3, 2, 1}, {10, 8, 6, 4, 2}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(M0.at(i, j) == want0[i - 1][j - 1]);

    const WeightMatrix M3 = build_block_diagonal(3, 5, 3);
    const long long want3[3][5] = {{0, 0, 0, 0, 0}, {3, 2, 1, 5, 4}, {10, 8, 6, 4, 2}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(M3.at(i, j) == want3[i - 1][j - 1]);

    const WeightMatrix M1 = build_block_diagonal(1, 7, 4);
    for (int j = 1; j <= 7; ++j) CHECK(M1.at(1, j) == 0);

    CHECK_THROWS_AS(build_block_diagonal(3, 5, 6), std::invalid_argument);
}

TEST_CASE("antidiagonal weight matrices match the displayed ones") {
    const WeightMatrix A3 = build_antidiagonal(3);
    const long long want3[2][3] = {{3, 1, 0}, {1, 0, 0}};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(A3.at(i, j) == want3[i - 1][j - 1]);

    const WeightMatrix A4 = build_antidiagonal(4);
    const long long want4[3][4] = {{6, 3, 1, 0}, {3, 1, 0, 0}, {1, 0, 0, 0}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(A4.at(i, j) == want4[i - 1][j - 1]);

    // the antidiagonal term of every 2x2 minor has the smaller weight
    CHECK(A3.at(1, 2) + A3.at(2, 1) < A3.at(1, 1) + A3.at(2, 2));
}

TEST_CASE("brute-force initial columns") {
    const WeightMatrix M3 = build_block_diagonal(3, 5, 3);
    auto cols = initial_column_bruteforce(M3, S({1, 4, 5}, 5));
    REQUIRE(cols.size() == 1);
    CHECK(cols[0].entries == std::vector<int>({4, 1, 5}));
    CHECK(cols[0].sign == -1);

    const WeightMatrix M0 = build_block_diagonal(3, 5, 0);
    for (const Subset& J : k_subsets(5, 3)) {
        auto diag = initial_column_bruteforce(M0, J);
        REQUIRE(diag.size() == 1);
        CHECK(diag[0].entries == J.elems);
        CHECK(diag[0].sign == 1);
    }

    cols = initial_column_bruteforce(M0, S({4}, 5));
    REQUIRE(cols.size() == 1);
    CHECK(cols[0].entries == std::vector<int>({4}));
}

TEST_CASE("closed-form initial columns") {
    auto c = initial_column_closed_form(3, S({1, 4, 5}, 5));
    CHECK(c.entries == std::vector<int>({4, 1, 5}));
    CHECK(c.sign == -1);
    c = initial_column_closed_form(3, S({1, 2, 5}, 5));
    CHECK(c.entries == std::vector<int>({1, 2, 5}));
    CHECK(c.sign == 1);
    c = initial_column_closed_form(0, S({2, 4, 5}, 5));
    CHECK(c.entries == std::vector<int>({2, 4, 5}));
    CHECK(c.sign == 1);
}

TEST_CASE("pluecker weight vectors") {
    CHECK(plucker_weight_vector(3, 5, 0) ==
          std::vector<long long>({10, 8, 6, 7, 5, 4, 7, 5, 4, 4}));
    CHECK(plucker_weight_vector(3, 5, 3) ==
          std::vector<long long>({8, 6, 4, 5, 3, 5, 5, 3, 4, 3}));
    for (long long w : plucker_weight_vector(1, 6, 2)) CHECK(w == 0);
}

TEST_CASE("matching field constructions agree") {
    const auto field = MatchingField::block_diagonal(3, 5, 3);
    const auto custom = MatchingField::from_matrix(build_block_diagonal(3, 5, 3));
    for (int m = 1; m <= 3; ++m)
        for (const Subset& J : k_subsets(5, m)) {
            CHECK(field.true_order(J).entries == custom.true_order(J).entries);
            CHECK(field.true_order(J).sign == custom.true_order(J).sign);
        }

    const auto anti = MatchingField::antidiagonal(3, 4);
    auto col = anti.true_order(S({1, 3, 4}, 4));
    CHECK(col.entries == std::vector<int>({4, 3, 1}));
    CHECK(col.sign == -1);  // reversal of three entries is odd
}

TEST_CASE("incoherent custom matrices are rejected") {
    WeightMatrix Z(2, 3);  // all-zero weights tie every ordering
    const auto field = MatchingField::from_matrix(Z);
    CHECK_THROWS_AS(field.true_order(S({1, 2}, 3)), std::runtime_error);
    CHECK(initial_column_bruteforce(Z, S({1, 2}, 3)).size() == 2);
}

TEST_CASE("weight matrix file round trip") {
    const std::string path = "rdg_test_matrix.txt";
    {
        std::ofstream out(path);
        out << "2 3\n0 0 0\n3 2 1\n";
    }
    const WeightMatrix M = load_weight_matrix(path);
    CHECK(M.rows == 2);
    CHECK(M.cols == 3);
    CHECK(M.at(2, 1) == 3);
    std::remove(path.c_str());
    CHECK_THROWS(load_weight_matrix("does_not_exist.txt"));
}
