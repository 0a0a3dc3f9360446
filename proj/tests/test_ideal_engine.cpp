#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "richdegen/ideal.hpp"
#include "richdegen/records.hpp"

using namespace rdg;

namespace {
Subset S(std::initializer_list<int> e, int n) { return Subset(std::vector<int>(e), n); }
Permutation P(std::initializer_list<int> e) { return Permutation(std::vector<int>(e)); }

// Test-side oracle: collide degree-2 images computed straight from the
// weight matrix, by quadratic pair comparison.
std::set<std::array<std::string, 4>> kernel_oracle(const Family& fam,
                                                   const WeightMatrix& M) {
    std::vector<Subset> vars = (fam.kind == FamilyKind::Grassmannian)
                                   ? k_subsets(fam.n, fam.k)
                                   : proper_subsets(fam.n);
    struct Mono {
        size_t a, b;
        std::vector<std::pair<int, int>> img;
    };
    std::vector<Mono> monos;
    for (size_t a = 0; a < vars.size(); ++a)
        for (size_t b = a; b < vars.size(); ++b) {
            std::vector<std::pair<int, int>> img;
            for (size_t which : {a, b}) {
                auto cols = initial_column_bruteforce(M, vars[which]);
                REQUIRE(cols.size() == 1);
                for (size_t r = 0; r < cols[0].entries.size(); ++r)
                    img.emplace_back(static_cast<int>(r) + 1, cols[0].entries[r]);
            }
            std::sort(img.begin(), img.end());
            monos.push_back({a, b, std::move(img)});
        }
    std::set<std::array<std::string, 4>> out;
    for (size_t i = 0; i < monos.size(); ++i)
        for (size_t j = i + 1; j < monos.size(); ++j)
            if (monos[i].img == monos[j].img)
                out.insert({to_string(vars[monos[i].a]), to_string(vars[monos[i].b]),
                            to_string(vars[monos[j].a]), to_string(vars[monos[j].b])});
    return out;
}

std::set<std::array<std::string, 4>> kernel_of_model(const KernelModel& model) {
    std::set<std::array<std::string, 4>> out;
    for (const auto& g : model.kernel())
        out.insert({to_string(model.vars()[g.l0]), to_string(model.vars()[g.l1]),
                    to_string(model.vars()[g.r0]), to_string(model.vars()[g.r1])});
    return out;
}
}  // namespace

TEST_CASE("monomial images") {
    KernelModel gr0(Family::grassmannian(3, 5), MatchingField::block_diagonal(3, 5, 0));
    auto [img, sign] = gr0.monomial_image({S({1, 3, 5}, 5)});
    CHECK(img == std::vector<std::pair<int, int>>({{1, 1}, {2, 3}, {3, 5}}));
    CHECK(sign == 1);

    KernelModel gr3(Family::grassmannian(3, 5), MatchingField::block_diagonal(3, 5, 3));
    std::tie(img, sign) = gr3.monomial_image({S({1, 4, 5}, 5)});
    CHECK(img == std::vector<std::pair<int, int>>({{1, 4}, {2, 1}, {3, 5}}));
    CHECK(sign == -1);

    KernelModel fl3(Family::flag(3), MatchingField::block_diagonal(2, 3, 0));
    std::tie(img, sign) = fl3.monomial_image({S({2}, 3), S({1, 3}, 3)});
    CHECK(img == std::vector<std::pair<int, int>>({{1, 1}, {1, 2}, {2, 3}}));
    CHECK(sign == 1);
}

TEST_CASE("degree-2 kernels on the documented small cases") {
    KernelModel fl3(Family::flag(3), MatchingField::block_diagonal(2, 3, 0));
    REQUIRE(fl3.kernel().size() == 1);
    CHECK(kernel_of_model(fl3) ==
          std::set<std::array<std::string, 4>>{{"1", "23", "2", "13"}});

    KernelModel gr24_0(Family::grassmannian(2, 4), MatchingField::block_diagonal(2, 4, 0));
    REQUIRE(gr24_0.kernel().size() == 1);
    CHECK(kernel_of_model(gr24_0) ==
          std::set<std::array<std::string, 4>>{{"13", "24", "14", "23"}});

    KernelModel gr24_1(Family::grassmannian(2, 4), MatchingField::block_diagonal(2, 4, 1));
    REQUIRE(gr24_1.kernel().size() == 1);
    CHECK(kernel_of_model(gr24_1) ==
          std::set<std::array<std::string, 4>>{{"12", "34", "13", "24"}});
}

TEST_CASE("kernel agrees with the quadratic-collision oracle") {
    for (int ell = 0; ell <= 4; ++ell) {
        KernelModel model(Family::grassmannian(2, 4),
                          MatchingField::block_diagonal(2, 4, ell));
        CHECK(kernel_of_model(model) ==
              kernel_oracle(Family::grassmannian(2, 4), build_block_diagonal(2, 4, ell)));
    }
    KernelModel fl4(Family::flag(4), MatchingField::block_diagonal(3, 4, 0));
    CHECK(kernel_of_model(fl4) == kernel_oracle(Family::flag(4), build_block_diagonal(3, 4, 0)));
    KernelModel fl4a(Family::flag(4), MatchingField::antidiagonal(3, 4));
    CHECK(kernel_of_model(fl4a) == kernel_oracle(Family::flag(4), build_antidiagonal(4)));
}

TEST_CASE("kernel binomials pair equal degree profiles") {
    KernelModel fl5(Family::flag(5), MatchingField::block_diagonal(4, 5, 2));
    for (const auto& g : fl5.kernel()) {
        const auto& vars = fl5.vars();
        CHECK(std::minmax(vars[g.l0].size(), vars[g.l1].size()) ==
              std::minmax(vars[g.r0].size(), vars[g.r1].size()));
    }
}

TEST_CASE("restriction of generators") {
    KernelModel fl3(Family::flag(3), MatchingField::block_diagonal(2, 3, 0));
    // S_{(132)}^{(123)} = {2, 3, 23}: both sides of the only binomial die
    auto rs = vanishing_sets_flag(P({1, 2, 3}), P({1, 3, 2}));
    CHECK(fl3.restrict_generators(fl3.mask_of(rs.surviving)).empty());
    CHECK(fl3.classify(rs).verdict == Verdict::Zero);

    // empty vanishing set returns the kernel unchanged
    auto gens = fl3.restrict_generators(fl3.full_mask());
    REQUIRE(gens.size() == 1);
    CHECK_FALSE(gens[0].is_monomial);

    // the worked Gr(3,5), ell=3 example
    KernelModel gr3(Family::grassmannian(3, 5), MatchingField::block_diagonal(3, 5, 3));
    const auto alive = gr3.alive_mask(S({1, 3, 5}, 5), S({2, 4, 5}, 5));
    bool found_monomial = false;
    for (const auto& g : gr3.restrict_generators(alive))
        if (g.is_monomial &&
            witness_string(gr3, g) == "P[135]*P[245]")
            found_monomial = true;
    CHECK(found_monomial);
}

TEST_CASE("classification with witnesses") {
    KernelModel gr3(Family::grassmannian(3, 5), MatchingField::block_diagonal(3, 5, 3));
    auto cls = gr3.classify(gr3.alive_mask(S({1, 3, 5}, 5), S({2, 4, 5}, 5)));
    CHECK(cls.verdict == Verdict::NonToric);
    REQUIRE(cls.witness.has_value());
    CHECK(witness_string(gr3, *cls.witness) == "P[135]*P[245]");

    KernelModel gr0(Family::grassmannian(3, 5), MatchingField::block_diagonal(3, 5, 0));
    cls = gr0.classify(gr0.alive_mask(S({1, 3, 5}, 5), S({2, 4, 5}, 5)));
    CHECK(cls.verdict == Verdict::Toric);
    REQUIRE(cls.witness.has_value());
    CHECK(witness_string(gr0, *cls.witness) == "P[135]*P[245] - P[145]*P[235]");
}

TEST_CASE("degree-2 standard monomial counts") {
    KernelModel gr0(Family::grassmannian(2, 4), MatchingField::block_diagonal(2, 4, 0));
    CHECK(gr0.standard_monomial_count_deg2(gr0.full_mask()) == 20);
    KernelModel gr1(Family::grassmannian(2, 4), MatchingField::block_diagonal(2, 4, 1));
    CHECK(gr1.standard_monomial_count_deg2(gr1.full_mask()) == 20);

    VarMask single;
    single.set(gr0.var_index(S({1, 3}, 4)));
    CHECK(gr0.standard_monomial_count_deg2(single) == 1);
}

TEST_CASE("kernel cache round trip") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "rdg_cache_test").string();
    fs::create_directories(dir);
    KernelModel fresh(Family::grassmannian(2, 5), MatchingField::block_diagonal(2, 5, 1), dir);
    const auto file = dir + "/" + cache::file_name(Family::grassmannian(2, 5),
                                                   MatchingField::block_diagonal(2, 5, 1));
    REQUIRE(fs::exists(file));
    KernelModel cached(Family::grassmannian(2, 5), MatchingField::block_diagonal(2, 5, 1), dir);
    REQUIRE(cached.kernel().size() == fresh.kernel().size());
    for (size_t i = 0; i < fresh.kernel().size(); ++i) {
        CHECK(cached.kernel()[i].l0 == fresh.kernel()[i].l0);
        CHECK(cached.kernel()[i].r1 == fresh.kernel()[i].r1);
        CHECK(cached.kernel()[i].relative_sign == fresh.kernel()[i].relative_sign);
    }
    // corrupt header is ignored and the kernel rebuilt
    {
        std::ofstream bad(file, std::ios::binary);
        bad << "JUNK";
    }
    KernelModel rebuilt(Family::grassmannian(2, 5), MatchingField::block_diagonal(2, 5, 1), dir);
    CHECK(rebuilt.kernel().size() == fresh.kernel().size());
    fs::remove_all(dir);
}
