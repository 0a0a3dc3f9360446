#pragma once

// Degree-2 kernel of the matching-field monomial map and the three-way
// Zero / Toric / NonToric decision for restricted ideals.
//
// Every Pluecker variable maps to the signed initial term of its minor, a
// set of matrix positions (i, c_i) read off the true-order column.  Two
// degree-2 monomials collide exactly when their position multisets agree;
// the collision binomials generate the ideal (it is quadratically
// generated), so restriction by a vanishing set reduces to masking factor
// bits, and a verdict needs one scan over the cached kernel.

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "richdegen/matching_field.hpp"
#include "richdegen/restriction.hpp"

namespace rdg {

enum class FamilyKind { Grassmannian, Flag };

struct Family {
    FamilyKind kind = FamilyKind::Grassmannian;
    int k = 0;  // ignored for Flag
    int n = 0;

    static Family grassmannian(int k, int n) { return {FamilyKind::Grassmannian, k, n}; }
    static Family flag(int n) { return {FamilyKind::Flag, n - 1, n}; }
};

// Bitmask over up to 256 variables.  Classification loops use the single
// 64-bit word fast path whenever the family fits.
struct VarMask {
    std::array<uint64_t, 4> w{0, 0, 0, 0};

    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool subset_of(const VarMask& o) const {
        for (int t = 0; t < 4; ++t)
            if (w[t] & ~o.w[t]) return false;
        return true;
    }
    VarMask operator&(const VarMask& o) const {
        VarMask r;
        for (int t = 0; t < 4; ++t) r.w[t] = w[t] & o.w[t];
        return r;
    }
};

struct QuadraticBinomial {
    uint16_t l0, l1;      // left monomial, variable indices l0 <= l1
    uint16_t r0, r1;      // right monomial
    int8_t relative_sign; // binomial is  P_l0 P_l1 - s * P_r0 P_r1
};

enum class Verdict { Zero, Toric, NonToric };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero: return "zero";
        case Verdict::Toric: return "toric";
        case Verdict::NonToric: return "nontoric";
    }
    return "?";
}

// A restricted generator: a surviving binomial, or the monomial left over
// when exactly one side of a kernel binomial vanishes.
struct RestrictedGenerator {
    bool is_monomial;
    uint16_t m0, m1;                // the (surviving) monomial
    uint16_t p0 = 0, p1 = 0;        // partner side when is_monomial == false
    int8_t relative_sign = 1;
};

struct Classification {
    Verdict verdict = Verdict::Zero;
    std::optional<RestrictedGenerator> witness;
};

// Binary kernel cache, versioned "RDK1".  Stores the binomial list; the
// variable order is implied by the family.  Opt-in via RICHDEGEN_CACHE_DIR.
namespace cache {

inline std::string file_name(const Family& fam, const MatchingField& field) {
    std::string s = (fam.kind == FamilyKind::Grassmannian)
                        ? "gr_k" + std::to_string(fam.k) + "_n" + std::to_string(fam.n)
                        : "flag_n" + std::to_string(fam.n);
    return s + "_" + field.tag() + ".rdk";
}

inline bool save_kernel(const std::string& path, const std::vector<QuadraticBinomial>& kernel) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out.write("RDK1", 4);
    const uint64_t count = kernel.size();
    out.write(reinterpret_cast<const char*>(&count), sizeof(count));
    for (const auto& g : kernel) {
        uint16_t q[4] = {g.l0, g.l1, g.r0, g.r1};
        out.write(reinterpret_cast<const char*>(q), sizeof(q));
        out.write(reinterpret_cast<const char*>(&g.relative_sign), 1);
    }
    return static_cast<bool>(out);
}

inline std::optional<std::vector<QuadraticBinomial>> load_kernel(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "RDK1", 4) != 0) return std::nullopt;
    uint64_t count = 0;
    if (!in.read(reinterpret_cast<char*>(&count), sizeof(count))) return std::nullopt;
    std::vector<QuadraticBinomial> kernel(count);
    for (auto& g : kernel) {
        uint16_t q[4];
        if (!in.read(reinterpret_cast<char*>(q), sizeof(q))) return std::nullopt;
        if (!in.read(reinterpret_cast<char*>(&g.relative_sign), 1)) return std::nullopt;
        g.l0 = q[0];
        g.l1 = q[1];
        g.r0 = q[2];
        g.r1 = q[3];
    }
    return kernel;
}

}  // namespace cache

class KernelModel {
public:
    // cache_dir: optional directory for the binary kernel cache (the CLI
    // passes RICHDEGEN_CACHE_DIR when set).
    KernelModel(Family fam, MatchingField field, const std::string& cache_dir = "")
        : family_(fam), field_(std::move(field)) {
        build_vars();
        build_kernel(cache_dir);
    }

    const Family& family() const { return family_; }
    const MatchingField& field() const { return field_; }
    const std::vector<Subset>& vars() const { return vars_; }
    const std::vector<TrueOrderColumn>& columns() const { return columns_; }
    const std::vector<QuadraticBinomial>& kernel() const { return kernel_; }
    int num_vars() const { return static_cast<int>(vars_.size()); }
    int var_index(const Subset& J) const {
        auto it = var_index_.find(key_of(J));
        if (it == var_index_.end()) throw std::invalid_argument("not a variable: " + to_string(J));
        return it->second;
    }

    // Position multiset (row, col) of a degree <= 2 monomial, plus the
    // aggregate sign of its factors.
    std::pair<std::vector<std::pair<int, int>>, int> monomial_image(
        const std::vector<Subset>& factors) const {
        std::vector<std::pair<int, int>> img;
        int sign = 1;
        for (const Subset& J : factors) {
            const int vi = var_index(J);
            const auto& col = columns_[vi];
            for (size_t r = 0; r < col.entries.size(); ++r)
                img.emplace_back(static_cast<int>(r) + 1, col.entries[r]);
            sign *= col.sign;
        }
        std::sort(img.begin(), img.end());
        return {img, sign};
    }

    VarMask mask_of(const std::vector<Subset>& subsets) const {
        VarMask m;
        for (const auto& J : subsets) m.set(var_index(J));
        return m;
    }

    VarMask full_mask() const {
        VarMask m;
        for (int i = 0; i < num_vars(); ++i) m.set(i);
        return m;
    }

    // Surviving-variable mask of the Richardson restriction [v, w].
    VarMask alive_mask(const Subset& v, const Subset& w) const {
        if (family_.kind != FamilyKind::Grassmannian)
            throw std::invalid_argument("subset bounds are for the Grassmannian");
        VarMask m;
        for (int i = 0; i < num_vars(); ++i)
            if (bruhat_leq(v, vars_[i]) && bruhat_leq(vars_[i], w)) m.set(i);
        return m;
    }

    VarMask alive_mask(const Permutation& v, const Permutation& w) const {
        if (family_.kind != FamilyKind::Flag)
            throw std::invalid_argument("permutation bounds are for the flag variety");
        VarMask m;
        for (int i = 0; i < num_vars(); ++i) {
            const Subset& I = vars_[i];
            if (bruhat_leq(prefix_sorted(v, I.size()), I) &&
                bruhat_leq(I, prefix_sorted(w, I.size())))
                m.set(i);
        }
        return m;
    }

    // One-sided mask of every variable >= v (resp. <= w); alive = up & down.
    VarMask up_mask(const Permutation& v) const {
        VarMask m;
        for (int i = 0; i < num_vars(); ++i)
            if (bruhat_leq(prefix_sorted(v, vars_[i].size()), vars_[i])) m.set(i);
        return m;
    }
    VarMask down_mask(const Permutation& w) const {
        VarMask m;
        for (int i = 0; i < num_vars(); ++i)
            if (bruhat_leq(vars_[i], prefix_sorted(w, vars_[i].size()))) m.set(i);
        return m;
    }

    std::vector<RestrictedGenerator> restrict_generators(const VarMask& alive) const {
        std::vector<RestrictedGenerator> out;
        for (size_t b = 0; b < kernel_.size(); ++b) {
            const bool aL = left_big_[b].subset_of(alive);
            const bool aR = right_big_[b].subset_of(alive);
            const auto& g = kernel_[b];
            if (aL && aR)
                out.push_back({false, g.l0, g.l1, g.r0, g.r1, g.relative_sign});
            else if (aL)
                out.push_back({true, g.l0, g.l1, 0, 0, 1});
            else if (aR)
                out.push_back({true, g.r0, g.r1, 0, 0, 1});
        }
        return out;
    }

    // Zero if nothing survives, NonToric on any surviving monomial, Toric
    // otherwise.  On Toric/Zero the signed evaluation P_I = sgn(B(I)) is
    // asserted to kill every surviving generator, certifying that the full
    // restricted ideal (not only its degree-2 part) is monomial-free.
    Classification classify(const VarMask& alive, bool want_witness = true) const {
        Classification res;
        int first_binomial = -1;
        if (num_vars() <= 64) {
            const uint64_t a = alive.w[0];
            for (size_t b = 0; b < kernel_.size(); ++b) {
                const bool aL = (left_[b] & ~a) == 0;
                const bool aR = (right_[b] & ~a) == 0;
                if (aL != aR) {
                    res.verdict = Verdict::NonToric;
                    if (want_witness) {
                        const auto& g = kernel_[b];
                        res.witness = aL ? RestrictedGenerator{true, g.l0, g.l1, 0, 0, 1}
                                         : RestrictedGenerator{true, g.r0, g.r1, 0, 0, 1};
                    }
                    return res;
                }
                if (aL && first_binomial < 0) first_binomial = static_cast<int>(b);
            }
        } else {
            for (size_t b = 0; b < kernel_.size(); ++b) {
                const bool aL = left_big_[b].subset_of(alive);
                const bool aR = right_big_[b].subset_of(alive);
                if (aL != aR) {
                    res.verdict = Verdict::NonToric;
                    if (want_witness) {
                        const auto& g = kernel_[b];
                        res.witness = aL ? RestrictedGenerator{true, g.l0, g.l1, 0, 0, 1}
                                         : RestrictedGenerator{true, g.r0, g.r1, 0, 0, 1};
                    }
                    return res;
                }
                if (aL && first_binomial < 0) first_binomial = static_cast<int>(b);
            }
        }
        if (first_binomial < 0) {
            res.verdict = Verdict::Zero;
            return res;
        }
        res.verdict = Verdict::Toric;
        assert_signed_point_kills(alive);
        if (want_witness) {
            const auto& g = kernel_[first_binomial];
            res.witness = RestrictedGenerator{false, g.l0, g.l1, g.r0, g.r1, g.relative_sign};
        }
        return res;
    }

    Classification classify(const RestrictionSets& rs, bool want_witness = true) const {
        return classify(mask_of(rs.surviving), want_witness);
    }

    // Number of distinct monomial images over all degree-2 monomials in
    // surviving variables: the degree-2 standard monomial count of the
    // restricted toric quotient.
    long long standard_monomial_count_deg2(const VarMask& alive) const {
        std::vector<char> seen(num_classes_, 0);
        long long count = 0;
        for (size_t m = 0; m < monomials_.size(); ++m) {
            if (!alive.test(monomials_[m].first) || !alive.test(monomials_[m].second)) continue;
            if (!seen[class_of_[m]]) {
                seen[class_of_[m]] = 1;
                ++count;
            }
        }
        return count;
    }

    // Image class id of the degree-2 monomial P_a P_b (a <= b).
    int image_class(int a, int b) const {
        if (a > b) std::swap(a, b);
        return class_of_[monomial_rank(a, b)];
    }

private:
    static uint64_t key_of(const Subset& J) {
        return (static_cast<uint64_t>(J.size()) << 32) | J.bits();
    }

    size_t monomial_rank(size_t a, size_t b) const {
        // rank of (a, b), a <= b, in the loop "for a; for b >= a".
        const size_t N = vars_.size();
        return a * N - a * (a - 1) / 2 + (b - a);
    }

    void build_vars() {
        if (family_.kind == FamilyKind::Grassmannian)
            vars_ = k_subsets(family_.n, family_.k);
        else
            vars_ = proper_subsets(family_.n);
        if (vars_.size() > 256) throw std::invalid_argument("family too large (>256 variables)");
        for (size_t i = 0; i < vars_.size(); ++i) var_index_[key_of(vars_[i])] = static_cast<int>(i);
        columns_.reserve(vars_.size());
        for (const auto& J : vars_) columns_.push_back(field_.true_order(J));
    }

    void build_kernel(const std::string& cache_dir) {
        const size_t N = vars_.size();
        monomials_.reserve(N * (N + 1) / 2);
        std::map<std::vector<std::pair<int, int>>, std::vector<uint32_t>> buckets;
        for (size_t a = 0; a < N; ++a)
            for (size_t b = a; b < N; ++b) {
                monomials_.emplace_back(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
                auto img = monomial_image({vars_[a], vars_[b]}).first;
                buckets[std::move(img)].push_back(static_cast<uint32_t>(monomials_.size() - 1));
            }
        class_of_.assign(monomials_.size(), -1);
        num_classes_ = 0;
        for (auto& [img, bucket] : buckets) {
            const int cls = num_classes_++;
            for (uint32_t m : bucket) class_of_[m] = cls;
        }

        const std::string cache_path =
            cache_dir.empty() ? "" : cache_dir + "/" + cache::file_name(family_, field_);
        if (!cache_path.empty()) {
            if (auto loaded = cache::load_kernel(cache_path)) {
                bool ok = true;
                for (const auto& g : *loaded)
                    if (g.l0 >= N || g.l1 >= N || g.r0 >= N || g.r1 >= N) ok = false;
                if (ok) {
                    kernel_ = std::move(*loaded);
                    finish_masks();
                    return;
                }
            }
        }

        for (auto& [img, bucket] : buckets) {
            for (size_t i = 0; i < bucket.size(); ++i)
                for (size_t j = i + 1; j < bucket.size(); ++j) {
                    const auto [la, lb] = monomials_[bucket[i]];
                    const auto [ra, rb] = monomials_[bucket[j]];
                    // degree profiles must agree for row multisets to match
                    if (!(std::minmax(vars_[la].size(), vars_[lb].size()) ==
                          std::minmax(vars_[ra].size(), vars_[rb].size())))
                        throw std::logic_error("inhomogeneous kernel collision");
                    const int8_t s = static_cast<int8_t>(
                        columns_[la].sign * columns_[lb].sign * columns_[ra].sign *
                        columns_[rb].sign);
                    kernel_.push_back({la, lb, ra, rb, s});
                }
        }
        std::sort(kernel_.begin(), kernel_.end(), [](const auto& x, const auto& y) {
            return std::tie(x.l0, x.l1, x.r0, x.r1) < std::tie(y.l0, y.l1, y.r0, y.r1);
        });
        finish_masks();
        if (!cache_path.empty()) cache::save_kernel(cache_path, kernel_);
    }

    void finish_masks() {
        left_.resize(kernel_.size());
        right_.resize(kernel_.size());
        left_big_.resize(kernel_.size());
        right_big_.resize(kernel_.size());
        for (size_t b = 0; b < kernel_.size(); ++b) {
            VarMask l, r;
            l.set(kernel_[b].l0);
            l.set(kernel_[b].l1);
            r.set(kernel_[b].r0);
            r.set(kernel_[b].r1);
            left_big_[b] = l;
            right_big_[b] = r;
            left_[b] = l.w[0];
            right_[b] = r.w[0];
        }
    }

    void assert_signed_point_kills(const VarMask& alive) const {
        for (size_t b = 0; b < kernel_.size(); ++b) {
            if (!left_big_[b].subset_of(alive) || !right_big_[b].subset_of(alive)) continue;
            const auto& g = kernel_[b];
            const int lhs = columns_[g.l0].sign * columns_[g.l1].sign;
            const int rhs = g.relative_sign * columns_[g.r0].sign * columns_[g.r1].sign;
            if (lhs != rhs)
                throw std::logic_error("signed evaluation does not kill a surviving binomial");
        }
    }

    Family family_;
    MatchingField field_;
    std::vector<Subset> vars_;
    std::unordered_map<uint64_t, int> var_index_;
    std::vector<TrueOrderColumn> columns_;
    std::vector<QuadraticBinomial> kernel_;
    std::vector<uint64_t> left_, right_;
    std::vector<VarMask> left_big_, right_big_;
    std::vector<std::pair<uint16_t, uint16_t>> monomials_;
    std::vector<int32_t> class_of_;
    int num_classes_ = 0;
};

}  // namespace rdg
