#pragma once

// Matching fields induced by weight matrices.  For each index set J the
// minimum-weight term of the corresponding minor singles out an ordering of
// J (the "true order") and a sign; the block diagonal field B_ell admits a
// closed form (identity order unless exactly one entry lies in {1..ell}, in
// which case the first two entries swap), which the |J|!-term oracle checks.

#include <cassert>
#include <limits>

#include "richdegen/subset.hpp"
#include "richdegen/weight_matrix.hpp"

namespace rdg {

struct TrueOrderColumn {
    std::vector<int> entries;  // a permutation of the underlying subset
    int sign = 1;              // parity of that permutation
};

inline int ordering_sign(const std::vector<int>& entries) {
    int inv = 0;
    for (size_t a = 0; a < entries.size(); ++a)
        for (size_t b = a + 1; b < entries.size(); ++b)
            if (entries[a] > entries[b]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// All minimum-weight orderings of J under M; a unique result certifies
// coherence of M at J.
inline std::vector<TrueOrderColumn> initial_column_bruteforce(const WeightMatrix& M,
                                                              const Subset& J) {
    const int m = J.size();
    if (m > M.rows) throw std::invalid_argument("|J| exceeds weight matrix rows");
    std::vector<int> perm = J.elems;
    std::sort(perm.begin(), perm.end());
    long long best = std::numeric_limits<long long>::max();
    std::vector<TrueOrderColumn> result;
    do {
        long long wt = 0;
        for (int i = 0; i < m; ++i) wt += M.at(i + 1, perm[i]);
        if (wt < best) {
            best = wt;
            result.clear();
        }
        if (wt == best) result.push_back({perm, ordering_sign(perm)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// Closed form for B_ell: swap the first two entries iff |J| >= 2 and
// |J cap {1..ell}| = 1.
inline TrueOrderColumn initial_column_closed_form(int ell, const Subset& J) {
    if (J.size() == 0) throw std::invalid_argument("empty subset");
    TrueOrderColumn col{J.elems, 1};
    int in_block1 = 0;
    for (int e : J.elems)
        if (e <= ell) ++in_block1;
    if (J.size() >= 2 && in_block1 == 1) {
        std::swap(col.entries[0], col.entries[1]);
        col.sign = -1;
    }
    return col;
}

// Antidiagonal field: every column in reversed order.
inline TrueOrderColumn initial_column_antidiagonal(const Subset& J) {
    TrueOrderColumn col{J.elems, 1};
    std::reverse(col.entries.begin(), col.entries.end());
    col.sign = ordering_sign(col.entries);
    return col;
}

// Weight of P_J induced by M_ell, via the four-case formula; agrees with the
// brute-force минимум for every coherent J (checked in the test suite).
inline long long block_diagonal_weight(int /*k*/, int n, int ell, const Subset& J) {
    const auto& j = J.elems;
    const int m = J.size();
    if (m == 1) return 0;
    long long tail = 0;
    for (int i = 3; i <= m; ++i) tail += static_cast<long long>(i - 1) * (n + 1 - j[i - 1]);
    int in_block1 = 0;
    for (int e : j)
        if (e <= ell) ++in_block1;
    if (in_block1 == 0) return (n + ell + 1 - j[1]) + tail;
    if (in_block1 == 1) return (ell + 1 - j[0]) + tail;
    return (ell + 1 - j[1]) + tail;
}

// Weights of all P_J, |J| = k, in lexicographic subset order.
inline std::vector<long long> plucker_weight_vector(int k, int n, int ell) {
    if (ell < 0 || ell > n) throw std::invalid_argument("need 0 <= ell <= n");
    std::vector<long long> out;
    for (const Subset& J : k_subsets(n, k)) out.push_back(block_diagonal_weight(k, n, ell, J));
    return out;
}

enum class Convention { BlockDiagonal, Antidiagonal, Custom };

// A coherent matching field on the subsets of [n] of size <= kmax.
class MatchingField {
public:
    static MatchingField block_diagonal(int kmax, int n, int ell) {
        MatchingField f;
        f.conv_ = Convention::BlockDiagonal;
        f.kmax_ = kmax;
        f.n_ = n;
        f.ell_ = ell;
        f.matrix_ = build_block_diagonal(kmax, n, ell);
        return f;
    }

    static MatchingField antidiagonal(int kmax, int n) {
        MatchingField f;
        f.conv_ = Convention::Antidiagonal;
        f.kmax_ = kmax;
        f.n_ = n;
        f.matrix_ = build_antidiagonal(n);
        return f;
    }

    // Arbitrary matrix; true orders come from the oracle and incoherence is
    // an error.
    static MatchingField from_matrix(WeightMatrix M) {
        MatchingField f;
        f.conv_ = Convention::Custom;
        f.kmax_ = M.rows;
        f.n_ = M.cols;
        f.matrix_ = std::move(M);
        return f;
    }

    Convention convention() const { return conv_; }
    int kmax() const { return kmax_; }
    int n() const { return n_; }
    int ell() const { return ell_; }
    const WeightMatrix& matrix() const { return matrix_; }

    TrueOrderColumn true_order(const Subset& J) const {
        switch (conv_) {
            case Convention::BlockDiagonal:
                return initial_column_closed_form(ell_, J);
            case Convention::Antidiagonal:
                return initial_column_antidiagonal(J);
            case Convention::Custom: {
                auto cols = initial_column_bruteforce(matrix_, J);
                if (cols.size() != 1)
                    throw std::runtime_error("incoherent weight matrix at subset " +
                                             to_string(J));
                return cols.front();
            }
        }
        throw std::logic_error("unreachable");
    }

    std::string tag() const {
        switch (conv_) {
            case Convention::BlockDiagonal: return "ell" + std::to_string(ell_);
            case Convention::Antidiagonal: return "anti";
            case Convention::Custom: return "custom";
        }
        return {};
    }

private:
    Convention conv_ = Convention::BlockDiagonal;
    int kmax_ = 0, n_ = 0, ell_ = 0;
    WeightMatrix matrix_;
};

}  // namespace rdg
