#pragma once

// Vanishing/surviving variable sets of Schubert, opposite Schubert and
// Richardson varieties.  A variable P_I survives the Richardson restriction
// exactly when v <= I <= w under the sorted-prefix comparison; everything
// else is set to zero.

#include <stdexcept>

#include "richdegen/permutation.hpp"
#include "richdegen/subset.hpp"

namespace rdg {

struct RestrictionSets {
    std::vector<Subset> vanishing;  // S_w^v (or S_{w,k}^v)
    std::vector<Subset> surviving;  // T_w^v (or T_{w,k}^v)
};

// Flag variety: index sets of all sizes 1..n-1.
inline RestrictionSets vanishing_sets_flag(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw std::invalid_argument("incomparable sizes");
    if (!bruhat_leq(v, w)) throw std::invalid_argument("empty Richardson variety");
    const int n = v.n();
    RestrictionSets out;
    for (int m = 1; m <= n - 1; ++m) {
        const Subset lo = prefix_sorted(v, m), hi = prefix_sorted(w, m);
        for (const Subset& I : k_subsets(n, m)) {
            if (bruhat_leq(lo, I) && bruhat_leq(I, hi))
                out.surviving.push_back(I);
            else
                out.vanishing.push_back(I);
        }
    }
    return out;
}

// Grassmannian: index sets of size k, bounds given as Grassmannian
// permutations (sorted k-prefixes).
inline RestrictionSets vanishing_sets_grassmannian(const Subset& v, const Subset& w,
                                                   int k, int n) {
    if (v.size() != k || w.size() != k)
        throw std::invalid_argument("bounds must be k-subsets");
    if (!bruhat_leq(v, w)) throw std::invalid_argument("empty Richardson variety");
    RestrictionSets out;
    for (const Subset& I : k_subsets(n, k)) {
        if (bruhat_leq(v, I) && bruhat_leq(I, w))
            out.surviving.push_back(I);
        else
            out.vanishing.push_back(I);
    }
    return out;
}

}  // namespace rdg
