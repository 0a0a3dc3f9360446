#pragma once

// Two-column semi-standard Young tableaux bounded by [v,w], the
// rearrangement map Gamma_ell onto matching-field tableaux, and the
// counting helpers behind the degree-2 standard monomial comparisons.

#include <functional>
#include <map>
#include <set>

#include "richdegen/ideal.hpp"

namespace rdg {

enum class TableauForm { SemiStandard, MatchingField };

struct TwoColumnTableau {
    Subset left, right;                            // column contents
    std::vector<int> left_rendered, right_rendered;  // display order
    TableauForm form = TableauForm::SemiStandard;
    int ell = 0;  // matching field parameter when form == MatchingField
};

inline TwoColumnTableau make_semistandard(const Subset& I, const Subset& J) {
    if (I.size() != J.size()) throw std::invalid_argument("columns must have equal size");
    for (int r = 0; r < I.size(); ++r)
        if (I.elems[r] > J.elems[r])
            throw std::invalid_argument("columns are not row-wise sorted");
    return {I, J, I.elems, J.elems, TableauForm::SemiStandard, 0};
}

// All (I, J) with v <= I, J <= w and row-wise I <= J.
inline std::vector<TwoColumnTableau> enumerate_two_column_ssyt(const Subset& v,
                                                               const Subset& w, int k,
                                                               int n) {
    if (!bruhat_leq(v, w)) throw std::invalid_argument("empty Richardson variety");
    std::vector<Subset> cols;
    for (const Subset& I : k_subsets(n, k))
        if (bruhat_leq(v, I) && bruhat_leq(I, w)) cols.push_back(I);
    std::vector<TwoColumnTableau> out;
    for (const Subset& I : cols)
        for (const Subset& J : cols) {
            bool rowwise = true;
            for (int r = 0; r < k && rowwise; ++r)
                if (I.elems[r] > J.elems[r]) rowwise = false;
            if (rowwise) out.push_back(make_semistandard(I, J));
        }
    return out;
}

// Gamma_ell: swap leading entries between the columns in the two interleaved
// cases, otherwise keep the column sets; output columns are rendered in
// B_ell true order.
inline TwoColumnTableau gamma_ell(const TwoColumnTableau& T, int ell) {
    if (ell < 1) throw std::invalid_argument("Gamma_ell is defined for ell >= 1");
    if (T.form != TableauForm::SemiStandard)
        throw std::invalid_argument("Gamma_ell expects a semi-standard tableau");
    const auto& i = T.left.elems;
    const auto& j = T.right.elems;
    const int k = T.left.size();
    std::vector<int> I2 = i, J2 = j;
    if (k >= 2) {
        const bool case1 = i[0] <= ell && i[1] <= ell && j[0] <= ell && j[1] > ell &&
                           i[0] < j[0] && j[0] < i[1];
        const bool case2 = i[0] <= ell && i[1] > ell && j[0] > ell && j[1] > ell &&
                           j[0] < i[1] && i[1] < j[1];
        if (case1 || case2) {
            I2[0] = j[0];
            J2[0] = i[0];
            std::sort(I2.begin(), I2.end());
            std::sort(J2.begin(), J2.end());
        }
    }
    Subset L(I2, T.left.ambient_n), R(J2, T.right.ambient_n);
    auto lcol = initial_column_closed_form(ell, L);
    auto rcol = initial_column_closed_form(ell, R);
    return {L, R, lcol.entries, rcol.entries, TableauForm::MatchingField, ell};
}

// Per-row unordered pair of entries, in rendered order.
inline std::vector<std::pair<int, int>> row_multisets(const TwoColumnTableau& T) {
    std::vector<std::pair<int, int>> rows;
    for (size_t r = 0; r < T.left_rendered.size(); ++r) {
        int a = T.left_rendered[r], b = T.right_rendered[r];
        rows.emplace_back(std::min(a, b), std::max(a, b));
    }
    return rows;
}

struct GammaReport {
    bool injective = false;
    bool surjective = false;
    long long ssyt_count = 0;  // bounded semi-standard tableaux
    long long std_count = 0;   // degree-2 standard monomials of the restriction
};

// Checks that Gamma_ell maps the bounded semi-standard tableaux bijectively
// onto the degree-2 standard monomials of the restricted ideal at ell.
inline GammaReport verify_gamma_bijection(const KernelModel& model, const Subset& v,
                                          const Subset& w, int ell) {
    const int k = v.size(), n = v.ambient_n;
    GammaReport rep;
    const auto tableaux = enumerate_two_column_ssyt(v, w, k, n);
    rep.ssyt_count = static_cast<long long>(tableaux.size());
    const VarMask alive = model.alive_mask(v, w);
    rep.std_count = model.standard_monomial_count_deg2(alive);

    std::map<std::vector<std::pair<int, int>>, int> seen_rows;
    std::set<int> gamma_classes;
    rep.injective = true;
    for (const auto& T : tableaux) {
        const auto G = gamma_ell(T, ell);
        if (++seen_rows[row_multisets(G)] > 1) rep.injective = false;
        gamma_classes.insert(
            model.image_class(model.var_index(G.left), model.var_index(G.right)));
    }
    // surjectivity: every image class of a surviving degree-2 monomial is hit
    rep.surjective = true;
    for (int a = 0; a < model.num_vars() && rep.surjective; ++a) {
        if (!alive.test(a)) continue;
        for (int b = a; b < model.num_vars(); ++b) {
            if (!alive.test(b)) continue;
            if (!gamma_classes.count(model.image_class(a, b))) {
                rep.surjective = false;
                break;
            }
        }
    }
    return rep;
}

// Number of distinct degree-d monomial images over surviving variables
// (standard monomials of the restricted toric quotient in degree d).
inline long long standard_monomial_count_deg(const KernelModel& model, const VarMask& alive,
                                             int d) {
    if (d < 1 || d > 3) throw std::invalid_argument("degree capped at 3");
    std::vector<int> live;
    for (int i = 0; i < model.num_vars(); ++i)
        if (alive.test(i)) live.push_back(i);
    std::set<std::vector<std::pair<int, int>>> images;
    std::vector<int> pick(d);
    const auto& vars = model.vars();
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == d) {
            std::vector<Subset> factors;
            for (int idx : pick) factors.push_back(vars[idx]);
            images.insert(model.monomial_image(factors).first);
            return;
        }
        for (size_t t = from; t < live.size(); ++t) {
            pick[pos] = live[t];
            rec(pos + 1, static_cast<int>(t));
        }
    };
    rec(0, 0);
    return static_cast<long long>(images.size());
}

// |SSYT_d(v,w)| for the flag variety: multisets of d column sets, each
// surviving [v,w], that admit a semi-standard arrangement (columns by
// decreasing length, rows weakly increasing).
inline long long flag_ssyt_count(const Permutation& v, const Permutation& w, int d) {
    if (d < 1 || d > 3) throw std::invalid_argument("degree capped at 3");
    const int n = v.n();
    std::vector<Subset> cols;
    for (int m = 1; m <= n - 1; ++m) {
        const Subset lo = prefix_sorted(v, m), hi = prefix_sorted(w, m);
        for (const Subset& I : k_subsets(n, m))
            if (bruhat_leq(lo, I) && bruhat_leq(I, hi)) cols.push_back(I);
    }
    auto arrangeable = [](std::vector<const Subset*> pick) {
        std::sort(pick.begin(), pick.end(), [](const Subset* a, const Subset* b) {
            if (a->size() != b->size()) return a->size() > b->size();
            return a->elems < b->elems;
        });
        for (size_t c = 0; c + 1 < pick.size(); ++c) {
            const auto& L = *pick[c];
            const auto& R = *pick[c + 1];
            for (int r = 0; r < R.size(); ++r)
                if (L.elems[r] > R.elems[r]) return false;
        }
        return true;
    };
    long long count = 0;
    std::vector<const Subset*> pick(d);
    std::function<void(int, size_t)> rec = [&](int pos, size_t from) {
        if (pos == d) {
            if (arrangeable(pick)) ++count;
            return;
        }
        for (size_t t = from; t < cols.size(); ++t) {
            pick[pos] = &cols[t];
            rec(pos + 1, t);
        }
    };
    rec(0, 0);
    return count;
}

inline std::string to_string(const TwoColumnTableau& T) {
    std::ostringstream os;
    for (size_t r = 0; r < T.left_rendered.size(); ++r)
        os << '[' << T.left_rendered[r] << ' ' << T.right_rendered[r] << ']';
    return os.str();
}

}  // namespace rdg
