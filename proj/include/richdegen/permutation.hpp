#pragma once

// Permutations in one-line notation w = (w_1,...,w_n), together with the
// prefix combinatorics that drives every restriction set: sorted prefixes,
// Bruhat comparison, the position sets I_v and W_v, ascending/descending
// profiles and the compatibility test for pairs (v,w).

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "richdegen/subset.hpp"

namespace rdg {

struct Permutation {
    std::vector<int> images;  // images[i] = w_{i+1}, a bijection on [1..n]

    Permutation() = default;
    explicit Permutation(std::vector<int> im) : images(std::move(im)) { validate(); }

    int n() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }  // 1-based

    // 1-based position of value x.
    int position_of(int x) const {
        for (int i = 0; i < n(); ++i)
            if (images[i] == x) return i + 1;
        throw std::invalid_argument("value not in permutation");
    }

    bool operator==(const Permutation& o) const { return images == o.images; }
    bool operator<(const Permutation& o) const { return images < o.images; }

private:
    void validate() const {
        std::vector<bool> seen(images.size() + 1, false);
        for (int x : images) {
            if (x < 1 || x > n() || seen[x])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[x] = true;
        }
    }
};

inline Permutation identity_perm(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

inline Permutation longest_perm(int n) {  // w_0 = (n, n-1, ..., 1)
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = n - i;
    return Permutation(std::move(im));
}

// w_0 acting on values: (w_0 v)_i = n+1 - v_i.
inline Permutation w0_times(const Permutation& v) {
    std::vector<int> im(v.n());
    for (int i = 0; i < v.n(); ++i) im[i] = v.n() + 1 - v.images[i];
    return Permutation(std::move(im));
}

// {w_1,...,w_m} sorted increasingly.
inline Subset prefix_sorted(const Permutation& w, int m) {
    if (m < 1 || m > w.n()) throw std::invalid_argument("prefix length out of range");
    std::vector<int> pre(w.images.begin(), w.images.begin() + m);
    return Subset(std::move(pre), w.n());
}

// Bruhat order via the prefix criterion: v <= w iff the sorted m-prefixes
// compare componentwise for every m.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw std::invalid_argument("incomparable sizes");
    const int n = v.n();
    // counts[x] = #{i <= m : v_i <= x} comparison, done incrementally.
    std::vector<int> vc(n + 1, 0), wc(n + 1, 0);
    for (int m = 1; m <= n; ++m) {
        for (int x = v(m); x <= n; ++x) ++vc[x];
        for (int x = w(m); x <= n; ++x) ++wc[x];
        for (int x = 1; x <= n; ++x)
            if (vc[x] < wc[x]) return false;  // prefix of v has fewer entries <= x
    }
    return true;
}

inline bool bruhat_lt(const Permutation& v, const Permutation& w) {
    return !(v == w) && bruhat_leq(v, w);
}

// Delete the entry equal to n+1 from w in S_{n+1}, landing in S_n.
inline Permutation remove_top(const Permutation& w) {
    if (w.n() < 2) throw std::invalid_argument("remove_top needs n+1 >= 2");
    std::vector<int> im;
    im.reserve(w.n() - 1);
    for (int x : w.images)
        if (x != w.n()) im.push_back(x);
    return Permutation(std::move(im));
}

// I_v = {i : v_{i+1} = v_i + 1} (1-based positions).
inline std::vector<int> ascent_run_positions(const Permutation& v) {
    std::vector<int> iv;
    for (int i = 1; i < v.n(); ++i)
        if (v(i + 1) == v(i) + 1) iv.push_back(i);
    return iv;
}

// W_v = {v s_{i_1} ... s_{i_p} : {i_1,...,i_p} subset of I_v, pairwise
// non-adjacent}, including v itself.
inline std::vector<Permutation> wv_set(const Permutation& v) {
    const auto iv = ascent_run_positions(v);
    std::vector<Permutation> out;
    const int m = static_cast<int>(iv.size());
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = a + 1; b < m && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && std::abs(iv[a] - iv[b]) <= 1)
                    ok = false;
        if (!ok) continue;
        auto im = v.images;
        for (int a = 0; a < m; ++a)
            if (mask >> a & 1) std::swap(im[iv[a] - 1], im[iv[a]]);
        out.emplace_back(std::move(im));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Direct structural test for w in W_v, avoiding enumeration.
inline bool in_wv_set(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) return false;
    const int n = v.n();
    int i = 1;
    while (i <= n) {
        if (w(i) == v(i)) {
            ++i;
        } else if (i < n && v(i + 1) == v(i) + 1 && w(i) == v(i + 1) && w(i + 1) == v(i)) {
            i += 2;
        } else {
            return false;
        }
    }
    return true;
}

struct MonotoneProfile {
    bool ascending = false;   // v_1 < ... < v_t = n
    bool descending = false;  // n = v_t > v_{t+1} > ... > v_n
    int top_position = 0;     // t, 1-based position of n
};

inline MonotoneProfile monotone_profile(const Permutation& v) {
    MonotoneProfile p;
    p.top_position = v.position_of(v.n());
    p.ascending = true;
    for (int i = 1; i < p.top_position; ++i)
        if (v(i) >= v(i + 1)) p.ascending = false;
    p.descending = true;
    for (int i = p.top_position; i < v.n(); ++i)
        if (v(i) <= v(i + 1)) p.descending = false;
    return p;
}

// Compatibility of (v,w): with n = v_t = w_{t'} and n-1 = v_s = w_{s'},
// requires v <= w, and when t != t' additionally s' <= t, t' <= s,
// w_{t'} > ... > w_t and v_t > v_{t-1} > ... > v_{t'}.
inline bool compatible(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw std::invalid_argument("incomparable sizes");
    if (!bruhat_leq(v, w)) return false;
    const int n = v.n();
    if (n < 2) return true;
    const int t = v.position_of(n), tp = w.position_of(n);
    const int s = v.position_of(n - 1), sp = w.position_of(n - 1);
    if (t == tp) return true;
    if (!(sp <= t && tp <= s)) return false;
    for (int i = tp; i < t; ++i)
        if (w(i) <= w(i + 1)) return false;
    for (int i = t; i > tp; --i)
        if (v(i) <= v(i - 1)) return false;
    return true;
}

// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

inline std::string to_string(const Permutation& w) {
    std::ostringstream os;
    for (int i = 0; i < w.n(); ++i) {
        if (i) os << ',';
        os << w.images[i];
    }
    return os.str();
}

inline Permutation parse_permutation(const std::string& s) {
    std::vector<int> im;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) im.push_back(std::stoi(tok));
    return Permutation(std::move(im));
}

}  // namespace rdg
