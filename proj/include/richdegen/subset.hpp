#pragma once

// Index sets I = {i_1 < ... < i_k} of [n].  These are the subscripts of the
// Pluecker variables P_I; all comparisons between equal-size sets are
// componentwise on the sorted entries.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdg {

struct Subset {
    std::vector<int> elems;  // strictly increasing, values in [1..ambient_n]
    int ambient_n = 0;

    Subset() = default;
    Subset(std::vector<int> e, int n) : elems(std::move(e)), ambient_n(n) {
        std::sort(elems.begin(), elems.end());
        validate();
    }

    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const {
        return std::binary_search(elems.begin(), elems.end(), x);
    }
    uint32_t bits() const {
        uint32_t b = 0;
        for (int e : elems) b |= 1u << (e - 1);
        return b;
    }

    bool operator==(const Subset& o) const {
        return elems == o.elems && ambient_n == o.ambient_n;
    }
    // Total order used only for canonical sorting/printing, not Bruhat order.
    bool operator<(const Subset& o) const { return elems < o.elems; }

private:
    void validate() const {
        for (size_t i = 0; i < elems.size(); ++i) {
            if (elems[i] < 1 || elems[i] > ambient_n)
                throw std::invalid_argument("subset entry out of range [1..n]");
            if (i > 0 && elems[i] == elems[i - 1])
                throw std::invalid_argument("subset entries must be distinct");
        }
    }
};

// Componentwise Bruhat comparison of equal-size sets: i_m <= j_m for all m.
inline bool bruhat_leq(const Subset& I, const Subset& J) {
    if (I.size() != J.size() || I.ambient_n != J.ambient_n)
        throw std::invalid_argument("incomparable sizes");
    for (int m = 0; m < I.size(); ++m)
        if (I.elems[m] > J.elems[m]) return false;
    return true;
}

// w_0 I = {n+1-i : i in I}, re-sorted.
inline Subset w0_complement(const Subset& I, int n) {
    std::vector<int> out;
    out.reserve(I.elems.size());
    for (int e : I.elems) out.push_back(n + 1 - e);
    return Subset(std::move(out), n);
}

// All k-subsets of [n] in lexicographic order (123, 124, ..., 345).
inline std::vector<Subset> k_subsets(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("k out of range");
    std::vector<Subset> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.emplace_back(cur, n);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (k == 0) out.assign(1, Subset({}, n));
    return out;
}

// All nonempty proper subsets of [n], ordered by size then lexicographically.
// This is the Pluecker variable order for the flag variety.
inline std::vector<Subset> proper_subsets(int n) {
    std::vector<Subset> out;
    for (int k = 1; k <= n - 1; ++k) {
        auto layer = k_subsets(n, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// "134" when n <= 9, "1,3,14" otherwise.
inline std::string to_string(const Subset& I) {
    std::ostringstream os;
    for (size_t i = 0; i < I.elems.size(); ++i) {
        if (i > 0 && I.ambient_n > 9) os << ',';
        os << I.elems[i];
    }
    return os.str();
}

inline Subset parse_subset(const std::string& s, int n) {
    std::vector<int> elems;
    if (s.find(',') != std::string::npos) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) elems.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad subset digit");
            elems.push_back(c - '0');
        }
    }
    return Subset(std::move(elems), n);
}

}  // namespace rdg
