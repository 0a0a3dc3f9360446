#pragma once

// Integer weight matrices on the variables x_{i,j}.  The block diagonal
// family M_ell and the antidiagonal family used for the Gelfand-Tsetlin
// comparison are built here; arbitrary matrices can be loaded from files
// ("k n" on the first line, then k rows of n integers).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdg {

struct WeightMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> entries;  // row-major

    WeightMatrix() = default;
    WeightMatrix(int k, int n) : rows(k), cols(n), entries(static_cast<size_t>(k) * n, 0) {}

    long long& at(int i, int j) { return entries[static_cast<size_t>(i - 1) * cols + (j - 1)]; }
    long long at(int i, int j) const {
        return entries[static_cast<size_t>(i - 1) * cols + (j - 1)];
    }
};

// M_ell(i,j) = (i-1)(n-j+1) for i != 2; row 2 is ell-j+1 for j <= ell and
// n-j+ell+1 for j > ell.  ell = 0 (or n) is the diagonal weight matrix.
inline WeightMatrix build_block_diagonal(int k, int n, int ell) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (ell < 0 || ell > n) throw std::invalid_argument("need 0 <= ell <= n");
    WeightMatrix M(k, n);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i != 2)
                M.at(i, j) = static_cast<long long>(i - 1) * (n - j + 1);
            else
                M.at(i, j) = (j <= ell) ? (ell - j + 1) : (n - j + ell + 1);
        }
    return M;
}

// (n-1) x n matrix with M(i,j) = C(n-i-j+2, 2), selecting the antidiagonal
// term of every minor.  Reproduces the displayed M_3 and M_4.
inline WeightMatrix build_antidiagonal(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    WeightMatrix M(n - 1, n);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            const long long m = n - i - j + 2;
            M.at(i, j) = (m >= 2) ? m * (m - 1) / 2 : 0;
        }
    return M;
}

inline WeightMatrix load_weight_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open weight matrix file: " + path);
    int k = 0, n = 0;
    if (!(in >> k >> n) || k < 1 || n < 1)
        throw std::runtime_error("bad weight matrix header, expected 'k n'");
    WeightMatrix M(k, n);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j)
            if (!(in >> M.at(i, j)))
                throw std::runtime_error("weight matrix file truncated");
    return M;
}

inline std::string to_string(const WeightMatrix& M) {
    std::ostringstream os;
    for (int i = 1; i <= M.rows; ++i) {
        for (int j = 1; j <= M.cols; ++j) {
            if (j > 1) os << ' ';
            os << M.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace rdg
