#pragma once

// Batch classification sweeps.  A sweep context fixes the family size and
// precomputes, per permutation, the bitmask of variables surviving the
// one-sided restrictions; a pair (v,w) is then classified by AND-ing two
// masks and scanning the cached kernel.  Workers split the pair list into
// contiguous chunks and results are merged in input order, so output is
// deterministic regardless of the job count.

#include <thread>

#include "richdegen/classifiers.hpp"
#include "richdegen/records.hpp"

namespace rdg {

inline int default_jobs() {
    const unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

// Runs fn(chunk_index, begin, end) over contiguous slices of [0, total).
template <typename Fn>
inline void parallel_chunks(size_t total, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    const size_t nchunks = std::min<size_t>(jobs, total ? total : 1);
    if (nchunks <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    for (size_t c = 0; c < nchunks; ++c) {
        const size_t b = total * c / nchunks, e = total * (c + 1) / nchunks;
        pool.emplace_back([&fn, c, b, e] { fn(c, b, e); });
    }
    for (auto& t : pool) t.join();
}

struct TableRow {
    int n = 0, k = 0, ell = -1;
    std::string convention;
    long long toric = 0, zero = 0, nontoric = 0;
};

// ----------------------------------------------------------------- flag sweeps

// Pair data for S_n, reusable across matching fields (the surviving masks
// depend only on (v,w), not on ell).
struct FlagSweepContext {
    int n;
    std::vector<Permutation> perms;
    std::vector<std::pair<int, int>> pairs;  // strict v < w, lexicographic
    std::vector<VarMask> up, down;

    explicit FlagSweepContext(int n_) : n(n_), perms(all_permutations(n_)) {
        const auto vars = proper_subsets(n);  // same order as KernelModel's
        up.resize(perms.size());
        down.resize(perms.size());
        for (size_t p = 0; p < perms.size(); ++p) {
            for (size_t i = 0; i < vars.size(); ++i) {
                const Subset pre = prefix_sorted(perms[p], vars[i].size());
                if (bruhat_leq(pre, vars[i])) up[p].set(static_cast<int>(i));
                if (bruhat_leq(vars[i], pre)) down[p].set(static_cast<int>(i));
            }
        }
        for (size_t a = 0; a < perms.size(); ++a)
            for (size_t b = 0; b < perms.size(); ++b)
                if (a != b && bruhat_leq(perms[a], perms[b]))
                    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
};

inline TableRow flag_table_row(const FlagSweepContext& ctx, const KernelModel& model,
                               int jobs) {
    std::vector<std::array<long long, 3>> acc(std::max(jobs, 1), {0, 0, 0});
    parallel_chunks(ctx.pairs.size(), jobs, [&](size_t c, size_t b, size_t e) {
        auto& a = acc[c];
        for (size_t t = b; t < e; ++t) {
            const auto [vi, wi] = ctx.pairs[t];
            const auto cls = model.classify(ctx.up[vi] & ctx.down[wi], false);
            ++a[static_cast<int>(cls.verdict)];
        }
    });
    TableRow row;
    row.n = ctx.n;
    if (model.field().convention() == Convention::BlockDiagonal)
        row.ell = model.field().ell();
    else
        row.convention = "antidiagonal";
    for (const auto& a : acc) {
        row.zero += a[static_cast<int>(Verdict::Zero)];
        row.toric += a[static_cast<int>(Verdict::Toric)];
        row.nontoric += a[static_cast<int>(Verdict::NonToric)];
    }
    return row;
}

// Classification records for every strict pair, in lexicographic (v,w)
// order, optionally filtered by verdict.
inline std::vector<ClassificationRecord> flag_pair_records(
    const FlagSweepContext& ctx, const KernelModel& model, int jobs,
    std::optional<Verdict> filter = std::nullopt) {
    const int chunks = std::max(jobs, 1);
    std::vector<std::vector<ClassificationRecord>> acc(chunks);
    parallel_chunks(ctx.pairs.size(), jobs, [&](size_t c, size_t b, size_t e) {
        for (size_t t = b; t < e; ++t) {
            const auto [vi, wi] = ctx.pairs[t];
            const auto cls = model.classify(ctx.up[vi] & ctx.down[wi], true);
            if (filter && cls.verdict != *filter) continue;
            ClassificationRecord r;
            r.family = "flag";
            r.n = ctx.n;
            if (model.field().convention() == Convention::BlockDiagonal)
                r.ell = model.field().ell();
            else
                r.convention = "antidiagonal";
            r.v = to_string(ctx.perms[vi]);
            r.w = to_string(ctx.perms[wi]);
            r.verdict = cls.verdict;
            if (cls.witness) r.witness = witness_string(model, *cls.witness);
            acc[c].push_back(std::move(r));
        }
    });
    std::vector<ClassificationRecord> out;
    for (auto& part : acc)
        for (auto& r : part) out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------- gr sweeps

struct GrSweepContext {
    int k, n;
    std::vector<Subset> vars;
    std::vector<std::pair<int, int>> pairs;  // comparable v <= w (strictness optional)

    GrSweepContext(int k_, int n_, bool include_equal)
        : k(k_), n(n_), vars(k_subsets(n_, k_)) {
        for (size_t a = 0; a < vars.size(); ++a)
            for (size_t b = 0; b < vars.size(); ++b) {
                if (a == b && !include_equal) continue;
                if (bruhat_leq(vars[a], vars[b]))
                    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
    }
};

struct GrTable {
    long long richardson_toric_triples = 0;
    long long opposite_toric_pairs = 0;
};

// Table counts for Gr(k,n): Richardson triples (ell,v,w) with a toric
// verdict, and opposite-Schubert pairs (ell,v).
inline GrTable gr_table(int k, int n, int ell_lo, int ell_hi, bool include_equal, int jobs,
                        const std::string& cache_dir = "") {
    GrSweepContext ctx(k, n, include_equal);
    GrTable out;
    const Subset top = ctx.vars.back();  // {n-k+1,...,n}
    for (int ell = ell_lo; ell <= ell_hi; ++ell) {
        KernelModel model(Family::grassmannian(k, n),
                          MatchingField::block_diagonal(k, n, ell), cache_dir);
        std::vector<long long> acc(std::max(jobs, 1), 0);
        parallel_chunks(ctx.pairs.size(), jobs, [&](size_t c, size_t b, size_t e) {
            for (size_t t = b; t < e; ++t) {
                const auto [vi, wi] = ctx.pairs[t];
                if (model.classify(model.alive_mask(ctx.vars[vi], ctx.vars[wi]), false)
                        .verdict == Verdict::Toric)
                    ++acc[c];
            }
        });
        for (long long a : acc) out.richardson_toric_triples += a;
        for (const Subset& v : ctx.vars)
            if (model.classify(model.alive_mask(v, top), false).verdict == Verdict::Toric)
                ++out.opposite_toric_pairs;
    }
    return out;
}

}  // namespace rdg
