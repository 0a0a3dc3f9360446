// richdegen: classify restricted matching field ideals of Richardson,
// Schubert and opposite Schubert varieties inside Gr(k,n) and Flag_n,
// reproduce the reference tables, and run the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input,
// 3 method cross-check mismatch.

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

#include "richdegen/verification.hpp"

using namespace rdg;

namespace {

std::string cache_dir_from_env() {
    const char* d = std::getenv("RICHDEGEN_CACHE_DIR");
    return d ? std::string(d) : std::string();
}

void emit_records(const std::vector<ClassificationRecord>& records,
                  const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& r : records) std::cout << to_csv(r) << "\n";
    } else {
        for (const auto& r : records) std::cout << to_text(r) << "\n";
    }
}

MatchingField field_for(int kmax, int n, int ell, const std::string& convention,
                        const std::string& matrix_file) {
    if (!matrix_file.empty()) return MatchingField::from_matrix(load_weight_matrix(matrix_file));
    if (convention == "antidiagonal") return MatchingField::antidiagonal(kmax, n);
    if (convention.empty() || convention == "blockdiag")
        return MatchingField::block_diagonal(kmax, n, ell);
    throw std::invalid_argument("unknown convention: " + convention);
}

int run_classify(const std::string& family, int k, int n, int ell,
                 const std::string& convention, const std::string& vstr,
                 const std::string& wstr, const std::string& method,
                 const std::string& format) {
    const bool is_gr = family == "gr";
    if (!is_gr && family != "flag") throw std::invalid_argument("family must be gr or flag");
    const std::string cache = cache_dir_from_env();

    ClassificationRecord rec;
    rec.family = family;
    rec.n = n;
    rec.convention = convention == "antidiagonal" ? "antidiagonal" : "";
    rec.ell = rec.convention.empty() ? ell : -1;
    rec.v = vstr;
    rec.w = wstr;

    const bool theorem_available =
        rec.convention.empty() && (is_gr || ell == 0);
    std::string method_used = method;
    if (method_used == "auto") method_used = theorem_available ? "both" : "bruteforce";
    if ((method_used == "theorem" || method_used == "both") && !theorem_available)
        throw std::invalid_argument(
            "no closed-form theorem for this convention (use --method bruteforce)");

    std::optional<Verdict> theorem_verdict;
    std::optional<Verdict> brute_verdict;

    if (is_gr) {
        rec.k = k;
        const Subset v = parse_subset(vstr, n), w = parse_subset(wstr, n);
        if (v.size() != k || w.size() != k)
            throw std::invalid_argument("v and w must be k-subsets");
        if (!bruhat_leq(v, w)) throw std::invalid_argument("empty Richardson variety: v <= w fails");
        if (method_used != "theorem") {
            KernelModel model(Family::grassmannian(k, n),
                              field_for(k, n, ell, convention, ""), cache);
            const auto cls = model.classify(model.alive_mask(v, w));
            brute_verdict = cls.verdict;
            if (cls.witness) rec.witness = witness_string(model, *cls.witness);
        }
        if (method_used != "bruteforce")
            theorem_verdict = grass_richardson_classify(v, w, k, n, ell);
    } else {
        const Permutation v = parse_permutation(vstr), w = parse_permutation(wstr);
        if (v.n() != n || w.n() != n) throw std::invalid_argument("v and w must lie in S_n");
        if (!bruhat_leq(v, w)) throw std::invalid_argument("empty Richardson variety: v <= w fails");
        if (method_used != "theorem") {
            KernelModel model(Family::flag(n), field_for(n - 1, n, ell, convention, ""),
                              cache);
            const auto cls = model.classify(model.alive_mask(v, w));
            brute_verdict = cls.verdict;
            if (cls.witness) rec.witness = witness_string(model, *cls.witness);
        }
        if (method_used != "bruteforce") {
            FlagClassifier closed;
            theorem_verdict = closed.richardson(v, w);
        }
    }

    rec.verdict = brute_verdict ? *brute_verdict : *theorem_verdict;
    emit_records({rec}, format);
    if (brute_verdict && theorem_verdict && *brute_verdict != *theorem_verdict) {
        std::cerr << "method mismatch: bruteforce=" << to_string(*brute_verdict)
                  << " theorem=" << to_string(*theorem_verdict) << "\n";
        return 3;
    }
    return 0;
}

int run_table_flag(int n, int ell, bool all_ell, bool large, int jobs,
                   const std::string& format) {
    if (n >= 6 && !large)
        throw std::invalid_argument("flag tables with n >= 6 are opt-in: pass --large");
    const std::string cache = cache_dir_from_env();
    FlagSweepContext ctx(n);
    std::vector<TableRow> rows;
    const int lo = all_ell ? 0 : ell, hi = all_ell ? n - 1 : ell;
    for (int l = lo; l <= hi; ++l) {
        KernelModel model(Family::flag(n), MatchingField::block_diagonal(n - 1, n, l), cache);
        rows.push_back(flag_table_row(ctx, model, jobs));
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"ell", r.ell}, {"toric", r.toric}, {"zero", r.zero},
                           {"nontoric", r.nontoric}});
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,ell,toric,zero,nontoric\n";
        for (const auto& r : rows)
            std::cout << r.n << ',' << r.ell << ',' << r.toric << ',' << r.zero << ','
                      << r.nontoric << "\n";
    } else {
        std::cout << "n ell toric zero nontoric\n";
        for (const auto& r : rows)
            std::cout << r.n << ' ' << r.ell << ' ' << r.toric << ' ' << r.zero << ' '
                      << r.nontoric << "\n";
    }
    return 0;
}

int run_table_gr(int k, int n, std::string ell_range, bool include_equal, int jobs,
                 const std::string& format) {
    int lo = 0, hi = n - 1;
    if (!ell_range.empty()) {
        const auto colon = ell_range.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--ell-range expects LO:HI");
        lo = std::stoi(ell_range.substr(0, colon));
        hi = std::stoi(ell_range.substr(colon + 1));
    }
    const auto table = gr_table(k, n, lo, hi, include_equal, jobs, cache_dir_from_env());
    if (format == "json") {
        std::cout << nlohmann::json({{"k", k},
                                     {"n", n},
                                     {"richardson_toric_triples", table.richardson_toric_triples},
                                     {"opposite_toric_pairs", table.opposite_toric_pairs}})
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "k,n,richardson_toric_triples,opposite_toric_pairs\n"
                  << k << ',' << n << ',' << table.richardson_toric_triples << ','
                  << table.opposite_toric_pairs << "\n";
    } else {
        std::cout << "richardson toric triples " << table.richardson_toric_triples << "\n"
                  << "opposite toric pairs " << table.opposite_toric_pairs << "\n";
    }
    return 0;
}

int run_list(const std::string& family, int k, int n, int ell, const std::string& convention,
             const std::string& verdict, bool large, int jobs, const std::string& format) {
    std::optional<Verdict> filter;
    if (verdict == "zero") filter = Verdict::Zero;
    else if (verdict == "toric") filter = Verdict::Toric;
    else if (verdict == "nontoric") filter = Verdict::NonToric;
    else if (verdict != "all") throw std::invalid_argument("unknown verdict filter: " + verdict);
    const std::string cache = cache_dir_from_env();

    std::vector<ClassificationRecord> records;
    if (family == "flag") {
        if (n >= 6 && !large)
            throw std::invalid_argument("flag lists with n >= 6 are opt-in: pass --large");
        FlagSweepContext ctx(n);
        KernelModel model(Family::flag(n), field_for(n - 1, n, ell, convention, ""), cache);
        records = flag_pair_records(ctx, model, jobs, filter);
    } else if (family == "gr") {
        GrSweepContext ctx(k, n, false);
        KernelModel model(Family::grassmannian(k, n), field_for(k, n, ell, convention, ""),
                          cache);
        for (const auto& [vi, wi] : ctx.pairs) {
            const auto cls = model.classify(model.alive_mask(ctx.vars[vi], ctx.vars[wi]));
            if (filter && cls.verdict != *filter) continue;
            ClassificationRecord r;
            r.family = "gr";
            r.k = k;
            r.n = n;
            r.convention = convention == "antidiagonal" ? "antidiagonal" : "";
            r.ell = r.convention.empty() ? ell : -1;
            r.v = to_string(ctx.vars[vi]);
            r.w = to_string(ctx.vars[wi]);
            r.verdict = cls.verdict;
            if (cls.witness) r.witness = witness_string(model, *cls.witness);
            records.push_back(std::move(r));
        }
    } else {
        throw std::invalid_argument("family must be gr or flag");
    }
    emit_records(records, format);
    return 0;
}

int run_mf_init_term(int k, int n, int ell, const std::string& convention,
                     const std::string& matrix_file, const std::string& subset,
                     const std::string& format) {
    WeightMatrix M;
    if (!matrix_file.empty())
        M = load_weight_matrix(matrix_file);
    else if (convention == "antidiagonal")
        M = build_antidiagonal(n);
    else
        M = build_block_diagonal(k, n, ell);
    const Subset J = parse_subset(subset, M.cols);
    const auto cols = initial_column_bruteforce(M, J);
    long long weight = 0;
    for (int i = 0; i < J.size(); ++i) weight += M.at(i + 1, cols[0].entries[i]);
    if (format == "json") {
        nlohmann::json j;
        j["subset"] = to_string(J);
        j["weight"] = weight;
        j["coherent"] = cols.size() == 1;
        j["columns"] = nlohmann::json::array();
        for (const auto& c : cols)
            j["columns"].push_back({{"order", c.entries}, {"sign", c.sign}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : cols) {
            std::cout << "J=" << to_string(J) << " order=(";
            for (size_t i = 0; i < c.entries.size(); ++i)
                std::cout << (i ? "," : "") << c.entries[i];
            std::cout << ") sign=" << (c.sign > 0 ? "+1" : "-1") << " weight=" << weight
                      << "\n";
        }
        if (cols.size() > 1) std::cout << "INCOHERENT: " << cols.size() << " minimal terms\n";
    }
    return cols.size() == 1 ? 0 : 1;
}

int run_mf_weights(int k, int n, int ell, const std::string& convention,
                   const std::string& matrix_file, const std::string& format) {
    WeightMatrix M;
    if (!matrix_file.empty())
        M = load_weight_matrix(matrix_file);
    else if (convention == "antidiagonal")
        M = build_antidiagonal(n);
    else
        M = build_block_diagonal(k, n, ell);
    if (k > M.rows) throw std::invalid_argument("k exceeds matrix rows");
    std::vector<std::pair<std::string, long long>> weights;
    for (const Subset& J : k_subsets(M.cols, k)) {
        const auto cols = initial_column_bruteforce(M, J);
        long long wt = 0;
        for (int i = 0; i < k; ++i) wt += M.at(i + 1, cols[0].entries[i]);
        weights.emplace_back(to_string(J), wt);
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [J, wt] : weights) arr.push_back({{"subset", J}, {"weight", wt}});
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "subset,weight\n";
        for (const auto& [J, wt] : weights) std::cout << J << ',' << wt << "\n";
    } else {
        std::cout << "w = (";
        for (size_t i = 0; i < weights.size(); ++i)
            std::cout << (i ? ", " : "") << weights[i].second;
        std::cout << ")\n";
        for (const auto& [J, wt] : weights) std::cout << "P[" << J << "] " << wt << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max_n, int max_k, bool large, int jobs) {
    using namespace rdg::verify;
    const std::string cache = cache_dir_from_env();
    std::vector<SuiteResult> results;
    auto want = [&suite](const char* name) { return suite == "all" || suite == name; };

    if (want("initial-terms")) results.push_back(suite_initial_terms(std::min(max_k, 4), std::min(max_n, 8)));
    if (want("weight-shift")) results.push_back(suite_weight_shift());
    if (want("key-lemma")) results.push_back(suite_key_lemma(std::min(max_k, 4), std::min(max_n, 8)));
    if (want("asc-prop")) results.push_back(suite_asc_prop(std::min(max_n, 7)));
    if (want("restriction-sets")) results.push_back(suite_restriction_filter(std::min(max_n, 7)));
    if (want("wv-sets")) results.push_back(suite_wv(std::min(max_n, 6)));
    if (want("gr-theorems"))
        results.push_back(suite_gr_theorems(std::min(max_k, 3), std::min(max_n, 6), cache));
    if (want("zero-ell-invariance"))
        results.push_back(suite_zero_ell_invariance(std::min(max_k, 3), std::min(max_n, 6), cache));
    if (want("flag-theorems"))
        results.push_back(suite_flag_theorems(std::min(max_n, 5), cache));
    if (want("j1-j3"))
        results.push_back(suite_j1_j3(std::min(max_k, 3), std::min(max_n, 6), std::min(max_n, 5), cache));
    if (want("std-monomials"))
        results.push_back(suite_std_monomials(std::min(max_k, 3), std::min(max_n, 6), cache));
    if (want("gamma-lemmas"))
        results.push_back(suite_gamma_lemmas(std::min(max_k, 3), std::min(max_n, 6)));
    if (want("principality")) results.push_back(suite_principality(std::min(max_n, 6), cache));
    if (want("tables-flag")) results.push_back(suite_tables_flag(3, std::min(max_n, 5), jobs, cache));
    if ((suite == "all" && large) || suite == "tables-flag-large")
        results.push_back(suite_tables_flag(6, 6, jobs, cache));
    if (want("tables-gr")) results.push_back(suite_tables_gr(jobs, cache));
    if (want("antidiag-lists")) results.push_back(suite_antidiag_lists(jobs, cache));

    if (results.empty()) throw std::invalid_argument("unknown suite: " + suite);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %-20s %s [%.0f ms]\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.ms);
        if (!r.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted matching field ideals of Richardson varieties"};
    app.require_subcommand(1);
    std::string format = "text";
    int jobs = default_jobs();
    app.add_option("--format", format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", jobs, "worker threads for sweeps");

    // classify
    auto* classify = app.add_subcommand("classify", "classify one (v,w) pair");
    classify->fallthrough();
    std::string cl_family, cl_v, cl_w, cl_convention, cl_method = "auto";
    int cl_k = 0, cl_n = 0, cl_ell = 0;
    classify->add_option("family", cl_family, "gr or flag")->required();
    classify->add_option("--k", cl_k, "Grassmannian k");
    classify->add_option("--n", cl_n, "ambient n")->required();
    classify->add_option("--ell", cl_ell, "block diagonal parameter");
    classify->add_option("--convention", cl_convention, "blockdiag|antidiagonal");
    classify->add_option("--v", cl_v, "lower bound")->required();
    classify->add_option("--w", cl_w, "upper bound")->required();
    classify->add_option("--method", cl_method, "bruteforce|theorem|both|auto")
        ->check(CLI::IsMember({"bruteforce", "theorem", "both", "auto"}));

    // mf init-term / weights
    auto* mf = app.add_subcommand("mf", "matching field queries");
    mf->fallthrough();
    mf->require_subcommand(1);
    auto* init_term = mf->add_subcommand("init-term", "true-order column of a subset");
    init_term->fallthrough();
    auto* weights = mf->add_subcommand("weights", "induced Pluecker weight vector");
    weights->fallthrough();
    std::string mf_convention, mf_matrix, mf_subset;
    int mf_k = 0, mf_n = 0, mf_ell = 0;
    for (auto* sub : {init_term, weights}) {
        sub->add_option("--k", mf_k, "number of rows used");
        sub->add_option("--n", mf_n, "ambient n");
        sub->add_option("--ell", mf_ell, "block diagonal parameter");
        sub->add_option("--convention", mf_convention, "blockdiag|antidiagonal");
        sub->add_option("--matrix", mf_matrix, "weight matrix file (first line: k n)");
    }
    init_term->add_option("--subset", mf_subset, "index set, e.g. 145")->required();

    // table
    auto* table = app.add_subcommand("table", "verdict counts over all pairs v < w");
    table->fallthrough();
    std::string tb_family, tb_ell_range;
    int tb_k = 0, tb_n = 0, tb_ell = -1;
    bool tb_large = false, tb_include_equal = false;
    table->add_option("family", tb_family, "gr or flag")->required();
    table->add_option("--k", tb_k, "Grassmannian k");
    table->add_option("--n", tb_n, "ambient n")->required();
    table->add_option("--ell", tb_ell, "single ell (flag; default all)");
    table->add_option("--ell-range", tb_ell_range, "LO:HI sweep bounds (gr)");
    table->add_flag("--large", tb_large, "allow the n >= 6 flag sweep");
    table->add_flag("--include-equal-pairs", tb_include_equal, "count v = w too (gr)");

    // list
    auto* list = app.add_subcommand("list", "classification records for all pairs v < w");
    list->fallthrough();
    std::string li_family, li_convention, li_verdict = "all";
    int li_k = 0, li_n = 0, li_ell = 0;
    bool li_large = false;
    list->add_option("family", li_family, "gr or flag")->required();
    list->add_option("--k", li_k, "Grassmannian k");
    list->add_option("--n", li_n, "ambient n")->required();
    list->add_option("--ell", li_ell, "block diagonal parameter");
    list->add_option("--convention", li_convention, "blockdiag|antidiagonal");
    list->add_option("--verdict", li_verdict, "zero|toric|nontoric|all");
    list->add_flag("--large", li_large, "allow the n >= 6 flag sweep");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->fallthrough();
    std::string vf_suite = "all";
    int vf_max_n = 99, vf_max_k = 99;
    bool vf_large = false;
    verify->add_option("--suite", vf_suite, "suite name or 'all'");
    verify->add_option("--max-n", vf_max_n, "size budget");
    verify->add_option("--max-k", vf_max_k, "size budget");
    verify->add_flag("--large", vf_large, "include the n = 6 flag table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed())
            return run_classify(cl_family, cl_k, cl_n, cl_ell, cl_convention, cl_v, cl_w,
                                cl_method, format);
        if (init_term->parsed())
            return run_mf_init_term(mf_k, mf_n, mf_ell, mf_convention, mf_matrix, mf_subset,
                                    format);
        if (weights->parsed())
            return run_mf_weights(mf_k, mf_n, mf_ell, mf_convention, mf_matrix, format);
        if (table->parsed()) {
            if (tb_family == "flag")
                return run_table_flag(tb_n, tb_ell < 0 ? 0 : tb_ell, tb_ell < 0, tb_large,
                                      jobs, format);
            if (tb_family == "gr")
                return run_table_gr(tb_k, tb_n, tb_ell_range, tb_include_equal, jobs, format);
            throw std::invalid_argument("family must be gr or flag");
        }
        if (list->parsed())
            return run_list(li_family, li_k, li_n, li_ell, li_convention, li_verdict, li_large,
                            jobs, format);
        if (verify->parsed()) return run_verify(vf_suite, vf_max_n, vf_max_k, vf_large, jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
