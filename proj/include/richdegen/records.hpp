#pragma once

// Classification records and their text / JSON / CSV renderings, shared by
// the CLI subcommands.

#include "json.hpp"

#include "richdegen/ideal.hpp"

namespace rdg {

inline std::string monomial_string(const KernelModel& model, uint16_t a, uint16_t b) {
    return "P[" + to_string(model.vars()[a]) + "]*P[" + to_string(model.vars()[b]) + "]";
}

// "P[135]*P[245] - P[145]*P[235]" for binomials (a '+' when the relative
// sign is -1), "P[135]*P[245]" for monomials.
inline std::string witness_string(const KernelModel& model, const RestrictedGenerator& g) {
    std::string s = monomial_string(model, g.m0, g.m1);
    if (!g.is_monomial) {
        s += (g.relative_sign == 1) ? " - " : " + ";
        s += monomial_string(model, g.p0, g.p1);
    }
    return s;
}

struct ClassificationRecord {
    std::string family;      // "gr" or "flag"
    int k = 0;               // 0 = not applicable
    int n = 0;
    int ell = -1;            // -1 = not applicable (antidiagonal convention)
    std::string convention;  // "" (block diagonal) or "antidiagonal"
    std::string v, w;
    Verdict verdict = Verdict::Zero;
    std::string witness;
};

inline nlohmann::json to_json(const ClassificationRecord& r) {
    nlohmann::json j;
    j["family"] = r.family;
    if (r.k > 0) j["k"] = r.k;
    j["n"] = r.n;
    if (r.ell >= 0)
        j["ell"] = r.ell;
    else
        j["convention"] = "antidiagonal";
    j["v"] = r.v;
    j["w"] = r.w;
    j["verdict"] = to_string(r.verdict);
    j["witness"] = r.witness;
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline const char* csv_header() { return "family,k,n,ell,convention,v,w,verdict,witness"; }

inline std::string to_csv(const ClassificationRecord& r) {
    std::ostringstream os;
    os << r.family << ',' << (r.k > 0 ? std::to_string(r.k) : "") << ',' << r.n << ','
       << (r.ell >= 0 ? std::to_string(r.ell) : "") << ',' << r.convention << ','
       << csv_escape(r.v) << ',' << csv_escape(r.w) << ',' << to_string(r.verdict) << ','
       << csv_escape(r.witness);
    return os.str();
}

inline std::string to_text(const ClassificationRecord& r) {
    std::ostringstream os;
    os << r.family;
    if (r.k > 0) os << " k=" << r.k;
    os << " n=" << r.n;
    if (r.ell >= 0)
        os << " ell=" << r.ell;
    else
        os << " convention=antidiagonal";
    os << " v=" << r.v << " w=" << r.w << "  verdict=" << to_string(r.verdict);
    if (!r.witness.empty()) os << "  witness: " << r.witness;
    return os.str();
}

}  // namespace rdg
