#pragma once

#include "sostar/higgs.hpp"
#include "sostar/matrix.hpp"
#include "sostar/stability.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace sostar {

using nlohmann::json;

struct parse_error : std::runtime_error {
    std::string pointer; // JSON-pointer path of the offending element
    parse_error(std::string ptr, const std::string& msg)
        : std::runtime_error(msg + " at " + ptr), pointer(std::move(ptr)) {}
};

// ---------------------------------------------------------------------------
// Scalars and matrices: {"re": "p/q", "im": "p/q"}.
// ---------------------------------------------------------------------------

inline json to_json(const GaussianRational& z) {
    return json{{"re", rat_to_string(z.re)}, {"im", rat_to_string(z.im)}};
}

inline GaussianRational gaussian_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw parse_error(ptr, "expected {re, im} object");
    GaussianRational z;
    try {
        if (j.contains("re")) z.re = rat_from_string(j.at("re").get<std::string>());
        if (j.contains("im")) z.im = rat_from_string(j.at("im").get<std::string>());
    } catch (const std::exception& e) {
        throw parse_error(ptr, e.what());
    }
    return z;
}

inline json to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExactMatrix matrix_from_json(const json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) throw parse_error(ptr, "expected a nonempty array of rows");
    std::size_t rows = j.size(), cols = j.at(0).size();
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw parse_error(ptr + "/" + std::to_string(i), "ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = gaussian_from_json(row.at(c), ptr + "/" + std::to_string(i) + "/" +
                                                           std::to_string(c));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Curve data.
// ---------------------------------------------------------------------------

inline json to_json(const CurveContext& ctx) {
    json gens = json::object();
    for (const auto& [name, d] : ctx.generator_degrees) gens[name] = d;
    return json{{"genus", ctx.genus}, {"generators", gens}, {"k_half", ctx.has_k_half}};
}

inline CurveContext context_from_json(const json& j, const std::string& ptr = "") {
    if (!j.is_object()) throw parse_error(ptr.empty() ? "/" : ptr, "expected a context object");
    if (!j.contains("genus")) throw parse_error(ptr + "/genus", "missing genus");
    long genus = j.at("genus").get<long>();
    std::map<std::string, long> gens;
    if (j.contains("generators")) {
        const json& g = j.at("generators");
        if (!g.is_object()) throw parse_error(ptr + "/generators", "expected an object");
        for (auto it = g.begin(); it != g.end(); ++it)
            gens[it.key()] = it.value().get<long>();
    }
    bool k_half = j.value("k_half", false);
    try {
        return CurveContext(genus, std::move(gens), k_half);
    } catch (const std::exception& e) {
        throw parse_error(ptr + "/genus", e.what());
    }
}

inline json to_json(const LineSymbol& L) {
    json exps = json::object();
    for (const auto& [name, e] : L.exps) exps[name] = e;
    return json{{"exps", exps}};
}

inline LineSymbol symbol_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object() || !j.contains("exps"))
        throw parse_error(ptr, "expected {exps: {...}}");
    LineSymbol L;
    const json& exps = j.at("exps");
    if (!exps.is_object()) throw parse_error(ptr + "/exps", "expected an object");
    for (auto it = exps.begin(); it != exps.end(); ++it)
        L.exps[it.key()] = it.value().get<long>();
    L.canonicalize();
    return L;
}

// ---------------------------------------------------------------------------
// Higgs objects.  Support entries use 1-based strictly-upper indices (i < j);
// optional exact coefficients ride along as re/im strings.
// ---------------------------------------------------------------------------

inline json support_to_json(const Support& s,
                            const std::map<SupportEntry, GaussianRational>& coeff) {
    json arr = json::array();
    for (const auto& e : s) {
        json entry{{"i", e.first + 1}, {"j", e.second + 1}};
        auto c = coeff.find(e);
        if (c != coeff.end()) {
            entry["re"] = rat_to_string(c->second.re);
            entry["im"] = rat_to_string(c->second.im);
        }
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline json to_json(const SOStarHiggsObject& H) {
    json summands = json::array();
    for (const auto& L : H.V.summands) summands.push_back(to_json(L));
    return json{{"context", to_json(H.ctx)},
                {"summands", summands},
                {"beta", support_to_json(H.beta_support, H.beta_coeff)},
                {"gamma", support_to_json(H.gamma_support, H.gamma_coeff)}};
}

inline void support_from_json(const json& j, const std::string& ptr, std::size_t n, Support& out,
                              std::map<SupportEntry, GaussianRational>& coeff) {
    if (!j.is_array()) throw parse_error(ptr, "expected an array of entries");
    for (std::size_t k = 0; k < j.size(); ++k) {
        const json& e = j.at(k);
        std::string eptr = ptr + "/" + std::to_string(k);
        if (!e.is_object() || !e.contains("i") || !e.contains("j"))
            throw parse_error(eptr, "expected {i, j}");
        long i = e.at("i").get<long>(), jj = e.at("j").get<long>();
        if (i < 1 || jj < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(jj) > n)
            throw parse_error(eptr, "index out of range 1.." + std::to_string(n));
        if (i >= jj) throw parse_error(eptr, "strictly upper triangular required (i < j)");
        SupportEntry se{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1)};
        out.insert(se);
        if (e.contains("re") || e.contains("im")) coeff[se] = gaussian_from_json(e, eptr);
    }
}

inline SOStarHiggsObject parse_object(const json& j) {
    if (!j.is_object()) throw parse_error("/", "expected a Higgs object");
    if (!j.contains("context")) throw parse_error("/context", "missing context");
    SOStarHiggsObject H;
    H.ctx = context_from_json(j.at("context"), "/context");
    if (!j.contains("summands")) throw parse_error("/summands", "missing summands");
    const json& s = j.at("summands");
    if (!s.is_array() || s.empty()) throw parse_error("/summands", "expected a nonempty array");
    for (std::size_t k = 0; k < s.size(); ++k)
        H.V.summands.push_back(symbol_from_json(s.at(k), "/summands/" + std::to_string(k)));
    if (j.contains("beta"))
        support_from_json(j.at("beta"), "/beta", H.rank(), H.beta_support, H.beta_coeff);
    if (j.contains("gamma"))
        support_from_json(j.at("gamma"), "/gamma", H.rank(), H.gamma_support, H.gamma_coeff);
    // Degrees of reserved names must be resolvable.
    for (const auto& L : H.V.summands) (void)L.degree(H.ctx);
    return H;
}

// ---------------------------------------------------------------------------
// Verdicts.
// ---------------------------------------------------------------------------

inline json to_json(const TwoStepWitness& w) {
    json s1 = json::array(), s2 = json::array();
    for (std::size_t a : w.filtration.S1) s1.push_back(a + 1);
    for (std::size_t a : w.filtration.S2) s2.push_back(a + 1);
    return json{{"S1", s1}, {"S2", s2}, {"defect", w.defect}};
}

inline json to_json(const MilnorWoodReport& r) {
    return json{{"d", r.d},
                {"rank_beta", r.rank_beta},
                {"rank_gamma", r.rank_gamma},
                {"lower", r.lower},
                {"upper", r.upper},
                {"cap", r.cap},
                {"within_rank_bounds", r.within_rank_bounds},
                {"within_cap", r.within_cap},
                {"maximal", r.maximal},
                {"gamma_iso", r.gamma_iso},
                {"beta_iso", r.beta_iso},
                {"det_label_inconsistency", r.det_label_inconsistency}};
}

inline json to_json(const Verdict& v) {
    json out{{"status", status_name(v.status)}};
    if (v.witness) {
        out["witness"] = to_json(*v.witness);
        out["defect"] = v.witness->defect;
    }
    if (v.weighted_witness) {
        json chain = json::array();
        for (const auto& S : v.weighted_witness->chain) {
            json set = json::array();
            for (std::size_t a : S) set.push_back(a + 1);
            chain.push_back(std::move(set));
        }
        json lambdas = json::array();
        for (const auto& l : v.weighted_witness->lambdas) lambdas.push_back(rat_to_string(l));
        out["weighted_witness"] = json{{"chain", chain},
                                       {"lambdas", lambdas},
                                       {"defect", rat_to_string(v.weighted_witness->defect)}};
    }
    if (v.repeated_labels_warning) out["repeated_labels_warning"] = true;
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

} // namespace sostar
