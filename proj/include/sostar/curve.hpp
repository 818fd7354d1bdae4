#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sostar {

// Reserved generator names.  "K" is the canonical bundle, "K1/2" a chosen
// square root (even theta characteristic).  Symbols are exponent vectors in
// these generators; two units of K1/2 fold into one K so the K1/2 exponent
// of a canonical symbol is always 0 or 1.
inline const std::string kCanonical = "K";
inline const std::string kHalfCanonical = "K1/2";

struct CurveContext {
    long genus = 2;
    std::map<std::string, long> generator_degrees; // user generators only
    bool has_k_half = false;

    CurveContext() = default;
    CurveContext(long g, std::map<std::string, long> gens = {}, bool k_half = false)
        : genus(g), generator_degrees(std::move(gens)), has_k_half(k_half) {
        if (g < 2) throw std::invalid_argument("genus must be >= 2");
        if (generator_degrees.count(kCanonical) || generator_degrees.count(kHalfCanonical))
            throw std::invalid_argument("K and K1/2 are reserved generator names");
    }

    long degree_of(const std::string& name) const {
        if (name == kCanonical) return 2 * genus - 2;
        if (name == kHalfCanonical) {
            if (!has_k_half) throw std::invalid_argument("context has no K1/2");
            return genus - 1;
        }
        auto it = generator_degrees.find(name);
        if (it == generator_degrees.end())
            throw std::invalid_argument("unknown generator '" + name + "'");
        return it->second;
    }

    friend bool operator==(const CurveContext& a, const CurveContext& b) {
        return a.genus == b.genus && a.generator_degrees == b.generator_degrees &&
               a.has_k_half == b.has_k_half;
    }
};

// Formal line bundle: exponent vector over named generators plus K, K1/2.
struct LineSymbol {
    std::map<std::string, long> exps; // zero exponents are never stored

    LineSymbol() = default;

    static LineSymbol trivial() { return {}; }
    static LineSymbol generator(const std::string& name, long e = 1) {
        LineSymbol s;
        if (e != 0) s.exps[name] = e;
        s.canonicalize();
        return s;
    }
    static LineSymbol canonical(long e = 1) { return generator(kCanonical, e); }
    static LineSymbol canonical_half() { return generator(kHalfCanonical, 1); }

    // Fold pairs of K1/2 into K and drop zero exponents.
    void canonicalize() {
        auto it = exps.find(kHalfCanonical);
        if (it != exps.end()) {
            long h = it->second;
            long q = (h >= 0) ? h / 2 : -((-h + 1) / 2); // floor division
            long r = h - 2 * q;                          // 0 or 1
            if (q != 0) exps[kCanonical] += q;
            if (r == 0) exps.erase(it); else it->second = r;
        }
        for (auto i = exps.begin(); i != exps.end();)
            i = (i->second == 0) ? exps.erase(i) : std::next(i);
    }

    bool is_trivial() const { return exps.empty(); }

    long exponent(const std::string& name) const {
        auto it = exps.find(name);
        return it == exps.end() ? 0 : it->second;
    }

    long degree(const CurveContext& ctx) const {
        long d = 0;
        for (const auto& [name, e] : exps) d += e * ctx.degree_of(name);
        return d;
    }

    friend bool operator==(const LineSymbol& a, const LineSymbol& b) { return a.exps == b.exps; }
    friend bool operator!=(const LineSymbol& a, const LineSymbol& b) { return !(a == b); }
    friend bool operator<(const LineSymbol& a, const LineSymbol& b) { return a.exps < b.exps; }

    std::string to_string() const {
        if (exps.empty()) return "O";
        std::string s;
        for (const auto& [name, e] : exps) {
            if (!s.empty()) s += "*";
            s += name;
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

inline LineSymbol tensor(const LineSymbol& a, const LineSymbol& b) {
    LineSymbol r = a;
    for (const auto& [name, e] : b.exps) r.exps[name] += e;
    r.canonicalize();
    return r;
}

inline LineSymbol dual(const LineSymbol& a) {
    LineSymbol r;
    for (const auto& [name, e] : a.exps) r.exps[name] = -e;
    r.canonicalize();
    return r;
}

inline LineSymbol pow(const LineSymbol& a, long n) {
    LineSymbol r;
    for (const auto& [name, e] : a.exps) r.exps[name] = e * n;
    r.canonicalize();
    return r;
}

// Generic h^0 rule: special labels O, K, K^m, K1/2 are recognized
// syntactically, everything else follows the generic Brill-Noether count
// max(0, deg - g + 1).  Distinct generator names denote bundles in general
// position, so nontrivial degree-0 symbols have no sections.
inline long h0_generic(const CurveContext& ctx, const LineSymbol& L) {
    long g = ctx.genus;
    if (L.is_trivial()) return 1;
    if (L.exps.size() == 1) {
        auto [name, e] = *L.exps.begin();
        if (name == kCanonical) {
            if (e < 0) return 0;
            if (e == 1) return g;
            return (2 * e - 1) * (g - 1); // K^m, m >= 2
        }
        if (name == kHalfCanonical) return 0; // even theta characteristic
    }
    long d = L.degree(ctx);
    if (d < 0) return 0;
    return std::max(0L, d - g + 1);
}

inline bool section_exists(const CurveContext& ctx, const LineSymbol& src,
                           const LineSymbol& dst, bool twist_K) {
    LineSymbol host = tensor(dual(src), dst);
    if (twist_K) host = tensor(host, LineSymbol::canonical());
    return h0_generic(ctx, host) > 0;
}

// Ordered direct sum of line symbols.  Order is part of object identity.
struct SplitBundle {
    std::vector<LineSymbol> summands;

    SplitBundle() = default;
    explicit SplitBundle(std::vector<LineSymbol> s) : summands(std::move(s)) {}

    std::size_t rank() const { return summands.size(); }
    long degree(const CurveContext& ctx) const {
        long d = 0;
        for (const auto& L : summands) d += L.degree(ctx);
        return d;
    }
    LineSymbol det() const {
        LineSymbol r;
        for (const auto& L : summands) r = tensor(r, L);
        return r;
    }
    SplitBundle dualized() const {
        SplitBundle r;
        r.summands.reserve(summands.size());
        for (const auto& L : summands) r.summands.push_back(dual(L));
        return r;
    }
    SplitBundle tensored(const LineSymbol& M) const {
        SplitBundle r;
        r.summands.reserve(summands.size());
        for (const auto& L : summands) r.summands.push_back(tensor(L, M));
        return r;
    }

    friend bool operator==(const SplitBundle& a, const SplitBundle& b) {
        return a.summands == b.summands;
    }
};

// Lambda^2 V for split V: summands L_i (x) L_j over i < j in lexicographic
// index order.
inline SplitBundle exterior_square(const SplitBundle& V) {
    if (V.rank() < 2) throw std::invalid_argument("exterior_square needs rank >= 2");
    SplitBundle r;
    for (std::size_t i = 0; i < V.rank(); ++i)
        for (std::size_t j = i + 1; j < V.rank(); ++j)
            r.summands.push_back(tensor(V.summands[i], V.summands[j]));
    return r;
}

inline long riemann_roch_chi(const CurveContext& ctx, const SplitBundle& V) {
    return V.degree(ctx) + static_cast<long>(V.rank()) * (1 - ctx.genus);
}

} // namespace sostar
