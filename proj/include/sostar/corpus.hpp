#pragma once

#include "sostar/higgs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sostar {

// Deterministic generator state: splitmix64, fixed across platforms so that
// seeded corpora are byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0.  Modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

struct CorpusParams {
    std::size_t n_max = 4;
    std::vector<long> g_set = {2, 3};
    std::size_t count = 100;
};

// One object per (seed, index), a pure function of both.  Generation mixes
// four shapes: generic random objects, maximal even-rank objects built on a
// gamma matching with trivial hosts, the same with an extra degree-zero line
// (maximal odd rank), and degree-zero objects.
inline SOStarHiggsObject corpus_object(std::uint64_t seed, std::uint64_t index,
                                       const CorpusParams& params) {
    if (params.g_set.empty() || params.n_max == 0)
        throw std::invalid_argument("corpus: need a nonempty genus set and n_max >= 1");
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + index * 0xda942042e4dd58b5ULL + 1);
    long g = params.g_set[rng.below(params.g_set.size())];
    std::uint64_t shape = rng.below(4);

    SOStarHiggsObject H;
    auto fresh = [&](std::size_t k) { return "a" + std::to_string(k + 1); };

    if ((shape == 1 || shape == 2) && params.n_max >= 2) {
        // Maximal gamma-matching construction: pairs (L, K (x) L^{-1}),
        // optionally followed by a degree-zero line for odd rank.
        std::size_t m = 1 + rng.below(params.n_max / 2);
        if (2 * m > params.n_max) m = params.n_max / 2;
        bool odd = (shape == 2) && (2 * m + 1 <= params.n_max);
        std::map<std::string, long> gens;
        std::vector<long> pair_deg(m);
        for (std::size_t k = 0; k < m; ++k) {
            pair_deg[k] = rng.range(0, g - 1);
            gens[fresh(k)] = pair_deg[k];
        }
        bool extra_trivial = rng.chance(1, 2);
        if (odd && !extra_trivial) gens[fresh(m)] = 0;
        H.ctx = CurveContext(g, gens, true);
        for (std::size_t k = 0; k < m; ++k) {
            LineSymbol L = LineSymbol::generator(fresh(k));
            H.V.summands.push_back(L);
            H.V.summands.push_back(tensor(LineSymbol::canonical(), dual(L)));
            H.gamma_support.insert({2 * k, 2 * k + 1});
        }
        if (odd) {
            H.V.summands.push_back(extra_trivial ? LineSymbol::trivial()
                                                 : LineSymbol::generator(fresh(m)));
        }
        // Optional beta entries wherever a generic section exists.
        std::size_t n = H.rank();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!rng.chance(1, 3)) continue;
                SOStarHiggsObject probe = H;
                probe.beta_support.insert({i, j});
                if (h0_generic(H.ctx, probe.beta_host({i, j})) > 0) H.beta_support.insert({i, j});
            }
        return H;
    }

    // Generic or degree-zero shape.
    std::size_t n = 1 + rng.below(params.n_max);
    std::map<std::string, long> gens;
    std::vector<long> degs(n);
    for (std::size_t k = 0; k < n; ++k) {
        degs[k] = (shape == 3) ? 0 : rng.range(-2, 2);
        gens[fresh(k)] = degs[k];
    }
    H.ctx = CurveContext(g, gens, rng.chance(1, 2));
    for (std::size_t k = 0; k < n; ++k) {
        if (shape == 3 && rng.chance(1, 4))
            H.V.summands.push_back(LineSymbol::trivial());
        else
            H.V.summands.push_back(LineSymbol::generator(fresh(k)));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.chance(1, 3) && h0_generic(H.ctx, H.beta_host({i, j})) > 0)
                H.beta_support.insert({i, j});
            if (rng.chance(1, 3) && h0_generic(H.ctx, H.gamma_host({i, j})) > 0)
                H.gamma_support.insert({i, j});
        }
    return H;
}

inline std::vector<SOStarHiggsObject> corpus_generate(std::uint64_t seed,
                                                      const CorpusParams& params) {
    std::vector<SOStarHiggsObject> out;
    out.reserve(params.count);
    for (std::uint64_t i = 0; i < params.count; ++i)
        out.push_back(corpus_object(seed, i, params));
    return out;
}

} // namespace sostar
