// Witness searches for Dedekind-Mertens numbers: seeded random sampling and
// exhaustive enumeration over finite coefficient rings. Deterministic for a
// fixed seed: candidate i is derived from seed + i and results are merged in
// index order.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dmk/content.hpp"

namespace dmk {

struct SplitMix {
    uint64_t state;

    explicit SplitMix(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

enum class SearchKind { Exhaustive, Random };
enum class CertKind { EXHAUSTIVE, SAMPLED };

struct SearchStrategy {
    SearchKind kind = SearchKind::Random;
    uint64_t seed = 0;
    int samples = 500;
    int deg_bound = 6;
    // Monomial-degree bound for random series coefficients; <0 means the
    // ring default conductor + e.
    int coeff_deg_bound = -1;
    long long budget = 1LL << 20;
};

template <class Elem>
struct WitnessEntry {
    RingPoly<Elem> f;
    int k_min;
};

template <class Elem>
struct DMReport {
    RingPoly<Elem> g;
    int mu_content = 0;
    SearchStrategy strategy;
    std::vector<WitnessEntry<Elem>> witness_table;  // sorted by k_min, descending
    int dm_lower_bound = 0;
    CertKind certificate = CertKind::SAMPLED;
    long long candidates = 0;
};

// --- random elements -------------------------------------------------------

// Scalars are biased toward small height ({1, -1, 2, -2}): the interesting
// search events are coefficient cancellations in fg, which generic uniform
// scalars hit with probability ~1/p only.
inline uint32_t random_scalar(uint32_t p, SplitMix& rng) {
    uint64_t roll = rng.below(8);
    if (roll == 0) return 0;
    if (roll < 6) {
        const uint32_t small[4] = {1 % p, p - 1, 2 % p, p >= 2 ? p - 2 : 0};
        return small[rng.below(4)];
    }
    return static_cast<uint32_t>(rng.below(p));
}

inline TruncatedSeries random_elem(const RingPtr& ring, SplitMix& rng, int coeff_bound) {
    if (coeff_bound < 0) coeff_bound = ring->conductor_c + ring->e;
    std::vector<int> degs;
    for (int d = 0; d <= coeff_bound && d < ring->N; ++d)
        if (ring->S_table[d]) degs.push_back(d);
    int d = degs[rng.below(degs.size())];
    return series_monomial(ring, d, random_scalar(ring->p, rng));
}

inline AlgElem random_elem(const AlgPtr& alg, SplitMix& rng, int /*coeff_bound*/) {
    std::size_t i = rng.below(alg->dim);
    return elem_scale(random_scalar(alg->p, rng), elem_basis(alg, i));
}

template <class Elem>
RingPoly<Elem> random_poly(const typename RingTraits<Elem>::Handle& h, SplitMix& rng,
                           int deg_bound, int coeff_bound) {
    int d = static_cast<int>(rng.below(deg_bound + 1));
    std::vector<Elem> coeffs;
    for (int i = 0; i < d; ++i) coeffs.push_back(random_elem(h, rng, coeff_bound));
    // leading coefficient forced nonzero so the degree is exactly d
    for (int tries = 0;; ++tries) {
        Elem lead = random_elem(h, rng, coeff_bound);
        if (!lead.is_zero() || tries > 64) {
            if (lead.is_zero()) lead = RingTraits<Elem>::one(h);
            coeffs.push_back(lead);
            break;
        }
    }
    return poly_make<Elem>(h, std::move(coeffs));
}

// --- searches --------------------------------------------------------------

template <class Elem>
DMReport<Elem> dm_search_random(const RingPoly<Elem>& g, const SearchStrategy& strat) {
    DMReport<Elem> rep;
    rep.g = g;
    rep.strategy = strat;
    rep.mu_content = mu_ideal(content(g));
    rep.certificate = CertKind::SAMPLED;
    for (int i = 0; i < strat.samples; ++i) {
        SplitMix rng(strat.seed + static_cast<uint64_t>(i));
        auto f = random_poly<Elem>(g.ring, rng, strat.deg_bound, strat.coeff_deg_bound);
        ++rep.candidates;
        int k = dm_k_witness(f, g);
        rep.witness_table.push_back({std::move(f), k});
    }
    std::stable_sort(rep.witness_table.begin(), rep.witness_table.end(),
                     [](const auto& a, const auto& b) { return a.k_min > b.k_min; });
    rep.dm_lower_bound = rep.witness_table.empty() ? 0 : rep.witness_table.front().k_min;
    return rep;
}

// All elements of a finite coefficient ring, for exhaustive enumeration.
inline std::vector<AlgElem> all_elements(const AlgPtr& alg) {
    std::vector<AlgElem> out;
    std::vector<uint32_t> v(alg->dim, 0);
    while (true) {
        out.push_back(elem_make(alg, v));
        std::size_t i = 0;
        while (i < alg->dim) {
            if (++v[i] < alg->p) break;
            v[i] = 0;
            ++i;
        }
        if (i == alg->dim) break;
    }
    return out;
}

inline DMReport<AlgElem> dm_search_exhaustive(const AlgPoly& g, const SearchStrategy& strat) {
    DMReport<AlgElem> rep;
    rep.g = g;
    rep.strategy = strat;
    rep.mu_content = mu_ideal(content(g));
    rep.certificate = CertKind::EXHAUSTIVE;
    auto elems = all_elements(g.ring);
    long long total = 1;
    for (int i = 0; i <= strat.deg_bound; ++i) {
        total *= static_cast<long long>(elems.size());
        if (total > strat.budget)
            throw std::invalid_argument("dm_search_exhaustive: candidate count exceeds budget");
    }
    std::vector<std::size_t> idx(strat.deg_bound + 1, 0);
    while (true) {
        std::vector<AlgElem> coeffs;
        for (std::size_t i : idx) coeffs.push_back(elems[i]);
        auto f = poly_make<AlgElem>(g.ring, std::move(coeffs));
        ++rep.candidates;
        if (!f.is_zero()) {
            int k = dm_k_witness(f, g);
            rep.witness_table.push_back({std::move(f), k});
        }
        std::size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < elems.size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    std::stable_sort(rep.witness_table.begin(), rep.witness_table.end(),
                     [](const auto& a, const auto& b) { return a.k_min > b.k_min; });
    rep.dm_lower_bound = rep.witness_table.empty() ? 0 : rep.witness_table.front().k_min;
    return rep;
}

template <class Elem>
DMReport<Elem> dm_search(const RingPoly<Elem>& g, const SearchStrategy& strat) {
    if (strat.kind == SearchKind::Random) return dm_search_random(g, strat);
    if constexpr (std::is_same_v<Elem, AlgElem>) {
        return dm_search_exhaustive(g, strat);
    } else {
        throw std::invalid_argument(
            "dm_search: exhaustive strategy needs a finite (Artinian) coefficient ring");
    }
}

// Sampled check of the polarized identity over k-tuples of random witnesses.
template <class Elem>
struct PolarizedReport {
    int tuple_size = 0;
    int samples = 0;
    int violations = 0;
    std::vector<std::vector<RingPoly<Elem>>> violating_tuples;
};

template <class Elem>
PolarizedReport<Elem> polarized_search(const RingPoly<Elem>& g, int tuple_size,
                                       const SearchStrategy& strat) {
    PolarizedReport<Elem> rep;
    rep.tuple_size = tuple_size;
    rep.samples = strat.samples;
    for (int i = 0; i < strat.samples; ++i) {
        SplitMix rng(strat.seed + static_cast<uint64_t>(i));
        std::vector<RingPoly<Elem>> fs;
        for (int j = 0; j < tuple_size; ++j)
            fs.push_back(random_poly<Elem>(g.ring, rng, strat.deg_bound, strat.coeff_deg_bound));
        if (!polarized_identity(fs, g)) {
            ++rep.violations;
            rep.violating_tuples.push_back(fs);
        }
    }
    return rep;
}

}  // namespace dmk
