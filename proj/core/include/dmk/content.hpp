// Polynomials over a coefficient ring (semigroup-ring or Artinian), the
// content-ideal calculus, Dedekind-Mertens and polarized identity checks,
// and the gap-exponent concatenation construction.
#pragma once

#include <vector>

#include "dmk/artinian.hpp"
#include "dmk/semigroup_ring.hpp"

namespace dmk {

template <class Elem>
struct RingTraits;

template <>
struct RingTraits<TruncatedSeries> {
    using Handle = RingPtr;
    using Ideal = IdealVS;
    static Handle handle(const TruncatedSeries& x) { return x.ring; }
    static TruncatedSeries zero(const Handle& h) { return series_zero(h); }
    static TruncatedSeries one(const Handle& h) { return series_monomial(h, 0); }
    static TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
        return series_add(a, b);
    }
    static TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
        return series_mul(a, b);
    }
    static bool same_handle(const Handle& a, const Handle& b) { return a->same_ring(*b); }
};

template <>
struct RingTraits<AlgElem> {
    using Handle = AlgPtr;
    using Ideal = SubIdeal;
    static Handle handle(const AlgElem& x) { return x.alg; }
    static AlgElem zero(const Handle& h) { return elem_zero(h); }
    static AlgElem one(const Handle& h) { return elem_one(h); }
    static AlgElem add(const AlgElem& a, const AlgElem& b) { return elem_add(a, b); }
    static AlgElem mul(const AlgElem& a, const AlgElem& b) { return elem_mul(a, b); }
    static bool same_handle(const Handle& a, const Handle& b) { return a.get() == b.get(); }
};

// Polynomial in t over the coefficient ring; trailing zero coefficients are
// trimmed so deg() is the honest degree (-1 for the zero polynomial).
template <class Elem>
struct RingPoly {
    using Traits = RingTraits<Elem>;
    typename Traits::Handle ring;
    std::vector<Elem> coeffs;

    int deg() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Elem coeff(int i) const {
        if (i < 0 || i > deg()) return Traits::zero(ring);
        return coeffs[i];
    }
};

template <class Elem>
RingPoly<Elem> poly_make(const typename RingTraits<Elem>::Handle& h, std::vector<Elem> coeffs) {
    for (const auto& c : coeffs)
        if (!RingTraits<Elem>::same_handle(h, RingTraits<Elem>::handle(c)))
            throw RingMismatch("poly_make: coefficient from a different ring");
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return {h, std::move(coeffs)};
}

template <class Elem>
RingPoly<Elem> poly_zero(const typename RingTraits<Elem>::Handle& h) {
    return {h, {}};
}

template <class Elem>
RingPoly<Elem> poly_add(const RingPoly<Elem>& f, const RingPoly<Elem>& g) {
    using T = RingTraits<Elem>;
    if (!T::same_handle(f.ring, g.ring)) throw RingMismatch("poly_add: ring mismatch");
    std::vector<Elem> out;
    int d = std::max(f.deg(), g.deg());
    for (int i = 0; i <= d; ++i) out.push_back(T::add(f.coeff(i), g.coeff(i)));
    return poly_make<Elem>(f.ring, std::move(out));
}

template <class Elem>
RingPoly<Elem> poly_mul(const RingPoly<Elem>& f, const RingPoly<Elem>& g) {
    using T = RingTraits<Elem>;
    if (!T::same_handle(f.ring, g.ring)) throw RingMismatch("poly_mul: ring mismatch");
    if (f.is_zero() || g.is_zero()) return poly_zero<Elem>(f.ring);
    std::vector<Elem> out(f.deg() + g.deg() + 1, T::zero(f.ring));
    for (int i = 0; i <= f.deg(); ++i)
        for (int j = 0; j <= g.deg(); ++j)
            out[i + j] = T::add(out[i + j], T::mul(f.coeffs[i], g.coeffs[j]));
    return poly_make<Elem>(f.ring, std::move(out));
}

// t-degree shift: f * t^k.
template <class Elem>
RingPoly<Elem> poly_shift(const RingPoly<Elem>& f, int k) {
    if (f.is_zero()) return f;
    std::vector<Elem> out(f.coeffs.size() + k, RingTraits<Elem>::zero(f.ring));
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) out[i + k] = f.coeffs[i];
    return poly_make<Elem>(f.ring, std::move(out));
}

template <class Elem>
bool poly_eq(const RingPoly<Elem>& f, const RingPoly<Elem>& g) {
    if (f.deg() != g.deg()) return false;
    for (int i = 0; i <= f.deg(); ++i) {
        const Elem& a = f.coeffs[i];
        const Elem& b = g.coeffs[i];
        if constexpr (std::is_same_v<Elem, TruncatedSeries>) {
            if (!series_eq(a, b)) return false;
        } else {
            if (!elem_eq(a, b)) return false;
        }
    }
    return true;
}

// Content ideal: span of the coefficients.
template <class Elem>
typename RingTraits<Elem>::Ideal content(const RingPoly<Elem>& f) {
    return ideal_span(f.ring, f.coeffs);
}

template <class Ideal>
Ideal ideal_pow(const Ideal& a, int k) {
    if (k < 0) throw std::invalid_argument("ideal_pow: negative exponent");
    Ideal r = a;
    for (int i = 1; i < k; ++i) r = ideal_product(r, a);
    if (k == 0) throw std::invalid_argument("ideal_pow: zeroth power not represented");
    return r;
}

// c(fg) c(f)^{k-1} == c(f)^k c(g), exactly.
template <class Elem>
bool dm_identity(const RingPoly<Elem>& f, const RingPoly<Elem>& g, int k) {
    if (k < 1) throw std::invalid_argument("dm_identity: k must be positive");
    auto cf = content(f);
    auto cg = content(g);
    auto cfg = content(poly_mul(f, g));
    auto lhs = (k == 1) ? cfg : ideal_product(cfg, ideal_pow(cf, k - 1));
    auto rhs = ideal_product(ideal_pow(cf, k), cg);
    return ideal_eq(lhs, rhs);
}

// Smallest k with dm_identity(f, g, k); bounded by min(deg g + 1, mu(c(g))).
template <class Elem>
int dm_k_witness(const RingPoly<Elem>& f, const RingPoly<Elem>& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("dm_k_witness: zero polynomial");
    int bound = std::min(g.deg() + 1, mu_ideal(content(g)));
    for (int k = 1; k <= bound; ++k)
        if (dm_identity(f, g, k)) return k;
    throw std::logic_error("dm_k_witness: identity failed at its guaranteed bound");
}

// Multi-polynomial identity:
//   sum_i c(f_i g) prod_{j != i} c(f_j) == prod_j c(f_j) * c(g).
template <class Elem>
bool polarized_identity(const std::vector<RingPoly<Elem>>& fs, const RingPoly<Elem>& g) {
    using Ideal = typename RingTraits<Elem>::Ideal;
    if (fs.empty()) throw std::invalid_argument("polarized_identity: empty tuple");
    std::size_t k = fs.size();
    std::vector<Ideal> cf;
    cf.reserve(k);
    for (const auto& f : fs) cf.push_back(content(f));

    auto prod_except = [&](std::size_t skip) {
        Ideal acc = unit_ideal(g.ring);
        for (std::size_t j = 0; j < k; ++j)
            if (j != skip) acc = ideal_product(acc, cf[j]);
        return acc;
    };

    Ideal lhs = ideal_zero(g.ring);
    for (std::size_t i = 0; i < k; ++i) {
        auto cfg = content(poly_mul(fs[i], g));
        lhs = ideal_sum(lhs, ideal_product(cfg, prod_except(i)));
    }
    Ideal rhs = ideal_product(prod_except(k), content(g));
    return ideal_eq(lhs, rhs);
}

// Recursive gap exponents: N_1 = max(deg f_1, deg f_1 g) + 1,
// N_i = max(deg f_i, deg f_i g) + N_{i-1} + 1.
template <class Elem>
std::vector<int> gap_exponents(const std::vector<RingPoly<Elem>>& fs, const RingPoly<Elem>& g) {
    if (fs.empty() || g.is_zero())
        throw std::invalid_argument("gap_exponents: nonzero inputs required");
    std::vector<int> N;
    int prev = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_zero()) throw std::invalid_argument("gap_exponents: zero polynomial");
        int d = std::max(fs[i].deg(), poly_mul(fs[i], g).deg());
        N.push_back(d + prev + 1);
        prev = N.back();
    }
    return N;
}

// f = f_1 a_1 + sum_{i>=2} f_i a_i t^{N_{i-1}}; the blocks of coefficients
// do not overlap, so c(f) = sum a_i c(f_i) and c(fg) = sum a_i c(f_i g).
template <class Elem>
RingPoly<Elem> gap_concat(const std::vector<RingPoly<Elem>>& fs, const std::vector<Elem>& weights,
                          const RingPoly<Elem>& g) {
    using T = RingTraits<Elem>;
    if (fs.size() != weights.size())
        throw std::invalid_argument("gap_concat: weights/polynomials size mismatch");
    for (const auto& w : weights)
        if (w.is_zero()) throw std::invalid_argument("gap_concat: zero weight");
    auto N = gap_exponents(fs, g);
    RingPoly<Elem> f = poly_zero<Elem>(g.ring);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<Elem> scaled;
        for (const auto& c : fs[i].coeffs) scaled.push_back(T::mul(weights[i], c));
        auto block = poly_make<Elem>(g.ring, std::move(scaled));
        f = poly_add(f, i == 0 ? block : poly_shift(block, N[i - 1]));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Semigroup-ring-specific checks
// ---------------------------------------------------------------------------

using SeriesPoly = RingPoly<TruncatedSeries>;
using AlgPoly = RingPoly<AlgElem>;

// c(f)c(g) ⊆ closure(c(fg)); holds for all f, g.
inline bool closure_containment_check(const SeriesPoly& f, const SeriesPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("closure_containment_check: zero polynomial");
    auto prod = ideal_product(content(f), content(g));
    return ideal_contains(integral_closure(content(poly_mul(f, g))), prod);
}

// dm_identity(f, g, k) in R implies the same identity for the images in R/q.
inline bool quotient_monotonicity_check(const SeriesPoly& f, const SeriesPoly& g,
                                        const IdealVS& q, int k) {
    if (!dm_identity(f, g, k)) return true;
    SemigroupQuotient Q = from_quotient(f.ring, q);
    auto reduce_poly = [&](const SeriesPoly& h) {
        std::vector<AlgElem> cs;
        for (const auto& c : h.coeffs) cs.push_back(Q.reduce(c));
        return poly_make<AlgElem>(Q.alg, std::move(cs));
    };
    return dm_identity(reduce_poly(f), reduce_poly(g), k);
}

// Gamma transfer: if {1..m} misses gamma(c(f)) and {1..m} ⊆ gamma(c(g)),
// then {1..m} ⊆ gamma(c(fg)).
inline bool gamma_union_check(const SeriesPoly& f, const SeriesPoly& g, int m) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("gamma_union_check: zero polynomial");
    int e = f.ring->e;
    if (m < 1 || m >= e) throw std::invalid_argument("gamma_union_check: m out of range");
    auto gf = gamma(content(f));
    auto gg = gamma(content(g));
    bool hyp = true;
    for (int i = 1; i <= m; ++i) {
        if (gf.count(i)) hyp = false;
        if (!gg.count(i)) hyp = false;
    }
    if (!hyp) return true;
    auto gfg = gamma(content(poly_mul(f, g)));
    for (int i = 1; i <= m; ++i)
        if (!gfg.count(i)) return false;
    return true;
}

// Rearranged-coefficient variant: if {1..m} ⊆ gamma(c(f)) and m+1 is not in
// gamma(c(f)), then {1..m+1} meets gamma(c(fg)).
inline bool gamma_b1_check(const SeriesPoly& f, const SeriesPoly& g, int m) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("gamma_b1_check: zero polynomial");
    int e = f.ring->e;
    if (m < 1 || m >= e - 1) throw std::invalid_argument("gamma_b1_check: m out of range");
    auto gf = gamma(content(f));
    bool hyp = !gf.count(m + 1);
    for (int i = 1; i <= m; ++i)
        if (!gf.count(i)) hyp = false;
    if (!hyp) return true;
    auto gfg = gamma(content(poly_mul(f, g)));
    for (int i = 1; i <= m + 1; ++i)
        if (gfg.count(i)) return true;
    return false;
}

}  // namespace dmk
