// Numerical semigroup rings R = F_p[[s^{a_1},...,s^{a_k}]] inside the DVR
// overring F_p[[s]], truncated at level N.
//
// Ideals are canonical subspaces. Internally an ideal of minimal order n is
// stored as its "window" span on the degrees S ∩ [n, n+c) together with the
// implicit tail: an ideal of order n contains every element of order >= n+c,
// because g·s^c·F_p[[s]] = s^{n+c}·F_p[[s]] lies in the ideal for any g of
// order n. The full subspace over S ∩ [0, N) can be materialized on demand.
//
// Operations refuse to run when the truncation level N cannot certify the
// answer (PrecisionError), so every verdict is exact.
#pragma once

#include <limits>
#include <memory>
#include <set>
#include <vector>

#include "dmk/linalg.hpp"

namespace dmk {

inline constexpr int kInfOrd = std::numeric_limits<int>::max();

struct SemigroupRingDesc {
    uint32_t p = 101;
    std::vector<int> gens;       // sorted, gcd 1
    int N = 0;                   // truncation level (exclusive)
    int e = 0;                   // multiplicity = min(S \ {0})
    int conductor_c = 0;         // least c with [c, inf) ⊆ S
    std::vector<bool> S_table;   // membership of S on [0, N)
    std::vector<int> s_degrees;  // S ∩ [0, N), increasing
    std::vector<int> coord;      // degree -> index into s_degrees, or -1

    bool in_S(int d) const { return d >= 0 && d < N && S_table[d]; }
    bool same_ring(const SemigroupRingDesc& o) const {
        return p == o.p && gens == o.gens && N == o.N;
    }
};

using RingPtr = std::shared_ptr<const SemigroupRingDesc>;

// Builds the ring description. Throws std::invalid_argument when the
// generators have gcd != 1 or N is not above the conductor.
RingPtr build_ring(uint32_t p, std::vector<int> gens, int N);

// Rebuild the same semigroup ring at a different truncation level.
RingPtr rebuild_at(const RingPtr& ring, int new_N);

// An element of F_p[[s]]/s^N with support inside S.
struct TruncatedSeries {
    RingPtr ring;
    std::vector<uint32_t> coeffs;  // size N, coeffs[d] = 0 for d not in S
    int ord = kInfOrd;             // min degree with nonzero coeff

    bool is_zero() const { return ord == kInfOrd; }
};

TruncatedSeries series_make(const RingPtr& ring, std::vector<uint32_t> coeffs);
TruncatedSeries series_zero(const RingPtr& ring);
// scalar * s^d; throws if d is not in the semigroup.
TruncatedSeries series_monomial(const RingPtr& ring, int d, uint32_t scalar = 1);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_neg(const TruncatedSeries& a);
TruncatedSeries series_scale(uint32_t k, const TruncatedSeries& a);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
int series_ord(const TruncatedSeries& a);
bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b);

// An ideal of R as a canonical subspace with cached minimal order.
struct IdealVS {
    RingPtr ring;
    int min_order = kInfOrd;       // kInfOrd for the zero ideal
    std::vector<int> window_degs;  // S ∩ [min_order, min_order + c)
    DenseMatrix window;            // rref rows over window_degs coordinates

    bool is_zero() const { return min_order == kInfOrd; }
    // All orders realized by nonzero elements, inside [min_order, N).
    std::set<int> value_set() const;
    int sufficiency_margin() const;
    std::size_t dim() const;  // dimension inside the truncation
    // Full canonical subspace over the coordinates S ∩ [0, N).
    Subspace space() const;
};

IdealVS ideal_span(const RingPtr& ring, const std::vector<TruncatedSeries>& gens);
IdealVS ideal_zero(const RingPtr& ring);
IdealVS unit_ideal(const RingPtr& ring);
IdealVS maximal_ideal(const RingPtr& ring);

IdealVS ideal_product(const IdealVS& a, const IdealVS& b);
IdealVS ideal_sum(const IdealVS& a, const IdealVS& b);
bool ideal_eq(const IdealVS& a, const IdealVS& b);
bool ideal_member(const TruncatedSeries& x, const IdealVS& a);
bool ideal_contains(const IdealVS& a, const IdealVS& b);

// Minimal R-module generators (Nakayama lifts); size is mu_ideal(a).
std::vector<TruncatedSeries> ideal_min_gens(const IdealVS& a);

// Closure in the DVR overring: all monomials s^d, d in S, d >= min_order.
IdealVS integral_closure(const IdealVS& a);
bool is_integrally_closed(const IdealVS& a);

// { i : 1 <= i < e, min_order + i realized as an order in a }.
std::set<int> gamma(const IdealVS& a);

// dim(a / m·a); mu(0) = 0.
int mu_ideal(const IdealVS& a);

}  // namespace dmk
