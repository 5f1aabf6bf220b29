#include "dmk/semigroup_ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dmk {

namespace {

std::string deg_str(int d) { return "s^" + std::to_string(d); }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (!a || !b || !a->same_ring(*b))
        throw RingMismatch(std::string(op) + ": elements belong to different rings");
}

}  // namespace

RingPtr build_ring(uint32_t p, std::vector<int> gens, int N) {
    PrimeField F(p);  // validates primality
    if (gens.empty()) throw std::invalid_argument("build_ring: empty generator list");
    for (int a : gens)
        if (a <= 0) throw std::invalid_argument("build_ring: generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    int g = 0;
    for (int a : gens) g = std::gcd(g, a);
    if (g != 1)
        throw std::invalid_argument("build_ring: gcd of generators is " + std::to_string(g) +
                                    ", must be 1");

    auto desc = std::make_shared<SemigroupRingDesc>();
    desc->p = p;
    desc->gens = gens;
    desc->e = gens.front();

    // Apery-set relaxation: minimal semigroup element in each class mod e.
    int e = desc->e;
    std::vector<long long> apery(e, std::numeric_limits<long long>::max());
    apery[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < e; ++r) {
            if (apery[r] == std::numeric_limits<long long>::max()) continue;
            for (int a : gens) {
                long long cand = apery[r] + a;
                int r2 = static_cast<int>(cand % e);
                if (cand < apery[r2]) {
                    apery[r2] = cand;
                    changed = true;
                }
            }
        }
    }
    long long mx = *std::max_element(apery.begin(), apery.end());
    desc->conductor_c = static_cast<int>(mx - e + 1);

    if (N <= desc->conductor_c)
        throw std::invalid_argument("build_ring: truncation level " + std::to_string(N) +
                                    " must exceed the conductor " +
                                    std::to_string(desc->conductor_c));
    desc->N = N;
    desc->S_table.assign(N, false);
    desc->S_table[0] = true;
    for (int d = 1; d < N; ++d)
        for (int a : gens)
            if (d - a >= 0 && desc->S_table[d - a]) {
                desc->S_table[d] = true;
                break;
            }
    desc->coord.assign(N, -1);
    for (int d = 0; d < N; ++d)
        if (desc->S_table[d]) {
            desc->coord[d] = static_cast<int>(desc->s_degrees.size());
            desc->s_degrees.push_back(d);
        }
    return desc;
}

RingPtr rebuild_at(const RingPtr& ring, int new_N) {
    return build_ring(ring->p, ring->gens, new_N);
}

TruncatedSeries series_make(const RingPtr& ring, std::vector<uint32_t> coeffs) {
    coeffs.resize(ring->N, 0);
    TruncatedSeries s;
    s.ring = ring;
    for (int d = 0; d < ring->N; ++d) {
        uint32_t c = coeffs[d] % ring->p;
        coeffs[d] = c;
        if (c != 0) {
            if (!ring->S_table[d])
                throw std::invalid_argument("series_make: exponent " + std::to_string(d) +
                                            " is not in the semigroup");
            if (s.ord == kInfOrd) s.ord = d;
        }
    }
    s.coeffs = std::move(coeffs);
    return s;
}

TruncatedSeries series_zero(const RingPtr& ring) {
    TruncatedSeries s;
    s.ring = ring;
    s.coeffs.assign(ring->N, 0);
    return s;
}

TruncatedSeries series_monomial(const RingPtr& ring, int d, uint32_t scalar) {
    scalar %= ring->p;
    if (scalar == 0) return series_zero(ring);
    if (d < 0 || d >= ring->N)
        throw PrecisionError("series_monomial: degree " + std::to_string(d) +
                             " outside truncation [0," + std::to_string(ring->N) + ")");
    if (!ring->S_table[d])
        throw std::invalid_argument("series_monomial: exponent " + std::to_string(d) +
                                    " is not in the semigroup");
    TruncatedSeries s = series_zero(ring);
    s.coeffs[d] = scalar;
    s.ord = d;
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a.ring, b.ring, "series_add");
    PrimeField F(a.ring->p);
    TruncatedSeries s = series_zero(a.ring);
    for (int d = 0; d < a.ring->N; ++d) {
        s.coeffs[d] = F.add(a.coeffs[d], b.coeffs[d]);
        if (s.coeffs[d] && s.ord == kInfOrd) s.ord = d;
    }
    return s;
}

TruncatedSeries series_neg(const TruncatedSeries& a) {
    PrimeField F(a.ring->p);
    TruncatedSeries s = a;
    for (auto& c : s.coeffs) c = F.neg(c);
    return s;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, series_neg(b));
}

TruncatedSeries series_scale(uint32_t k, const TruncatedSeries& a) {
    PrimeField F(a.ring->p);
    k %= a.ring->p;
    TruncatedSeries s = series_zero(a.ring);
    if (k == 0) return s;
    for (int d = 0; d < a.ring->N; ++d) {
        s.coeffs[d] = F.mul(k, a.coeffs[d]);
        if (s.coeffs[d] && s.ord == kInfOrd) s.ord = d;
    }
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a.ring, b.ring, "series_mul");
    TruncatedSeries s = series_zero(a.ring);
    if (a.is_zero() || b.is_zero()) return s;
    PrimeField F(a.ring->p);
    int N = a.ring->N;
    for (int i = a.ord; i < N; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = b.ord; i + j < N; ++j) {
            if (b.coeffs[j] == 0) continue;
            s.coeffs[i + j] = F.add(s.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    for (int d = 0; d < N; ++d)
        if (s.coeffs[d]) {
            s.ord = d;
            break;
        }
    return s;
}

int series_ord(const TruncatedSeries& a) { return a.ord; }

bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a.ring, b.ring, "series_eq");
    return a.coeffs == b.coeffs;
}

// ---------------------------------------------------------------------------
// IdealVS
// ---------------------------------------------------------------------------

namespace {

// Degrees of S in [n, n+c), given the ring.
std::vector<int> window_degrees(const SemigroupRingDesc& R, int n) {
    std::vector<int> degs;
    for (int d = n; d < n + R.conductor_c && d < R.N; ++d)
        if (R.S_table[d]) degs.push_back(d);
    return degs;
}

// Project a series onto the window coordinates (degrees >= n+c dropped).
std::vector<uint32_t> window_project(const TruncatedSeries& x, const std::vector<int>& degs) {
    std::vector<uint32_t> row(degs.size(), 0);
    for (std::size_t i = 0; i < degs.size(); ++i) row[i] = x.coeffs[degs[i]];
    return row;
}

// Series supported on window coordinates only.
TruncatedSeries window_lift(const RingPtr& ring, const std::vector<int>& degs,
                            const DenseMatrix& m, std::size_t row) {
    TruncatedSeries s = series_zero(ring);
    for (std::size_t i = 0; i < degs.size(); ++i) {
        s.coeffs[degs[i]] = m.at(row, i);
        if (m.at(row, i) && s.ord == kInfOrd) s.ord = degs[i];
    }
    return s;
}

IdealVS span_window(const RingPtr& ring, int n, const std::vector<TruncatedSeries>& elems) {
    IdealVS I;
    I.ring = ring;
    I.min_order = n;
    I.window_degs = window_degrees(*ring, n);
    int cutoff = n + ring->conductor_c;
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& g : elems) {
        if (g.is_zero() || g.ord >= cutoff) continue;
        // module closure inside the window: g * s^d for d in S, order < n+c
        for (int d = 0; d < cutoff - g.ord; ++d) {
            if (!ring->S_table[d]) continue;
            TruncatedSeries shifted = series_zero(ring);
            for (int k = g.ord; k + d < ring->N; ++k)
                shifted.coeffs[k + d] = g.coeffs[k];
            rows.push_back(window_project(shifted, I.window_degs));
        }
    }
    DenseMatrix m(ring->p, rows.size(), I.window_degs.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < I.window_degs.size(); ++c) m.at(r, c) = rows[r][c];
    I.window = rref(m);
    return I;
}

std::vector<std::size_t> pivot_cols(const DenseMatrix& m) {
    std::vector<std::size_t> piv(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        std::size_t c = 0;
        while (c < m.cols && m.at(r, c) == 0) ++c;
        piv[r] = c;
    }
    return piv;
}

// Product without the caller-facing sufficiency rule; only requires the
// result window to be representable.
IdealVS ideal_product_impl(const IdealVS& a, const IdealVS& b) {
    const RingPtr& ring = a.ring;
    if (a.is_zero() || b.is_zero()) return ideal_zero(ring);
    int n = a.min_order + b.min_order;
    if (n + ring->conductor_c + 1 > ring->N)
        throw PrecisionError("ideal_product: truncation N=" + std::to_string(ring->N) +
                             " cannot represent an ideal of order " + std::to_string(n));
    auto ga = ideal_min_gens(a);
    auto gb = ideal_min_gens(b);
    std::vector<TruncatedSeries> prods;
    prods.reserve(ga.size() * gb.size());
    for (const auto& x : ga)
        for (const auto& y : gb) prods.push_back(series_mul(x, y));
    return span_window(ring, n, prods);
}

}  // namespace

std::set<int> IdealVS::value_set() const {
    std::set<int> vs;
    if (is_zero()) return vs;
    auto piv = pivot_cols(window);
    for (auto c : piv) vs.insert(window_degs[c]);
    for (int d = min_order + ring->conductor_c; d < ring->N; ++d)
        if (ring->S_table[d]) vs.insert(d);
    return vs;
}

int IdealVS::sufficiency_margin() const {
    if (is_zero()) return ring->N;
    return ring->N - (min_order + ring->conductor_c);
}

std::size_t IdealVS::dim() const {
    if (is_zero()) return 0;
    std::size_t tail = 0;
    for (int d = min_order + ring->conductor_c; d < ring->N; ++d)
        if (ring->S_table[d]) ++tail;
    return window.rows + tail;
}

Subspace IdealVS::space() const {
    std::size_t ambient = ring->s_degrees.size();
    if (is_zero()) return Subspace::zero(ring->p, ambient);
    std::size_t tail_start = 0;
    int cutoff = min_order + ring->conductor_c;
    DenseMatrix rows(ring->p, dim(), ambient);
    for (std::size_t r = 0; r < window.rows; ++r)
        for (std::size_t c = 0; c < window_degs.size(); ++c)
            rows.at(r, ring->coord[window_degs[c]]) = window.at(r, c);
    std::size_t r = window.rows;
    for (int d = cutoff; d < ring->N; ++d)
        if (ring->S_table[d]) rows.at(r++, ring->coord[d]) = 1;
    (void)tail_start;
    return Subspace::from_rows(rows);
}

IdealVS ideal_zero(const RingPtr& ring) {
    IdealVS I;
    I.ring = ring;
    I.window = DenseMatrix(ring->p, 0, 0);
    return I;
}

IdealVS ideal_span(const RingPtr& ring, const std::vector<TruncatedSeries>& gens) {
    int n = kInfOrd;
    for (const auto& g : gens) {
        if (g.ring) require_same_ring(ring, g.ring, "ideal_span");
        n = std::min(n, g.ord);
    }
    if (n == kInfOrd) return ideal_zero(ring);
    if (n + ring->conductor_c + 1 > ring->N)
        throw PrecisionError("ideal_span: truncation N=" + std::to_string(ring->N) +
                             " too small for an ideal of order " + std::to_string(n) +
                             " (need >= " + std::to_string(n + ring->conductor_c + 1) + ")");
    return span_window(ring, n, gens);
}

IdealVS unit_ideal(const RingPtr& ring) {
    return ideal_span(ring, {series_monomial(ring, 0)});
}

IdealVS maximal_ideal(const RingPtr& ring) {
    std::vector<TruncatedSeries> gens;
    for (int a : ring->gens) gens.push_back(series_monomial(ring, a));
    return ideal_span(ring, gens);
}

std::vector<TruncatedSeries> ideal_min_gens(const IdealVS& a) {
    if (a.is_zero()) return {};
    const RingPtr& ring = a.ring;
    int n = a.min_order;
    int cutoff = n + ring->conductor_c;
    // V = window projection of m·a: window rows times s^d, d in S, 0 < d < c.
    std::vector<std::vector<uint32_t>> vrows;
    for (std::size_t r = 0; r < a.window.rows; ++r) {
        TruncatedSeries u = window_lift(ring, a.window_degs, a.window, r);
        for (int d = 1; d < ring->conductor_c; ++d) {
            if (!ring->S_table[d]) continue;
            TruncatedSeries shifted = series_zero(ring);
            for (int k = u.ord; k + d < ring->N; ++k) shifted.coeffs[k + d] = u.coeffs[k];
            auto row = window_project(shifted, a.window_degs);
            if (std::any_of(row.begin(), row.end(), [](uint32_t x) { return x != 0; }))
                vrows.push_back(std::move(row));
        }
    }
    DenseMatrix vm(ring->p, vrows.size(), a.window_degs.size());
    for (std::size_t r = 0; r < vrows.size(); ++r)
        for (std::size_t c = 0; c < a.window_degs.size(); ++c) vm.at(r, c) = vrows[r][c];
    Subspace W = Subspace::from_rows(vm);

    std::vector<TruncatedSeries> gens;
    for (std::size_t r = 0; r < a.window.rows; ++r) {
        std::vector<uint32_t> row(a.window_degs.size());
        for (std::size_t c = 0; c < a.window_degs.size(); ++c) row[c] = a.window.at(r, c);
        if (!contains(W, row)) {
            gens.push_back(window_lift(ring, a.window_degs, a.window, r));
            DenseMatrix one(ring->p, 1, row.size());
            for (std::size_t c = 0; c < row.size(); ++c) one.at(0, c) = row[c];
            W = subspace_sum(W, Subspace::from_rows(one));
        }
    }
    (void)cutoff;
    return gens;
}

IdealVS ideal_product(const IdealVS& a, const IdealVS& b) {
    require_same_ring(a.ring, b.ring, "ideal_product");
    if (a.is_zero() || b.is_zero()) return ideal_zero(a.ring);
    const auto& R = *a.ring;
    // Sufficiency rule: certify the product down to its conductor tail.
    if (a.min_order + b.min_order + R.conductor_c + R.e + 1 > R.N)
        throw PrecisionError(
            "ideal_product: N=" + std::to_string(R.N) + " < " +
            std::to_string(a.min_order + b.min_order + R.conductor_c + R.e + 1) +
            " required by the sufficiency rule");
    return ideal_product_impl(a, b);
}

IdealVS ideal_sum(const IdealVS& a, const IdealVS& b) {
    require_same_ring(a.ring, b.ring, "ideal_sum");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const RingPtr& ring = a.ring;
    int n = std::min(a.min_order, b.min_order);
    std::vector<TruncatedSeries> elems;
    for (std::size_t r = 0; r < a.window.rows; ++r)
        elems.push_back(window_lift(ring, a.window_degs, a.window, r));
    for (std::size_t r = 0; r < b.window.rows; ++r)
        elems.push_back(window_lift(ring, b.window_degs, b.window, r));
    return span_window(ring, n, elems);
}

bool ideal_eq(const IdealVS& a, const IdealVS& b) {
    require_same_ring(a.ring, b.ring, "ideal_eq");
    return a.min_order == b.min_order && a.window == b.window;
}

bool ideal_member(const TruncatedSeries& x, const IdealVS& a) {
    require_same_ring(x.ring, a.ring, "ideal_member");
    if (x.is_zero()) return true;
    if (a.is_zero()) return false;
    if (x.ord < a.min_order) return false;
    int cutoff = a.min_order + a.ring->conductor_c;
    if (x.ord >= cutoff) return true;  // tail completeness
    auto row = window_project(x, a.window_degs);
    Subspace w;
    w.ambient_dim = a.window_degs.size();
    w.basis = a.window;
    return contains(w, row);
}

bool ideal_contains(const IdealVS& a, const IdealVS& b) {
    require_same_ring(a.ring, b.ring, "ideal_contains");
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    for (std::size_t r = 0; r < b.window.rows; ++r)
        if (!ideal_member(window_lift(b.ring, b.window_degs, b.window, r), a)) return false;
    // b's tail monomials of order below a's cutoff
    int lo = b.min_order + b.ring->conductor_c;
    int hi = a.min_order + a.ring->conductor_c;
    for (int d = lo; d < hi && d < a.ring->N; ++d)
        if (a.ring->S_table[d] && !ideal_member(series_monomial(a.ring, d), a)) return false;
    return true;
}

IdealVS integral_closure(const IdealVS& a) {
    if (a.is_zero()) return a;
    const auto& R = *a.ring;
    if (a.min_order + R.conductor_c + 1 > R.N)
        throw PrecisionError("integral_closure: insufficient truncation");
    std::vector<TruncatedSeries> monos;
    for (int d = a.min_order; d < a.min_order + R.conductor_c; ++d)
        if (R.S_table[d]) monos.push_back(series_monomial(a.ring, d));
    return span_window(a.ring, a.min_order, monos);
}

bool is_integrally_closed(const IdealVS& a) {
    if (a.is_zero()) return true;
    return a.window.rows == a.window_degs.size();
}

std::set<int> gamma(const IdealVS& a) {
    if (a.is_zero()) throw std::invalid_argument("gamma: zero ideal");
    auto vs = a.value_set();
    std::set<int> g;
    for (int i = 1; i < a.ring->e; ++i)
        if (vs.count(a.min_order + i)) g.insert(i);
    return g;
}

int mu_ideal(const IdealVS& a) {
    if (a.is_zero()) return 0;
    const auto& R = *a.ring;
    if (a.min_order + R.conductor_c + R.e + 1 > R.N)
        throw PrecisionError("mu_ideal: insufficient truncation");
    return static_cast<int>(ideal_min_gens(a).size());
}

}  // namespace dmk
