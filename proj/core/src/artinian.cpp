#include "dmk/artinian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dmk {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void require_same_alg(const AlgPtr& a, const AlgPtr& b, const char* op) {
    if (a.get() != b.get())
        throw RingMismatch(std::string(op) + ": elements belong to different algebras");
}

std::vector<uint32_t> mul_vec_basis(const ArtinianAlgebra& A, const std::vector<uint32_t>& v,
                                    std::size_t k) {
    PrimeField F(A.p);
    std::vector<uint32_t> out(A.dim, 0);
    for (std::size_t i = 0; i < A.dim; ++i) {
        if (v[i] == 0) continue;
        const auto& prod = A.basis_product(i, k);
        for (std::size_t c = 0; c < A.dim; ++c)
            out[c] = F.add(out[c], F.mul(v[i], prod[c]));
    }
    return out;
}

SubIdeal socle_of(const AlgPtr& A);

}  // namespace

AlgPtr make_algebra(uint32_t p, std::vector<std::string> labels,
                    std::vector<std::vector<uint32_t>> mult_table) {
    PrimeField F(p);
    std::size_t D = labels.size();
    if (D == 0) throw std::invalid_argument("make_algebra: empty basis");
    if (mult_table.size() != D * D)
        throw std::invalid_argument("make_algebra: multiplication table size mismatch");
    for (auto& row : mult_table) {
        if (row.size() != D)
            throw std::invalid_argument("make_algebra: structure constant vector size mismatch");
        for (auto& x : row) x %= p;
    }

    auto A = std::make_shared<ArtinianAlgebra>();
    A->p = p;
    A->dim = D;
    A->labels = std::move(labels);
    A->mult = std::move(mult_table);

    // b_0 is the identity
    for (std::size_t j = 0; j < D; ++j) {
        for (std::size_t c = 0; c < D; ++c) {
            uint32_t want = (c == j) ? 1u : 0u;
            if (A->basis_product(0, j)[c] != want || A->basis_product(j, 0)[c] != want)
                throw std::invalid_argument("make_algebra: b_0 is not the identity");
        }
    }
    // commutativity
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = i + 1; j < D; ++j)
            if (A->basis_product(i, j) != A->basis_product(j, i))
                throw std::invalid_argument("make_algebra: multiplication is not commutative");
    // associativity: all basis triples up to dim 64, seeded random above
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        auto left = mul_vec_basis(*A, A->basis_product(i, j), k);
        auto right = mul_vec_basis(*A, A->basis_product(j, k), i);
        if (left != right)
            throw std::invalid_argument("make_algebra: multiplication is not associative");
    };
    if (D <= 64) {
        for (std::size_t i = 1; i < D; ++i)
            for (std::size_t j = i; j < D; ++j)
                for (std::size_t k = j; k < D; ++k) check_triple(i, j, k);
    } else {
        uint64_t st = 0x5eedULL ^ (D * 0x9e37ULL);
        for (int t = 0; t < 1024; ++t) {
            std::size_t i = splitmix64(st) % D;
            std::size_t j = splitmix64(st) % D;
            std::size_t k = splitmix64(st) % D;
            check_triple(i, j, k);
        }
    }

    // m_space = span of b_1..b_{D-1}
    DenseMatrix mrows(p, D - 1, D);
    for (std::size_t i = 1; i < D; ++i) mrows.at(i - 1, i) = 1;
    A->m_space = Subspace::from_rows(mrows);

    // locality: m^D = 0
    {
        Subspace cur = A->m_space;
        for (std::size_t step = 0; step < D && cur.dim() > 0; ++step) {
            std::vector<std::vector<uint32_t>> rows;
            for (std::size_t r = 0; r < cur.basis.rows; ++r) {
                std::vector<uint32_t> v(D);
                for (std::size_t c = 0; c < D; ++c) v[c] = cur.basis.at(r, c);
                for (std::size_t k = 1; k < D; ++k) rows.push_back(mul_vec_basis(*A, v, k));
            }
            DenseMatrix m(p, rows.size(), D);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < D; ++c) m.at(r, c) = rows[r][c];
            cur = Subspace::from_rows(m);
        }
        if (cur.dim() != 0)
            throw std::invalid_argument("make_algebra: maximal ideal is not nilpotent (not local)");
    }

    A->socle_space = socle_of(A).space;
    return A;
}

AlgElem elem_zero(const AlgPtr& A) { return {A, std::vector<uint32_t>(A->dim, 0)}; }

AlgElem elem_one(const AlgPtr& A) {
    auto e = elem_zero(A);
    e.v[0] = 1;
    return e;
}

AlgElem elem_basis(const AlgPtr& A, std::size_t i) {
    auto e = elem_zero(A);
    e.v.at(i) = 1;
    return e;
}

AlgElem elem_make(const AlgPtr& A, std::vector<uint32_t> v) {
    v.resize(A->dim, 0);
    for (auto& x : v) x %= A->p;
    return {A, std::move(v)};
}

AlgElem elem_add(const AlgElem& a, const AlgElem& b) {
    require_same_alg(a.alg, b.alg, "elem_add");
    PrimeField F(a.alg->p);
    AlgElem out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = F.add(out.v[i], b.v[i]);
    return out;
}

AlgElem elem_neg(const AlgElem& a) {
    PrimeField F(a.alg->p);
    AlgElem out = a;
    for (auto& x : out.v) x = F.neg(x);
    return out;
}

AlgElem elem_sub(const AlgElem& a, const AlgElem& b) { return elem_add(a, elem_neg(b)); }

AlgElem elem_scale(uint32_t k, const AlgElem& a) {
    PrimeField F(a.alg->p);
    AlgElem out = a;
    for (auto& x : out.v) x = F.mul(k % a.alg->p, x);
    return out;
}

AlgElem elem_mul(const AlgElem& a, const AlgElem& b) {
    require_same_alg(a.alg, b.alg, "elem_mul");
    const auto& A = *a.alg;
    PrimeField F(A.p);
    std::vector<uint32_t> out(A.dim, 0);
    for (std::size_t i = 0; i < A.dim; ++i) {
        if (a.v[i] == 0) continue;
        for (std::size_t j = 0; j < A.dim; ++j) {
            if (b.v[j] == 0) continue;
            uint32_t f = F.mul(a.v[i], b.v[j]);
            const auto& prod = A.basis_product(i, j);
            for (std::size_t c = 0; c < A.dim; ++c) out[c] = F.add(out[c], F.mul(f, prod[c]));
        }
    }
    return {a.alg, std::move(out)};
}

bool elem_eq(const AlgElem& a, const AlgElem& b) {
    require_same_alg(a.alg, b.alg, "elem_eq");
    return a.v == b.v;
}

DenseMatrix mult_matrix(const AlgElem& x) {
    const auto& A = *x.alg;
    DenseMatrix M(A.p, A.dim, A.dim);
    for (std::size_t j = 0; j < A.dim; ++j) {
        auto col = mul_vec_basis(A, x.v, j);
        for (std::size_t i = 0; i < A.dim; ++i) M.at(i, j) = col[i];
    }
    return M;
}

bool SubIdeal::is_unit() const { return ideal_member(elem_one(alg), *this); }

SubIdeal ideal_span(const AlgPtr& A, const std::vector<AlgElem>& gens) {
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& g : gens) {
        require_same_alg(A, g.alg, "ideal_span");
        for (std::size_t k = 0; k < A->dim; ++k) rows.push_back(mul_vec_basis(*A, g.v, k));
    }
    DenseMatrix m(A->p, rows.size(), A->dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < A->dim; ++c) m.at(r, c) = rows[r][c];
    return {A, Subspace::from_rows(m)};
}

SubIdeal ideal_zero(const AlgPtr& A) { return {A, Subspace::zero(A->p, A->dim)}; }

SubIdeal unit_ideal(const AlgPtr& A) { return {A, Subspace::full(A->p, A->dim)}; }

SubIdeal maximal_ideal(const AlgPtr& A) { return {A, A->m_space}; }

SubIdeal ideal_product(const SubIdeal& a, const SubIdeal& b) {
    require_same_alg(a.alg, b.alg, "ideal_product");
    const auto& A = *a.alg;
    std::vector<std::vector<uint32_t>> rows;
    for (std::size_t r = 0; r < a.space.basis.rows; ++r) {
        AlgElem x{a.alg, std::vector<uint32_t>(A.dim)};
        for (std::size_t c = 0; c < A.dim; ++c) x.v[c] = a.space.basis.at(r, c);
        for (std::size_t r2 = 0; r2 < b.space.basis.rows; ++r2) {
            AlgElem y{a.alg, std::vector<uint32_t>(A.dim)};
            for (std::size_t c = 0; c < A.dim; ++c) y.v[c] = b.space.basis.at(r2, c);
            rows.push_back(elem_mul(x, y).v);
        }
    }
    DenseMatrix m(A.p, rows.size(), A.dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < A.dim; ++c) m.at(r, c) = rows[r][c];
    return {a.alg, Subspace::from_rows(m)};
}

SubIdeal ideal_sum(const SubIdeal& a, const SubIdeal& b) {
    require_same_alg(a.alg, b.alg, "ideal_sum");
    return {a.alg, subspace_sum(a.space, b.space)};
}

bool ideal_eq(const SubIdeal& a, const SubIdeal& b) {
    require_same_alg(a.alg, b.alg, "ideal_eq");
    return subspace_eq(a.space, b.space);
}

bool ideal_member(const AlgElem& x, const SubIdeal& a) {
    require_same_alg(x.alg, a.alg, "ideal_member");
    return contains(a.space, x.v);
}

bool ideal_contains(const SubIdeal& a, const SubIdeal& b) {
    require_same_alg(a.alg, b.alg, "ideal_contains");
    return contains_subspace(a.space, b.space);
}

namespace {

SubIdeal annihilator_of_space(const AlgPtr& Aptr, const Subspace& s) {
    const auto& A = *Aptr;
    if (s.dim() == 0) return unit_ideal(Aptr);
    DenseMatrix stacked(A.p, s.basis.rows * A.dim, A.dim);
    for (std::size_t r = 0; r < s.basis.rows; ++r) {
        AlgElem x{Aptr, std::vector<uint32_t>(A.dim)};
        for (std::size_t c = 0; c < A.dim; ++c) x.v[c] = s.basis.at(r, c);
        DenseMatrix M = mult_matrix(x);
        for (std::size_t i = 0; i < A.dim; ++i)
            for (std::size_t j = 0; j < A.dim; ++j) stacked.at(r * A.dim + i, j) = M.at(i, j);
    }
    return {Aptr, nullspace(stacked)};
}

SubIdeal socle_of(const AlgPtr& A) { return annihilator_of_space(A, A->m_space); }

}  // namespace

SubIdeal ann(const SubIdeal& a) { return annihilator_of_space(a.alg, a.space); }

SubIdeal colon(const SubIdeal& a, const SubIdeal& b) {
    require_same_alg(a.alg, b.alg, "colon");
    const auto& A = *a.alg;
    if (b.is_zero()) return unit_ideal(a.alg);
    DenseMatrix stacked(A.p, b.space.basis.rows * A.dim, A.dim);
    for (std::size_t r = 0; r < b.space.basis.rows; ++r) {
        AlgElem x{a.alg, std::vector<uint32_t>(A.dim)};
        for (std::size_t c = 0; c < A.dim; ++c) x.v[c] = b.space.basis.at(r, c);
        DenseMatrix M = mult_matrix(x);
        // column j of the stacked block: residue of x*b_j modulo a
        for (std::size_t j = 0; j < A.dim; ++j) {
            std::vector<uint32_t> col(A.dim);
            for (std::size_t i = 0; i < A.dim; ++i) col[i] = M.at(i, j);
            col = reduce_against(a.space, col);
            for (std::size_t i = 0; i < A.dim; ++i) stacked.at(r * A.dim + i, j) = col[i];
        }
    }
    return {a.alg, nullspace(stacked)};
}

int socle_dim(const AlgPtr& A) { return static_cast<int>(A->socle_space.dim()); }

bool is_gorenstein(const AlgPtr& A) { return socle_dim(A) == 1; }

int mu_ideal(const SubIdeal& a) {
    const auto& A = *a.alg;
    std::vector<std::vector<uint32_t>> rows;
    for (std::size_t r = 0; r < a.space.basis.rows; ++r) {
        std::vector<uint32_t> v(A.dim);
        for (std::size_t c = 0; c < A.dim; ++c) v[c] = a.space.basis.at(r, c);
        for (std::size_t k = 1; k < A.dim; ++k) rows.push_back(mul_vec_basis(A, v, k));
    }
    DenseMatrix m(A.p, rows.size(), A.dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < A.dim; ++c) m.at(r, c) = rows[r][c];
    Subspace ma = Subspace::from_rows(m);
    return static_cast<int>(a.space.dim() - ma.dim());
}

bool duality_check(const AlgPtr& A, const SubIdeal& a) {
    if (!is_gorenstein(A)) throw std::invalid_argument("duality_check: algebra is not Gorenstein");
    if (a.is_zero()) throw std::invalid_argument("duality_check: zero ideal");
    SubIdeal i0 = ann(a);
    QuotientAlg Q = quotient(A, i0);
    return socle_dim(Q.alg) == mu_ideal(a);
}

AlgElem QuotientAlg::project(const AlgElem& x) const {
    require_same_alg(base, x.alg, "QuotientAlg::project");
    auto red = reduce_against(ideal.space, x.v);
    std::vector<uint32_t> out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) out[i] = red[keep[i]];
    return {alg, std::move(out)};
}

AlgElem QuotientAlg::lift(const AlgElem& q) const {
    require_same_alg(alg, q.alg, "QuotientAlg::lift");
    std::vector<uint32_t> out(base->dim, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) out[keep[i]] = q.v[i];
    return {base, std::move(out)};
}

QuotientAlg quotient(const AlgPtr& A, const SubIdeal& a) {
    require_same_alg(A, a.alg, "quotient");
    std::vector<bool> pivot(A->dim, false);
    for (std::size_t r = 0; r < a.space.basis.rows; ++r) {
        std::size_t c = 0;
        while (c < A->dim && a.space.basis.at(r, c) == 0) ++c;
        pivot[c] = true;
    }
    if (A->dim > 0 && pivot[0])
        throw std::invalid_argument("quotient: ideal is the unit ideal");
    QuotientAlg Q;
    Q.base = A;
    Q.ideal = a;
    for (std::size_t c = 0; c < A->dim; ++c)
        if (!pivot[c]) Q.keep.push_back(c);
    std::size_t D = Q.keep.size();
    std::vector<std::string> labels(D);
    for (std::size_t i = 0; i < D; ++i) labels[i] = A->labels[Q.keep[i]];
    std::vector<std::vector<uint32_t>> mult(D * D);
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            auto prod = A->basis_product(Q.keep[i], Q.keep[j]);
            auto red = reduce_against(a.space, prod);
            std::vector<uint32_t> row(D);
            for (std::size_t k = 0; k < D; ++k) row[k] = red[Q.keep[k]];
            mult[i * D + j] = std::move(row);
        }
    Q.alg = make_algebra(A->p, std::move(labels), std::move(mult));
    return Q;
}

namespace {

std::string var_name(std::size_t nvars, std::size_t i) {
    static const char* nm[] = {"x", "y", "z", "w"};
    if (nvars <= 4) return nm[i];
    return "x" + std::to_string(i + 1);
}

std::string mono_label(std::size_t nvars, const std::vector<int>& exp) {
    std::string out;
    for (std::size_t v = 0; v < nvars; ++v) {
        if (exp[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(nvars, v);
        if (exp[v] > 1) out += "^" + std::to_string(exp[v]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

AlgPtr monomial_algebra(uint32_t p, std::size_t nvars,
                        const std::vector<std::vector<int>>& relations) {
    if (nvars == 0) throw std::invalid_argument("monomial_algebra: need at least one variable");
    for (const auto& r : relations)
        if (r.size() != nvars)
            throw std::invalid_argument("monomial_algebra: relation arity mismatch");
    // finiteness: every variable needs a pure-power relation
    std::vector<int> bound(nvars, -1);
    for (const auto& r : relations) {
        int support = 0, var = -1;
        for (std::size_t v = 0; v < nvars; ++v)
            if (r[v] > 0) {
                ++support;
                var = static_cast<int>(v);
            }
        if (support == 1 && (bound[var] < 0 || r[var] < bound[var])) bound[var] = r[var];
    }
    for (std::size_t v = 0; v < nvars; ++v)
        if (bound[v] < 0)
            throw std::invalid_argument("monomial_algebra: staircase is not cofinite (variable " +
                                        var_name(nvars, v) + " has no pure power relation)");

    auto divisible = [&](const std::vector<int>& exp) {
        for (const auto& r : relations) {
            bool div = true;
            for (std::size_t v = 0; v < nvars; ++v)
                if (exp[v] < r[v]) {
                    div = false;
                    break;
                }
            if (div) return true;
        }
        return false;
    };

    std::vector<std::vector<int>> basis;
    std::vector<int> exp(nvars, 0);
    // enumerate the box under the pure-power bounds
    while (true) {
        if (!divisible(exp)) basis.push_back(exp);
        std::size_t v = 0;
        while (v < nvars) {
            if (++exp[v] < bound[v]) break;
            exp[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    });

    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::size_t D = basis.size();
    std::vector<std::string> labels(D);
    for (std::size_t i = 0; i < D; ++i) labels[i] = mono_label(nvars, basis[i]);
    std::vector<std::vector<uint32_t>> mult(D * D, std::vector<uint32_t>(D, 0));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            std::vector<int> sum(nvars);
            for (std::size_t v = 0; v < nvars; ++v) sum[v] = basis[i][v] + basis[j][v];
            if (!divisible(sum)) mult[i * D + j][index.at(sum)] = 1;
        }
    return make_algebra(p, std::move(labels), std::move(mult));
}

AlgElem SemigroupQuotient::reduce(const TruncatedSeries& x) const {
    if (!ring->same_ring(*x.ring)) throw RingMismatch("SemigroupQuotient::reduce: wrong ring");
    std::vector<uint32_t> v(small_degs.size(), 0);
    for (std::size_t i = 0; i < small_degs.size(); ++i) v[i] = x.coeffs[small_degs[i]];
    v = reduce_against(q_small, v);
    std::vector<uint32_t> out(keep_degs.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < small_degs.size(); ++i)
        if (k < keep_degs.size() && small_degs[i] == keep_degs[k]) out[k++] = v[i];
    return {alg, std::move(out)};
}

SemigroupQuotient from_quotient(const RingPtr& ring, const IdealVS& q) {
    if (q.is_zero())
        throw std::invalid_argument("from_quotient: ideal is not m-primary (zero ideal)");
    if (q.min_order == 0) throw std::invalid_argument("from_quotient: ideal is the unit ideal");
    if (!ring->same_ring(*q.ring)) throw RingMismatch("from_quotient: ring mismatch");
    const auto& R = *ring;
    int cutoff = q.min_order + R.conductor_c;
    if (cutoff > R.N) throw PrecisionError("from_quotient: insufficient truncation");

    SemigroupQuotient Q;
    Q.ring = ring;
    Q.q = q;
    for (int d = 0; d < cutoff; ++d)
        if (R.S_table[d]) Q.small_degs.push_back(d);
    // q on the small coordinates: its window rows (everything at degree >= cutoff is in q)
    DenseMatrix rows(R.p, q.window.rows, Q.small_degs.size());
    std::vector<int> small_coord(cutoff, -1);
    for (std::size_t i = 0; i < Q.small_degs.size(); ++i) small_coord[Q.small_degs[i]] = (int)i;
    for (std::size_t r = 0; r < q.window.rows; ++r)
        for (std::size_t c = 0; c < q.window_degs.size(); ++c)
            rows.at(r, small_coord[q.window_degs[c]]) = q.window.at(r, c);
    Q.q_small = Subspace::from_rows(rows);

    std::vector<bool> pivot(Q.small_degs.size(), false);
    for (std::size_t r = 0; r < Q.q_small.basis.rows; ++r) {
        std::size_t c = 0;
        while (c < Q.small_degs.size() && Q.q_small.basis.at(r, c) == 0) ++c;
        pivot[c] = true;
    }
    for (std::size_t i = 0; i < Q.small_degs.size(); ++i)
        if (!pivot[i]) Q.keep_degs.push_back(Q.small_degs[i]);

    std::size_t D = Q.keep_degs.size();
    std::vector<std::string> labels(D);
    for (std::size_t i = 0; i < D; ++i)
        labels[i] = Q.keep_degs[i] == 0 ? "1" : "s^" + std::to_string(Q.keep_degs[i]);
    std::vector<std::vector<uint32_t>> mult(D * D, std::vector<uint32_t>(D, 0));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            int d = Q.keep_degs[i] + Q.keep_degs[j];
            if (d >= cutoff) continue;  // inside q
            std::vector<uint32_t> v(Q.small_degs.size(), 0);
            v[small_coord[d]] = 1;
            v = reduce_against(Q.q_small, v);
            std::size_t k = 0;
            for (std::size_t c = 0; c < Q.small_degs.size(); ++c)
                if (k < D && Q.small_degs[c] == Q.keep_degs[k]) mult[i * D + j][k++] = v[c];
        }
    Q.alg = make_algebra(R.p, std::move(labels), std::move(mult));
    return Q;
}

}  // namespace dmk
