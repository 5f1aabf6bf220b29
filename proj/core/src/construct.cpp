#include "dmk/construct.hpp"

namespace dmk {

int min_degree_m(int r, int s, int n) {
    if (s < 1 || n < 0) throw std::invalid_argument("min_degree_m: need s >= 1, n >= 0");
    if (r <= s)
        throw std::invalid_argument("min_degree_m: r <= s, no degree satisfies the inequality");
    for (int m = 0;; ++m)
        if (static_cast<long long>(m + 1) * r > static_cast<long long>(n + m + 1) * s) return m;
}

Thm31Instance thm31_instance(const AlgPtr& A, const AlgPoly& g, const SubIdeal& J, int m) {
    if (g.is_zero()) throw std::invalid_argument("thm31: g is zero");
    Thm31Instance inst;
    inst.algebra = A;
    inst.g = g;
    inst.J = J;
    inst.I = ann(content(g));
    inst.s = socle_dim(A);
    if (!ideal_contains(J, inst.I)) throw std::invalid_argument("thm31: I is not contained in J");
    SubIdeal I_colon_m = colon(inst.I, maximal_ideal(A));
    if (!ideal_contains(I_colon_m, J))
        throw std::invalid_argument("thm31: J is not contained in (I : m)");
    inst.r = static_cast<int>(J.dim() - inst.I.dim());
    if (inst.r <= inst.s)
        throw std::invalid_argument("thm31: dim(J/I) = " + std::to_string(inst.r) +
                                    " does not exceed the socle dimension " +
                                    std::to_string(inst.s));
    inst.m = m;
    long long lhs = static_cast<long long>(m + 1) * inst.r;
    long long rhs = static_cast<long long>(g.deg() + m + 1) * inst.s;
    if (m < 0 || lhs <= rhs)
        throw std::invalid_argument("thm31: degree m = " + std::to_string(m) +
                                    " violates (m+1)r > (n+m+1)s");
    return inst;
}

AlgPoly thm31_construct(const AlgPtr& A, const AlgPoly& g, const SubIdeal& J, int m) {
    Thm31Instance inst = thm31_instance(A, g, J, m);
    int n = g.deg();
    int r = inst.r, s = inst.s;
    PrimeField F(A->p);

    // lift a basis x_1..x_r of J/I
    std::vector<AlgElem> x;
    Subspace W = inst.I.space;
    for (std::size_t row = 0; row < J.space.basis.rows; ++row) {
        std::vector<uint32_t> v(A->dim);
        for (std::size_t c = 0; c < A->dim; ++c) v[c] = J.space.basis.at(row, c);
        if (!contains(W, v)) {
            x.push_back(elem_make(A, v));
            DenseMatrix one(A->p, 1, A->dim);
            for (std::size_t c = 0; c < A->dim; ++c) one.at(0, c) = v[c];
            W = subspace_sum(W, Subspace::from_rows(one));
        }
    }
    if (static_cast<int>(x.size()) != r)
        throw std::logic_error("thm31: lift of J/I basis has wrong size");

    // socle coordinates: a_i x_j lies in the socle since m J ⊆ I kills it
    const Subspace& soc = A->socle_space;
    std::vector<std::size_t> soc_piv(soc.basis.rows);
    for (std::size_t k = 0; k < soc.basis.rows; ++k) {
        std::size_t c = 0;
        while (c < A->dim && soc.basis.at(k, c) == 0) ++c;
        soc_piv[k] = c;
    }
    // c[i][j][k] with 0 <= i <= n, 1 <= j <= r, 1 <= k <= s
    std::vector<std::vector<std::vector<uint32_t>>> cc(
        n + 1, std::vector<std::vector<uint32_t>>(r, std::vector<uint32_t>(s, 0)));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < r; ++j) {
            AlgElem prod = elem_mul(g.coeff(i), x[j]);
            if (!contains(soc, prod.v))
                throw std::logic_error("thm31: a_i x_j is not in the socle");
            for (int k = 0; k < s; ++k) cc[i][j][k] = prod.v[soc_piv[k]];
        }

    // residue-field system: (n+m+1)s equations in (m+1)r variables z_{j,l}
    DenseMatrix sys(A->p, static_cast<std::size_t>(n + m + 1) * s,
                    static_cast<std::size_t>(m + 1) * r);
    for (int d = 0; d <= n + m; ++d)
        for (int k = 0; k < s; ++k) {
            std::size_t row = static_cast<std::size_t>(d) * s + k;
            for (int i = 0; i <= n; ++i) {
                int j = d - i;
                if (j < 0 || j > m) continue;
                for (int l = 0; l < r; ++l) {
                    std::size_t col = static_cast<std::size_t>(j) * r + l;
                    sys.at(row, col) = F.add(sys.at(row, col), cc[i][l][k]);
                }
            }
        }
    Subspace ker = nullspace(sys);
    long long guaranteed = static_cast<long long>(m + 1) * r - static_cast<long long>(n + m + 1) * s;
    if (static_cast<long long>(ker.dim()) < guaranteed || ker.dim() == 0)
        throw std::logic_error("thm31: nullspace smaller than rank-nullity guarantees");

    // first canonical basis vector of the nullspace
    std::vector<AlgElem> coeffs;
    for (int j = 0; j <= m; ++j) {
        AlgElem b = elem_zero(A);
        for (int l = 0; l < r; ++l) {
            uint32_t z = ker.basis.at(0, static_cast<std::size_t>(j) * r + l);
            if (z) b = elem_add(b, elem_scale(z, x[l]));
        }
        coeffs.push_back(b);
    }
    AlgPoly f = poly_make<AlgElem>(A, std::move(coeffs));

    // enforced postconditions
    if (!ideal_contains(J, content(f)))
        throw std::logic_error("thm31: postcondition (a) failed: content(f) not inside J");
    if (!poly_mul(f, g).is_zero())
        throw std::logic_error("thm31: postcondition (b) failed: fg != 0");
    if (ideal_product(content(f), content(g)).is_zero())
        throw std::logic_error("thm31: postcondition (c) failed: c(f)c(g) = 0");
    return f;
}

AlgPoly thm33_construct(const AlgPtr& A, const AlgPoly& g, const std::vector<AlgPoly>& fs) {
    if (!is_gorenstein(A)) throw std::invalid_argument("thm33: algebra is not Gorenstein");
    if (g.is_zero() || fs.empty()) throw std::invalid_argument("thm33: nonzero g and witnesses required");

    std::vector<SubIdeal> cf;
    for (const auto& f : fs) cf.push_back(content(f));
    auto prod_except = [&](std::size_t skip) {
        SubIdeal acc = unit_ideal(A);
        for (std::size_t j = 0; j < cf.size(); ++j)
            if (j != skip) acc = ideal_product(acc, cf[j]);
        return acc;
    };
    SubIdeal P = prod_except(cf.size());
    SubIdeal B = ideal_zero(A);
    for (std::size_t i = 0; i < fs.size(); ++i)
        B = ideal_sum(B, ideal_product(content(poly_mul(fs[i], g)), prod_except(i)));

    SubIdeal W = ideal_product(P, content(g));
    SubIdeal MWB = ideal_sum(ideal_product(maximal_ideal(A), W), B);
    int gap = static_cast<int>(W.dim() - MWB.dim());
    int muP = mu_ideal(P);
    if (gap < muP + 1)
        throw std::invalid_argument("thm33: dim(P c(g)/(m P c(g) + B)) = " + std::to_string(gap) +
                                    " < mu(P) + 1 = " + std::to_string(muP + 1));

    SubIdeal J = ann(MWB);
    QuotientAlg Q = quotient(A, ann(P));

    auto project_poly = [&](const AlgPoly& h) {
        std::vector<AlgElem> cs;
        for (const auto& c : h.coeffs) cs.push_back(Q.project(c));
        return poly_make<AlgElem>(Q.alg, std::move(cs));
    };
    AlgPoly gQ = project_poly(g);
    std::vector<AlgElem> j_rows;
    for (std::size_t rw = 0; rw < J.space.basis.rows; ++rw) {
        std::vector<uint32_t> v(A->dim);
        for (std::size_t c = 0; c < A->dim; ++c) v[c] = J.space.basis.at(rw, c);
        j_rows.push_back(Q.project(elem_make(A, v)));
    }
    SubIdeal JQ = ideal_span(Q.alg, j_rows);

    int rQ = static_cast<int>(JQ.dim() - ann(content(gQ)).dim());
    int sQ = socle_dim(Q.alg);
    int m = min_degree_m(rQ, sQ, gQ.deg());
    AlgPoly fQ = thm31_construct(Q.alg, gQ, JQ, m);

    std::vector<AlgElem> lifted;
    for (const auto& c : fQ.coeffs) lifted.push_back(Q.lift(c));
    AlgPoly h = poly_make<AlgElem>(A, std::move(lifted));

    if (ideal_product(ideal_product(P, content(h)), content(g)).is_zero())
        throw std::logic_error("thm33: P c(h) c(g) = 0 after lifting");
    if (!ideal_product(B, content(h)).is_zero())
        throw std::logic_error("thm33: B c(h) != 0 after lifting");
    if (!ideal_product(content(poly_mul(h, g)), P).is_zero())
        throw std::logic_error("thm33: c(hg) P != 0 after lifting");
    return h;
}

}  // namespace dmk
