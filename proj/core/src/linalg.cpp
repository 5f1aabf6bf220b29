#include "dmk/linalg.hpp"

namespace dmk {

bool PrimeField::is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t modulus) : p(modulus) {
    if (!is_prime(modulus))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(modulus) +
                                    " is not prime");
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p;
    uint32_t base = a % p;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a % p == 0) throw std::domain_error("PrimeField::inv of zero");
    return pow(a, p - 2);
}

DenseMatrix rref(const DenseMatrix& m) {
    PrimeField F(m.p);
    DenseMatrix w = m;
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < w.cols && pivot_row < w.rows; ++col) {
        // leftmost nonzero, first qualifying row
        std::size_t sel = pivot_row;
        while (sel < w.rows && w.at(sel, col) == 0) ++sel;
        if (sel == w.rows) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < w.cols; ++c)
                std::swap(w.at(sel, c), w.at(pivot_row, c));
        uint32_t piv_inv = F.inv(w.at(pivot_row, col));
        for (std::size_t c = col; c < w.cols; ++c)
            w.at(pivot_row, c) = F.mul(w.at(pivot_row, c), piv_inv);
        for (std::size_t r = 0; r < w.rows; ++r) {
            if (r == pivot_row) continue;
            uint32_t f = w.at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < w.cols; ++c)
                w.at(r, c) = F.sub(w.at(r, c), F.mul(f, w.at(pivot_row, c)));
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    DenseMatrix out(m.p, pivot_row, m.cols);
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            out.at(r, c) = w.at(r, c);
    return out;
}

Subspace Subspace::zero(uint32_t p, std::size_t ambient) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = DenseMatrix(p, 0, ambient);
    return s;
}

Subspace Subspace::from_rows(const DenseMatrix& rows) {
    Subspace s;
    s.ambient_dim = rows.cols;
    s.basis = rref(rows);
    return s;
}

Subspace Subspace::full(uint32_t p, std::size_t ambient) {
    DenseMatrix id(p, ambient, ambient);
    for (std::size_t i = 0; i < ambient; ++i) id.at(i, i) = 1;
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = id;
    return s;
}

Subspace nullspace(const DenseMatrix& m) {
    PrimeField F(m.p);
    DenseMatrix r = rref(m);
    std::vector<std::size_t> pivot_col_of_row(r.rows);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t i = 0; i < r.rows; ++i) {
        std::size_t c = 0;
        while (c < r.cols && r.at(i, c) == 0) ++c;
        pivot_col_of_row[i] = c;
        is_pivot[c] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    DenseMatrix rows(m.p, free_cols.size(), m.cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        rows.at(k, fc) = 1;
        for (std::size_t i = 0; i < r.rows; ++i)
            rows.at(k, pivot_col_of_row[i]) = F.neg(r.at(i, fc));
    }
    return Subspace::from_rows(rows);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim || a.basis.p != b.basis.p)
        throw std::invalid_argument("subspace_sum: mismatched ambient spaces");
    DenseMatrix rows(a.basis.p, a.basis.rows + b.basis.rows, a.ambient_dim);
    for (std::size_t r = 0; r < a.basis.rows; ++r)
        for (std::size_t c = 0; c < a.ambient_dim; ++c)
            rows.at(r, c) = a.basis.at(r, c);
    for (std::size_t r = 0; r < b.basis.rows; ++r)
        for (std::size_t c = 0; c < a.ambient_dim; ++c)
            rows.at(a.basis.rows + r, c) = b.basis.at(r, c);
    return Subspace::from_rows(rows);
}

bool subspace_eq(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("subspace_eq: mismatched ambient spaces");
    return a.basis == b.basis;
}

std::vector<uint32_t> reduce_against(const Subspace& a, std::vector<uint32_t> v) {
    if (v.size() != a.ambient_dim)
        throw std::invalid_argument("reduce_against: vector length mismatch");
    PrimeField F(a.basis.p);
    for (std::size_t i = 0; i < a.basis.rows; ++i) {
        std::size_t c = 0;
        while (c < a.ambient_dim && a.basis.at(i, c) == 0) ++c;
        if (c == a.ambient_dim) continue;
        uint32_t f = v[c];
        if (f == 0) continue;
        for (std::size_t j = c; j < a.ambient_dim; ++j)
            v[j] = F.sub(v[j], F.mul(f, a.basis.at(i, j)));
    }
    return v;
}

bool contains(const Subspace& a, const std::vector<uint32_t>& v) {
    auto r = reduce_against(a, v);
    for (uint32_t x : r)
        if (x) return false;
    return true;
}

bool contains_subspace(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("contains_subspace: mismatched ambient spaces");
    for (std::size_t r = 0; r < b.basis.rows; ++r) {
        std::vector<uint32_t> v(b.ambient_dim);
        for (std::size_t c = 0; c < b.ambient_dim; ++c) v[c] = b.basis.at(r, c);
        if (!contains(a, v)) return false;
    }
    return true;
}

}  // namespace dmk
