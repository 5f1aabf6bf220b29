// Exact dense linear algebra over a prime field F_p.
//
// Everything here is value-semantic and immutable after construction.
// Subspaces are kept in reduced row echelon form, so set equality of
// subspaces is structural equality of their basis matrices.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dmk {

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Residue field F_p with a runtime modulus. Values are plain uint32_t
// residues in [0, p); this struct just carries the arithmetic.
struct PrimeField {
    uint32_t p;

    explicit PrimeField(uint32_t modulus);

    static bool is_prime(uint32_t n);

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;
    uint32_t reduce(int64_t x) const {
        int64_t r = x % static_cast<int64_t>(p);
        return static_cast<uint32_t>(r < 0 ? r + p : r);
    }
};

// Row-major dense matrix over F_p.
struct DenseMatrix {
    uint32_t p = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<uint32_t> a;  // rows * cols entries, reduced mod p

    DenseMatrix() = default;
    DenseMatrix(uint32_t p_, std::size_t r, std::size_t c)
        : p(p_), rows(r), cols(c), a(r * c, 0) {}

    uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const DenseMatrix& o) const = default;
};

// Unique reduced row echelon form of m. Zero rows are dropped, so the
// result has rank(m) rows. Pivots: leftmost nonzero column, first
// qualifying row.
DenseMatrix rref(const DenseMatrix& m);

// A linear subspace of F_p^ambient, basis stored as a zero-row-free rref
// matrix. Equal subspaces have identical basis matrices.
struct Subspace {
    std::size_t ambient_dim = 0;
    DenseMatrix basis;  // rref, basis.cols == ambient_dim

    static Subspace zero(uint32_t p, std::size_t ambient);
    static Subspace from_rows(const DenseMatrix& rows);
    static Subspace full(uint32_t p, std::size_t ambient);

    std::size_t dim() const { return basis.rows; }
    bool operator==(const Subspace& o) const = default;
};

// Kernel of m, as a canonical subspace of F_p^cols.
Subspace nullspace(const DenseMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_eq(const Subspace& a, const Subspace& b);

// Membership test; v.size() must equal a.ambient_dim.
bool contains(const Subspace& a, const std::vector<uint32_t>& v);

// True iff every basis row of b lies in a.
bool contains_subspace(const Subspace& a, const Subspace& b);

// Reduce v against the basis of a; the result has zeros in every pivot
// column of a. v is a member of a iff the residual is zero.
std::vector<uint32_t> reduce_against(const Subspace& a, std::vector<uint32_t> v);

}  // namespace dmk
