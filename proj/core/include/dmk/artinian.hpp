// Finite-dimensional local F_p-algebras given by structure constants:
// ideals, annihilators, colons, socle, minimal generators, Gorenstein
// duality, quotients, and Artinian quotients of semigroup rings.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dmk/linalg.hpp"
#include "dmk/semigroup_ring.hpp"

namespace dmk {

struct ArtinianAlgebra;
using AlgPtr = std::shared_ptr<const ArtinianAlgebra>;

// Local Artinian algebra with basis b_0 = 1, b_1, ..., b_{D-1} adapted to
// the degree filtration. Structure constants are validated at construction:
// identity, commutativity, associativity (all basis triples for D <= 64,
// seeded random triples above), nilpotency of the maximal ideal.
struct ArtinianAlgebra {
    uint32_t p = 101;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    // mult[i * dim + j] = coordinates of b_i * b_j
    std::vector<std::vector<uint32_t>> mult;
    Subspace m_space;      // span of b_1, ..., b_{D-1}
    Subspace socle_space;  // (0 : m)

    const std::vector<uint32_t>& basis_product(std::size_t i, std::size_t j) const {
        return mult[i * dim + j];
    }
};

AlgPtr make_algebra(uint32_t p, std::vector<std::string> labels,
                    std::vector<std::vector<uint32_t>> mult_table);

struct AlgElem {
    AlgPtr alg;
    std::vector<uint32_t> v;

    bool is_zero() const {
        for (uint32_t x : v)
            if (x) return false;
        return true;
    }
};

AlgElem elem_zero(const AlgPtr& A);
AlgElem elem_one(const AlgPtr& A);
AlgElem elem_basis(const AlgPtr& A, std::size_t i);
AlgElem elem_make(const AlgPtr& A, std::vector<uint32_t> v);
AlgElem elem_add(const AlgElem& a, const AlgElem& b);
AlgElem elem_sub(const AlgElem& a, const AlgElem& b);
AlgElem elem_neg(const AlgElem& a);
AlgElem elem_scale(uint32_t k, const AlgElem& a);
AlgElem elem_mul(const AlgElem& a, const AlgElem& b);
bool elem_eq(const AlgElem& a, const AlgElem& b);

// D x D matrix of multiplication by x (column j = x * b_j).
DenseMatrix mult_matrix(const AlgElem& x);

struct SubIdeal {
    AlgPtr alg;
    Subspace space;

    bool is_zero() const { return space.dim() == 0; }
    bool is_unit() const;
    std::size_t dim() const { return space.dim(); }
};

SubIdeal ideal_span(const AlgPtr& A, const std::vector<AlgElem>& gens);
SubIdeal ideal_zero(const AlgPtr& A);
SubIdeal unit_ideal(const AlgPtr& A);
SubIdeal maximal_ideal(const AlgPtr& A);

SubIdeal ideal_product(const SubIdeal& a, const SubIdeal& b);
SubIdeal ideal_sum(const SubIdeal& a, const SubIdeal& b);
bool ideal_eq(const SubIdeal& a, const SubIdeal& b);
bool ideal_member(const AlgElem& x, const SubIdeal& a);
bool ideal_contains(const SubIdeal& a, const SubIdeal& b);

// ann(a) = (0 : a); colon(a, b) = (a : b).
SubIdeal ann(const SubIdeal& a);
SubIdeal colon(const SubIdeal& a, const SubIdeal& b);

int socle_dim(const AlgPtr& A);
bool is_gorenstein(const AlgPtr& A);
int mu_ideal(const SubIdeal& a);  // dim(a) - dim(m a)

// Remark-style duality check on a Gorenstein algebra:
// dim soc(A / (0 : a)) == mu(a). Throws for non-Gorenstein A or a = 0.
bool duality_check(const AlgPtr& A, const SubIdeal& a);

// Quotient A/a with projection and a canonical linear section.
struct QuotientAlg {
    AlgPtr base;
    SubIdeal ideal;
    AlgPtr alg;                    // the quotient algebra
    std::vector<std::size_t> keep;  // base coordinates forming the section

    AlgElem project(const AlgElem& x) const;
    AlgElem lift(const AlgElem& q) const;  // canonical section
};

QuotientAlg quotient(const AlgPtr& A, const SubIdeal& a);

// F_p[x_1..x_r] modulo a cofinite monomial-staircase ideal; each relation
// is the exponent vector of a staircase generator. Basis is the monomial
// complement, ordered by total degree then lexicographically.
AlgPtr monomial_algebra(uint32_t p, std::size_t nvars,
                        const std::vector<std::vector<int>>& relations);

// Artinian quotient R/q of a semigroup ring by an m-primary ideal, with the
// coefficient reduction map. Basis classes are the monomials s^d outside
// the staircase of q (general q gets the filtration-adapted complement).
struct SemigroupQuotient {
    RingPtr ring;
    IdealVS q;
    AlgPtr alg;
    std::vector<int> keep_degs;  // degree of each basis class
    Subspace q_small;            // q on the coordinates S ∩ [0, cutoff)
    std::vector<int> small_degs;

    AlgElem reduce(const TruncatedSeries& x) const;
};

SemigroupQuotient from_quotient(const RingPtr& ring, const IdealVS& q);

}  // namespace dmk
