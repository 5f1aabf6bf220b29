// Executable forms of the two existence results over Artinian local
// algebras: the annihilating polynomial with prescribed content (built from
// a residue-field linear system), and the separating polynomial obtained by
// passing to a Gorenstein quotient.
#pragma once

#include "dmk/content.hpp"

namespace dmk {

// Smallest m >= 0 with (m+1) r > (n+m+1) s. Throws when r <= s.
int min_degree_m(int r, int s, int n);

struct Thm31Instance {
    AlgPtr algebra;
    AlgPoly g;
    SubIdeal J;
    SubIdeal I;  // ann(content(g))
    int r = 0;   // dim(J/I)
    int s = 0;   // socle dimension
    int m = 0;   // target degree
};

// Validates the preconditions and caches the derived data; throws
// std::invalid_argument naming the violated condition otherwise.
Thm31Instance thm31_instance(const AlgPtr& A, const AlgPoly& g, const SubIdeal& J, int m);

// Returns f of degree <= m with content(f) ⊆ J, f g = 0 and
// content(f) content(g) != 0; all three are re-verified before returning.
AlgPoly thm31_construct(const AlgPtr& A, const AlgPoly& g, const SubIdeal& J, int m);

// Separating polynomial h for g against f_1..f_n over a Gorenstein algebra:
// with P = prod content(f_i) and B = sum_i content(f_i g) prod_{j!=i}
// content(f_j), requires dim(P c(g) / (m P c(g) + B)) >= mu(P) + 1 and
// returns h with P c(h) c(g) != 0, B c(h) = 0 and c(hg) P = 0.
AlgPoly thm33_construct(const AlgPtr& A, const AlgPoly& g, const std::vector<AlgPoly>& fs);

}  // namespace dmk
