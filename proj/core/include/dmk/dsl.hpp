// Input language for rings and polynomials:
//   ring R = semigroup(3,4);        power-series semigroup ring
//   ring A = quotient(R, (s^9));    Artinian quotient by an m-primary ideal
//   ring B = monomial(x^2, y^2);    monomial complete intersection style algebra
//   g = s^7 + s^6*t + s^8*t^2;      polynomial over the current ring
// Statements are semicolon-terminated; the most recent ring declaration is
// the ring of subsequent assignments. Errors carry line/column positions.
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dmk/content.hpp"

namespace dmk {

class DslError : public std::runtime_error {
public:
    int line, col;
    DslError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

enum class DslRingKind { Semigroup, Quotient, Monomial };

struct DslRing {
    DslRingKind kind;
    RingPtr ring;                             // Semigroup; base ring for Quotient
    std::shared_ptr<SemigroupQuotient> quot;  // Quotient only
    AlgPtr alg;                               // Quotient / Monomial
};

using DslPoly = std::variant<SeriesPoly, AlgPoly>;

struct DslProgram {
    std::map<std::string, DslRing> rings;
    std::vector<std::pair<std::string, DslPoly>> assigns;  // source order
    std::string last_ring;

    const DslPoly* find(const std::string& name) const;
};

// Parse and evaluate a whole program. prec < 0 chooses the precision
// automatically: large enough that contents, their pairwise/powers products
// up to exponent deg_t + 1, and product contents are all certified exact.
DslProgram dsl_eval(const std::string& text, uint32_t p, int prec);

// Canonical rendering (used for the normalized-inputs field of reports).
std::string dsl_format(const SeriesPoly& f);
std::string dsl_format(const AlgPoly& f);
std::string dsl_format(const DslPoly& f);

}  // namespace dmk
