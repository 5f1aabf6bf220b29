// Content ideals and the k-th power identity
//   c(fg) c(f)^{k-1} = c(f)^k c(g)
// over both coefficient rings, with the worked small cases verified against
// hand computation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "dmk/content.hpp"
#include "dmk/search.hpp"
#include "doctest.h"

using namespace dmk;

namespace {

TruncatedSeries mono(const RingPtr& R, int d, uint32_t s = 1) {
    return series_monomial(R, d, s);
}

SeriesPoly spoly(const RingPtr& R, std::vector<TruncatedSeries> cs) {
    return poly_make<TruncatedSeries>(R, std::move(cs));
}

}  // namespace

TEST_CASE("polynomial arithmetic: degree, product, shift") {
    RingPtr R = build_ring(101, {3, 4}, 90);
    SeriesPoly f = spoly(R, {mono(R, 6), series_neg(mono(R, 7))});  // s^6 - s^7 t
    SeriesPoly g = spoly(R, {mono(R, 6), mono(R, 7), mono(R, 8)});
    CHECK(f.deg() == 1);
    CHECK(g.deg() == 2);
    SeriesPoly fg = poly_mul(f, g);
    CHECK(fg.deg() == 3);
    // (s^6 - s^7 t)(s^6 + s^7 t + s^8 t^2) = s^12 - s^15 t^3
    CHECK(poly_eq(fg, poly_add(spoly(R, {mono(R, 12)}),
                               poly_shift(spoly(R, {mono(R, 15, 100)}), 3))));
    CHECK(poly_eq(poly_mul(f, g), poly_mul(g, f)));
    CHECK(poly_shift(f, 2).deg() == 3);
    CHECK(poly_mul(f, poly_zero<TruncatedSeries>(R)).is_zero());
}

TEST_CASE("content of the fixture polynomials") {
    RingPtr R = build_ring(101, {3, 4}, 90);
    SeriesPoly g = spoly(R, {mono(R, 7), mono(R, 6), mono(R, 8)});
    IdealVS cg = content(g);
    CHECK(mu_ideal(cg) == 3);
    CHECK(cg.min_order == 6);
    CHECK(ideal_eq(cg, ideal_span(R, {mono(R, 6), mono(R, 7), mono(R, 8)})));
}

TEST_CASE("the hand-verified strict failure at k = 2") {
    // In <3,4>: f = s^6 - s^7 t against g' = s^6 + s^7 t + s^8 t^2:
    // c(fg')c(f) = (s^18, s^19) is strictly inside c(f)^2 c(g') =
    // (s^18, s^19, s^20), and the identity first holds at k = 3.
    RingPtr R = build_ring(101, {3, 4}, 90);
    SeriesPoly f = spoly(R, {mono(R, 6), mono(R, 7, 100)});
    SeriesPoly gp = spoly(R, {mono(R, 6), mono(R, 7), mono(R, 8)});
    IdealVS lhs = ideal_product(content(poly_mul(f, gp)), content(f));
    IdealVS rhs = ideal_product(ideal_pow(content(f), 2), content(gp));
    CHECK(ideal_eq(lhs, ideal_span(R, {mono(R, 18), mono(R, 19)})));
    CHECK(ideal_eq(rhs, ideal_span(R, {mono(R, 18), mono(R, 19), mono(R, 20)})));
    CHECK(ideal_contains(rhs, lhs));
    CHECK(!ideal_eq(lhs, rhs));
    CHECK(!dm_identity(f, gp, 2));
    CHECK(dm_identity(f, gp, 3));
    CHECK(dm_k_witness(f, gp) == 3);
}

TEST_CASE("the identity always holds at k = deg(g) + 1 (sampled)") {
    RingPtr R = build_ring(101, {3, 5}, 120);
    SplitMix rng(42);
    for (int i = 0; i < 60; ++i) {
        SeriesPoly f = random_poly<TruncatedSeries>(R, rng, 4, -1);
        SeriesPoly g = random_poly<TruncatedSeries>(R, rng, 3, -1);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(dm_identity(f, g, g.deg() + 1));
        int k = dm_k_witness(f, g);
        CHECK(k <= std::min(g.deg() + 1, mu_ideal(content(g))));
        // monotonicity: once it holds it keeps holding
        for (int k2 = k; k2 <= g.deg() + 2; ++k2) CHECK(dm_identity(f, g, k2));
        for (int k2 = 1; k2 < k; ++k2) CHECK(!dm_identity(f, g, k2));
    }
}

TEST_CASE("closure containment and quotient monotonicity (sampled)") {
    RingPtr R = build_ring(101, {4, 5}, 140);
    SplitMix rng(7);
    for (int i = 0; i < 40; ++i) {
        SeriesPoly f = random_poly<TruncatedSeries>(R, rng, 3, -1);
        SeriesPoly g = random_poly<TruncatedSeries>(R, rng, 3, -1);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(closure_containment_check(f, g));
        TruncatedSeries h = mono(R, 8);
        for (int k = 1; k <= g.deg() + 1; ++k)
            CHECK(quotient_monotonicity_check(f, g, ideal_span(R, {h}), k));
    }
}

TEST_CASE("polarized identity reduces to the plain one for a single polynomial") {
    RingPtr R = build_ring(101, {3, 4}, 120);
    SplitMix rng(11);
    for (int i = 0; i < 30; ++i) {
        SeriesPoly f = random_poly<TruncatedSeries>(R, rng, 3, -1);
        SeriesPoly g = random_poly<TruncatedSeries>(R, rng, 2, -1);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(polarized_identity<TruncatedSeries>({f}, g) == dm_identity(f, g, 1));
    }
}

TEST_CASE("gap concatenation splits contents blockwise") {
    RingPtr R = build_ring(101, {3, 4}, 200);
    SplitMix rng(5);
    for (int i = 0; i < 15; ++i) {
        SeriesPoly f1 = random_poly<TruncatedSeries>(R, rng, 2, -1);
        SeriesPoly f2 = random_poly<TruncatedSeries>(R, rng, 2, -1);
        SeriesPoly g = random_poly<TruncatedSeries>(R, rng, 2, -1);
        if (f1.is_zero() || f2.is_zero() || g.is_zero()) continue;
        TruncatedSeries w1 = mono(R, 6), w2 = mono(R, 7);
        SeriesPoly F = gap_concat<TruncatedSeries>({f1, f2}, {w1, w2}, g);
        IdealVS cf = ideal_sum(ideal_product(ideal_span(R, {w1}), content(f1)),
                               ideal_product(ideal_span(R, {w2}), content(f2)));
        IdealVS cfg = ideal_sum(
            ideal_product(ideal_span(R, {w1}), content(poly_mul(f1, g))),
            ideal_product(ideal_span(R, {w2}), content(poly_mul(f2, g))));
        CHECK(ideal_eq(content(F), cf));
        CHECK(ideal_eq(content(poly_mul(F, g)), cfg));
    }
}

TEST_CASE("gamma transfer checks hold on samples") {
    RingPtr R = build_ring(101, {3, 4}, 140);
    SplitMix rng(13);
    for (int i = 0; i < 25; ++i) {
        SeriesPoly f = random_poly<TruncatedSeries>(R, rng, 2, -1);
        SeriesPoly g = random_poly<TruncatedSeries>(R, rng, 2, -1);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(gamma_union_check(f, g, 1));
        CHECK(gamma_b1_check(f, g, 1));
    }
}

TEST_CASE("content calculus over an Artinian coefficient algebra") {
    AlgPtr A = monomial_algebra(101, 2, {{2, 0}, {0, 2}});
    auto slot = [&](const std::string& name) {
        for (std::size_t i = 0; i < A->labels.size(); ++i)
            if (A->labels[i] == name) return i;
        FAIL("missing label");
        return std::size_t{0};
    };
    AlgElem x = elem_basis(A, slot("x"));
    AlgElem y = elem_basis(A, slot("y"));
    AlgPoly g = poly_make<AlgElem>(A, {x, y});
    AlgPoly f = poly_make<AlgElem>(A, {y, elem_neg(x)});
    // fg = xy + (y^2 - x^2)t - xy t^2 = xy - xy t^2 here
    AlgPoly fg = poly_mul(f, g);
    CHECK(fg.deg() == 2);
    CHECK(!content(fg).is_zero());
    CHECK(dm_identity(f, g, g.deg() + 1));
    CHECK(dm_k_witness(f, g) <= 2);
}

TEST_CASE("degenerate inputs raise invalid_argument") {
    RingPtr R = build_ring(101, {3, 4}, 90);
    SeriesPoly z = poly_zero<TruncatedSeries>(R);
    SeriesPoly g = spoly(R, {mono(R, 6)});
    CHECK_THROWS_AS(dm_k_witness(z, g), std::invalid_argument);
    CHECK_THROWS_AS(dm_identity(g, g, 0), std::invalid_argument);
    CHECK_THROWS_AS(polarized_identity<TruncatedSeries>({}, g), std::invalid_argument);
    CHECK_THROWS_AS(ideal_pow(content(g), 0), std::invalid_argument);
}
