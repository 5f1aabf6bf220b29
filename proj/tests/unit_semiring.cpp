// Numerical semigroup rings F_p[[s^a1, ..., s^ak]]: semigroup tables
// against a naive dynamic-programming oracle, truncated series arithmetic,
// ideal value sets, minimal generators, gamma, and integral closure.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <vector>

#include "dmk/semigroup_ring.hpp"
#include "doctest.h"

using namespace dmk;

namespace {

// Oracle: membership in the numerical semigroup generated by gens, by
// dynamic programming over [0, bound).
std::vector<bool> naive_semigroup(const std::vector<int>& gens, int bound) {
    std::vector<bool> in(bound, false);
    in[0] = true;
    for (int d = 1; d < bound; ++d)
        for (int g : gens)
            if (d >= g && in[d - g]) in[d] = true;
    return in;
}

// Oracle: conductor = least c with [c, infinity) inside the semigroup.
int naive_conductor(const std::vector<int>& gens, int bound) {
    auto in = naive_semigroup(gens, bound);
    int c = bound;
    for (int d = bound - 1; d >= 0; --d) {
        if (!in[d]) break;
        c = d;
    }
    return c;
}

TruncatedSeries mono(const RingPtr& R, int d, uint32_t s = 1) {
    return series_monomial(R, d, s);
}

}  // namespace

TEST_CASE("semigroup tables match the naive oracle") {
    struct Case {
        std::vector<int> gens;
        int e, c;
    };
    for (const Case& t : {Case{{3, 4}, 3, 6}, Case{{3, 5}, 3, 8}, Case{{4, 5}, 4, 12},
                          Case{{5, 6}, 5, 20}, Case{{5, 6, 7, 8, 9}, 5, 5},
                          Case{{6, 7}, 6, 30}}) {
        RingPtr R = build_ring(101, t.gens, 80);
        CHECK(R->e == t.e);
        CHECK(R->conductor_c == t.c);
        CHECK(R->conductor_c == naive_conductor(t.gens, 80));
        auto in = naive_semigroup(t.gens, 80);
        for (int d = 0; d < 80; ++d) CHECK(R->in_S(d) == in[d]);
    }
}

TEST_CASE("build_ring validates its arguments") {
    CHECK_THROWS_AS(build_ring(101, {4, 6}, 40), std::invalid_argument);  // gcd != 1
    CHECK_THROWS_AS(build_ring(101, {}, 40), std::invalid_argument);
    CHECK_THROWS_AS(build_ring(91, {3, 4}, 40), std::invalid_argument);  // not prime
}

TEST_CASE("series arithmetic is exact ring arithmetic on the value support") {
    RingPtr R = build_ring(101, {3, 4}, 60);
    TruncatedSeries a = series_add(mono(R, 3), mono(R, 4, 100));  // s^3 - s^4
    TruncatedSeries b = series_add(mono(R, 3), mono(R, 4));       // s^3 + s^4
    TruncatedSeries ab = series_mul(a, b);
    // (s^3 - s^4)(s^3 + s^4) = s^6 - s^8
    CHECK(series_eq(ab, series_sub(mono(R, 6), mono(R, 8))));
    CHECK(series_ord(ab) == 6);
    CHECK(series_ord(series_zero(R)) == kInfOrd);
    // commutativity, distributivity spot checks
    CHECK(series_eq(series_mul(a, b), series_mul(b, a)));
    TruncatedSeries c = mono(R, 7, 5);
    CHECK(series_eq(series_mul(a, series_add(b, c)),
                    series_add(series_mul(a, b), series_mul(a, c))));
    CHECK(series_eq(series_scale(100, a), series_neg(a)));
}

TEST_CASE("monomials outside the semigroup are rejected") {
    RingPtr R = build_ring(101, {3, 4}, 60);
    CHECK_THROWS_AS(series_monomial(R, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(series_monomial(R, 2, 1), std::invalid_argument);
    CHECK_NOTHROW(series_monomial(R, 6, 1));
}

TEST_CASE("ideal value sets and products match hand computation") {
    RingPtr R = build_ring(101, {3, 4}, 80);
    // I = (s^6, s^7) in <3,4>: value set 6 + S union 7 + S = {6,7,9,10,11,...}
    IdealVS I = ideal_span(R, {mono(R, 6), mono(R, 7)});
    auto vs = I.value_set();
    CHECK(vs.count(6) == 1);
    CHECK(vs.count(7) == 1);
    CHECK(vs.count(8) == 0);  // 8 = 6+2 = 7+1 not reachable
    CHECK(vs.count(9) == 1);
    for (int d = 12; d < 30; ++d) CHECK(vs.count(d) == 1);

    // product (s^6,s^7)*(s^6,s^7): orders {12,13,14} and everything >= 15
    IdealVS I2 = ideal_product(I, I);
    auto vs2 = I2.value_set();
    for (int d : {12, 13, 14}) CHECK(vs2.count(d) == 1);
    CHECK(vs2.count(11) == 0);
    CHECK(ideal_eq(I2, ideal_span(R, {mono(R, 12), mono(R, 13), mono(R, 14)})));
}

TEST_CASE("ideal membership distinguishes value-set members from non-members") {
    RingPtr R = build_ring(101, {3, 5}, 80);
    IdealVS I = ideal_span(R, {mono(R, 9), mono(R, 11), mono(R, 13)});
    CHECK(ideal_member(mono(R, 9), I));
    CHECK(ideal_member(series_add(mono(R, 9), mono(R, 14, 2)), I));
    CHECK(!ideal_member(mono(R, 10), I));  // 10 not in the value set
    CHECK(!ideal_member(mono(R, 8), I));
    CHECK(ideal_member(mono(R, 18), I));  // deep in the conductor tail
}

TEST_CASE("mu via minimal generators agrees with dim I - dim mI") {
    RingPtr R = build_ring(101, {3, 4}, 90);
    IdealVS m = maximal_ideal(R);
    for (auto gens : std::vector<std::vector<int>>{
             {6}, {6, 7}, {6, 7, 8}, {9, 10}, {12, 13, 14}, {3, 4}}) {
        std::vector<TruncatedSeries> gs;
        for (int d : gens) gs.push_back(mono(R, d));
        IdealVS I = ideal_span(R, gs);
        IdealVS mI = ideal_product(m, I);
        int mu_dual = I.dim() - mI.dim();  // Nakayama: mu = dim I/mI
        CHECK(mu_ideal(I) == mu_dual);
        CHECK(static_cast<int>(ideal_min_gens(I).size()) == mu_dual);
        // regenerating from the minimal generators gives the ideal back
        CHECK(ideal_eq(I, ideal_span(R, ideal_min_gens(I))));
    }
}

TEST_CASE("gamma and integral closure on the <3,5> fixture") {
    RingPtr R = build_ring(101, {3, 5}, 90);
    IdealVS I = ideal_span(R, {mono(R, 9), mono(R, 11), mono(R, 13)});
    CHECK(mu_ideal(I) == 3);
    CHECK(gamma(I) == std::set<int>{2});
    CHECK(!is_integrally_closed(I));
    IdealVS cl = integral_closure(I);
    CHECK(ideal_contains(cl, I));
    CHECK(is_integrally_closed(cl));
    // the closure adds exactly s^10: the order filtration from 9 onward
    auto vcl = cl.value_set();
    CHECK(vcl.count(10) == 1);
    CHECK(cl.dim() == I.dim() + 1);
    CHECK(ideal_eq(cl, ideal_sum(I, ideal_span(R, {mono(R, 10)}))));
    // closure is idempotent and monotone
    CHECK(ideal_eq(integral_closure(cl), cl));
    // gamma of a closed ideal within the conductor window is full
    IdealVS J = ideal_span(R, {mono(R, 8), mono(R, 9), mono(R, 10)});
    CHECK(is_integrally_closed(J));
    CHECK(gamma(J) == std::set<int>{1, 2});
}

TEST_CASE("insufficient precision raises PrecisionError instead of lying") {
    RingPtr R = build_ring(101, {3, 4}, 14);
    IdealVS I = ideal_span(R, {mono(R, 6), mono(R, 7)});
    // squaring needs window [12, 18) but N = 14
    CHECK_THROWS_AS(ideal_product(I, I), PrecisionError);
    RingPtr R2 = rebuild_at(R, 40);
    IdealVS I2 = ideal_span(R2, {mono(R2, 6), mono(R2, 7)});
    CHECK_NOTHROW(ideal_product(I2, I2));
}

TEST_CASE("rings with distinct descriptors do not mix") {
    RingPtr R1 = build_ring(101, {3, 4}, 60);
    RingPtr R2 = build_ring(101, {3, 5}, 60);
    CHECK_THROWS_AS(series_add(mono(R1, 6), series_monomial(R2, 6)), RingMismatch);
}

TEST_CASE("value sets are stable under precision increase") {
    RingPtr R = build_ring(101, {5, 6, 7, 8, 9}, 60);
    RingPtr Rbig = rebuild_at(R, 120);
    IdealVS I = ideal_span(R, {mono(R, 10), mono(R, 11)});
    IdealVS Ibig = ideal_span(Rbig, {mono(Rbig, 10), mono(Rbig, 11)});
    // value sets agree on the common range [0, 60)
    std::set<int> big_trunc;
    for (int d : Ibig.value_set())
        if (d < 60) big_trunc.insert(d);
    CHECK(I.value_set() == big_trunc);
    CHECK(mu_ideal(I) == mu_ideal(Ibig));
    CHECK(gamma(I) == gamma(Ibig));
}
