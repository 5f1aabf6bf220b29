// Acceptance gate: one line per criterion, exact equality throughout.
// Exit code is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "dmk/construct.hpp"
#include "dmk/repro.hpp"
#include "dmk/search.hpp"

using namespace dmk;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, bool ok, long long ms) {
    std::printf("criterion %d: %s — %s (%lld ms)\n", n, ok ? "PASS" : "FAIL",
                what.c_str(), ms);
    if (!ok) ++failures;
}

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool report_green(const ReproReport& r) {
    if (r.checks.empty()) return false;
    for (const auto& c : r.checks)
        if (!c.ok) return false;
    return r.verdict() != Verdict::FAIL;
}

AlgElem var(const AlgPtr& A, const std::string& name) {
    for (std::size_t i = 0; i < A->labels.size(); ++i)
        if (A->labels[i] == name) return elem_basis(A, i);
    throw std::runtime_error("missing variable " + name);
}

bool valid_witness(const AlgPoly& f, const AlgPoly& g, const SubIdeal& J) {
    return !f.is_zero() && poly_mul(f, g).is_zero() &&
           ideal_contains(J, content(f)) &&
           !ideal_product(content(f), content(g)).is_zero();
}

// All elements of a low-dimensional subspace over a tiny prime.
std::vector<AlgElem> all_members(const SubIdeal& I) {
    const AlgPtr& A = I.alg;
    PrimeField F(A->p);
    std::size_t total = 1;
    for (std::size_t i = 0; i < I.dim(); ++i) total *= A->p;
    std::vector<AlgElem> out;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<uint32_t> v(A->dim, 0);
        std::size_t c = code;
        for (std::size_t i = 0; i < I.dim(); ++i) {
            uint32_t coef = static_cast<uint32_t>(c % A->p);
            c /= A->p;
            for (std::size_t j = 0; j < A->dim; ++j)
                v[j] = F.add(v[j], F.mul(coef, I.space.basis.at(i, j)));
        }
        out.push_back(elem_make(A, v));
    }
    return out;
}

// Criterion 1: the strict-inclusion fixture, recomputed from scratch.
bool crit1() {
    SessionConfig cfg;
    ReproReport r = run_repro("remark5.2", cfg);
    if (!report_green(r) || r.verdict() != Verdict::PASS) return false;
    // independent recomputation of the ideals
    RingPtr R = build_ring(101, {3, 4}, 60);
    auto mono = [&](int d, uint32_t s = 1) { return series_monomial(R, d, s); };
    SeriesPoly gp = poly_make<TruncatedSeries>(R, {mono(6), mono(7), mono(8)});
    SeriesPoly f = poly_make<TruncatedSeries>(R, {mono(6), mono(7, 100)});
    SeriesPoly fg = poly_mul(f, gp);
    SeriesPoly expect = poly_add(
        poly_make<TruncatedSeries>(R, {mono(12)}),
        poly_shift(poly_make<TruncatedSeries>(R, {mono(15, 100)}), 3));
    bool ok = poly_eq(fg, expect);
    IdealVS lhs = ideal_product(content(fg), content(f));
    IdealVS rhs = ideal_product(ideal_pow(content(f), 2), content(gp));
    ok = ok && ideal_eq(lhs, ideal_span(R, {mono(18), mono(19)}));
    ok = ok && ideal_eq(rhs, ideal_span(R, {mono(18), mono(19), mono(20)}));
    ok = ok && ideal_contains(rhs, lhs) && !ideal_eq(lhs, rhs);
    ok = ok && dm_k_witness(f, gp) == 3;
    return ok;
}

// Criterion 2: mu of the content, the verified k_min = 2 witness, the
// sampled search ceiling, and the polarized pair sampling.
bool crit2() {
    SessionConfig cfg;  // seed 0, 500 samples, deg_bound 6
    ReproReport r = run_repro("example5.1", cfg);
    if (!report_green(r) || r.verdict() != Verdict::EVIDENCE_ONLY) return false;
    bool ok = r.results["mu_content"] == 3;
    ok = ok && r.results["dm_lower_bound"] == 2;
    ok = ok && r.results["verified_witness"]["k_min"] == 2;
    ok = ok && r.results["polarized_pairs"] >= 200;
    ok = ok && r.results["polarized_violations"] == 0;
    // independent verification of the concrete witness
    RingPtr R = build_ring(101, {3, 4}, 60);
    auto mono = [&](int d, uint32_t s = 1) { return series_monomial(R, d, s); };
    SeriesPoly g = poly_make<TruncatedSeries>(R, {mono(7), mono(6), mono(8)});
    SeriesPoly f0 = poly_make<TruncatedSeries>(R, {mono(6), mono(8, 100)});
    ok = ok && mu_ideal(content(g)) == 3;
    ok = ok && dm_k_witness(f0, g) == 2;
    // search-level confirmation: no sampled witness reaches k >= 3
    SearchStrategy strat;
    auto rep = dm_search_random(g, strat);
    ok = ok && rep.dm_lower_bound == 2;
    return ok;
}

// Criterion 3: the mu/gamma/closure fixture.
bool crit3() {
    SessionConfig cfg;
    ReproReport r = run_repro("footnote5.3", cfg);
    if (!report_green(r) || r.verdict() != Verdict::PASS) return false;
    RingPtr R = build_ring(101, {3, 5}, 80);
    IdealVS I = ideal_span(R, {series_monomial(R, 9), series_monomial(R, 11),
                               series_monomial(R, 13)});
    bool ok = mu_ideal(I) == 3;
    ok = ok && gamma(I) == std::set<int>{2};
    ok = ok && !is_integrally_closed(I);
    IdealVS cl = integral_closure(I);
    ok = ok && ideal_eq(cl, ideal_sum(I, ideal_span(R, {series_monomial(R, 10)})));
    return ok;
}

// Criterion 4: the e-parameterized family for e = 3, 4, 5, both variants.
bool crit4() {
    SessionConfig cfg;
    for (int e : {3, 4, 5}) {
        ReproOptions opt;
        opt.e = e;
        opt.variant = "gprime";
        ReproReport rp = run_repro("example5.4", cfg, opt);
        if (!report_green(rp) || rp.verdict() != Verdict::PASS) return false;
        if (rp.results["conductor"] != (e - 1) * e) return false;
        if (rp.results["k_min"] != e) return false;
        if (rp.results["mu_content"] != e) return false;
        opt.variant = "g";
        ReproReport rg = run_repro("example5.4", cfg, opt);
        if (!report_green(rg) || rg.verdict() != Verdict::EVIDENCE_ONLY) return false;
        if (rg.results["k_min"] != e - 2) return false;
        if (rg.results["samples"] < 300) return false;
        if (rg.results["sampled_max_k"].get<int>() > e - 1) return false;
    }
    return true;
}

// Criterion 5: the five-generator content with a sampled witness ceiling.
bool crit5() {
    SessionConfig cfg;
    ReproOptions opt;
    opt.part = 3;
    ReproReport r = run_repro("remark5.5", cfg, opt);
    if (!report_green(r) || r.verdict() != Verdict::EVIDENCE_ONLY) return false;
    return r.results["mu_content"] == 5 && r.results["samples"] >= 300 &&
           r.results["sampled_max_k"].get<int>() <= 3;
}

// Criterion 6: the property suites at full sample counts, zero failures.
bool crit6() {
    SessionConfig cfg;  // samples = 500
    ReproReport a = run_repro("props-setup5.3", cfg);
    ReproReport b = run_repro("props-content", cfg);
    bool ok = report_green(a) && report_green(b);
    ok = ok && a.results["instances"] >= 500 && b.results["instances"] >= 500;
    ok = ok && b.results["duality_instances"] >= 200;
    for (const auto& [key, val] : a.results["failures"].items()) ok = ok && val == 0;
    for (const auto& [key, val] : b.results["failures"].items()) ok = ok && val == 0;
    return ok;
}

// Criterion 7: the annihilating-polynomial constructor against the
// exhaustive oracle at p = 2, 3, then 50 randomized valid instances.
bool crit7() {
    for (uint32_t p : {2u, 3u}) {
        AlgPtr A = monomial_algebra(p, 2, {{2, 0}, {0, 2}});
        AlgPoly g = poly_make<AlgElem>(A, {var(A, "x"), var(A, "y")});
        SubIdeal J = maximal_ideal(A);
        AlgPoly f = thm31_construct(A, g, J, 1);
        if (!valid_witness(f, g, J) || f.deg() > 1) return false;
        auto members = all_members(J);
        bool any = false, matched = false;
        for (const auto& c0 : members)
            for (const auto& c1 : members) {
                AlgPoly cand = poly_make<AlgElem>(A, {c0, c1});
                if (valid_witness(cand, g, J)) {
                    any = true;
                    if (poly_eq(cand, f)) matched = true;
                }
            }
        if (!any || !matched) return false;
    }
    SplitMix rng(99);
    int built = 0;
    for (int trial = 0; built < 50 && trial < 400; ++trial) {
        int a = 2 + static_cast<int>(rng.below(2));
        int b = 2 + static_cast<int>(rng.below(2));
        AlgPtr A = monomial_algebra(101, 2, {{a, 0}, {0, b}});
        uint32_t u1 = 1 + static_cast<uint32_t>(rng.below(100));
        uint32_t u2 = 1 + static_cast<uint32_t>(rng.below(100));
        AlgPoly g = poly_make<AlgElem>(
            A, {elem_scale(u1, var(A, "x")), elem_scale(u2, var(A, "y"))});
        SubIdeal J = colon(ann(content(g)), maximal_ideal(A));
        AlgPoly f = thm31_construct(A, g, J, 1);
        if (!valid_witness(f, g, J) || f.deg() > 1) return false;
        ++built;
    }
    return built == 50;
}

// Criterion 8: exhaustive micro-certification over F_2[x]/(x^2).
bool crit8() {
    AlgPtr A = monomial_algebra(2, 1, {{2}});
    AlgPoly g = poly_make<AlgElem>(A, {elem_one(A), var(A, "x")});
    SearchStrategy strat;
    strat.kind = SearchKind::Exhaustive;
    strat.deg_bound = 2;
    auto rep = dm_search_exhaustive(g, strat);
    bool ok = rep.candidates == 64;  // 4^3 coefficient tuples
    ok = ok && rep.certificate == CertKind::EXHAUSTIVE;
    ok = ok && rep.dm_lower_bound == 1;  // every nonzero f needs only k = 1
    for (const auto& w : rep.witness_table) ok = ok && w.k_min == 1;
    return ok;
}

// Criterion 9: every reported quantity survives recomputation at N + 10.
bool crit9() {
    SessionConfig cfg;
    ReproReport r = run_repro("stability", cfg);
    return report_green(r) && r.verdict() == Verdict::PASS;
}

}  // namespace

int main() {
    struct Entry {
        int n;
        std::string what;
        bool (*fn)();
    };
    std::vector<Entry> entries = {
        {1, "remark5.2: strict inclusion and k_min = 3, exact", crit1},
        {2, "example5.1: mu = 3, verified k_min = 2 witness, sampled ceiling, polarized pairs", crit2},
        {3, "footnote5.3: mu = 3, gamma = {2}, not closed, closure adds s^10", crit3},
        {4, "example5.4: e = 3, 4, 5, both variants, exact thresholds", crit4},
        {5, "remark5.5 part 3: mu = 5 with sampled witness ceiling 3", crit5},
        {6, "property suites: 500+ instances, zero failures", crit6},
        {7, "thm31-demo constructor vs exhaustive oracle + 50 random instances", crit7},
        {8, "exhaustive micro-certification: 64 candidates, mu = 1", crit8},
        {9, "stability: all quantities unchanged at N + 10", crit9},
    };
    for (const auto& e : entries) {
        long long t0 = now_ms();
        bool ok = false;
        try {
            ok = e.fn();
        } catch (const std::exception& ex) {
            std::printf("criterion %d: exception: %s\n", e.n, ex.what());
        }
        criterion(e.n, e.what, ok, now_ms() - t0);
    }
    std::printf("%s: %d of 9 criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                9 - failures);
    return failures;
}
