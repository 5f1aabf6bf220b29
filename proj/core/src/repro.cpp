#include "dmk/repro.hpp"

#include <chrono>
#include <sstream>

#include "dmk/construct.hpp"
#include "dmk/dsl.hpp"
#include "dmk/search.hpp"

namespace dmk {

using json = nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "PASS";
        case Verdict::FAIL: return "FAIL";
        default: return "EVIDENCE_ONLY";
    }
}

Verdict ReproReport::verdict() const {
    for (const auto& c : checks)
        if (!c.ok) return Verdict::FAIL;
    return sampled ? Verdict::EVIDENCE_ONLY : Verdict::PASS;
}

namespace {

// Certified-by-construction truncation level: covers contents of inputs with
// coefficient orders up to c + e, their k_max-fold products, and minimal
// generator counts, with the sufficiency margins the ideal ops demand.
int auto_N(int c, int e, int k_max) { return (k_max + 2) * (c + e + 2); }

TruncatedSeries mono(const RingPtr& R, int d, uint32_t sc = 1) {
    return series_monomial(R, d, sc);
}

SeriesPoly spoly(const RingPtr& R, std::vector<TruncatedSeries> cs) {
    return poly_make<TruncatedSeries>(R, std::move(cs));
}

IdealVS mono_ideal(const RingPtr& R, const std::vector<int>& degs) {
    std::vector<TruncatedSeries> gens;
    for (int d : degs) gens.push_back(mono(R, d));
    return ideal_span(R, gens);
}

json j_set(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

void add_check(ReproReport& r, const std::string& name, bool ok) {
    r.checks.push_back({name, ok});
}

std::string semigroup_decl(const std::vector<int>& gens) {
    std::ostringstream os;
    os << "ring R = semigroup(";
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << gens[i];
    os << ");";
    return os.str();
}

RingPtr make_ring(const SessionConfig& cfg, std::vector<int> gens, int c, int e, int k_max) {
    int N = cfg.prec > 0 ? cfg.prec : auto_N(c, e, k_max);
    return build_ring(cfg.p, std::move(gens), N);
}

SearchStrategy strategy(const SessionConfig& cfg, int samples) {
    SearchStrategy s;
    s.kind = SearchKind::Random;
    s.seed = cfg.seed;
    s.samples = samples;
    s.deg_bound = cfg.deg_bound;
    s.budget = cfg.budget;
    return s;
}

json witness_json(const DMReport<TruncatedSeries>& rep, std::size_t cap = 5) {
    json out = json::array();
    for (std::size_t i = 0; i < rep.witness_table.size() && i < cap; ++i)
        out.push_back({{"f", dsl_format(rep.witness_table[i].f)},
                       {"k_min", rep.witness_table[i].k_min}});
    return out;
}

// g' = s^c + s^{c+1} t + ... + s^{c+e-1} t^{e-1}, and the variant g with the
// first two coefficients swapped.
SeriesPoly family_gprime(const RingPtr& R, int c, int e) {
    std::vector<TruncatedSeries> cs;
    for (int j = 0; j < e; ++j) cs.push_back(mono(R, c + j));
    return spoly(R, std::move(cs));
}

SeriesPoly family_g(const RingPtr& R, int c, int e) {
    std::vector<TruncatedSeries> cs;
    cs.push_back(mono(R, c + 1));
    cs.push_back(mono(R, c));
    for (int j = 2; j < e; ++j) cs.push_back(mono(R, c + j));
    return spoly(R, std::move(cs));
}

// --- example5.1 ------------------------------------------------------------

void run_example51(ReproReport& r, const SessionConfig& cfg) {
    RingPtr R = make_ring(cfg, {3, 4}, 6, 3, 3);
    r.used_N = R->N;
    SeriesPoly g = spoly(R, {mono(R, 7), mono(R, 6), mono(R, 8)});
    r.inputs["dsl"] = semigroup_decl({3, 4}) + " g = " + dsl_format(g) + ";";

    int mu = mu_ideal(content(g));
    r.results["mu_content"] = mu;
    add_check(r, "mu(c(g)) == 3", mu == 3);

    auto rep = dm_search(g, strategy(cfg, cfg.samples));
    r.results["samples"] = rep.candidates;
    r.results["top_witnesses"] = witness_json(rep);
    add_check(r, "no sampled witness needs k >= 3", rep.dm_lower_bound < 3);

    // f = s^6 - s^8 t: the t^2 coefficient of fg cancels, so c(fg) misses
    // order 14 while c(f)c(g) is the full order filtration from 12 on.
    SeriesPoly f0 = spoly(R, {mono(R, 6), series_neg(mono(R, 8))});
    int k0 = dm_k_witness(f0, g);
    r.results["verified_witness"] = {{"f", dsl_format(f0)}, {"k_min", k0}};
    add_check(r, "witness s^6 - s^8*t has k_min == 2", k0 == 2);

    // the certified witness is part of the evidence for the lower bound
    int lower = std::max(rep.dm_lower_bound, k0);
    r.results["dm_lower_bound"] = lower;
    add_check(r, "dm lower bound == 2", lower == 2);

    int pairs = std::min(cfg.samples, 200);
    auto pol = polarized_search(g, 2, strategy(cfg, pairs));
    r.results["polarized_pairs"] = pol.samples;
    r.results["polarized_violations"] = pol.violations;
    add_check(r, "no polarized pair violates the identity at k = 2", pol.violations == 0);
    r.sampled = true;  // mu_R(g) = 2 universally is evidence, not a certificate
}

// --- remark5.2 -------------------------------------------------------------

void run_remark52(ReproReport& r, const SessionConfig& cfg) {
    RingPtr R = make_ring(cfg, {3, 4}, 6, 3, 3);
    r.used_N = R->N;
    SeriesPoly gp = spoly(R, {mono(R, 6), mono(R, 7), mono(R, 8)});
    SeriesPoly f = spoly(R, {mono(R, 6), series_neg(mono(R, 7))});
    r.inputs["dsl"] =
        semigroup_decl({3, 4}) + " gp = " + dsl_format(gp) + "; f = " + dsl_format(f) + ";";

    SeriesPoly fg = poly_mul(f, gp);
    SeriesPoly fg_expected =
        spoly(R, {mono(R, 12), series_zero(R), series_zero(R), series_neg(mono(R, 15))});
    add_check(r, "f*gp == s^12 - s^15*t^3", poly_eq(fg, fg_expected));
    r.results["f_gp"] = dsl_format(fg);

    IdealVS lhs = ideal_product(content(fg), content(f));
    IdealVS rhs = ideal_product(ideal_product(content(f), content(f)), content(gp));
    add_check(r, "c(f*gp)c(f) == (s^18, s^19)", ideal_eq(lhs, mono_ideal(R, {18, 19})));
    add_check(r, "c(f)^2 c(gp) == (s^18, s^19, s^20)",
              ideal_eq(rhs, mono_ideal(R, {18, 19, 20})));
    add_check(r, "strict inclusion c(f*gp)c(f) < c(f)^2 c(gp)",
              ideal_contains(rhs, lhs) && !ideal_eq(lhs, rhs));
    r.results["c_fgp_cf"] = {18, 19};
    r.results["cf2_cgp"] = {18, 19, 20};

    int k = dm_k_witness(f, gp);
    r.results["k_min"] = k;
    add_check(r, "dm_k_witness(f, gp) == 3", k == 3);
}

// --- footnote5.3 -----------------------------------------------------------

void run_footnote53(ReproReport& r, const SessionConfig& cfg) {
    RingPtr R = make_ring(cfg, {3, 5}, 8, 3, 3);
    r.used_N = R->N;
    IdealVS I = mono_ideal(R, {9, 11, 13});
    r.inputs["dsl"] = semigroup_decl({3, 5}) + " # I = (s^9, s^11, s^13)";

    int mu = mu_ideal(I);
    auto gam = gamma(I);
    bool closed = is_integrally_closed(I);
    IdealVS closure = integral_closure(I);
    r.results["mu"] = mu;
    r.results["gamma"] = j_set(gam);
    r.results["integrally_closed"] = closed;
    add_check(r, "mu(I) == 3", mu == 3);
    add_check(r, "gamma(I) == {2}", gam == std::set<int>{2});
    add_check(r, "I is not integrally closed", !closed);
    add_check(r, "closure == I + (s^10)",
              ideal_eq(closure, ideal_sum(I, mono_ideal(R, {10}))) &&
                  !ideal_member(mono(R, 10), I));
    add_check(r, "I == (s^3, s^5)^3",
              ideal_eq(I, ideal_pow(mono_ideal(R, {3, 5}), 3)));
}

// --- example5.4 ------------------------------------------------------------

void run_example54(ReproReport& r, const SessionConfig& cfg, const ReproOptions& opt) {
    int e = opt.e;
    if (e < 3 || e > 8) throw std::invalid_argument("example5.4: e must be in [3, 8]");
    if (opt.variant != "gprime" && opt.variant != "g")
        throw std::invalid_argument("example5.4: variant must be gprime or g");
    int c = (e - 1) * e;
    RingPtr R = make_ring(cfg, {e, e + 1}, c, e, e);
    r.used_N = R->N;
    add_check(r, "conductor == (e-1)e", R->conductor_c == c);
    r.results["e"] = e;
    r.results["conductor"] = c;

    SeriesPoly f = spoly(R, {mono(R, c), series_neg(mono(R, c + 1))});
    if (opt.variant == "gprime") {
        SeriesPoly gp = family_gprime(R, c, e);
        r.inputs["dsl"] =
            semigroup_decl({e, e + 1}) + " gp = " + dsl_format(gp) + "; f = " + dsl_format(f) + ";";
        SeriesPoly fg = poly_mul(f, gp);
        std::vector<TruncatedSeries> exp(e + 1, series_zero(R));
        exp[0] = mono(R, 2 * c);
        exp[e] = series_neg(mono(R, 2 * c + e));
        add_check(r, "f*gp == s^{2c} - s^{2c+e} t^e", poly_eq(fg, spoly(R, std::move(exp))));
        add_check(r, "c(f*gp) == (s^{2c})", ideal_eq(content(fg), mono_ideal(R, {2 * c})));
        int k = dm_k_witness(f, gp);
        r.results["k_min"] = k;
        add_check(r, "dm_k_witness(f, gp) == e", k == e);
        int mu = mu_ideal(content(gp));
        r.results["mu_content"] = mu;
        add_check(r, "mu(c(gp)) == e", mu == e);
    } else {
        SeriesPoly g = family_g(R, c, e);
        r.inputs["dsl"] =
            semigroup_decl({e, e + 1}) + " g = " + dsl_format(g) + "; f = " + dsl_format(f) + ";";
        SeriesPoly fg = poly_mul(f, g);
        add_check(r, "c(f*g) == (s^{2c}, s^{2c+1}, s^{2c+2})",
                  ideal_eq(content(fg), mono_ideal(R, {2 * c, 2 * c + 1, 2 * c + 2})));
        int k = dm_k_witness(f, g);
        r.results["k_min"] = k;
        add_check(r, "dm_k_witness(f, g) == e - 2", k == std::max(e - 2, 1));
        auto rep = dm_search(g, strategy(cfg, std::min(cfg.samples, 300)));
        r.results["samples"] = rep.candidates;
        r.results["sampled_max_k"] = rep.dm_lower_bound;
        r.results["top_witnesses"] = witness_json(rep);
        add_check(r, "no sampled witness needs k > e - 1", rep.dm_lower_bound <= e - 1);
        r.sampled = true;  // mu_R(g) <= e-1 universally is evidence, not a certificate
    }
}

// --- remark5.5 -------------------------------------------------------------

void run_remark55(ReproReport& r, const SessionConfig& cfg, const ReproOptions& opt) {
    if (opt.part != 1 && opt.part != 3)
        throw std::invalid_argument("remark5.5: part must be 1 or 3");
    int e = opt.part == 3 ? 5 : opt.e;
    if (e < 3 || e > 8) throw std::invalid_argument("remark5.5: e must be in [3, 8]");
    int c = (e - 1) * e;
    RingPtr R = make_ring(cfg, {e, e + 1}, c, e, e);
    r.used_N = R->N;
    r.results["e"] = e;

    if (opt.part == 1) {
        SeriesPoly g = family_g(R, c, e);
        SeriesPoly f = spoly(R, {mono(R, c), series_neg(mono(R, c + 1))});
        r.inputs["dsl"] =
            semigroup_decl({e, e + 1}) + " g = " + dsl_format(g) + "; f = " + dsl_format(f) + ";";
        SeriesPoly fg = poly_mul(f, g);
        add_check(r, "c(f*g) == (s^{2c}, s^{2c+1}, s^{2c+2})",
                  ideal_eq(content(fg), mono_ideal(R, {2 * c, 2 * c + 1, 2 * c + 2})));
        add_check(r, "gamma(c(f)) == {1}", gamma(content(f)) == std::set<int>{1});
        add_check(r, "gamma(c(f*g)) == {1, 2}", gamma(content(fg)) == std::set<int>{1, 2});
        bool threshold = true;
        IdealVS cf = content(f);
        IdealVS acc = content(fg);  // c(fg) c(f)^{k-1} as k grows
        for (int k = 1; k <= e; ++k) {
            if (k > 1) acc = ideal_product(acc, cf);
            bool closed = is_integrally_closed(acc);
            if (closed != (k >= std::max(e - 2, 1))) threshold = false;
        }
        add_check(r, "c(f*g)c(f)^{k-1} integrally closed iff k >= e-2", threshold);
        int k = dm_k_witness(f, g);
        r.results["k_min"] = k;
        add_check(r, "dm_k_witness(f, g) == e - 2", k == std::max(e - 2, 1));
    } else {
        SeriesPoly g = spoly(R, {mono(R, c + 1), mono(R, c), mono(R, c + 2), mono(R, c + 4),
                                 mono(R, c + 3)});
        r.inputs["dsl"] = semigroup_decl({e, e + 1}) + " g = " + dsl_format(g) + ";";
        int mu = mu_ideal(content(g));
        r.results["mu_content"] = mu;
        add_check(r, "mu(c(g)) == 5", mu == 5);
        auto rep = dm_search(g, strategy(cfg, std::min(cfg.samples, 300)));
        r.results["samples"] = rep.candidates;
        r.results["sampled_max_k"] = rep.dm_lower_bound;
        r.results["top_witnesses"] = witness_json(rep);
        add_check(r, "no sampled witness needs k > 3", rep.dm_lower_bound <= 3);
        r.sampled = true;
    }
}

// --- property suites -------------------------------------------------------

const std::vector<std::vector<int>> kPropRings = {{3, 4}, {3, 5}, {4, 5}, {5, 6, 7, 8, 9}};

struct PropRing {
    RingPtr R;
    int c, e;
};

std::vector<PropRing> prop_rings(const SessionConfig& cfg) {
    std::vector<PropRing> out;
    for (const auto& gens : kPropRings) {
        // conductor by direct relaxation, to size the truncation before building
        int mx = gens.back();
        std::vector<bool> in(mx * mx + 1, false);
        in[0] = true;
        for (int d = 1; d <= mx * mx; ++d)
            for (int a : gens)
                if (d >= a && in[d - a]) in[d] = true;
        int c = mx * mx;
        while (c > 0 && in[c - 1]) --c;
        int e = gens.front();
        int N = cfg.prec > 0 ? cfg.prec : auto_N(c, e, cfg.deg_bound + 1);
        out.push_back({build_ring(cfg.p, gens, N), c, e});
    }
    return out;
}

IdealVS random_ideal(const RingPtr& R, SplitMix& rng) {
    std::vector<TruncatedSeries> gens;
    int n = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < n; ++i) {
        TruncatedSeries x = random_elem(R, rng, -1);
        for (int tries = 0; x.is_zero() && tries < 8; ++tries) x = random_elem(R, rng, -1);
        if (!x.is_zero()) gens.push_back(x);
    }
    if (gens.empty()) gens.push_back(mono(R, R->e));
    return ideal_span(R, gens);
}

void run_props_setup53(ReproReport& r, const SessionConfig& cfg) {
    auto rings = prop_rings(cfg);
    r.used_N = rings[0].R->N;
    r.inputs["rings"] = {"semigroup(3,4)", "semigroup(3,5)", "semigroup(4,5)",
                         "semigroup(5,6,7,8,9)"};
    int fail1 = 0, fail2 = 0, fail3 = 0, fail4 = 0, failb1 = 0;
    for (int i = 0; i < cfg.samples; ++i) {
        const PropRing& pr = rings[i % rings.size()];
        const RingPtr& R = pr.R;
        int e = pr.e, c = pr.c;
        SplitMix rng(cfg.seed + static_cast<uint64_t>(i));

        IdealVS I = random_ideal(R, rng);
        IdealVS J = random_ideal(R, rng);
        auto gI = gamma(I), gJ = gamma(J);

        // (1) full gamma <=> I equals its extension to the closure ring
        bool full = static_cast<int>(gI.size()) == e - 1;
        bool extension = I.min_order >= c && is_integrally_closed(I);
        if (full != extension) ++fail1;

        // (2) 1 + |gamma(I)| <= mu(I) <= e; closed inside the conductor => mu = e
        int mu = mu_ideal(I);
        if (!(1 + static_cast<int>(gI.size()) <= mu && mu <= e)) ++fail2;
        if (extension && mu != e) ++fail2;

        // (3) gamma of a product contains both gammas and their small sums
        IdealVS IJ = ideal_product(I, J);
        auto gIJ = gamma(IJ);
        bool ok3 = true;
        for (int a : gI)
            if (!gIJ.count(a)) ok3 = false;
        for (int b : gJ)
            if (!gIJ.count(b)) ok3 = false;
        for (int a : gI)
            for (int b : gJ)
                if (a + b <= e - 1 && !gIJ.count(a + b)) ok3 = false;
        if (full && (static_cast<int>(gIJ.size()) != e - 1 || !is_integrally_closed(IJ)))
            ok3 = false;
        if (!ok3) ++fail3;

        // (4) gamma transfer from c(g) to c(fg) when c(f) misses {1..m}
        auto f = random_poly<TruncatedSeries>(R, rng, cfg.deg_bound, -1);
        auto g = random_poly<TruncatedSeries>(R, rng, cfg.deg_bound, -1);
        int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(e - 1)));
        if (!gamma_union_check(f, g, m)) ++fail4;

        // (b.1) rearranged-coefficient transfer, needs m < e-1
        if (e >= 3) {
            int mb = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(e - 2)));
            if (!gamma_b1_check(f, g, mb)) ++failb1;
        }
    }
    r.results["instances"] = cfg.samples;
    r.results["failures"] = {{"fact1", fail1}, {"fact2", fail2}, {"fact3", fail3},
                             {"fact4", fail4}, {"b1", failb1}};
    add_check(r, "fact (1): full gamma iff extension ideal", fail1 == 0);
    add_check(r, "fact (2): 1 + |gamma| <= mu <= e, with equality when closed", fail2 == 0);
    add_check(r, "fact (3): gamma of products", fail3 == 0);
    add_check(r, "fact (4): gamma transfer to c(fg)", fail4 == 0);
    add_check(r, "fact (b.1): rearranged transfer", failb1 == 0);
    r.sampled = true;
}

void run_props_content(ReproReport& r, const SessionConfig& cfg) {
    auto rings = prop_rings(cfg);
    r.used_N = rings[0].R->N;
    r.inputs["rings"] = {"semigroup(3,4)", "semigroup(3,5)", "semigroup(4,5)",
                         "semigroup(5,6,7,8,9)"};
    int fail_eq1 = 0, fail_bound = 0, fail_mono = 0, fail_closure = 0, fail_quot = 0,
        fail_gap = 0, fail_dual = 0;
    int duality_instances = 0;
    for (int i = 0; i < cfg.samples; ++i) {
        const PropRing& pr = rings[i % rings.size()];
        const RingPtr& R = pr.R;
        SplitMix rng(cfg.seed + 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(i));

        auto f = random_poly<TruncatedSeries>(R, rng, cfg.deg_bound, -1);
        auto g = random_poly<TruncatedSeries>(R, rng, cfg.deg_bound, -1);

        if (!dm_identity(f, g, g.deg() + 1)) ++fail_eq1;
        int k = dm_k_witness(f, g);
        if (k > mu_ideal(content(g))) ++fail_bound;
        for (int kk = k; kk <= g.deg() + 1; ++kk)
            if (!dm_identity(f, g, kk)) {
                ++fail_mono;
                break;
            }
        if (!closure_containment_check(f, g)) ++fail_closure;

        // quotient implication through a random principal m-primary ideal
        {
            int dmin = pr.e, dmax = 2 * (pr.c + pr.e);
            int d = dmin;
            for (int tries = 0; tries < 16; ++tries) {
                int cand = dmin + static_cast<int>(rng.below(static_cast<uint64_t>(dmax - dmin)));
                if (R->in_S(cand)) {
                    d = cand;
                    break;
                }
            }
            IdealVS q = mono_ideal(R, {d});
            if (!quotient_monotonicity_check(f, g, q, k)) ++fail_quot;
        }

        // gap concatenation: blocks do not interact
        {
            auto f2 = random_poly<TruncatedSeries>(R, rng, cfg.deg_bound, -1);
            TruncatedSeries w1 = mono(R, R->s_degrees[rng.below(8)]);
            TruncatedSeries w2 = mono(R, R->s_degrees[rng.below(8)]);
            auto F = gap_concat<TruncatedSeries>({f, f2}, {w1, w2}, g);
            IdealVS cf_sum = ideal_sum(ideal_product(ideal_span(R, {w1}), content(f)),
                                       ideal_product(ideal_span(R, {w2}), content(f2)));
            IdealVS cfg_sum =
                ideal_sum(ideal_product(ideal_span(R, {w1}), content(poly_mul(f, g))),
                          ideal_product(ideal_span(R, {w2}), content(poly_mul(f2, g))));
            if (!ideal_eq(content(F), cf_sum) ||
                !ideal_eq(content(poly_mul(F, g)), cfg_sum))
                ++fail_gap;
        }

        // Gorenstein duality and double annihilator on random Gorenstein quotients
        if (i % 2 == 0) {
            const PropRing& gor = (i % 4 == 0) ? rings[0] : rings[2];  // <3,4> or <4,5>
            int dmin = gor.e, dmax = 2 * (gor.c + gor.e);
            int d = dmin;
            for (int tries = 0; tries < 16; ++tries) {
                int cand = dmin + static_cast<int>(rng.below(static_cast<uint64_t>(dmax - dmin)));
                if (gor.R->in_S(cand)) {
                    d = cand;
                    break;
                }
            }
            SemigroupQuotient Q = from_quotient(gor.R, mono_ideal(gor.R, {d}));
            ++duality_instances;
            if (!is_gorenstein(Q.alg)) {
                ++fail_dual;
            } else {
                SubIdeal a = ideal_span(Q.alg, {Q.reduce(random_elem(gor.R, rng, -1)),
                                                Q.reduce(random_elem(gor.R, rng, -1))});
                if (a.is_zero()) a = maximal_ideal(Q.alg);
                if (a.is_unit()) {
                    if (!ann(ann(a)).is_unit()) ++fail_dual;
                } else if (!duality_check(Q.alg, a) || !ideal_eq(ann(ann(a)), a))
                    ++fail_dual;
            }
        }
    }
    r.results["instances"] = cfg.samples;
    r.results["duality_instances"] = duality_instances;
    r.results["failures"] = {{"eq1", fail_eq1},         {"witness_bound", fail_bound},
                             {"monotonicity", fail_mono}, {"closure", fail_closure},
                             {"quotient", fail_quot},     {"gap_concat", fail_gap},
                             {"duality", fail_dual}};
    add_check(r, "identity at k = deg(g)+1", fail_eq1 == 0);
    add_check(r, "witness k <= mu(c(g))", fail_bound == 0);
    add_check(r, "monotonicity in k", fail_mono == 0);
    add_check(r, "closure containment", fail_closure == 0);
    add_check(r, "quotient implication", fail_quot == 0);
    add_check(r, "gap concatenation content decomposition", fail_gap == 0);
    add_check(r, "Gorenstein duality and double annihilator", fail_dual == 0);
    r.sampled = true;
}

// --- constructor demos -----------------------------------------------------

void run_thm31_demo(ReproReport& r, const SessionConfig& cfg) {
    AlgPtr A = monomial_algebra(cfg.p, 2, {{2, 0}, {0, 2}});
    auto var = [&](const std::string& name) {
        for (std::size_t i = 0; i < A->labels.size(); ++i)
            if (A->labels[i] == name) return elem_basis(A, i);
        throw std::logic_error("missing variable " + name);
    };
    AlgPoly g = poly_make<AlgElem>(A, {var("x"), var("y")});
    r.inputs["dsl"] = "ring A = monomial(x^2, y^2); g = " + dsl_format(g) + ";";
    SubIdeal J = maximal_ideal(A);
    Thm31Instance inst = thm31_instance(A, g, J, 1);
    r.results["r"] = inst.r;
    r.results["s"] = inst.s;
    r.results["m"] = inst.m;
    add_check(r, "dim(J/I) == 2 > 1 == socle dim", inst.r == 2 && inst.s == 1);
    AlgPoly f = thm31_construct(A, g, J, 1);
    r.results["f"] = dsl_format(f);
    add_check(r, "f*g == 0", poly_mul(f, g).is_zero());
    add_check(r, "c(f) inside J", ideal_contains(J, content(f)));
    add_check(r, "c(f)c(g) != 0", !ideal_product(content(f), content(g)).is_zero());
    add_check(r, "k = deg(g)+1 = 2 restores the identity", dm_identity(f, g, 2));
    add_check(r, "the identity fails at k = 1", !dm_identity(f, g, 1));
}

void run_thm33_demo(ReproReport& r, const SessionConfig& cfg) {
    // Gorenstein stage: A = F_p[x,y]/(x^9, y^9), a complete intersection.
    // The witness polynomial f1 = y^6 + x^3*y^3*t + x^6*t^2 has content
    // P = (x^3, y^3)^2 with mu(P) = 3, while P*c(g) = (x^3,y^3)^2 (x,y)^2
    // needs 9 generators (all products z*a^u*b^v are distinct monomials),
    // so the colon-gap dim(P c(g) / (m P c(g) + B)) reaches mu(P) + 1.
    AlgPtr A = monomial_algebra(cfg.p, 2, {{9, 0}, {0, 9}});
    add_check(r, "A = monomial(x^9, y^9) is Gorenstein", is_gorenstein(A));
    auto var = [&](const std::string& name) {
        for (std::size_t i = 0; i < A->labels.size(); ++i)
            if (A->labels[i] == name) return elem_basis(A, i);
        throw std::logic_error("missing variable " + name);
    };
    AlgElem x = var("x"), y = var("y");
    auto pw = [&](AlgElem b, int k) {
        AlgElem acc = elem_one(A);
        for (int i = 0; i < k; ++i) acc = elem_mul(acc, b);
        return acc;
    };
    AlgPoly g = poly_make<AlgElem>(A, {pw(x, 2), elem_mul(x, y), pw(y, 2)});
    AlgPoly f1 =
        poly_make<AlgElem>(A, {pw(y, 6), elem_mul(pw(x, 3), pw(y, 3)), pw(x, 6)});
    r.inputs["dsl"] = "ring A = monomial(x^9, y^9); g = " + dsl_format(g) +
                      "; f1 = " + dsl_format(f1) + ";";

    SubIdeal P = content(f1);
    SubIdeal Pcg = ideal_product(P, content(g));
    SubIdeal B = content(poly_mul(f1, g));
    SubIdeal MWB = ideal_sum(ideal_product(maximal_ideal(A), Pcg), B);
    int gap = Pcg.dim() - MWB.dim();
    r.results["mu_P"] = mu_ideal(P);
    r.results["mu_Pcg"] = mu_ideal(Pcg);
    r.results["colon_gap"] = gap;
    r.results["fs"] = json::array({dsl_format(f1)});
    add_check(r, "dim(P c(g)/(m P c(g) + B)) >= mu(P) + 1",
              gap >= mu_ideal(P) + 1);

    AlgPoly h = thm33_construct(A, g, {f1});
    r.results["h"] = dsl_format(h);
    add_check(r, "P c(h) c(g) != 0",
              !ideal_product(ideal_product(P, content(h)), content(g)).is_zero());
    add_check(r, "B c(h) == 0", ideal_product(B, content(h)).is_zero());
    add_check(r, "c(h*g) P == 0",
              ideal_product(content(poly_mul(h, g)), P).is_zero());
    add_check(r, "the polarized identity fails for (f1, h)",
              !polarized_identity<AlgElem>({f1, h}, g));
}

// --- stability -------------------------------------------------------------

json strip_timing(const ReproReport& rep) { return rep.results; }

void run_stability(ReproReport& r, const SessionConfig& cfg) {
    struct Item {
        std::string command;
        ReproOptions opt;
        std::string label;
    };
    std::vector<Item> items = {{"example5.1", {}, "example5.1"},
                               {"remark5.2", {}, "remark5.2"},
                               {"footnote5.3", {}, "footnote5.3"}};
    for (int e : {3, 4, 5})
        for (const char* v : {"gprime", "g"}) {
            ReproOptions o;
            o.e = e;
            o.variant = v;
            items.push_back({"example5.4", o,
                             "example5.4 e=" + std::to_string(e) + " " + v});
        }
    {
        ReproOptions o;
        o.part = 3;
        items.push_back({"remark5.5", o, "remark5.5 part=3"});
    }

    json detail = json::array();
    for (const auto& it : items) {
        ReproReport base = run_repro(it.command, cfg, it.opt);
        SessionConfig bumped = cfg;
        bumped.prec = base.used_N + 10;
        ReproReport again = run_repro(it.command, bumped, it.opt);
        bool same = strip_timing(base) == strip_timing(again) &&
                    base.verdict() == again.verdict();
        detail.push_back({{"command", it.label},
                          {"N", base.used_N},
                          {"N_bumped", again.used_N},
                          {"stable", same}});
        add_check(r, it.label + " unchanged at N+10", same);
    }
    r.results["detail"] = detail;
    r.inputs["commands"] = json::array();
    for (const auto& it : items) r.inputs["commands"].push_back(it.label);
}

}  // namespace

std::vector<std::string> repro_commands() {
    return {"example5.1",    "remark5.2",     "footnote5.3", "example5.4", "remark5.5",
            "props-setup5.3", "props-content", "thm31-demo",  "thm33-demo", "stability"};
}

ReproReport run_repro(const std::string& command, const SessionConfig& cfg,
                      const ReproOptions& opt) {
    ReproReport r;
    r.command = command;
    r.config = cfg;
    auto t0 = std::chrono::steady_clock::now();
    if (command == "example5.1")
        run_example51(r, cfg);
    else if (command == "remark5.2")
        run_remark52(r, cfg);
    else if (command == "footnote5.3")
        run_footnote53(r, cfg);
    else if (command == "example5.4")
        run_example54(r, cfg, opt);
    else if (command == "remark5.5")
        run_remark55(r, cfg, opt);
    else if (command == "props-setup5.3")
        run_props_setup53(r, cfg);
    else if (command == "props-content")
        run_props_content(r, cfg);
    else if (command == "thm31-demo")
        run_thm31_demo(r, cfg);
    else if (command == "thm33-demo")
        run_thm33_demo(r, cfg);
    else if (command == "stability")
        run_stability(r, cfg);
    else
        throw std::invalid_argument("unknown command '" + command + "'");
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

json report_json(const ReproReport& r) {
    json out;
    out["command"] = r.command;
    out["config"] = {{"p", r.config.p},
                     {"N", r.used_N},
                     {"seed", r.config.seed},
                     {"samples", r.config.samples},
                     {"deg_bound", r.config.deg_bound}};
    out["inputs"] = r.inputs;
    out["results"] = r.results;
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
    out["checks"] = checks;
    out["verdict"] = verdict_name(r.verdict());
    out["millis"] = r.millis;
    return out;
}

std::string report_text(const ReproReport& r) {
    std::ostringstream os;
    os << "== " << r.command << " ==\n";
    os << "config: p=" << r.config.p << " N=" << r.used_N << " seed=" << r.config.seed
       << " samples=" << r.config.samples << " deg_bound=" << r.config.deg_bound << "\n";
    for (auto it = r.inputs.begin(); it != r.inputs.end(); ++it)
        os << "input " << it.key() << ": " << it.value().dump() << "\n";
    for (const auto& c : r.checks)
        os << (c.ok ? "  ok  " : " FAIL ") << c.name << "\n";
    os << "results: " << r.results.dump() << "\n";
    os << "verdict: " << verdict_name(r.verdict()) << "  (" << r.millis << " ms)\n";
    return os.str();
}

int report_exit_code(const ReproReport& r) {
    return r.verdict() == Verdict::FAIL ? 1 : 0;
}

}  // namespace dmk
