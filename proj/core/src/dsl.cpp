#include "dmk/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dmk {

const DslPoly* DslProgram::find(const std::string& name) const {
    for (const auto& [n, v] : assigns)
        if (n == name) return &v;
    return nullptr;
}

namespace {

enum class Tok { Ident, Int, LParen, RParen, Comma, Semi, Eq, Plus, Minus, Star, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    long long value = 0;
    int line = 1, col = 1;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg) const { throw DslError(msg, line, col); }

    Token next() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '\n') {
                ++line;
                col = 1;
                ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++col;
                ++pos;
            } else if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        Token t;
        t.line = line;
        t.col = col;
        if (pos >= src.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = src[pos];
        auto one = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            ++pos;
            ++col;
            return t;
        };
        switch (c) {
            case '(': return one(Tok::LParen);
            case ')': return one(Tok::RParen);
            case ',': return one(Tok::Comma);
            case ';': return one(Tok::Semi);
            case '=': return one(Tok::Eq);
            case '+': return one(Tok::Plus);
            case '-': return one(Tok::Minus);
            case '*': return one(Tok::Star);
            case '^': return one(Tok::Caret);
            default: break;
        }
        if (c >= '0' && c <= '9') {
            t.kind = Tok::Int;
            while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') {
                t.text += src[pos++];
                ++col;
            }
            if (t.text.size() > 12) fail("integer literal too large: " + t.text);
            t.value = std::stoll(t.text);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Ident;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                t.text += src[pos++];
                ++col;
            }
            return t;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

// One multiplicative chunk of a polynomial: scalar * s^d (or a monomial in
// the algebra variables) * t^k.
struct Term {
    uint32_t scalar = 1;
    int s_deg = 0;             // total s-exponent
    bool used_s = false;
    std::map<std::string, int> vars;  // algebra variables with exponents
    int t_deg = 0;
    int line = 1, col = 1;
};

struct Parser {
    Lexer lex;
    Token cur;
    uint32_t p;
    int prec;
    DslProgram prog;

    Parser(const std::string& text, uint32_t p_, int prec_) : lex(text), p(p_), prec(prec_) {
        cur = lex.next();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw DslError(msg, cur.line, cur.col); }

    void advance() { cur = lex.next(); }

    Token expect(Tok k, const std::string& what) {
        if (cur.kind != k) fail("expected " + what + (cur.kind == Tok::End ? " before end of input"
                                                                           : ", got '" + cur.text + "'"));
        Token t = cur;
        advance();
        return t;
    }

    int expect_int(const std::string& what) {
        Token t = expect(Tok::Int, what);
        if (t.value > 1'000'000) throw DslError(what + " too large: " + t.text, t.line, t.col);
        return static_cast<int>(t.value);
    }

    const DslRing& current_ring(const Token& at) const {
        if (prog.last_ring.empty())
            throw DslError("no ring declared before this statement", at.line, at.col);
        return prog.rings.at(prog.last_ring);
    }

    void run() {
        if (cur.kind == Tok::End) fail("empty input");
        while (cur.kind != Tok::End) statement();
    }

    void statement() {
        if (cur.kind == Tok::Ident && cur.text == "ring") {
            advance();
            ring_decl();
        } else {
            assignment();
        }
        expect(Tok::Semi, "';'");
    }

    void ring_decl() {
        Token name = expect(Tok::Ident, "ring name");
        if (prog.rings.count(name.text))
            throw DslError("ring '" + name.text + "' already declared", name.line, name.col);
        expect(Tok::Eq, "'='");
        Token kind = expect(Tok::Ident, "ring constructor");
        DslRing r;
        if (kind.text == "semigroup") {
            r.kind = DslRingKind::Semigroup;
            expect(Tok::LParen, "'('");
            std::vector<int> gens;
            gens.push_back(expect_int("semigroup generator"));
            while (cur.kind == Tok::Comma) {
                advance();
                gens.push_back(expect_int("semigroup generator"));
            }
            expect(Tok::RParen, "')'");
            try {
                r.ring = build_ring(p, gens, auto_precision(gens));
            } catch (const std::invalid_argument& e) {
                throw DslError(e.what(), kind.line, kind.col);
            }
        } else if (kind.text == "quotient") {
            r.kind = DslRingKind::Quotient;
            expect(Tok::LParen, "'('");
            Token base = expect(Tok::Ident, "base ring name");
            auto it = prog.rings.find(base.text);
            if (it == prog.rings.end())
                throw DslError("unknown ring '" + base.text + "'", base.line, base.col);
            if (it->second.kind != DslRingKind::Semigroup)
                throw DslError("quotient base must be a semigroup ring", base.line, base.col);
            r.ring = it->second.ring;
            expect(Tok::Comma, "','");
            expect(Tok::LParen, "'('");
            std::vector<TruncatedSeries> gens;
            gens.push_back(series_gen(r.ring, kind));
            while (cur.kind == Tok::Comma) {
                advance();
                gens.push_back(series_gen(r.ring, kind));
            }
            expect(Tok::RParen, "')'");
            expect(Tok::RParen, "')'");
            try {
                r.quot = std::make_shared<SemigroupQuotient>(
                    from_quotient(r.ring, ideal_span(r.ring, gens)));
            } catch (const std::exception& e) {
                throw DslError(e.what(), kind.line, kind.col);
            }
            r.alg = r.quot->alg;
        } else if (kind.text == "monomial") {
            r.kind = DslRingKind::Monomial;
            expect(Tok::LParen, "'('");
            std::vector<std::map<std::string, int>> rels;
            rels.push_back(monomial_rel());
            while (cur.kind == Tok::Comma) {
                advance();
                rels.push_back(monomial_rel());
            }
            expect(Tok::RParen, "')'");
            r.alg = build_monomial(rels, kind);
        } else {
            throw DslError("unknown ring constructor '" + kind.text + "'", kind.line, kind.col);
        }
        prog.rings.emplace(name.text, std::move(r));
        prog.last_ring = name.text;
    }

    // Automatic truncation level: certifies contents of the parsed inputs,
    // their products, and power identities of modest exponent. Deliberately
    // generous; repro commands pick their own exact levels.
    int auto_precision(const std::vector<int>& gens) {
        if (prec > 0) return prec;
        int g = 0, mx = 0;
        for (int a : gens) {
            g = std::gcd(g, a);
            mx = std::max(mx, a);
        }
        if (g != 1) return mx + 2;  // build_ring will reject with its own message
        std::vector<bool> in(mx * mx + 1, false);
        in[0] = true;
        for (int d = 1; d <= mx * mx; ++d)
            for (int a : gens)
                if (d >= a && in[d - a]) in[d] = true;
        int c = mx * mx;
        while (c > 0 && in[c - 1]) --c;
        int e = *std::min_element(gens.begin(), gens.end());
        return 12 * (c + e) + 1;
    }

    // --- polynomial parsing ---------------------------------------------

    void assignment() {
        Token name = expect(Tok::Ident, "identifier");
        if (name.text == "ring" || name.text == "semigroup" || name.text == "quotient" ||
            name.text == "monomial" || name.text == "s" || name.text == "t")
            throw DslError("'" + name.text + "' cannot be used as a name", name.line, name.col);
        expect(Tok::Eq, "'='");
        const DslRing& R = current_ring(name);
        std::vector<Term> terms = poly_terms();
        if (R.kind == DslRingKind::Monomial)
            prog.assigns.emplace_back(name.text, eval_alg(R, terms));
        else if (R.kind == DslRingKind::Quotient)
            prog.assigns.emplace_back(name.text, eval_quot(R, terms));
        else
            prog.assigns.emplace_back(name.text, eval_series(R.ring, terms));
    }

    std::vector<Term> poly_terms() {
        std::vector<Term> out;
        bool neg = false;
        if (cur.kind == Tok::Plus || cur.kind == Tok::Minus) {
            neg = cur.kind == Tok::Minus;
            advance();
        }
        group(out, neg);
        while (cur.kind == Tok::Plus || cur.kind == Tok::Minus) {
            neg = cur.kind == Tok::Minus;
            advance();
            group(out, neg);
        }
        return out;
    }

    // group := "(" inner-sum ")" ["*" t-power] | term
    void group(std::vector<Term>& out, bool neg) {
        if (cur.kind == Tok::LParen) {
            advance();
            std::vector<Term> inner = poly_terms();
            expect(Tok::RParen, "')'");
            int tshift = 0;
            uint32_t scale = 1;
            while (cur.kind == Tok::Star) {
                advance();
                Term f = factor();
                if (f.used_s || !f.vars.empty())
                    throw DslError("only scalars and powers of t may multiply a group", f.line,
                                   f.col);
                tshift += f.t_deg;
                scale = static_cast<uint32_t>(static_cast<uint64_t>(scale) * f.scalar % p);
            }
            for (Term t : inner) {
                t.t_deg += tshift;
                t.scalar = static_cast<uint32_t>(static_cast<uint64_t>(t.scalar) * scale % p);
                if (neg) t.scalar = t.scalar == 0 ? 0 : p - t.scalar;
                out.push_back(std::move(t));
            }
            return;
        }
        Term t = term();
        if (neg) t.scalar = t.scalar == 0 ? 0 : p - t.scalar;
        out.push_back(std::move(t));
    }

    Term term() {
        Term t = factor();
        while (cur.kind == Tok::Star) {
            advance();
            Term f = factor();
            t.scalar = static_cast<uint32_t>(static_cast<uint64_t>(t.scalar) * f.scalar % p);
            t.s_deg += f.s_deg;
            t.used_s = t.used_s || f.used_s;
            t.t_deg += f.t_deg;
            for (const auto& [v, e] : f.vars) t.vars[v] += e;
        }
        return t;
    }

    Term factor() {
        Term t;
        t.line = cur.line;
        t.col = cur.col;
        if (cur.kind == Tok::Int) {
            t.scalar = static_cast<uint32_t>(cur.value % p);
            advance();
            return t;
        }
        if (cur.kind != Tok::Ident) fail("expected a term");
        std::string name = cur.text;
        advance();
        int exp = 1;
        if (cur.kind == Tok::Caret) {
            advance();
            exp = expect_int("exponent");
        }
        if (name == "s") {
            t.used_s = true;
            t.s_deg = exp;
        } else if (name == "t") {
            t.t_deg = exp;
        } else {
            t.vars[name] = exp;
        }
        return t;
    }

    std::map<std::string, int> monomial_rel() {
        Term t = term();
        if (t.used_s || t.t_deg != 0 || t.scalar != 1 || t.vars.empty())
            throw DslError("monomial relation must be a product of variable powers", t.line, t.col);
        return t.vars;
    }

    // one ideal generator: a t-degree-0 element of the semigroup ring
    TruncatedSeries series_gen(const RingPtr& ring, const Token& at) {
        std::vector<Term> terms = poly_terms();
        SeriesPoly f = eval_series(ring, terms);
        if (f.deg() > 0)
            throw DslError("ideal generators must not involve t", at.line, at.col);
        return f.is_zero() ? series_zero(ring) : f.coeffs[0];
    }

    SeriesPoly eval_series(const RingPtr& ring, const std::vector<Term>& terms) {
        int dmax = 0;
        for (const auto& t : terms) dmax = std::max(dmax, t.t_deg);
        std::vector<TruncatedSeries> cs(dmax + 1, series_zero(ring));
        for (const auto& t : terms) {
            if (!t.vars.empty())
                throw DslError("variable '" + t.vars.begin()->first +
                                   "' is not defined in a semigroup ring",
                               t.line, t.col);
            int d = t.s_deg;  // a bare scalar is scalar * s^0
            if (!(d == 0 || d >= ring->conductor_c || (d < ring->N && ring->S_table[d]))) {
                std::ostringstream os;
                os << "exponent " << d << " is not in the semigroup <";
                for (std::size_t i = 0; i < ring->gens.size(); ++i)
                    os << (i ? "," : "") << ring->gens[i];
                os << ">";
                throw DslError(os.str(), t.line, t.col);
            }
            if (d >= ring->N)
                throw DslError("exponent " + std::to_string(d) +
                                   " exceeds the truncation level " + std::to_string(ring->N),
                               t.line, t.col);
            cs[t.t_deg] = series_add(cs[t.t_deg], series_monomial(ring, d, t.scalar));
        }
        return poly_make<TruncatedSeries>(ring, std::move(cs));
    }

    AlgPoly eval_quot(const DslRing& R, const std::vector<Term>& terms) {
        SeriesPoly f = eval_series(R.ring, terms);
        std::vector<AlgElem> cs;
        for (const auto& c : f.coeffs) cs.push_back(R.quot->reduce(c));
        return poly_make<AlgElem>(R.alg, std::move(cs));
    }

    AlgPtr build_monomial(const std::vector<std::map<std::string, int>>& rels, const Token& at) {
        std::vector<std::string> vars;
        for (const auto& r : rels)
            for (const auto& [v, e] : r)
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        std::vector<std::vector<int>> exp_rels;
        for (const auto& r : rels) {
            std::vector<int> row(vars.size(), 0);
            for (const auto& [v, e] : r)
                row[std::find(vars.begin(), vars.end(), v) - vars.begin()] = e;
            exp_rels.push_back(std::move(row));
        }
        // monomial_algebra names its variables x, y, z, w (x1.. beyond four);
        // require the source to use the same names so labels line up.
        AlgPtr probe;
        try {
            probe = monomial_algebra(p, vars.size(), exp_rels);
        } catch (const std::invalid_argument& e) {
            throw DslError(e.what(), at.line, at.col);
        }
        for (const auto& v : vars)
            if (std::find(probe->labels.begin(), probe->labels.end(), v) == probe->labels.end())
                throw DslError("variable '" + v + "' is not among the algebra variables (" +
                                   (vars.size() <= 4 ? "use x, y, z, w" : "use x1, x2, ...") + ")",
                               at.line, at.col);
        return probe;
    }

    AlgPoly eval_alg(const DslRing& R, const std::vector<Term>& terms) {
        int dmax = 0;
        for (const auto& t : terms) dmax = std::max(dmax, t.t_deg);
        std::vector<AlgElem> cs(dmax + 1, elem_zero(R.alg));
        for (const auto& t : terms) {
            if (t.used_s)
                throw DslError("'s' is not defined in a monomial algebra", t.line, t.col);
            // build the basis monomial label from the variable exponents
            AlgElem m = elem_one(R.alg);
            m = elem_scale(t.scalar, m);
            for (const auto& [v, e] : t.vars) {
                std::size_t idx = basis_index_of_var(R.alg, v, t);
                for (int i = 0; i < e; ++i) m = elem_mul(m, elem_basis(R.alg, idx));
            }
            cs[t.t_deg] = elem_add(cs[t.t_deg], m);
        }
        return poly_make<AlgElem>(R.alg, std::move(cs));
    }

    std::size_t basis_index_of_var(const AlgPtr& A, const std::string& v, const Term& t) {
        for (std::size_t i = 0; i < A->labels.size(); ++i)
            if (A->labels[i] == v) return i;
        throw DslError("variable '" + v + "' is not defined in this algebra", t.line, t.col);
    }
};

}  // namespace

DslProgram dsl_eval(const std::string& text, uint32_t p, int prec) {
    Parser parser(text, p, prec);
    parser.run();
    return std::move(parser.prog);
}

std::string dsl_format(const SeriesPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= f.deg(); ++j) {
        const TruncatedSeries& c = f.coeffs[j];
        for (int d = 0; d < c.ring->N; ++d) {
            if (!c.coeffs[d]) continue;
            if (!first) os << " + ";
            first = false;
            if (c.coeffs[d] != 1 || d == 0) os << c.coeffs[d];
            if (c.coeffs[d] != 1 && d > 0) os << "*";
            if (d > 0) os << "s^" << d;
            if (j > 0) {
                os << "*t";
                if (j > 1) os << "^" << j;
            }
        }
    }
    return os.str();
}

std::string dsl_format(const AlgPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= f.deg(); ++j) {
        const AlgElem& c = f.coeffs[j];
        for (std::size_t i = 0; i < c.v.size(); ++i) {
            if (!c.v[i]) continue;
            if (!first) os << " + ";
            first = false;
            bool unit_basis = c.alg->labels[i] == "1";
            if (c.v[i] != 1 || unit_basis) os << c.v[i];
            if (c.v[i] != 1 && !unit_basis) os << "*";
            if (!unit_basis) os << c.alg->labels[i];
            if (j > 0) {
                os << "*t";
                if (j > 1) os << "^" << j;
            }
        }
    }
    return os.str();
}

std::string dsl_format(const DslPoly& f) {
    return std::visit([](const auto& g) { return dsl_format(g); }, f);
}

}  // namespace dmk
