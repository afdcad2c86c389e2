#include "clusterdyn/laurent.hpp"

#include <cctype>
#include <sstream>

namespace clusterdyn {

namespace {

bool exps_divisible(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

// Exact single-divisor polynomial division (exponents >= 0 assumed): returns
// the quotient iff the remainder is zero.
std::optional<LaurentPolynomial> poly_divide(const LaurentPolynomial& a,
                                             const LaurentPolynomial& b) {
    LaurentPolynomial q(a.vars());
    LaurentPolynomial r = a;
    auto [eb, cb] = b.leading_term();
    while (!r.is_zero()) {
        auto [er, cr] = r.leading_term();
        if (!exps_divisible(er, eb)) return std::nullopt;
        Exponents eq(er.size());
        for (size_t i = 0; i < eq.size(); ++i) eq[i] = er[i] - eb[i];
        Rational cq = cr / cb;
        LaurentPolynomial t = LaurentPolynomial::monomial(a.vars(), eq, cq);
        q += t;
        r -= t * b;
    }
    return q;
}

Exponents negate(const Exponents& e) {
    Exponents r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r[i] = -e[i];
    return r;
}

// Strip the monomial content: returns p * x^{-minexp(p)}.
LaurentPolynomial primitive_shift(const LaurentPolynomial& p) {
    return p.shift(negate(p.min_exponents()));
}

long deg_in(const LaurentPolynomial& p, size_t v) { return p.is_zero() ? -1 : p.degree_in(v); }

// Coefficient of x_v^k in p, as a polynomial with exponent 0 in slot v.
LaurentPolynomial coeff_of(const LaurentPolynomial& p, size_t v, long k) {
    LaurentPolynomial r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        Exponents ne = e;
        ne[v] = 0;
        r.add_term(ne, c);
    }
    return r;
}

LaurentPolynomial shift_var(const LaurentPolynomial& p, size_t v, long k) {
    Exponents s(p.vars().size(), 0);
    s[v] = k;
    return p.shift(s);
}

LaurentPolynomial poly_gcd(LaurentPolynomial a, LaurentPolynomial b);

// Content of p with respect to variable v: gcd of its coefficient polynomials.
LaurentPolynomial content_of(const LaurentPolynomial& p, size_t v) {
    LaurentPolynomial g(p.vars());
    for (long k = 0; k <= deg_in(p, v); ++k) {
        LaurentPolynomial c = coeff_of(p, v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

LaurentPolynomial pseudo_remainder(LaurentPolynomial a, const LaurentPolynomial& b, size_t v) {
    long db = deg_in(b, v);
    LaurentPolynomial lcb = coeff_of(b, v, db);
    while (!a.is_zero() && deg_in(a, v) >= db) {
        long da = deg_in(a, v);
        LaurentPolynomial lca = coeff_of(a, v, da);
        a = a * lcb - shift_var(b, v, da - db) * lca;
    }
    return a;
}

LaurentPolynomial make_monic(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    return p.scale(p.leading_term().second.inverse());
}

// GCD of true polynomials (all exponents >= 0) via content + primitive PRS.
LaurentPolynomial poly_gcd(LaurentPolynomial a, LaurentPolynomial b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    size_t nv = a.vars().size();
    size_t v = nv;
    for (size_t i = nv; i-- > 0;) {
        if (deg_in(a, i) > 0 || deg_in(b, i) > 0) {
            v = i;
            break;
        }
    }
    if (v == nv) return LaurentPolynomial::constant(a.vars(), Rational(1));
    if (deg_in(a, v) == 0 || deg_in(b, v) == 0) {
        // One side is free of v: gcd divides its content in v.
        LaurentPolynomial ca = content_of(a, v), cb = content_of(b, v);
        return poly_gcd(ca, cb);
    }
    LaurentPolynomial ca = content_of(a, v), cb = content_of(b, v);
    LaurentPolynomial g = poly_gcd(ca, cb);
    a = *poly_divide(a, ca);
    b = *poly_divide(b, cb);
    if (deg_in(a, v) < deg_in(b, v)) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPolynomial r = pseudo_remainder(a, b, v);
        a = b;
        if (r.is_zero()) {
            b = r;
        } else {
            b = *poly_divide(r, content_of(r, v));
        }
    }
    return make_monic(g * a);
}

}  // namespace

std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& a,
                                            const LaurentPolynomial& b) {
    if (b.is_zero()) throw Error("LaurentPolynomial: division by zero");
    if (a.is_zero()) return LaurentPolynomial(a.vars());
    auto [ua, ub] = LaurentPolynomial::unify(a, b);
    Exponents ma = ua.min_exponents(), mb = ub.min_exponents();
    LaurentPolynomial A = primitive_shift(ua), B = primitive_shift(ub);
    auto q = poly_divide(A, B);
    if (!q) return std::nullopt;
    Exponents s(ma.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = ma[i] - mb[i];
    return q->shift(s);
}

LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto [ua, ub] = LaurentPolynomial::unify(a, b);
    if (ua.is_zero() && ub.is_zero()) return LaurentPolynomial(ua.vars());
    if (ua.is_zero()) return make_monic(primitive_shift(ub));
    if (ub.is_zero()) return make_monic(primitive_shift(ua));
    return poly_gcd(primitive_shift(ua), primitive_shift(ub));
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    // Emit in descending graded-lex order for readability.
    std::vector<const std::pair<const Exponents, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* x, auto* y) { return grlex_less(y->first, x->first); });
    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        Rational c = t->second;
        if (first) {
            if (c.is_negative()) out << "-";
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        first = false;
        c = c.abs();
        bool any_var = false;
        std::ostringstream vpart;
        for (size_t i = 0; i < vars_.size(); ++i) {
            long e = t->first[i];
            if (e == 0) continue;
            if (any_var) vpart << "*";
            any_var = true;
            vpart << vars_[i];
            if (e != 1) vpart << "^" << e;
        }
        if (!any_var) {
            out << c.str();
        } else if (c.is_one()) {
            out << vpart.str();
        } else {
            out << c.str() << "*" << vpart.str();
        }
    }
    return out.str();
}

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (pos == start) throw Error("parse_laurent: expected number at position " +
                                      std::to_string(start));
        return s.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw Error("parse_laurent: expected identifier at position " +
                                      std::to_string(start));
        return s.substr(start, pos - start);
    }
};

}  // namespace

LaurentPolynomial parse_laurent(const std::string& text, std::vector<std::string> vars) {
    LaurentPolynomial result(vars);
    Scanner sc{text};
    bool first = true;
    while (!sc.eof()) {
        int sign = 1;
        if (sc.consume('+')) {
        } else if (sc.consume('-')) {
            sign = -1;
        } else if (!first) {
            throw Error("parse_laurent: expected '+' or '-' at position " +
                        std::to_string(sc.pos));
        }
        first = false;
        Rational coef(sign);
        Exponents exps(vars.size(), 0);
        bool saw_factor = false;
        char c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = coef * Rational::from_string(sc.number());
            saw_factor = true;
            if (!sc.consume('*')) {
                result.add_term(exps, coef);
                continue;
            }
        }
        while (true) {
            std::string name = sc.identifier();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end())
                throw Error("parse_laurent: unknown variable '" + name + "'");
            long e = 1;
            if (sc.consume('^')) {
                Rational ev = Rational::from_string(sc.number());
                e = ev.to_long();
            }
            exps[static_cast<size_t>(it - vars.begin())] += e;
            saw_factor = true;
            if (!sc.consume('*')) break;
        }
        if (!saw_factor) throw Error("parse_laurent: empty term");
        result.add_term(exps, coef);
    }
    if (first) throw Error("parse_laurent: empty input");
    return result;
}

}  // namespace clusterdyn
