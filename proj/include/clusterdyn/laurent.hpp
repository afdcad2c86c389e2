#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace clusterdyn {

using Exponents = std::vector<long>;

// Multivariate Laurent polynomial over Q with a fixed ordered variable list.
// Terms are kept canonical: no zero coefficients, all exponent vectors sized
// to the variable list. Structural equality decides symbolic identity.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPolynomial constant(std::vector<std::string> vars, const Rational& c) {
        LaurentPolynomial p(std::move(vars));
        if (!c.is_zero()) p.terms_[Exponents(p.vars_.size(), 0)] = c;
        return p;
    }
    static LaurentPolynomial variable(std::vector<std::string> vars, size_t idx, long e = 1) {
        LaurentPolynomial p(std::move(vars));
        if (idx >= p.vars_.size()) throw Error("LaurentPolynomial: variable index out of range");
        Exponents exps(p.vars_.size(), 0);
        exps[idx] = e;
        p.terms_[exps] = Rational(1);
        return p;
    }
    static LaurentPolynomial monomial(std::vector<std::string> vars, Exponents exps,
                                      const Rational& c) {
        LaurentPolynomial p(std::move(vars));
        if (exps.size() != p.vars_.size()) throw Error("LaurentPolynomial: bad exponent vector");
        if (!c.is_zero()) p.terms_[std::move(exps)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0));
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0) &&
               terms_.begin()->second.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error("LaurentPolynomial: not constant");
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& exps, const Rational& c) {
        if (exps.size() != vars_.size()) throw Error("LaurentPolynomial: bad exponent vector");
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[exps] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        auto [a, b] = unify(*this, o);
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPolynomial operator-(const LaurentPolynomial& o) const { return *this + (-o); }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        auto [a, b] = unify(*this, o);
        LaurentPolynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial scale(const Rational& c) const {
        LaurentPolynomial r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
        return r;
    }

    // Multiply by the monomial x^shift.
    LaurentPolynomial shift(const Exponents& s) const {
        if (s.size() != vars_.size()) throw Error("LaurentPolynomial: bad shift vector");
        LaurentPolynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            Exponents ne(e.size());
            for (size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + s[i];
            r.terms_[ne] = c;
        }
        return r;
    }

    LaurentPolynomial pow(long n) const {
        if (n < 0) throw Error("LaurentPolynomial: negative power");
        LaurentPolynomial r = constant(vars_, Rational(1));
        LaurentPolynomial base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    // Componentwise minimum of exponent vectors over all terms (zero vector if empty).
    Exponents min_exponents() const {
        Exponents m(vars_.size(), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }

    // Graded lexicographic comparison: total degree first, then lex on exponents.
    static bool grlex_less(const Exponents& a, const Exponents& b) {
        long da = 0, db = 0;
        for (long e : a) da += e;
        for (long e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }

    std::pair<Exponents, Rational> leading_term() const {
        if (terms_.empty()) throw Error("LaurentPolynomial: leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    Rational evaluate(const std::map<std::string, Rational>& assignment) const {
        std::vector<Rational> vals;
        vals.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw Error("LaurentPolynomial: unassigned variable " + v);
            vals.push_back(it->second);
        }
        return evaluate(vals);
    }

    Rational evaluate(const std::vector<Rational>& vals) const {
        if (vals.size() != vars_.size()) throw Error("LaurentPolynomial: bad value vector");
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (vals[i].is_zero() && e[i] < 0)
                    throw Error("LaurentPolynomial: zero value at negative exponent of " +
                                vars_[i]);
                t *= vals[i].pow(e[i]);
            }
            sum += t;
        }
        return sum;
    }

    LaurentPolynomial derivative(size_t idx) const {
        if (idx >= vars_.size()) throw Error("LaurentPolynomial: unknown variable index");
        LaurentPolynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents ne = e;
            ne[idx] -= 1;
            r.add_term(ne, c * Rational(e[idx]));
        }
        return r;
    }

    long degree_in(size_t idx) const {
        long d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[idx] > d) d = e[idx];
            first = false;
        }
        return d;
    }

    std::string str() const;

    bool operator==(const LaurentPolynomial& o) const {
        if (vars_ == o.vars_) return terms_ == o.terms_;
        auto [a, b] = unify(*this, o);
        return a.terms_ == b.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    // Constants promote to any variable list; genuinely different lists are an error.
    static std::pair<LaurentPolynomial, LaurentPolynomial> unify(const LaurentPolynomial& a,
                                                                 const LaurentPolynomial& b) {
        if (a.vars_ == b.vars_) return {a, b};
        if (a.vars_.empty() && a.is_constant())
            return {constant(b.vars_, a.constant_value()), b};
        if (b.vars_.empty() && b.is_constant())
            return {a, constant(a.vars_, b.constant_value())};
        throw Error("LaurentPolynomial: mismatched variable lists");
    }

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

// Exact division of Laurent polynomials: returns a/b if b divides a exactly
// (in the Laurent sense), std::nullopt otherwise.
std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& a,
                                            const LaurentPolynomial& b);

// GCD of two Laurent polynomials up to a unit (monomial times rational): the
// result is a true polynomial (componentwise min exponent 0), monic under
// graded-lex. Monomial factors are units in the Laurent ring and are dropped.
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Parse the documented grammar: terms joined by +/-, each term
// c*V1^e1*V2^e2 with optional coefficient and integer (possibly negative)
// exponents. Variables must belong to `vars`.
LaurentPolynomial parse_laurent(const std::string& text, std::vector<std::string> vars);

}  // namespace clusterdyn
