#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace clusterdyn {

// Every assigned torus coordinate must be nonzero.
using VariableAssignment = std::map<std::string, Rational>;

// Quotient of Laurent polynomials in canonical reduced form: the denominator
// is a true polynomial (componentwise min exponent 0), monic under graded-lex,
// with no common polynomial factor against the numerator. The numerator
// absorbs all monomial (unit) factors, so the fraction is Laurent iff the
// stored denominator is 1.
class RationalFunction {
public:
    RationalFunction() : den_(LaurentPolynomial::constant({}, Rational(1))) {}
    explicit RationalFunction(LaurentPolynomial num)
        : num_(std::move(num)), den_(LaurentPolynomial::constant(num_.vars(), Rational(1))) {}
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den) {
        auto [n, d] = LaurentPolynomial::unify(num, den);
        num_ = std::move(n);
        den_ = std::move(d);
        reduce();
    }

    static RationalFunction constant(std::vector<std::string> vars, const Rational& c) {
        return RationalFunction(LaurentPolynomial::constant(std::move(vars), c));
    }
    static RationalFunction variable(std::vector<std::string> vars, size_t idx, long e = 1) {
        return RationalFunction(LaurentPolynomial::variable(std::move(vars), idx, e));
    }

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFunction operator-() const { return raw(-num_, den_); }
    RationalFunction operator+(const RationalFunction& o) const {
        if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ + o.num_);
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const {
        if (den_.is_one() && o.den_.is_one()) {
            LaurentPolynomial n = num_ * o.num_;
            LaurentPolynomial d = LaurentPolynomial::constant(n.vars(), Rational(1));
            return raw(std::move(n), std::move(d));
        }
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw Error("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw Error("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        if (den_.is_one()) return RationalFunction(num_.pow(e));
        return RationalFunction(num_.pow(e), den_.pow(e));
    }

    bool operator==(const RationalFunction& o) const {
        // Canonical form makes structural comparison valid.
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    Rational evaluate(const VariableAssignment& v) const {
        Rational d = den_.evaluate(v);
        if (d.is_zero())
            throw Error("RationalFunction: denominator (" + den_.str() + ") vanishes");
        return num_.evaluate(v) / d;
    }

    std::optional<LaurentPolynomial> as_laurent() const {
        if (den_.is_one()) return num_;
        return std::nullopt;
    }

    RationalFunction derivative(const std::string& var) const {
        const auto& vs = vars();
        auto it = std::find(vs.begin(), vs.end(), var);
        if (it == vs.end()) throw Error("RationalFunction: unknown variable " + var);
        size_t idx = static_cast<size_t>(it - vs.begin());
        if (den_.is_one()) return RationalFunction(num_.derivative(idx));
        return RationalFunction(num_.derivative(idx) * den_ - num_ * den_.derivative(idx),
                                den_ * den_);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    // Construct without re-reducing (inputs already canonical together).
    static RationalFunction raw(LaurentPolynomial n, LaurentPolynomial d) {
        RationalFunction f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }

    void reduce() {
        if (den_.is_zero()) throw Error("RationalFunction: zero denominator");
        LaurentPolynomial one = LaurentPolynomial::constant(num_.vars(), Rational(1));
        if (num_.is_zero()) {
            den_ = one;
            return;
        }
        // Absorb the denominator's monomial unit into the numerator.
        if (den_.is_monomial()) {
            num_ = *try_divide(num_, den_);
            den_ = one;
            return;
        }
        // Fast path: exact Laurent division (the common case by the Laurent
        // phenomenon); fall back to a true GCD otherwise.
        if (auto q = try_divide(num_, den_)) {
            num_ = *q;
            den_ = one;
            return;
        }
        LaurentPolynomial g = laurent_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *try_divide(num_, g);
            den_ = *try_divide(den_, g);
        }
        // Normalize: denominator a monic polynomial with min exponent 0.
        Exponents m = den_.min_exponents();
        bool shifted = false;
        for (long e : m) shifted |= (e != 0);
        if (shifted) {
            Exponents neg(m.size());
            for (size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
            den_ = den_.shift(neg);
            num_ = num_.shift(neg);
        }
        Rational lc = den_.leading_term().second;
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            den_ = den_.scale(inv);
            num_ = num_.scale(inv);
        }
    }

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

inline RationalFunction zero_like(const RationalFunction& f) {
    return RationalFunction::constant(f.vars(), Rational(0));
}
inline RationalFunction one_like(const RationalFunction& f) {
    return RationalFunction::constant(f.vars(), Rational(1));
}

// Canonicalize (idempotent: the constructor already maintains the
// representation invariant; exposed for callers that want to be explicit).
inline RationalFunction rf_reduce(const RationalFunction& f) { return f; }

}  // namespace clusterdyn
