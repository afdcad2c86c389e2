#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace clusterdyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
// Thin wrapper over mpq_class fixing canonicalization and string I/O ("p/q").
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw Error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw Error("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw Error("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return v_ > 0; }
    bool is_negative() const { return v_ < 0; }
    int sign() const { return sgn(v_); }

    // Exact conversion to a machine integer; throws if non-integral or out of range.
    long to_long() const {
        if (!is_integer()) throw Error("Rational: " + str() + " is not an integer");
        if (!v_.get_num().fits_slong_p()) throw Error("Rational: integer out of range");
        return v_.get_num().get_si();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw Error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        return Rational(r);
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

}  // namespace clusterdyn
