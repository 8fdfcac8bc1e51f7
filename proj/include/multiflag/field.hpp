#ifndef MULTIFLAG_FIELD_HPP
#define MULTIFLAG_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace multiflag {

struct field_error : std::runtime_error {
    std::string code;
    field_error(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

/*
 * Rational: arbitrary-precision rational scalar, always stored reduced with
 * positive denominator (mpq_class canonicalizes on construction).
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw field_error("DivisionByZero", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                mpz_class num(s);
                return Rational(mpq_class(num));
            }
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw field_error("DivisionByZero", "zero denominator in \"" + s + "\"");
            mpq_class q(num, den);
            q.canonicalize();
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw field_error("BadScalar", "cannot parse rational \"" + s + "\"");
        }
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    bool is_zero() const { return v_ == 0; }

    Rational additive_identity() const { return Rational(); }
    Rational multiplicative_identity() const { return Rational(1); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw field_error("DivisionByZero", "division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    const mpq_class& value() const { return v_; }

private:
    mpq_class v_;
};

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/*
 * Fp: residue in [0, p) for a prime p carried by the element. Operations on
 * elements of different primes are rejected. Use Fp::make to validate p once.
 */
class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(std::int64_t v, std::int64_t p) : p_(p) {
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    static Fp make(std::int64_t v, std::int64_t p) {
        if (!is_prime(p)) throw field_error("NonPrimeField", "modulus " + std::to_string(p) + " is not prime");
        return Fp(v, p);
    }

    static Fp parse(const std::string& s, std::int64_t p) {
        try {
            return Fp(std::stoll(s), p);
        } catch (const std::exception&) {
            throw field_error("BadScalar", "cannot parse residue \"" + s + "\"");
        }
    }

    std::string str() const { return std::to_string(v_); }

    bool is_zero() const { return v_ == 0; }
    std::int64_t value() const { return v_; }
    std::int64_t prime() const { return p_; }

    Fp additive_identity() const { return Fp(0, p_); }
    Fp multiplicative_identity() const { return Fp(1, p_); }

    Fp operator+(const Fp& o) const { check(o); return Fp(v_ + o.v_, p_); }
    Fp operator-(const Fp& o) const { check(o); return Fp(v_ - o.v_, p_); }
    Fp operator*(const Fp& o) const { check(o); return Fp(v_ * o.v_, p_); }
    Fp operator/(const Fp& o) const {
        check(o);
        if (o.is_zero()) throw field_error("DivisionByZero", "division by zero in F_" + std::to_string(p_));
        return *this * o.inverse();
    }
    Fp operator-() const { return Fp(-v_, p_); }

    Fp inverse() const {
        if (is_zero()) throw field_error("DivisionByZero", "inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool operator<(const Fp& o) const { return v_ < o.v_; }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw field_error("FieldMismatch", "mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
    }
    std::int64_t v_;
    std::int64_t p_;
};

}  // namespace multiflag

#endif
