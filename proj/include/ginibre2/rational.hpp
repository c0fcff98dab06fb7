// Exact arbitrary-precision rational scalars, the coefficient field for all
// symbolic work in this project. Thin value-type wrapper around GMP's mpq.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gin2 {

class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors int->Q
    BigRational(long n, long d) : q_(n, d) {
        if (d == 0) throw std::domain_error("BigRational: zero denominator");
        q_.canonicalize();
    }
    explicit BigRational(const mpz_class& n) : q_(n) {}
    BigRational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw std::domain_error("BigRational: zero denominator");
        q_.canonicalize();
    }
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Parses "a" or "a/b" in base 10.
    static BigRational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
        q.canonicalize();
        return BigRational(q);
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }

    BigRational pow(unsigned e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
        return BigRational(r);
    }

    BigRational inverse() const {
        if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
        return BigRational(mpq_class(1) / q_);
    }

    double to_double() const { return q_.get_d(); }

    // "a" for integers, "a/b" otherwise.
    std::string to_string() const { return q_.get_str(10); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

// gcd of two rationals in the lattice sense: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
// Used for polynomial content computation.
inline BigRational rational_content_gcd(const BigRational& a, const BigRational& b) {
    mpz_class gn, lm;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(lm.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return BigRational(gn, lm);
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace gin2
