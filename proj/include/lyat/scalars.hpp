#ifndef LYAT_SCALARS_HPP
#define LYAT_SCALARS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace lyat {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Backed by GMP's mpq.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        mpz_class num, den;
        try {
            if (slash == std::string::npos) {
                num = mpz_class(s);
                den = 1;
            } else {
                num = mpz_class(s.substr(0, slash));
                den = mpz_class(s.substr(slash + 1));
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        Rational r;
        r.v_ = mpq_class(num) / mpq_class(den);
        return r;
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// Element of a prime field F_p with runtime modulus. The modulus travels
/// with the value so elements stay self-contained in generic code; mixing
/// moduli is a logic error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(uint32_t v, uint32_t p) : v_(v % p), p_(p) {}

    static Fp from_int(long long n, uint32_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += p;
        return Fp(static_cast<uint32_t>(r), p);
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    std::string str() const { return std::to_string(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<uint32_t>((static_cast<uint64_t>(v_) * o.v_) % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
    friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
    friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
    friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

    /// Extended-Euclid inverse.
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        int64_t t = 0, new_t = 1;
        int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            int64_t q = r / new_r;
            t -= q * new_t; std::swap(t, new_t);
            r -= q * new_r; std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return Fp(static_cast<uint32_t>(t), p_);
    }

    /// Fermat inverse a^(p-2); used as an independent cross-check of inverse().
    Fp fermat_inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        uint64_t base = v_, acc = 1, e = p_ - 2;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return Fp(static_cast<uint32_t>(acc), p_);
    }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::logic_error("Fp: mixed moduli");
    }
    uint32_t v_;
    uint32_t p_;
};

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace lyat

#endif
