#ifndef LYAT_FIELD_HPP
#define LYAT_FIELD_HPP

#include <string>
#include <stdexcept>

#include "lyat/scalars.hpp"

namespace lyat {

/// Field descriptor for Q. All scalar construction goes through a field
/// descriptor so code stays generic over the coefficient field.
struct RationalField {
    using Element = Rational;
    static constexpr bool is_prime = false;

    Element zero() const { return Rational(); }
    Element one() const { return Rational(1); }
    Element from_int(long long n) const { return Rational(static_cast<long>(n)); }
    Element parse(const std::string& s) const { return Rational::parse(s); }
    static std::string to_string(const Element& e) { return e.str(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
    friend bool operator!=(const RationalField&, const RationalField&) { return false; }
};

/// Field descriptor for F_p, p prime, p < 2^16.
struct PrimeField {
    using Element = Fp;
    static constexpr bool is_prime = true;

    explicit PrimeField(uint32_t p_) : p(p_) {
        if (p >= (1u << 16) || !is_prime_u32(p))
            throw std::invalid_argument("PrimeField: modulus must be prime and < 2^16");
    }

    uint32_t p;

    Element zero() const { return Fp(0, p); }
    Element one() const { return Fp(1, p); }
    Element from_int(long long n) const { return Fp::from_int(n, p); }

    /// Accepts integers and fractions "a/b" (b coprime to p), so rational
    /// data files can be reduced mod p on load.
    Element parse(const std::string& s) const {
        auto parse_int = [this, &s](const std::string& part) {
            size_t pos = 0;
            long long n;
            try {
                n = std::stoll(part, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("PrimeField: cannot parse '" + s + "'");
            }
            if (pos != part.size())
                throw std::invalid_argument("PrimeField: cannot parse '" + s + "'");
            return from_int(n);
        };
        auto slash = s.find('/');
        if (slash == std::string::npos) return parse_int(s);
        Element num = parse_int(s.substr(0, slash));
        Element den = parse_int(s.substr(slash + 1));
        if (den.is_zero())
            throw std::invalid_argument("PrimeField: denominator of '" + s +
                                        "' vanishes mod " + std::to_string(p));
        return num / den;
    }
    static std::string to_string(const Element& e) { return e.str(); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p != b.p; }
};

/// Runtime tag for "which field is this file/computation over".
struct FieldSpec {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    uint32_t p = 0;

    static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }
    static FieldSpec prime(uint32_t p) { return FieldSpec{Kind::prime, p}; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

/// Calls fn with the matching field descriptor.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rational) return fn(RationalField{});
    return fn(PrimeField(spec.p));
}

inline FieldSpec spec_of(const RationalField&) { return FieldSpec::rational(); }
inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.p); }

} // namespace lyat

#endif
