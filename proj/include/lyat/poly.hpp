#ifndef LYAT_POLY_HPP
#define LYAT_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lyat/field.hpp"

namespace lyat {

/// Monomial as a dense exponent vector over a fixed variable list.
struct Monomial {
    std::vector<uint32_t> exps;

    uint32_t total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), 0u);
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded-lexicographic order: higher total degree first, ties broken
/// lexicographically on the exponent vector.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        uint32_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.exps > b.exps;  // larger lex exponent vector first
    }
};

/// Sparse multivariate polynomial with exact coefficients and a canonical
/// graded-lex term order. No zero coefficients are stored.
template <class F>
class Poly {
public:
    using Element = typename F::Element;
    using TermMap = std::map<Monomial, Element, GradedLexLess>;

    Poly(const F& f, size_t nvars) : field_(f), nvars_(nvars) {}

    static Poly variable(const F& f, size_t nvars, size_t idx) {
        Poly p(f, nvars);
        Monomial m{std::vector<uint32_t>(nvars, 0)};
        m.exps[idx] = 1;
        p.terms_[m] = f.one();
        return p;
    }
    static Poly constant(const F& f, size_t nvars, const Element& c) {
        Poly p(f, nvars);
        if (!c.is_zero()) p.terms_[Monomial{std::vector<uint32_t>(nvars, 0)}] = c;
        return p;
    }

    const F& field() const { return field_; }
    size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Element& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r(field_, nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (size_t i = 0; i < nvars_; ++i) m.exps[i] += mb.exps[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly scaled(const Element& c) const {
        Poly r(field_, nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
        return r;
    }
    Poly operator-() const { return scaled(-field_.one()); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Element evaluate(const std::vector<Element>& assignment) const {
        Element acc = field_.zero();
        for (const auto& [m, c] : terms_) {
            Element t = c;
            for (size_t i = 0; i < nvars_; ++i)
                for (uint32_t e = 0; e < m.exps[i]; ++e) t *= assignment[i];
            acc += t;
        }
        return acc;
    }

    /// Canonical normalization. Over Q: integer coefficients, content
    /// removed, positive leading coefficient. Over F_p: monic.
    Poly normalized() const {
        if (terms_.empty()) return *this;
        Poly r = *this;
        if constexpr (F::is_prime) {
            const Element& lead = r.terms_.begin()->second;
            return r.scaled(lead.inverse());
        } else {
            mpz_class lcm_den(1), gcd_num(0);
            for (const auto& [m, c] : r.terms_) {
                mpz_class den = c.raw().get_den();
                lcm_den = lcm_den / mpz_class(gcd(lcm_den, den)) * den;
            }
            for (const auto& [m, c] : r.terms_) {
                mpq_class scaled = c.raw() * mpq_class(lcm_den);
                gcd_num = mpz_class(gcd(gcd_num, mpz_class(scaled.get_num())));
            }
            mpq_class factor = mpq_class(lcm_den) / mpq_class(gcd_num);
            if (r.terms_.begin()->second < field_.zero()) factor = -factor;
            return r.scaled(Element(factor));
        }
    }

    std::string str(const std::vector<std::string>& var_names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = F::to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { out += "-"; cs = cs.substr(1); }
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            first = false;
            std::string mono;
            for (size_t i = 0; i < nvars_; ++i) {
                if (m.exps[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_names[i];
                if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
            }
            if (mono.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += cs + "*" + mono;
            }
        }
        return out;
    }

private:
    F field_;
    size_t nvars_;
    TermMap terms_;
};

} // namespace lyat

#endif
