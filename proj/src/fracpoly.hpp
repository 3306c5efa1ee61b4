#ifndef HMSING_FRACPOLY_HPP
#define HMSING_FRACPOLY_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "rational.hpp"
#include "ypoly.hpp"

namespace hmsing {

// Sparse polynomial with rational exponents and rational coefficients:
// the rings Z[t^{1/e}] and Q[y~^{1/e}, y~^{-1/e}].  Exponents are kept
// reduced by mpq canonicalization; zero coefficients are never stored.
class FracExpPoly {
public:
    FracExpPoly() = default;

    static FracExpPoly term(const Rat& exp, const Rat& coeff) {
        FracExpPoly p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }
    static FracExpPoly one() { return term(Rat(0), Rat(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Rat, Rat>& terms() const { return terms_; }

    Rat coeff(const Rat& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Rat& exp, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms_[exp];
        slot += c;
        if (slot == 0) terms_.erase(exp);
    }

    FracExpPoly& operator+=(const FracExpPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend FracExpPoly operator+(FracExpPoly a, const FracExpPoly& b) { return a += b; }

    friend FracExpPoly operator-(const FracExpPoly& a) {
        FracExpPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend FracExpPoly operator*(const FracExpPoly& a, const FracExpPoly& b) {
        FracExpPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(Rat(ea + eb), Rat(ca * cb));
        return r;
    }
    FracExpPoly& operator*=(const FracExpPoly& o) { return *this = *this * o; }

    friend FracExpPoly operator*(const FracExpPoly& a, const Rat& s) {
        FracExpPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
        return r;
    }

    friend bool operator==(const FracExpPoly& a, const FracExpPoly& b) {
        return a.terms_ == b.terms_;
    }

    FracExpPoly pow(unsigned long n) const {
        FracExpPoly r = one();
        FracExpPoly base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    // Least common multiple of the exponent denominators (1 when empty).
    Int common_denominator() const {
        Int e(1);
        for (const auto& [exp, c] : terms_)
            mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), exp.get_den_mpz_t());
        return e;
    }

    Rat min_exponent() const {
        if (terms_.empty()) throw std::domain_error("empty fractional polynomial");
        return terms_.begin()->first;
    }
    Rat max_exponent() const {
        if (terms_.empty()) throw std::domain_error("empty fractional polynomial");
        return terms_.rbegin()->first;
    }

    Rat total_mass() const {
        Rat s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // Sum a_i v^a -> sum a_i (-y)^{floor(a)}: the integer-part specialization.
    YPoly int_part() const {
        YPoly r;
        for (const auto& [e, c] : terms_) {
            long k = floor_long(e);
            r.add_term(k, (k % 2 != 0) ? Rat(-c) : c);
        }
        return r;
    }

    // e.g. "t^{5/6} + t^{7/6}", ascending exponents.
    std::string to_string(const std::string& var = "t") const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            if (e == 0) mono = "";
            else if (e == 1) mono = var;
            else mono = var + "^{" + rat_to_string(e) + "}";
            if (mono.empty()) s += rat_to_string(a);
            else if (a == 1) s += mono;
            else s += rat_to_string(a) + mono;
        }
        return s;
    }

private:
    std::map<Rat, Rat> terms_;
};

}  // namespace hmsing

#endif
