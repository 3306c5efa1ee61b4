#ifndef HMSING_YPOLY_HPP
#define HMSING_YPOLY_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace hmsing {

// Laurent polynomial in y with exact rational coefficients.
// Zero coefficients are never stored.
class YPoly {
public:
    YPoly() = default;
    explicit YPoly(const Rat& c) {
        if (c != 0) terms_[0] = c;
    }
    static YPoly monomial(long exp, const Rat& c) {
        YPoly p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rat>& terms() const { return terms_; }

    Rat coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // True when the polynomial is a constant (possibly zero).
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Rat constant_value() const {
        if (!is_constant()) throw std::domain_error("not a constant y-polynomial");
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }

    void add_term(long exp, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms_[exp];
        slot += c;
        if (slot == 0) terms_.erase(exp);
    }

    YPoly& operator+=(const YPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    YPoly& operator-=(const YPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
        return *this;
    }
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator-(const YPoly& a) {
        YPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend YPoly operator*(const YPoly& a, const YPoly& b) {
        YPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    friend YPoly operator*(const YPoly& a, const Rat& s) {
        YPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
        return r;
    }

    friend bool operator==(const YPoly& a, const YPoly& b) { return a.terms_ == b.terms_; }

    YPoly pow(unsigned long n) const {
        YPoly r(Rat(1));
        YPoly base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    Rat eval(const Rat& y) const {
        Rat v(0);
        for (const auto& [e, c] : terms_) {
            if (e >= 0) {
                v += c * rat_pow(y, static_cast<unsigned long>(e));
            } else {
                if (y == 0) throw std::domain_error("evaluating negative y-power at 0");
                v += c / rat_pow(y, static_cast<unsigned long>(-e));
            }
        }
        return v;
    }

    // Ascending exponents, e.g. "2 - 20y + 2y^2".
    std::string to_string() const {
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
            std::string var;
            if (e == 1) var = "y";
            else if (e != 0) var = "y^" + std::to_string(e);
            if (var.empty()) s += rat_to_string(a);
            else if (a == 1) s += var;
            else s += rat_to_string(a) + var;
        }
        return s;
    }

private:
    std::map<long, Rat> terms_;
};

}  // namespace hmsing

#endif
