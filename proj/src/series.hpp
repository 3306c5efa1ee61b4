#ifndef HMSING_SERIES_HPP
#define HMSING_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "ypoly.hpp"

namespace hmsing {

namespace detail {
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const YPoly& c) { return c.is_zero(); }
// Constant term of an inverse: must be a nonzero rational.
inline Rat unit_value(const Rat& c) {
    if (c == 0) throw std::domain_error("non-invertible constant term");
    return c;
}
inline Rat unit_value(const YPoly& c) {
    if (!c.is_constant() || c.constant_value() == 0)
        throw std::domain_error("non-invertible constant term");
    return c.constant_value();
}
}  // namespace detail

// Truncated power series in x: the ring C[x]/(x^{order+1}).
// Multiplication silently discards terms of degree > order.
template <class C>
class TruncSeries {
public:
    explicit TruncSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }

    static TruncSeries constant(int order, const C& c) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncSeries one(int order) { return constant(order, C(Rat(1))); }
    static TruncSeries monomial(int order, int deg, const C& c) {
        TruncSeries s(order);
        if (deg <= order) s.coeffs_[static_cast<size_t>(deg)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    C& coeff(int k) { return coeffs_.at(static_cast<size_t>(k)); }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_order(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_order(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r(a.order());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; i + j < r.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    TruncSeries pow(unsigned long n) const {
        TruncSeries r = one(order());
        TruncSeries base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    // Multiplicative inverse modulo x^{order+1}; the constant term must be
    // a nonzero rational.
    TruncSeries inverse() const {
        Rat u = detail::unit_value(coeffs_[0]);
        TruncSeries r(order());
        Rat uinv = Rat(1) / u;
        r.coeffs_[0] = C(uinv);
        for (size_t k = 1; k < coeffs_.size(); ++k) {
            C acc{};
            for (size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
            r.coeffs_[k] = acc * Rat(-uinv);
        }
        return r;
    }

    // x -> scale * x, i.e. coefficient of x^k picks up scale^k.
    template <class S>
    TruncSeries substitute_scaled(const S& scale) const {
        TruncSeries r(order());
        S p = scale;
        r.coeffs_[0] = coeffs_[0];
        for (size_t k = 1; k < coeffs_.size(); ++k) {
            r.coeffs_[k] = coeffs_[k] * p;
            if (k + 1 < coeffs_.size()) p = p * scale;
        }
        return r;
    }

    TruncSeries truncated(int new_order) const {
        TruncSeries r(new_order);
        for (size_t k = 0; k < r.coeffs_.size() && k < coeffs_.size(); ++k)
            r.coeffs_[k] = coeffs_[k];
        return r;
    }

private:
    void check_order(const TruncSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("truncation order mismatch");
    }
    std::vector<C> coeffs_;
};

using XSeries = TruncSeries<Rat>;
using XYSeries = TruncSeries<YPoly>;

// The Hirzebruch generating series Q_y(x) = x(1+y)/(1-exp(-x(1+y))) - xy,
// truncated at the given order.  Specializations: y=-1 gives 1+x, y=0 the
// Todd series, y=1 the L-series x/tanh(x).
XYSeries qy_series(int order);

// Specialize the y-variable of an XYSeries to a rational value.
XSeries specialize_y(const XYSeries& s, const Rat& y);

}  // namespace hmsing

#endif
