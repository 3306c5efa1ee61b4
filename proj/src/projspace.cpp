#include "projspace.hpp"

namespace hmsing {

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
    if (n_ != o.n_) throw std::invalid_argument("ambient dimension mismatch");
    for (int k = 0; k <= n_; ++k) coeffs_[static_cast<size_t>(k)] += o.coeff(k);
    return *this;
}

HomologyClass operator-(const HomologyClass& a) {
    HomologyClass r(a.n_);
    for (int k = 0; k <= a.n_; ++k) r.coeff(k) = -a.coeff(k);
    return r;
}

HomologyClass operator*(const HomologyClass& a, const Rat& s) {
    HomologyClass r(a.n_);
    for (int k = 0; k <= a.n_; ++k) r.coeff(k) = a.coeff(k) * s;
    return r;
}

void YClass::add(long y_exp, const HomologyClass& c) {
    if (c.ambient_dim() != n_) throw std::invalid_argument("ambient dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(y_exp);
    if (it == terms_.end()) {
        terms_.emplace(y_exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomologyClass YClass::coeff(long y_exp) const {
    auto it = terms_.find(y_exp);
    return it == terms_.end() ? HomologyClass(n_) : it->second;
}

HomologyClass YClass::eval(const Rat& y) const {
    HomologyClass r(n_);
    for (const auto& [e, c] : terms_) {
        Rat s;
        if (e >= 0) {
            s = rat_pow(y, static_cast<unsigned long>(e));
        } else {
            if (y == 0) throw std::domain_error("evaluating negative y-power at 0");
            s = Rat(1) / rat_pow(y, static_cast<unsigned long>(-e));
        }
        r += c * s;
    }
    return r;
}

YClass& YClass::operator+=(const YClass& o) {
    if (n_ != o.n_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

static void check_ci_args(int n, const std::vector<int>& degrees) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("degrees must be positive");
    if (static_cast<int>(degrees.size()) > n)
        throw std::invalid_argument("negative-dimensional complete intersection");
}

XSeries ci_chern_class(int n, const std::vector<int>& degrees) {
    check_ci_args(n, degrees);
    XSeries one_plus_x = XSeries::one(n) + XSeries::monomial(n, 1, Rat(1));
    XSeries r = one_plus_x.pow(static_cast<unsigned long>(n) + 1);
    for (int d : degrees) {
        XSeries denom = XSeries::one(n) + XSeries::monomial(n, 1, Rat(d));
        r *= XSeries::monomial(n, 1, Rat(d)) * denom.inverse();
    }
    return r;
}

Rat ci_euler(int n, const std::vector<int>& degrees) {
    return ci_chern_class(n, degrees).coeff(n);
}

YPoly ci_chi_y_virtual(int n, const std::vector<int>& degrees) {
    check_ci_args(n, degrees);
    XYSeries q = qy_series(n);
    XYSeries r = q.pow(static_cast<unsigned long>(n) + 1);
    for (int d : degrees) {
        XYSeries qd = q.substitute_scaled(Rat(d));
        r *= XYSeries::monomial(n, 1, YPoly(Rat(d))) * qd.inverse();
    }
    return r.coeff(n);
}

YClass hirzebruch_class_of_linear_subspace(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("subspace dimension out of range");
    XYSeries s = qy_series(k).pow(static_cast<unsigned long>(k) + 1);
    YClass r(n);
    for (int j = 0; j <= k; ++j) {
        for (const auto& [e, c] : s.coeff(j).terms()) {
            HomologyClass h(n);
            h.coeff(k - j) = c;
            r.add(e, h);
        }
    }
    return r;
}

HomologyClass cap_hyperplane(const HomologyClass& c, const Rat& multiplier) {
    HomologyClass r(c.ambient_dim());
    for (int j = 1; j <= c.ambient_dim(); ++j) r.coeff(j - 1) = c.coeff(j) * multiplier;
    return r;
}

YClass cap_hyperplane(const YClass& c, const Rat& multiplier) {
    YClass r(c.ambient_dim());
    for (const auto& [e, h] : c.terms()) r.add(e, cap_hyperplane(h, multiplier));
    return r;
}

HomologyClass cap_series(const HomologyClass& c, const XSeries& s) {
    int n = c.ambient_dim();
    if (s.order() < n) throw std::invalid_argument("series truncated below ambient dimension");
    HomologyClass r(n);
    for (int k = 0; k <= n; ++k) {
        if (s.coeff(k) == 0) continue;
        for (int j = k; j <= n; ++j) r.coeff(j - k) += c.coeff(j) * s.coeff(k);
    }
    return r;
}

HomologyClass cohomology_to_homology(const XSeries& s, int n) {
    if (s.order() < n) throw std::invalid_argument("series truncated below ambient dimension");
    HomologyClass r(n);
    for (int k = 0; k <= n; ++k) r.coeff(k) = s.coeff(n - k);
    return r;
}

}  // namespace hmsing
