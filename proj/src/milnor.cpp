#include "milnor.hpp"

namespace hmsing {

void EMData::validate() const {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    if (sing_dim < 0 || sing_dim > ambient_dim)
        throw std::invalid_argument("singular dimension out of range");
    if (em_class.ambient_dim() != ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    if (em_class.top_dim() > sing_dim)
        throw std::invalid_argument("EM class exceeds declared singular dimension");
}

namespace {

// (x/(1+x))^j summed with weights m(1-m)^{j-1}, subtracted from 1.
XSeries iterated_correction_series(int order, int m, int r) {
    XSeries s = XSeries::one(order);
    XSeries x_over_1px = XSeries::monomial(order, 1, Rat(1)) *
                         (XSeries::one(order) + XSeries::monomial(order, 1, Rat(1))).inverse();
    XSeries p = XSeries::one(order);
    Rat w(m);
    for (int j = 1; j <= r; ++j) {
        p *= x_over_1px;
        s -= p * XSeries::constant(order, w);
        w *= Rat(1 - m);
    }
    return s;
}

}  // namespace

HomologyClass milnor_class_iterated(const EMData& d) {
    d.validate();
    XSeries s = iterated_correction_series(d.ambient_dim, d.degree, d.sing_dim);
    return cap_series(d.em_class, s);
}

HomologyClass milnor_class_direct(const EMData& d) {
    d.validate();
    int n = d.ambient_dim;
    XSeries denom = XSeries::one(n) + XSeries::monomial(n, 1, Rat(d.degree));
    return cap_series(d.em_class, denom.inverse());
}

bool verify_identity_2_7_1(int m, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    XSeries lhs = XSeries::monomial(order, 1, Rat(m)) *
                  (XSeries::one(order) + XSeries::monomial(order, 1, Rat(m))).inverse();
    XSeries rhs(order);
    XSeries z = XSeries::monomial(order, 1, Rat(1)) *
                (XSeries::one(order) + XSeries::monomial(order, 1, Rat(1))).inverse();
    XSeries p = XSeries::one(order);
    Rat w(m);
    for (int j = 1; j <= order; ++j) {
        p *= z;
        rhs += p * XSeries::constant(order, w);
        w *= Rat(1 - m);
    }
    return lhs == rhs;
}

Rat euler_delta_iterated(const std::vector<Rat>& v, int m) {
    if (v.empty()) throw std::invalid_argument("empty Euler-sum vector");
    Rat delta = v[0];
    Rat w(m);
    for (size_t j = 1; j < v.size(); ++j) {
        delta -= w * v[j];
        w *= Rat(1 - m);
    }
    return delta;
}

Rat euler_delta_direct(const Rat& v0, const Rat& v_prime) { return v0 - v_prime; }

namespace {

void check_example_2_8_args(int n, int a1, int a2, int b1, int b2) {
    if (n < 3) throw std::invalid_argument("ambient dimension must be >= 3");
    if (a1 < 2 || a2 < 2) throw std::invalid_argument("degrees a_i must be >= 2");
    if (b1 < 2 || b2 < 2) throw std::invalid_argument("multiplicities b_i must be >= 2");
    if (a1 * b1 != a2 * b2) throw std::invalid_argument("degree mismatch");
}

}  // namespace

Example28Result example_2_8(int n, int a1, int a2, int b1, int b2) {
    check_example_2_8_args(n, a1, a2, b1, b2);
    int m = a1 * b1;

    Example28Result res;
    res.n = n;
    res.m = m;
    res.em_value = Rat(-(b1 - 1) * (b2 - 1));

    // Iterated route: the singular locus has dimension n-2, so the j-sum
    // runs to n-2 and only needs Euler numbers of (a1, a2) complete
    // intersections in smaller projective spaces.
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(n) - 1);
    for (int j = 0; j <= n - 2; ++j) v.push_back(ci_euler(n - j, {a1, a2}));
    res.delta_iterated = res.em_value * euler_delta_iterated(v, m);

    // Direct route: intersect the singular locus with a generic degree-m
    // hypersurface instead.
    Rat chi_sigma = ci_euler(n, {a1, a2});
    Rat chi_sigma_cut = ci_euler(n, {a1, a2, m});
    res.delta_direct = res.em_value * euler_delta_direct(chi_sigma, chi_sigma_cut);

    if (res.delta_iterated != res.delta_direct)
        throw std::logic_error("Example 2.8 cross-check failed");

    res.chi_smooth = ci_euler(n, {m});
    res.chi_x = res.chi_smooth - res.delta_direct;
    return res;
}

EMData example_2_8_em_data(int n, int a1, int a2, int b1, int b2) {
    check_example_2_8_args(n, a1, a2, b1, b2);
    Rat em_value = Rat(-(b1 - 1) * (b2 - 1));
    HomologyClass sigma = cohomology_to_homology(ci_chern_class(n, {a1, a2}), n);
    return EMData(n, a1 * b1, sigma * em_value, n - 2);
}

}  // namespace hmsing
