#ifndef HMSING_MILNOR_HPP
#define HMSING_MILNOR_HPP

#include <vector>

#include "projspace.hpp"

namespace hmsing {

// Input data for the localized Milnor class of a degree-m hypersurface
// X in P^n: the MacPherson-Chern class of the reduced Euler-Milnor
// constructible function, pushed forward to P^n, together with the
// dimension of the singular locus.
struct EMData {
    int ambient_dim = 0;       // n
    int degree = 1;            // m
    HomologyClass em_class;    // c(EM~_X) in H_*(P^n)
    int sing_dim = 0;          // r

    EMData(int n, int m, HomologyClass em, int r)
        : ambient_dim(n), degree(m), em_class(std::move(em)), sing_dim(r) {
        validate();
    }
    void validate() const;
};

// c(EM~) cap (1 - sum_{j=1}^{r} m(1-m)^{j-1} (x/(1+x))^j).
HomologyClass milnor_class_iterated(const EMData& d);

// c(EM~) cap (1 + m x)^{-1}.
HomologyClass milnor_class_direct(const EMData& d);

// Expand both sides of mx/(1+mx) = sum_{j>=1} m(1-m)^{j-1} (x/(1+x))^j
// to the given truncation order and compare exactly.
bool verify_identity_2_7_1(int m, int order);

// chi(X') - chi(X) from the stratified Euler sums v_j:
// v_0 - sum_{j=1}^{r} m(1-m)^{j-1} v_j.
Rat euler_delta_iterated(const std::vector<Rat>& v, int m);

// chi(X') - chi(X) = v0 - v' with v' the Euler sum over the generic
// degree-m section of the singular locus.
Rat euler_delta_direct(const Rat& v0, const Rat& v_prime);

// The g = g1^b1 - c g2^b2 family: Sing X is the smooth complete
// intersection of degrees (a1, a2), EM~ is the constant -(b1-1)(b2-1),
// and chi(X') - chi(X) is computed by both routes.
struct Example28Result {
    int n = 0;
    int m = 0;               // a1 b1 = a2 b2
    Rat em_value;            // -(b1-1)(b2-1)
    Rat delta_iterated;      // via iterated hyperplane sections
    Rat delta_direct;        // via the generic degree-m section
    Rat chi_smooth;          // chi of a smooth degree-m hypersurface
    Rat chi_x;               // chi_smooth - delta
};

Example28Result example_2_8(int n, int a1, int a2, int b1, int b2);

// The EMData instance matching Example 2.8: em_class is em_value times
// the homology image of the Chern class of the (a1, a2) complete
// intersection.
EMData example_2_8_em_data(int n, int a1, int a2, int b1, int b2);

}  // namespace hmsing

#endif
