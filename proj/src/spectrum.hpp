#ifndef HMSING_SPECTRUM_HPP
#define HMSING_SPECTRUM_HPP

#include <vector>

#include "fracpoly.hpp"

namespace hmsing {

// Steenbrink spectrum of an isolated hypersurface singularity germ in
// num_vars variables: nonnegative integer coefficients, exponents in
// (0, num_vars), total mass the Milnor number.
struct Spectrum {
    FracExpPoly poly;
    int num_vars = 0;  // d_Y

    Spectrum() = default;
    Spectrum(FracExpPoly p, int n) : poly(std::move(p)), num_vars(n) {}
};

// Resolution data for an lct computation: discrepancy nu_i and
// multiplicity m_i per exceptional (or strict-transform) divisor.
struct ResolutionData {
    std::vector<std::pair<long, long>> pairs;  // (nu, mult)
};

// Sp(z^m) = sum_{k=1}^{m-1} t^{k/m}.  m = 1 denotes the smooth germ and
// yields the empty spectrum only when allow_smooth is set.
Spectrum sp_power(int m, bool allow_smooth = false);

// Thom-Sebastiani: spectra multiply, variable counts add.
Spectrum ts_product(const Spectrum& a, const Spectrum& b);

// Spectrum of sum x_i^{a_i}, each a_i >= 2.
Spectrum brieskorn_pham(const std::vector<int>& exponents);

// Total coefficient mass; always a nonnegative integer.
Int milnor_number(const Spectrum& s);

// Exponent multiset invariant under a -> num_vars - a.
bool check_symmetry(const Spectrum& s);

Rat min_exponent(const Spectrum& s);
Rat max_exponent(const Spectrum& s);

struct Classification {
    bool du_bois = false;        // min exponent >= 1
    bool insignificant = false;  // max exponent <= num_vars - 1
};
Classification classify(const Spectrum& s);

// Smallest positive beta with e(beta) a monodromy eigenvalue, computed
// from the exponent classes mod 1 with representatives in (0, 1].
Rat monodromy_beta(const Spectrum& s);

// Whether the total space of the m-fold base-change cover has a rational
// singularity: min exponent + 1/m > 1.  Requires 1/m <= beta.
bool rational_after_cover(const Spectrum& s, int m);

// min(min exponent, 1), valid for the supported quasi-homogeneous class.
Rat lct_from_spectrum(const Spectrum& s);

// min((nu_i+1)/m_i), capped at 1.
Rat lct_from_resolution(const ResolutionData& r);

}  // namespace hmsing

#endif
