#ifndef HMSING_SPECTRAL_HPP
#define HMSING_SPECTRAL_HPP

#include <vector>

#include "projspace.hpp"
#include "spectrum.hpp"

namespace hmsing {

// Degree-m hypersurface X in P^n with isolated singularities, each given
// by the spectrum of its germ (in n variables, so dim X = n - 1).
struct IsolatedHypersurfaceModel {
    int ambient_dim = 0;          // n
    int degree = 1;               // m
    std::vector<Spectrum> germs;  // one per singular point

    IsolatedHypersurfaceModel(int n, int m, std::vector<Spectrum> g)
        : ambient_dim(n), degree(m), germs(std::move(g)) {
        validate();
    }
    void validate() const;
};

// Fractional-exponent polynomial with homology-class coefficients:
// H_*(P^n)[y~^{1/e}].
class GradedSpectralClass {
public:
    explicit GradedSpectralClass(int ambient_dim) : n_(ambient_dim) {}

    int ambient_dim() const { return n_; }
    const std::map<Rat, HomologyClass>& terms() const { return terms_; }

    void add(const Rat& exp, const HomologyClass& c);

    GradedSpectralClass operator*(const FracExpPoly& p) const;

    // Exponent-wise integer-part specialization down to a YClass.
    YClass int_part() const;

private:
    int n_;
    std::map<Rat, HomologyClass> terms_;
};

// sum a_e y~^e -> sum a_e (-y)^{floor(e)}.
YPoly int_part_map(const FracExpPoly& p);

// Point-level spectral Hirzebruch-Milnor class of an isolated germ:
// (-1)^{dim X} Sp(germ), with dim X = num_vars - 1.  Only symmetric
// (quasi-homogeneous) germs are supported.
FracExpPoly localized_point_class(const Spectrum& germ);

struct HmYResult {
    YPoly m_y;    // degree-0 Hirzebruch-Milnor class
    YPoly chi_y;  // chi_y genus of X: virtual value minus m_y
};

// Degree-0 part of M_y(X) for an isolated-singularity model, and the
// resulting chi_y genus of X.
HmYResult hm_y_class(const IsolatedHypersurfaceModel& model);

struct MZeroResult {
    std::vector<Rat> per_germ;  // M_0 contribution of each germ
    Rat total;
    bool du_bois = false;  // every per-germ value vanishes
};

// M_0(X) = coefficient sum over exponents in (0, 1) of the localized
// point classes; vanishing detects Du Bois singularities.
MZeroResult m_zero(const IsolatedHypersurfaceModel& model);

// Exponents in (0, 1) carrying a nonzero coefficient of the localized
// point class; the minimum (or 1) is the log canonical threshold.
std::vector<Rat> jumping_coefficients(const Spectrum& germ);

// Join sign law: localized class of the join equals minus the product of
// the localized classes.
bool theorem_join_sign_check(const Spectrum& g1, const Spectrum& g2);

// (-sum_{i=1}^{m-1} y~^{i/m})^j, the j-th hyperplane-section multiplier.
FracExpPoly section_multiplier(int m, int j);

// M_y = sum_j int_part(classes[j] * multiplier(m, j)) over user-supplied
// graded spectral classes, one per iterated-section level j = 0..r.
YClass assemble_hm_class(const std::vector<GradedSpectralClass>& classes, int m);

}  // namespace hmsing

#endif
