#include "spectrum.hpp"

namespace hmsing {

Spectrum sp_power(int m, bool allow_smooth) {
    if (m == 1 && allow_smooth) return Spectrum(FracExpPoly(), 1);
    if (m < 2) throw std::invalid_argument("power germ needs exponent >= 2");
    FracExpPoly p;
    for (int k = 1; k < m; ++k) p.add_term(rat(k, m), Rat(1));
    return Spectrum(std::move(p), 1);
}

Spectrum ts_product(const Spectrum& a, const Spectrum& b) {
    return Spectrum(a.poly * b.poly, a.num_vars + b.num_vars);
}

Spectrum brieskorn_pham(const std::vector<int>& exponents) {
    if (exponents.empty()) throw std::invalid_argument("empty exponent list");
    Spectrum s = sp_power(exponents[0]);
    for (size_t i = 1; i < exponents.size(); ++i) s = ts_product(s, sp_power(exponents[i]));
    return s;
}

Int milnor_number(const Spectrum& s) {
    Rat mass = s.poly.total_mass();
    if (!is_integer(mass) || mass < 0) throw std::domain_error("spectrum mass not a nonnegative integer");
    return mass.get_num();
}

bool check_symmetry(const Spectrum& s) {
    for (const auto& [e, c] : s.poly.terms()) {
        if (s.poly.coeff(Rat(s.num_vars) - e) != c) return false;
    }
    return true;
}

Rat min_exponent(const Spectrum& s) { return s.poly.min_exponent(); }
Rat max_exponent(const Spectrum& s) { return s.poly.max_exponent(); }

Classification classify(const Spectrum& s) {
    Classification c;
    c.du_bois = min_exponent(s) >= 1;
    c.insignificant = max_exponent(s) <= s.num_vars - 1;
    return c;
}

Rat monodromy_beta(const Spectrum& s) {
    if (s.poly.is_zero()) throw std::domain_error("empty spectrum");
    // Representative of the smallest exponent mod 1 in (0, 1]: the smallest
    // positive rational whose exponential is the leading monodromy eigenvalue.
    Rat e = min_exponent(s);
    Rat f = e - Rat(floor_int(e));
    if (f == 0) f = Rat(1);
    return f;
}

bool rational_after_cover(const Spectrum& s, int m) {
    if (m < 1) throw std::invalid_argument("cover degree must be >= 1");
    Rat beta = monodromy_beta(s);
    if (rat(1, m) > beta)
        throw std::domain_error("base-change condition violated: 1/m exceeds smallest eigenvalue exponent");
    return min_exponent(s) + rat(1, m) > 1;
}

Rat lct_from_spectrum(const Spectrum& s) {
    Rat a = min_exponent(s);
    return a < 1 ? a : Rat(1);
}

Rat lct_from_resolution(const ResolutionData& r) {
    if (r.pairs.empty()) throw std::invalid_argument("empty resolution data");
    bool have = false;
    Rat v;
    for (const auto& [nu, mult] : r.pairs) {
        if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
        if (nu < 0) throw std::invalid_argument("discrepancy must be >= 0");
        Rat q = rat(nu + 1, mult);
        if (!have || q < v) {
            v = q;
            have = true;
        }
    }
    return v < 1 ? v : Rat(1);
}

}  // namespace hmsing
