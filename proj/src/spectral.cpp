#include "spectral.hpp"

namespace hmsing {

void IsolatedHypersurfaceModel::validate() const {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    for (const Spectrum& g : germs)
        if (g.num_vars != ambient_dim)
            throw std::invalid_argument("germ variable count must equal the ambient dimension");
}

void GradedSpectralClass::add(const Rat& exp, const HomologyClass& c) {
    if (c.ambient_dim() != n_) throw std::invalid_argument("ambient dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedSpectralClass GradedSpectralClass::operator*(const FracExpPoly& p) const {
    GradedSpectralClass r(n_);
    for (const auto& [ea, h] : terms_)
        for (const auto& [eb, c] : p.terms()) r.add(Rat(ea + eb), h * c);
    return r;
}

YClass GradedSpectralClass::int_part() const {
    YClass r(n_);
    for (const auto& [e, h] : terms_) {
        long k = floor_long(e);
        r.add(k, (k % 2 != 0) ? -h : h);
    }
    return r;
}

YPoly int_part_map(const FracExpPoly& p) { return p.int_part(); }

FracExpPoly localized_point_class(const Spectrum& germ) {
    if (germ.poly.is_zero()) throw std::invalid_argument("empty germ spectrum");
    if (!check_symmetry(germ))
        throw std::invalid_argument("unsupported germ: Sp/Sp' ambiguity");
    int d_x = germ.num_vars - 1;
    return (d_x % 2 != 0) ? -germ.poly : germ.poly;
}

HmYResult hm_y_class(const IsolatedHypersurfaceModel& model) {
    model.validate();
    HmYResult r;
    for (const Spectrum& g : model.germs) r.m_y += int_part_map(localized_point_class(g));
    r.chi_y = ci_chi_y_virtual(model.ambient_dim, {model.degree}) - r.m_y;
    return r;
}

namespace {

Rat m_zero_of_germ(const Spectrum& g) {
    FracExpPoly lc = localized_point_class(g);
    Rat s(0);
    for (const auto& [e, c] : lc.terms())
        if (e > 0 && e < 1) s += c;
    return s;
}

}  // namespace

MZeroResult m_zero(const IsolatedHypersurfaceModel& model) {
    model.validate();
    MZeroResult r;
    r.total = Rat(0);
    r.du_bois = true;
    for (const Spectrum& g : model.germs) {
        Rat v = m_zero_of_germ(g);
        if (v != 0) r.du_bois = false;
        r.total += v;
        r.per_germ.push_back(std::move(v));
    }
    return r;
}

std::vector<Rat> jumping_coefficients(const Spectrum& germ) {
    FracExpPoly lc = localized_point_class(germ);
    std::vector<Rat> jc;
    for (const auto& [e, c] : lc.terms())
        if (e > 0 && e < 1) jc.push_back(e);
    return jc;
}

bool theorem_join_sign_check(const Spectrum& g1, const Spectrum& g2) {
    if (g1.poly.is_zero() || g2.poly.is_zero()) {
        // A smooth factor annihilates both sides.
        return ts_product(g1, g2).poly.is_zero();
    }
    FracExpPoly lhs = localized_point_class(ts_product(g1, g2));
    FracExpPoly rhs = -(localized_point_class(g1) * localized_point_class(g2));
    return lhs == rhs;
}

FracExpPoly section_multiplier(int m, int j) {
    if (m < 1) throw std::invalid_argument("degree must be >= 1");
    if (j < 0) throw std::invalid_argument("section level must be >= 0");
    FracExpPoly base;
    for (int i = 1; i < m; ++i) base.add_term(rat(i, m), Rat(-1));
    return base.pow(static_cast<unsigned long>(j));
}

YClass assemble_hm_class(const std::vector<GradedSpectralClass>& classes, int m) {
    if (classes.empty()) throw std::invalid_argument("empty class list");
    int n = classes[0].ambient_dim();
    YClass r(n);
    for (size_t j = 0; j < classes.size(); ++j) {
        if (classes[j].ambient_dim() != n)
            throw std::invalid_argument("inconsistent ambient dimensions");
        r += (classes[j] * section_multiplier(m, static_cast<int>(j))).int_part();
    }
    return r;
}

}  // namespace hmsing
