#ifndef HMSING_PROJSPACE_HPP
#define HMSING_PROJSPACE_HPP

#include <map>
#include <vector>

#include "rational.hpp"
#include "series.hpp"
#include "ypoly.hpp"

namespace hmsing {

// Element of H_*(P^n) in the basis of linear-subspace classes [P^k].
class HomologyClass {
public:
    explicit HomologyClass(int ambient_dim)
        : n_(ambient_dim), coeffs_(static_cast<size_t>(ambient_dim) + 1) {
        if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
    }

    int ambient_dim() const { return n_; }
    const Rat& coeff(int dim) const { return coeffs_.at(static_cast<size_t>(dim)); }
    Rat& coeff(int dim) { return coeffs_.at(static_cast<size_t>(dim)); }

    bool is_zero() const {
        for (const Rat& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    // Largest dimension with a nonzero entry, -1 for the zero class.
    int top_dim() const {
        for (int k = n_; k >= 0; --k)
            if (coeffs_[static_cast<size_t>(k)] != 0) return k;
        return -1;
    }

    HomologyClass& operator+=(const HomologyClass& o);
    friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
    friend HomologyClass operator-(const HomologyClass& a);
    friend HomologyClass operator*(const HomologyClass& a, const Rat& s);
    friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    int n_;
    std::vector<Rat> coeffs_;
};

// y-polynomial with HomologyClass coefficients: H_*(P^n)[y, y^-1].
class YClass {
public:
    explicit YClass(int ambient_dim) : n_(ambient_dim) {}

    int ambient_dim() const { return n_; }
    const std::map<long, HomologyClass>& terms() const { return terms_; }

    void add(long y_exp, const HomologyClass& c);
    HomologyClass coeff(long y_exp) const;

    // Specialize y to a rational value.
    HomologyClass eval(const Rat& y) const;

    YClass& operator+=(const YClass& o);
    friend bool operator==(const YClass& a, const YClass& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::map<long, HomologyClass> terms_;  // zero classes never stored
};

// gamma(n; d_1..d_k) = (1+x)^{n+1} prod d_i x/(1+d_i x) in Z[x]/(x^{n+1});
// the cohomology image of the (virtual) Chern class of a smooth complete
// intersection of the given multidegree.
XSeries ci_chern_class(int n, const std::vector<int>& degrees);

// Euler number of the complete intersection: coefficient of x^n above.
Rat ci_euler(int n, const std::vector<int>& degrees);

// chi_y genus of the smooth complete intersection: coefficient of x^n in
// Q_y(x)^{n+1} prod (d_i x / Q_y(d_i x)).
YPoly ci_chi_y_virtual(int n, const std::vector<int>& degrees);

// Pushforward to P^n of the Hirzebruch class of a linear subspace P^k.
YClass hirzebruch_class_of_linear_subspace(int k, int n);

// Cap with multiplier * (hyperplane class): shifts dimensions down by one.
HomologyClass cap_hyperplane(const HomologyClass& c, const Rat& multiplier);
YClass cap_hyperplane(const YClass& c, const Rat& multiplier);

// Cap with a power series in the hyperplane class; the series must be
// truncated at order >= ambient_dim.
HomologyClass cap_series(const HomologyClass& c, const XSeries& s);

// Cohomology series to homology via the monomial pairing x^{n-k} <-> dim k.
HomologyClass cohomology_to_homology(const XSeries& s, int n);

}  // namespace hmsing

#endif
