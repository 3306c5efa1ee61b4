#ifndef HMSING_ARRANGEMENT_HPP
#define HMSING_ARRANGEMENT_HPP

#include <set>
#include <vector>

#include "projspace.hpp"

namespace hmsing {

// Projective hyperplane arrangement in P^n: one linear form (n+1
// coefficients) per hyperplane, no repeated hyperplanes.
struct Arrangement {
    int ambient_dim = 0;
    std::vector<std::vector<Rat>> forms;

    Arrangement(int n, std::vector<std::vector<Rat>> f);
    void validate() const;
};

// Flat of the intersection lattice.  The canonical equation span (reduced
// row-echelon, pivots normalized to 1) identifies the flat exactly.
struct Flat {
    std::vector<std::vector<Rat>> equations;  // RREF basis of the span
    int codim = 0;                            // rank of the span
    std::set<int> members;                    // hyperplanes containing the flat
    Rat moebius;                              // mu(flat) in the containment poset
    Rat multiplicity;                         // r_Z = (-1)^codim mu, always > 0
};

// Reduced row-echelon form with pivots normalized to 1; returns the
// nonzero rows.
std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows);

// All distinct nonempty intersections of subsets of hyperplanes, ordered
// by codimension; Moebius values and multiplicities filled in.
std::vector<Flat> build_lattice(const Arrangement& a);

// MacPherson-Chern class (y = -1) of the arrangement, as a homology class.
HomologyClass arrangement_chern_class(const Arrangement& a);

// Full Hirzebruch class of the arrangement.
YClass arrangement_hirzebruch_class(const Arrangement& a);

// Euler characteristic: dimension-0 entry of the Chern class.
Rat arrangement_euler(const Arrangement& a);

// c(P^n) minus the arrangement Chern class: the Chern class of the
// complement.
HomologyClass complement_class(const Arrangement& a);

// Independent route to chi(X): recursive Euler characteristics of open
// strata, summed over all flats.  No Moebius values involved.
Rat stratification_euler_oracle(const Arrangement& a);

}  // namespace hmsing

#endif
