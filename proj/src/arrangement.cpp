#include "arrangement.hpp"

#include <algorithm>
#include <map>

namespace hmsing {

Arrangement::Arrangement(int n, std::vector<std::vector<Rat>> f)
    : ambient_dim(n), forms(std::move(f)) {
    validate();
}

void Arrangement::validate() const {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (forms.empty()) throw std::invalid_argument("empty arrangement");
    for (const auto& form : forms) {
        if (static_cast<int>(form.size()) != ambient_dim + 1)
            throw std::invalid_argument("form length must be ambient_dim + 1");
        bool nonzero = false;
        for (const Rat& c : form)
            if (c != 0) nonzero = true;
        if (!nonzero) throw std::invalid_argument("zero form");
    }
    // Proportional forms define the same hyperplane.
    for (size_t i = 0; i < forms.size(); ++i)
        for (size_t j = i + 1; j < forms.size(); ++j)
            if (rref({forms[i]}) == rref({forms[j]}))
                throw std::invalid_argument("repeated hyperplane");
}

std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return rows;
    size_t cols = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rat inv = Rat(1) / rows[pivot_row][col];
        for (size_t c = col; c < cols; ++c) rows[pivot_row][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            Rat factor = rows[r][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

namespace {

int rank_of(const std::vector<std::vector<Rat>>& rows) {
    return static_cast<int>(rref(rows).size());
}

bool form_in_span(const std::vector<Rat>& form, const std::vector<std::vector<Rat>>& span_rref) {
    auto extended = span_rref;
    extended.push_back(form);
    return rank_of(extended) == static_cast<int>(span_rref.size());
}

}  // namespace

std::vector<Flat> build_lattice(const Arrangement& a) {
    a.validate();
    int n = a.ambient_dim;
    int k = static_cast<int>(a.forms.size());

    // Closure-based construction: grow flats level by level, keyed by the
    // canonical RREF of the equation span.
    std::map<std::vector<std::vector<Rat>>, Flat> flats;
    auto insert_span = [&](const std::vector<std::vector<Rat>>& span) {
        int codim = static_cast<int>(span.size());
        if (codim > n) return false;  // empty projective intersection
        if (flats.count(span)) return false;
        Flat f;
        f.equations = span;
        f.codim = codim;
        for (int i = 0; i < k; ++i)
            if (form_in_span(a.forms[i], span)) f.members.insert(i);
        flats.emplace(span, std::move(f));
        return true;
    };

    for (int i = 0; i < k; ++i) insert_span(rref({a.forms[i]}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::vector<Rat>>> current;
        for (const auto& [span, f] : flats) current.push_back(span);
        for (const auto& span : current) {
            for (int i = 0; i < k; ++i) {
                auto extended = span;
                extended.push_back(a.forms[i]);
                auto closed = rref(std::move(extended));
                if (static_cast<int>(closed.size()) == static_cast<int>(span.size())) continue;
                if (insert_span(closed)) grew = true;
            }
        }
    }

    std::vector<Flat> result;
    for (auto& [span, f] : flats) result.push_back(std::move(f));
    std::stable_sort(result.begin(), result.end(),
                     [](const Flat& x, const Flat& y) { return x.codim < y.codim; });

    // Moebius recursion over the containment order (W < Z iff W's member
    // set is strictly contained in Z's); the ambient space is the bottom
    // element with mu = 1.
    for (size_t zi = 0; zi < result.size(); ++zi) {
        Flat& z = result[zi];
        Rat mu = Rat(-1);  // minus mu(ambient)
        for (size_t wi = 0; wi < zi; ++wi) {
            const Flat& w = result[wi];
            if (w.codim >= z.codim) continue;
            if (std::includes(z.members.begin(), z.members.end(), w.members.begin(),
                              w.members.end()) &&
                w.members != z.members)
                mu -= w.moebius;
        }
        z.moebius = mu;
        z.multiplicity = (z.codim % 2 != 0) ? Rat(-mu) : mu;
        if (z.multiplicity <= 0) throw std::logic_error("nonpositive flat multiplicity");
    }
    return result;
}

namespace {

// Chern class of P^d pushed into H_*(P^n): dimension-j entry binom(d+1, d-j).
HomologyClass chern_of_linear_subspace(int d, int n) {
    HomologyClass c(n);
    for (int j = 0; j <= d; ++j)
        c.coeff(j) = binomial(static_cast<unsigned long>(d) + 1,
                              static_cast<unsigned long>(d - j));
    return c;
}

}  // namespace

HomologyClass arrangement_chern_class(const Arrangement& a) {
    int n = a.ambient_dim;
    HomologyClass r(n);
    for (const Flat& z : build_lattice(a)) {
        int d = n - z.codim;
        Rat w = (z.codim % 2 == 0) ? Rat(-z.multiplicity) : z.multiplicity;
        r += chern_of_linear_subspace(d, n) * w;
    }
    return r;
}

YClass arrangement_hirzebruch_class(const Arrangement& a) {
    int n = a.ambient_dim;
    YClass r(n);
    for (const Flat& z : build_lattice(a)) {
        int d = n - z.codim;
        Rat w = (z.codim % 2 == 0) ? Rat(-z.multiplicity) : z.multiplicity;
        YClass t = hirzebruch_class_of_linear_subspace(d, n);
        for (const auto& [e, h] : t.terms()) r.add(e, h * w);
    }
    return r;
}

Rat arrangement_euler(const Arrangement& a) { return arrangement_chern_class(a).coeff(0); }

HomologyClass complement_class(const Arrangement& a) {
    int n = a.ambient_dim;
    HomologyClass pn = hirzebruch_class_of_linear_subspace(n, n).eval(Rat(-1));
    return pn + (-arrangement_chern_class(a));
}

Rat stratification_euler_oracle(const Arrangement& a) {
    std::vector<Flat> lattice = build_lattice(a);
    int n = a.ambient_dim;
    // chi of the open stratum of each flat, deepest flats first:
    // chi(P^d) minus the open strata of all strictly finer flats.
    std::vector<Rat> open_chi(lattice.size());
    for (size_t i = lattice.size(); i-- > 0;) {
        const Flat& z = lattice[i];
        Rat chi = Rat(n - z.codim + 1);  // chi(P^d) = d + 1
        for (size_t j = lattice.size(); j-- > i + 1;) {
            const Flat& w = lattice[j];
            if (w.codim <= z.codim) continue;
            if (std::includes(w.members.begin(), w.members.end(), z.members.begin(),
                              z.members.end()))
                chi -= open_chi[j];
        }
        open_chi[i] = chi;
    }
    Rat total(0);
    for (const Rat& c : open_chi) total += c;
    return total;
}

}  // namespace hmsing
