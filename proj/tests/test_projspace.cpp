#include <doctest.h>

#include "projspace.hpp"

using namespace hmsing;

TEST_CASE("complete-intersection Chern classes") {
    // Plane curve of degree d: Euler number 3d - d^2.
    for (int d = 1; d <= 6; ++d) CHECK(ci_chern_class(2, {d}).coeff(2) == 3 * d - d * d);
    CHECK(ci_chern_class(2, {3}).coeff(2) == 0);   // elliptic curve
    CHECK(ci_chern_class(3, {2, 2}).coeff(3) == 0);  // elliptic quartic curve

    CHECK_THROWS_AS(ci_chern_class(2, {2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ci_chern_class(2, {0}), std::invalid_argument);
}

TEST_CASE("complete-intersection Euler numbers") {
    CHECK(ci_euler(2, {4}) == -4);
    CHECK(ci_euler(3, {4}) == 24);        // K3 surface
    CHECK(ci_euler(3, {2, 2, 4}) == 16);  // Bezout count
    for (int n = 1; n <= 8; ++n) CHECK(ci_euler(n, {1}) == n);
}

TEST_CASE("virtual chi_y genus") {
    // K3: Hodge numbers 1, 20, 1 on the diagonal.
    YPoly k3 = ci_chi_y_virtual(3, {4});
    CHECK(k3.coeff(0) == 2);
    CHECK(k3.coeff(1) == -20);
    CHECK(k3.coeff(2) == 2);
    CHECK(k3.terms().size() == 3);

    CHECK(ci_chi_y_virtual(2, {3}).is_zero());  // elliptic curve

    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 5; ++d)
            CHECK(ci_chi_y_virtual(n, {d}).eval(Rat(-1)) == ci_euler(n, {d}));
}

TEST_CASE("Hirzebruch class of a linear subspace") {
    for (int k = 0; k <= 5; ++k) {
        YClass t = hirzebruch_class_of_linear_subspace(k, 6);
        // chi_y(P^k) = sum (-y)^p.
        YPoly chi;
        for (const auto& [e, h] : t.terms()) chi.add_term(e, h.coeff(0));
        YPoly expect;
        for (int p = 0; p <= k; ++p) expect.add_term(p, (p % 2 != 0) ? Rat(-1) : Rat(1));
        CHECK(chi == expect);

        // y = -1: expansion of (1+h)^{k+1}.
        HomologyClass chern = t.eval(Rat(-1));
        for (int j = 0; j <= 6; ++j) {
            Rat expect_j = j <= k ? binomial(static_cast<unsigned long>(k) + 1,
                                             static_cast<unsigned long>(k - j))
                                  : Rat(0);
            CHECK(chern.coeff(j) == expect_j);
        }

        // y = 0: Todd genus of projective space is 1.
        CHECK(t.eval(Rat(0)).coeff(0) == 1);
    }

    YClass point = hirzebruch_class_of_linear_subspace(0, 4);
    CHECK(point.terms().size() == 1);
    CHECK(point.coeff(0).coeff(0) == 1);

    CHECK_THROWS_AS(hirzebruch_class_of_linear_subspace(5, 4), std::invalid_argument);
}

TEST_CASE("cap products") {
    HomologyClass p2(4);
    p2.coeff(2) = Rat(1);

    HomologyClass capped = cap_hyperplane(p2, Rat(1));
    CHECK(capped.coeff(1) == 1);
    CHECK(capped.top_dim() == 1);

    HomologyClass twice = cap_hyperplane(cap_hyperplane(p2, Rat(3)), Rat(3));
    CHECK(twice.coeff(0) == 9);

    HomologyClass point(4);
    point.coeff(0) = Rat(1);
    CHECK(cap_hyperplane(point, Rat(7)).is_zero());

    // Nilpotence of order ambient_dim + 1.
    HomologyClass acc = p2;
    for (int i = 0; i <= 4; ++i) acc = cap_hyperplane(acc, Rat(1));
    CHECK(acc.is_zero());
}

TEST_CASE("cap with a series") {
    HomologyClass p1(3);
    p1.coeff(1) = Rat(1);

    CHECK(cap_series(p1, XSeries::one(3)) == p1);

    // x/(1+x) acts on [P^1]: only the x term survives.
    XSeries s = XSeries::monomial(3, 1, Rat(1)) *
                (XSeries::one(3) + XSeries::monomial(3, 1, Rat(1))).inverse();
    HomologyClass r = cap_series(p1, s);
    CHECK(r.coeff(0) == 1);
    CHECK(r.top_dim() == 0);

    XSeries too_short(1);
    CHECK_THROWS_AS(cap_series(p1, too_short), std::invalid_argument);
}

TEST_CASE("cohomology to homology pairing") {
    XSeries s(3);
    s.coeff(0) = Rat(5);
    s.coeff(2) = Rat(7);
    HomologyClass h = cohomology_to_homology(s, 3);
    CHECK(h.coeff(3) == 5);
    CHECK(h.coeff(1) == 7);
    CHECK(h.coeff(0) == 0);
}
