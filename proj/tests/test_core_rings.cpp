#include <doctest.h>

#include <random>

#include "fracpoly.hpp"
#include "series.hpp"

using namespace hmsing;

namespace {

XSeries one_plus(int order, const Rat& c) {
    return XSeries::one(order) + XSeries::monomial(order, 1, c);
}

// Long-division oracle for 1/(1 + a x): coefficients (-a)^k.
XSeries geometric_oracle(int order, const Rat& a) {
    XSeries s(order);
    Rat p(1);
    for (int k = 0; k <= order; ++k) {
        s.coeff(k) = p;
        p *= -a;
    }
    return s;
}

XSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    XSeries s(order);
    for (int k = 0; k <= order; ++k) s.coeff(k) = rat(num(rng), den(rng));
    return s;
}

FracExpPoly random_fracpoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 8);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> count(0, 4);
    FracExpPoly p;
    int terms = count(rng);
    for (int i = 0; i < terms; ++i) p.add_term(rat(num(rng), den(rng)), rat(num(rng), den(rng)));
    return p;
}

}  // namespace

TEST_CASE("series inversion") {
    CHECK(one_plus(3, Rat(1)).inverse() == geometric_oracle(3, Rat(1)));
    CHECK(one_plus(3, Rat(1)) * one_plus(3, Rat(1)).inverse() == XSeries::one(3));
    CHECK(one_plus(2, Rat(4)).inverse() == geometric_oracle(2, Rat(4)));

    // Two-sided inverse modulo truncation for a generic unit series.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        XSeries s = random_series(rng, 6);
        if (s.coeff(0) == 0) s.coeff(0) = Rat(1);
        CHECK(s * s.inverse() == XSeries::one(6));
        CHECK(s.inverse() * s == XSeries::one(6));
    }

    XSeries no_unit(3);
    no_unit.coeff(1) = Rat(1);
    CHECK_THROWS_WITH_AS(no_unit.inverse(), "non-invertible constant term", std::domain_error);
}

TEST_CASE("scaled substitution") {
    XSeries s = one_plus(3, Rat(1));
    XSeries scaled = s.substitute_scaled(Rat(3));
    CHECK(scaled.coeff(0) == 1);
    CHECK(scaled.coeff(1) == 3);

    XSeries t(3);
    t.coeff(1) = Rat(1);
    t.coeff(2) = Rat(-1);
    XSeries t2 = t.substitute_scaled(Rat(2));
    CHECK(t2.coeff(1) == 2);
    CHECK(t2.coeff(2) == -4);
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        XSeries a = random_series(rng, 5);
        XSeries b = random_series(rng, 5);
        XSeries c = random_series(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        FracExpPoly p = random_fracpoly(rng);
        FracExpPoly q = random_fracpoly(rng);
        FracExpPoly r = random_fracpoly(rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("Q_y generating series") {
    XYSeries q = qy_series(4);
    CHECK(q.coeff(0) == YPoly(Rat(1)));

    // y = -1 collapses to 1 + x at every order.
    for (int order = 0; order <= 8; ++order) {
        XSeries at = specialize_y(qy_series(order), Rat(-1));
        XSeries expect = XSeries::one(order);
        if (order >= 1) expect.coeff(1) = Rat(1);
        CHECK(at == expect);
    }

    // y = 0: the Todd series 1 + x/2 + x^2/12 + 0 x^3 - x^4/720.
    XSeries todd = specialize_y(q, Rat(0));
    CHECK(todd.coeff(0) == 1);
    CHECK(todd.coeff(1) == rat(1, 2));
    CHECK(todd.coeff(2) == rat(1, 12));
    CHECK(todd.coeff(3) == 0);
    CHECK(todd.coeff(4) == rat(-1, 720));

    // Scaling then specializing at y=-1 gives 1 + d x.
    XYSeries scaled = qy_series(3).substitute_scaled(Rat(5));
    XSeries lim = specialize_y(scaled, Rat(-1));
    CHECK(lim.coeff(0) == 1);
    CHECK(lim.coeff(1) == 5);
    CHECK(lim.coeff(2) == 0);
}

TEST_CASE("fractional-exponent polynomials") {
    FracExpPoly half = FracExpPoly::term(rat(1, 2), Rat(1));
    CHECK(half * half == FracExpPoly::term(Rat(1), Rat(1)));

    FracExpPoly cubic;
    cubic.add_term(rat(1, 3), Rat(1));
    cubic.add_term(rat(2, 3), Rat(1));
    FracExpPoly cusp = half * cubic;
    CHECK(cusp.coeff(rat(5, 6)) == 1);
    CHECK(cusp.coeff(rat(7, 6)) == 1);
    CHECK(cusp.terms().size() == 2);

    CHECK(half + half == FracExpPoly::term(rat(1, 2), Rat(2)));

    CHECK(cusp.common_denominator() == 6);
    CHECK(FracExpPoly::term(Rat(1), Rat(1)).common_denominator() == 1);
    FracExpPoly mixed;
    mixed.add_term(rat(1, 2), Rat(1));
    mixed.add_term(rat(1, 3), Rat(1));
    CHECK(mixed.common_denominator() == 6);

    // Min-exponent additivity for nonnegative-coefficient inputs.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        FracExpPoly p = random_fracpoly(rng);
        FracExpPoly q = random_fracpoly(rng);
        FracExpPoly pa, qa;
        for (const auto& [e, c] : p.terms()) pa.add_term(e, c < 0 ? Rat(-c) : c);
        for (const auto& [e, c] : q.terms()) qa.add_term(e, c < 0 ? Rat(-c) : c);
        if (pa.is_zero() || qa.is_zero()) continue;
        CHECK((pa * qa).min_exponent() == pa.min_exponent() + qa.min_exponent());
    }
}
