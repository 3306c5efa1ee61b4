#include <doctest.h>

#include "arrangement.hpp"

using namespace hmsing;

namespace {

std::vector<std::vector<Rat>> generic_lines(int k) {
    std::vector<std::vector<Rat>> forms;
    for (int i = 1; i <= k; ++i) forms.push_back({Rat(1), Rat(i), Rat(i) * Rat(i)});
    return forms;
}

int count_codim(const std::vector<Flat>& lattice, int codim) {
    int c = 0;
    for (const Flat& f : lattice)
        if (f.codim == codim) ++c;
    return c;
}

}  // namespace

TEST_CASE("row reduction canonicalizes spans") {
    auto a = rref({{Rat(2), Rat(4), Rat(6)}});
    auto b = rref({{Rat(1), Rat(2), Rat(3)}});
    CHECK(a == b);

    auto two = rref({{Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(-1), Rat(0)}});
    auto swapped = rref({{Rat(0), Rat(2), Rat(0)}, {Rat(3), Rat(0), Rat(0)}});
    CHECK(two == swapped);
    CHECK(two.size() == 2);

    auto dependent = rref({{Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(2)}});
    CHECK(dependent.size() == 1);
}

TEST_CASE("lattice construction") {
    Arrangement triangle(2, generic_lines(3));
    auto lattice = build_lattice(triangle);
    CHECK(count_codim(lattice, 1) == 3);
    CHECK(count_codim(lattice, 2) == 3);

    Arrangement pencil(2, {{Rat(1), Rat(0), Rat(0)},
                           {Rat(0), Rat(1), Rat(0)},
                           {Rat(1), Rat(1), Rat(0)}});
    auto pencil_lattice = build_lattice(pencil);
    CHECK(count_codim(pencil_lattice, 1) == 3);
    CHECK(count_codim(pencil_lattice, 2) == 1);

    Arrangement single(4, {{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}});
    CHECK(build_lattice(single).size() == 1);

    CHECK_THROWS_WITH_AS(Arrangement(2, {{Rat(1), Rat(0), Rat(0)}, {Rat(2), Rat(0), Rat(0)}}),
                         "repeated hyperplane", std::invalid_argument);
    CHECK_THROWS_AS(Arrangement(2, {{Rat(0), Rat(0), Rat(0)}}), std::invalid_argument);
}

TEST_CASE("Moebius values") {
    Arrangement pair(2, generic_lines(2));
    for (const Flat& f : build_lattice(pair)) {
        if (f.codim == 1) {
            CHECK(f.moebius == -1);
            CHECK(f.multiplicity == 1);
        } else {
            CHECK(f.moebius == 1);
            CHECK(f.multiplicity == 1);
        }
    }

    Arrangement pencil(2, {{Rat(1), Rat(0), Rat(0)},
                           {Rat(0), Rat(1), Rat(0)},
                           {Rat(1), Rat(1), Rat(0)}});
    for (const Flat& f : build_lattice(pencil)) {
        if (f.codim == 2) {
            CHECK(f.moebius == 2);
            CHECK(f.multiplicity == 2);
        }
    }
}

TEST_CASE("arrangement classes and Euler numbers") {
    // Single hyperplane: the class of P^{n-1}.
    Arrangement single(3, {{Rat(1), Rat(0), Rat(0), Rat(0)}});
    HomologyClass c = arrangement_chern_class(single);
    CHECK(c.coeff(2) == 1);
    CHECK(arrangement_euler(single) == 3);

    Arrangement triangle(2, generic_lines(3));
    CHECK(arrangement_euler(triangle) == 3);
    // 3[P^1] + (6 - 3)[P^0]: each line contributes chi = 2, the three
    // double points are counted once each.
    CHECK(arrangement_chern_class(triangle).coeff(1) == 3);
    CHECK(arrangement_chern_class(triangle).coeff(0) == 3);
    CHECK(arrangement_chern_class(triangle).coeff(2) == 0);

    for (int k = 2; k <= 6; ++k) {
        Arrangement pencil_like(2, [&] {
            std::vector<std::vector<Rat>> forms;
            for (int i = 0; i < k; ++i) forms.push_back({Rat(1), Rat(i), Rat(0)});
            return forms;
        }());
        CHECK(arrangement_euler(pencil_like) == k + 1);
    }

    // Hirzebruch class at y = -1 agrees with the Chern route.
    CHECK(arrangement_hirzebruch_class(triangle).eval(Rat(-1)) ==
          arrangement_chern_class(triangle));
}

TEST_CASE("complement classes") {
    Arrangement line(2, {{Rat(1), Rat(0), Rat(0)}});
    CHECK(complement_class(line).coeff(0) == 1);

    Arrangement triangle(2, generic_lines(3));
    CHECK(complement_class(triangle).coeff(0) == 0);
}

TEST_CASE("stratification oracle") {
    for (int k = 1; k <= 7; ++k) {
        Arrangement a(2, generic_lines(k));
        CHECK(arrangement_euler(a) == stratification_euler_oracle(a));
    }
    Arrangement coords(3, {{Rat(1), Rat(0), Rat(0), Rat(0)},
                           {Rat(0), Rat(1), Rat(0), Rat(0)},
                           {Rat(0), Rat(0), Rat(1), Rat(0)},
                           {Rat(0), Rat(0), Rat(0), Rat(1)}});
    CHECK(arrangement_euler(coords) == stratification_euler_oracle(coords));
}
