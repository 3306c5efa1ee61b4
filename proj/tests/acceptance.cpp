// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion either runs a registered verification suite or
// checks a frozen fixture directly.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "milnor.hpp"
#include "projspace.hpp"
#include "spectral.hpp"
#include "spectrum.hpp"
#include "verify.hpp"

using namespace hmsing;

namespace {

bool suites_ok(const std::vector<std::string>& names, std::string& detail) {
    for (const auto& name : names) {
        VerificationReport r = run_suite(name);
        if (!r.ok()) {
            const VerificationFailure& f = r.failures.front();
            detail = name + ": " + f.input + " expected " + f.expected + " got " + f.actual;
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        std::string label;
        std::function<bool(std::string&)> run;
    };

    std::vector<Criterion> criteria = {
        {"1 plane-curve Euler law 3d - d^2, d = 1..10",
         [](std::string& detail) {
             for (int d = 1; d <= 10; ++d) {
                 if (ci_euler(2, {d}) != 3 * d - d * d) {
                     detail = "d = " + std::to_string(d);
                     return false;
                 }
             }
             return true;
         }},
        {"2 chi_y specializations and Q_y series limits",
         [](std::string& detail) { return suites_ok({"chi-y-euler", "qy-specializations"}, detail); }},
        {"3 geometric-series section identity to order 30, m = 1..12",
         [](std::string& detail) { return suites_ok({"identity-2-7-1"}, detail); }},
        {"4 iterated = direct Milnor-class formula, 200 randomized instances",
         [](std::string& detail) { return suites_ok({"milnor-class-routes"}, detail); }},
        {"5 two-factor family: fixture 16/24/8 and route equality on the grid",
         [](std::string& detail) {
             Example28Result r = example_2_8(3, 2, 2, 2, 2);
             if (r.delta_iterated != 16 || r.delta_direct != 16 || r.chi_smooth != 24 ||
                 r.chi_x != 8) {
                 detail = "fixture (3,2,2,2,2)";
                 return false;
             }
             return suites_ok({"example-2-8"}, detail);
         }},
        {"6 spectrum laws: cusp fixture, mu product, symmetry, min-exponent additivity",
         [](std::string& detail) {
             Spectrum cusp = brieskorn_pham({2, 3});
             if (cusp.poly.coeff(rat(5, 6)) != 1 || cusp.poly.coeff(rat(7, 6)) != 1 ||
                 cusp.poly.terms().size() != 2) {
                 detail = "cusp spectrum fixture";
                 return false;
             }
             return suites_ok({"spectrum-laws"}, detail);
         }},
        {"7 classification fixtures: node/cusp/ordinary double point, lct routes",
         [](std::string& detail) {
             if (!classify(brieskorn_pham({2, 2})).du_bois ||
                 classify(brieskorn_pham({2, 3})).du_bois ||
                 !classify(brieskorn_pham({2, 2, 2})).du_bois) {
                 detail = "Du Bois fixtures";
                 return false;
             }
             if (lct_from_spectrum(brieskorn_pham({2, 3})) != rat(5, 6) ||
                 lct_from_resolution({{{4, 6}}}) != rat(5, 6)) {
                 detail = "lct fixtures";
                 return false;
             }
             return suites_ok({"classification"}, detail);
         }},
        {"8 spectral-class fixtures: nodal/cuspidal cubic chi_y and M_0 detector",
         [](std::string& detail) {
             HmYResult node = hm_y_class(IsolatedHypersurfaceModel(2, 3, {brieskorn_pham({2, 2})}));
             if (node.chi_y != YPoly::monomial(1, Rat(-1)) || node.chi_y.eval(Rat(-1)) != 1) {
                 detail = "nodal cubic";
                 return false;
             }
             HmYResult cusp = hm_y_class(IsolatedHypersurfaceModel(2, 3, {brieskorn_pham({2, 3})}));
             if (cusp.chi_y != YPoly(Rat(1)) - YPoly::monomial(1, Rat(1)) ||
                 cusp.chi_y.eval(Rat(-1)) != 2) {
                 detail = "cuspidal cubic";
                 return false;
             }
             return suites_ok({"spectral-fixtures", "dubois-detector", "assembly"}, detail);
         }},
        {"9 join sign law for localized point classes over the germ grid",
         [](std::string& detail) { return suites_ok({"ts-sign"}, detail); }},
        {"10 arrangement Euler numbers vs stratification oracle",
         [](std::string& detail) { return suites_ok({"arrangements"}, detail); }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::printf("PASS criterion %s\n", c.label.c_str());
        } else {
            std::printf("FAIL criterion %s (%s)\n", c.label.c_str(), detail.c_str());
            ++failed;
        }
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed ? 1 : 0;
}
