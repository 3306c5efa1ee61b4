#include "verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace hmsing {

namespace {

void record(VerificationReport& rep, bool ok, const std::string& input,
            const std::string& expected, const std::string& actual) {
    ++rep.cases;
    if (!ok) rep.failures.push_back({input, expected, actual});
}

std::string series_str(const XSeries& s) {
    std::ostringstream os;
    for (int k = 0; k <= s.order(); ++k) {
        if (k) os << ",";
        os << rat_to_string(s.coeff(k));
    }
    return os.str();
}

std::string class_str(const HomologyClass& c) {
    std::ostringstream os;
    for (int k = 0; k <= c.ambient_dim(); ++k) {
        if (k) os << ",";
        os << rat_to_string(c.coeff(k));
    }
    return os.str();
}

// Bernoulli numbers via sum_{k=0}^{n} binom(n+1, k) B_k = 0, B_0 = 1.
std::vector<Rat> bernoulli_numbers(int count) {
    std::vector<Rat> b(static_cast<size_t>(count) + 1);
    b[0] = Rat(1);
    for (int n = 1; n <= count; ++n) {
        Rat s(0);
        for (int k = 0; k < n; ++k)
            s += binomial(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(k)) *
                 b[static_cast<size_t>(k)];
        b[static_cast<size_t>(n)] = -s / binomial(static_cast<unsigned long>(n) + 1,
                                                  static_cast<unsigned long>(n));
    }
    return b;
}

// Independent expansion of x/tanh(x) = (e^{2x}+1) / ((e^{2x}-1)/x).
XSeries l_series_oracle(int order) {
    XSeries num(order);
    XSeries denom(order);  // (e^{2x} - 1)/x, shifted down one degree
    Rat fact(1);
    Rat pow2(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= Rat(k);
        // e^{2x} coefficient of x^k is 2^k/k!
        num.coeff(k) = pow2 / fact;
        pow2 *= Rat(2);
    }
    num.coeff(0) += Rat(1);
    Rat fact2(1);
    Rat p2(2);
    for (int k = 0; k <= order; ++k) {
        fact2 *= Rat(k + 1);
        denom.coeff(k) = p2 / fact2;
        p2 *= Rat(2);
    }
    return num * denom.inverse();
}

VerificationReport suite_qy_specializations(const json&) {
    VerificationReport rep{"qy-specializations"};
    std::vector<Rat> bern = bernoulli_numbers(12);
    for (int order = 0; order <= 10; ++order) {
        XYSeries q = qy_series(order);

        XSeries at_m1 = specialize_y(q, Rat(-1));
        XSeries expect = XSeries::one(order);
        if (order >= 1) expect.coeff(1) = Rat(1);
        record(rep, at_m1 == expect, "Q_y at y=-1, order " + std::to_string(order), "1 + x",
               series_str(at_m1));

        XSeries todd = specialize_y(q, Rat(0));
        XSeries todd_oracle(order);
        Rat fact(1);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) fact *= Rat(k);
            Rat c = bern[static_cast<size_t>(k)] / fact;
            todd_oracle.coeff(k) = (k % 2 != 0) ? Rat(-c) : c;
        }
        record(rep, todd == todd_oracle, "Q_y at y=0, order " + std::to_string(order),
               series_str(todd_oracle), series_str(todd));

        XSeries l = specialize_y(q, Rat(1));
        XSeries l_oracle = l_series_oracle(order);
        record(rep, l == l_oracle, "Q_y at y=1, order " + std::to_string(order),
               series_str(l_oracle), series_str(l));
    }
    return rep;
}

void for_each_degree_multiset(int max_count, int max_degree,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> degrees;
    std::function<void(int)> rec = [&](int min_d) {
        fn(degrees);
        if (static_cast<int>(degrees.size()) == max_count) return;
        for (int d = min_d; d <= max_degree; ++d) {
            degrees.push_back(d);
            rec(d);
            degrees.pop_back();
        }
    };
    rec(1);
}

VerificationReport suite_chi_y_euler(const json&) {
    VerificationReport rep{"chi-y-euler"};
    for (int n = 1; n <= 8; ++n) {
        for_each_degree_multiset(3, 6, [&](const std::vector<int>& degrees) {
            if (degrees.empty() || static_cast<int>(degrees.size()) > n) return;
            YPoly chi = ci_chi_y_virtual(n, degrees);
            Rat euler = ci_euler(n, degrees);
            std::ostringstream in;
            in << "n=" << n << " degrees=";
            for (int d : degrees) in << d << ",";
            record(rep, chi.eval(Rat(-1)) == euler, in.str() + " y=-1", rat_to_string(euler),
                   rat_to_string(chi.eval(Rat(-1))));
            Rat at_zero = chi.eval(Rat(0));
            record(rep, is_integer(at_zero), in.str() + " y=0 integer", "integer",
                   rat_to_string(at_zero));
        });
        record(rep, ci_euler(n, {1}) == n, "hyperplane in P^" + std::to_string(n),
               std::to_string(n), rat_to_string(ci_euler(n, {1})));
    }
    // Bezout: with n degrees the Euler number is the product.
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> degrees;
        Rat prod(1);
        for (int i = 0; i < n; ++i) {
            degrees.push_back(i + 2);
            prod *= Rat(i + 2);
        }
        record(rep, ci_euler(n, degrees) == prod, "Bezout n=" + std::to_string(n),
               rat_to_string(prod), rat_to_string(ci_euler(n, degrees)));
    }
    return rep;
}

VerificationReport suite_identity_2_7_1(const json& params) {
    VerificationReport rep{"identity-2-7-1"};
    int m_max = params.value("m_max", 12);
    int order = params.value("order", 30);
    for (int m = 1; m <= m_max; ++m)
        record(rep, verify_identity_2_7_1(m, order), "m=" + std::to_string(m), "equal",
               "unequal");
    return rep;
}

VerificationReport suite_milnor_class_routes(const json&) {
    VerificationReport rep{"milnor-class-routes"};
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> pick_n(1, 6);
    std::uniform_int_distribution<int> pick_m(1, 8);
    std::uniform_int_distribution<int> pick_num(-9, 9);
    std::uniform_int_distribution<int> pick_den(1, 4);
    for (int i = 0; i < 200; ++i) {
        int n = pick_n(rng);
        int m = pick_m(rng);
        std::uniform_int_distribution<int> pick_r(0, n);
        int r = pick_r(rng);
        HomologyClass em(n);
        for (int k = 0; k <= r; ++k) em.coeff(k) = rat(pick_num(rng), pick_den(rng));
        EMData d(n, m, em, r);
        HomologyClass a = milnor_class_iterated(d);
        HomologyClass b = milnor_class_direct(d);
        std::ostringstream in;
        in << "n=" << n << " m=" << m << " r=" << r << " em=" << class_str(em);
        record(rep, a == b, in.str(), class_str(a), class_str(b));
    }
    return rep;
}

VerificationReport suite_example_2_8(const json&) {
    VerificationReport rep{"example-2-8"};
    {
        Example28Result r = example_2_8(3, 2, 2, 2, 2);
        record(rep, r.delta_iterated == 16 && r.delta_direct == 16, "(3,2,2,2,2) delta", "16",
               rat_to_string(r.delta_iterated) + "/" + rat_to_string(r.delta_direct));
        record(rep, r.chi_smooth == 24, "(3,2,2,2,2) chi_smooth", "24",
               rat_to_string(r.chi_smooth));
        record(rep, r.chi_x == 8, "(3,2,2,2,2) chi_X", "8", rat_to_string(r.chi_x));
    }
    for (int n = 3; n <= 6; ++n)
        for (int a1 = 2; a1 <= 4; ++a1)
            for (int a2 = 2; a2 <= 4; ++a2)
                for (int b1 = 2; b1 <= 4; ++b1)
                    for (int b2 = 2; b2 <= 4; ++b2) {
                        if (a1 * b1 != a2 * b2) continue;
                        Example28Result r = example_2_8(n, a1, a2, b1, b2);
                        std::ostringstream in;
                        in << "(" << n << "," << a1 << "," << a2 << "," << b1 << "," << b2 << ")";
                        record(rep, r.delta_iterated == r.delta_direct, in.str() + " deltas",
                               rat_to_string(r.delta_iterated), rat_to_string(r.delta_direct));
                        // Degree-0 consistency through the class-level route.
                        EMData em = example_2_8_em_data(n, a1, a2, b1, b2);
                        HomologyClass mc = milnor_class_direct(em);
                        record(rep, mc.coeff(0) == r.delta_direct, in.str() + " degree-0",
                               rat_to_string(r.delta_direct), rat_to_string(mc.coeff(0)));
                    }
    return rep;
}

void for_each_bp_list(int max_entry, int max_len,
                      const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> a;
    std::function<void()> rec = [&]() {
        if (!a.empty()) fn(a);
        if (static_cast<int>(a.size()) == max_len) return;
        int lo = a.empty() ? 2 : a.back();
        for (int e = lo; e <= max_entry; ++e) {
            a.push_back(e);
            rec();
            a.pop_back();
        }
    };
    rec();
}

VerificationReport suite_spectrum_laws(const json&) {
    VerificationReport rep{"spectrum-laws"};
    {
        Spectrum cusp = brieskorn_pham({2, 3});
        FracExpPoly expect;
        expect.add_term(rat(5, 6), Rat(1));
        expect.add_term(rat(7, 6), Rat(1));
        record(rep, cusp.poly == expect, "BP(2,3)", expect.to_string(), cusp.poly.to_string());
    }
    for_each_bp_list(6, 5, [&](const std::vector<int>& a) {
        Spectrum s = brieskorn_pham(a);
        Int mu_expect(1);
        for (int e : a) mu_expect *= Int(e - 1);
        std::ostringstream in;
        in << "BP(";
        for (int e : a) in << e << ",";
        in << ")";
        record(rep, milnor_number(s) == mu_expect, in.str() + " mu", mu_expect.get_str(),
               milnor_number(s).get_str());
        record(rep, check_symmetry(s), in.str() + " symmetry", "symmetric", "asymmetric");
        bool in_range = min_exponent(s) > 0 && max_exponent(s) < s.num_vars;
        record(rep, in_range, in.str() + " exponent range", "(0, N)",
               rat_to_string(min_exponent(s)) + ".." + rat_to_string(max_exponent(s)));
        // Min-exponent additivity under a power-germ join.
        for (int m = 2; m <= 5; ++m) {
            Spectrum joined = ts_product(s, sp_power(m));
            bool ok = min_exponent(joined) == min_exponent(s) + rat(1, m);
            record(rep, ok, in.str() + " join z^" + std::to_string(m),
                   rat_to_string(Rat(min_exponent(s) + rat(1, m))),
                   rat_to_string(min_exponent(joined)));
        }
        // Multiplicativity of mu under joins.
        Spectrum sq = ts_product(s, s);
        record(rep, milnor_number(sq) == mu_expect * mu_expect, in.str() + " mu multiplicative",
               Int(mu_expect * mu_expect).get_str(), milnor_number(sq).get_str());
    });
    return rep;
}

VerificationReport suite_classification(const json&) {
    VerificationReport rep{"classification"};
    Spectrum node = brieskorn_pham({2, 2});
    Spectrum cusp = brieskorn_pham({2, 3});
    Spectrum odp3 = brieskorn_pham({2, 2, 2});

    record(rep, classify(node).du_bois, "node du_bois", "true", "false");
    record(rep, classify(node).insignificant, "node insignificant", "true", "false");
    record(rep, !classify(cusp).du_bois, "cusp du_bois", "false", "true");
    record(rep, classify(odp3).du_bois, "BP(2,2,2) du_bois", "true", "false");
    record(rep, min_exponent(node) == 1, "node min exponent", "1",
           rat_to_string(min_exponent(node)));
    record(rep, min_exponent(cusp) == rat(5, 6), "cusp min exponent", "5/6",
           rat_to_string(min_exponent(cusp)));
    record(rep, min_exponent(odp3) == rat(3, 2), "BP(2,2,2) min exponent", "3/2",
           rat_to_string(min_exponent(odp3)));

    record(rep, lct_from_spectrum(cusp) == rat(5, 6), "lct(cusp) spectrum", "5/6",
           rat_to_string(lct_from_spectrum(cusp)));
    ResolutionData cusp_res{{{4, 6}}};
    record(rep, lct_from_resolution(cusp_res) == rat(5, 6), "lct(cusp) resolution", "5/6",
           rat_to_string(lct_from_resolution(cusp_res)));
    record(rep, lct_from_spectrum(node) == 1, "lct(node)", "1",
           rat_to_string(lct_from_spectrum(node)));
    record(rep, lct_from_spectrum(odp3) == 1, "lct(BP(2,2,2))", "1",
           rat_to_string(lct_from_spectrum(odp3)));

    record(rep, rational_after_cover(node, 2), "node double cover rational", "true", "false");
    record(rep, !rational_after_cover(cusp, 6), "cusp 6-fold cover rational", "false", "true");
    record(rep, rational_after_cover(cusp, 2), "cusp double cover rational", "true", "false");

    // classify consistency on symmetric germs
    for_each_bp_list(5, 4, [&](const std::vector<int>& a) {
        Spectrum s = brieskorn_pham(a);
        Classification c = classify(s);
        record(rep, c.du_bois == c.insignificant, "classify symmetric consistency",
               "du_bois == insignificant", c.du_bois ? "true/false" : "false/true");
    });
    return rep;
}

VerificationReport suite_spectral_fixtures(const json&) {
    VerificationReport rep{"spectral-fixtures"};
    {
        IsolatedHypersurfaceModel nodal(2, 3, {brieskorn_pham({2, 2})});
        HmYResult r = hm_y_class(nodal);
        YPoly expect = YPoly::monomial(1, Rat(-1));
        record(rep, r.chi_y == expect, "nodal cubic chi_y", "-y", r.chi_y.to_string());
        record(rep, r.chi_y.eval(Rat(-1)) == 1, "nodal cubic euler", "1",
               rat_to_string(r.chi_y.eval(Rat(-1))));
        MZeroResult mz = m_zero(nodal);
        record(rep, mz.total == 0 && mz.du_bois, "nodal cubic M_0", "0",
               rat_to_string(mz.total));
    }
    {
        IsolatedHypersurfaceModel cuspidal(2, 3, {brieskorn_pham({2, 3})});
        HmYResult r = hm_y_class(cuspidal);
        YPoly expect = YPoly(Rat(1)) - YPoly::monomial(1, Rat(1));
        record(rep, r.chi_y == expect, "cuspidal cubic chi_y", "1 - y", r.chi_y.to_string());
        record(rep, r.chi_y.eval(Rat(-1)) == 2, "cuspidal cubic euler", "2",
               rat_to_string(r.chi_y.eval(Rat(-1))));
        MZeroResult mz = m_zero(cuspidal);
        record(rep, mz.total == -1 && !mz.du_bois, "cuspidal cubic M_0", "-1",
               rat_to_string(mz.total));
    }
    {
        Spectrum cusp = brieskorn_pham({2, 3});
        std::vector<Rat> jc = jumping_coefficients(cusp);
        record(rep, jc.size() == 1 && jc[0] == rat(5, 6), "cusp jumping coefficients", "{5/6}",
               jc.empty() ? "{}" : rat_to_string(jc[0]));
        std::vector<Rat> jc_node = jumping_coefficients(brieskorn_pham({2, 2}));
        record(rep, jc_node.empty(), "node jumping coefficients", "{}",
               std::to_string(jc_node.size()) + " elements");
        std::vector<Rat> jc_e12 = jumping_coefficients(brieskorn_pham({2, 3, 7}));
        record(rep, jc_e12.size() == 1 && jc_e12[0] == rat(41, 42), "BP(2,3,7) jumping",
               "{41/42}", jc_e12.empty() ? "{}" : rat_to_string(jc_e12[0]));
    }
    // Euler specialization over a model grid.
    for (int n = 2; n <= 4; ++n)
        for (int m = 2; m <= 5; ++m) {
            std::vector<Spectrum> germs;
            std::vector<int> bp(static_cast<size_t>(n), 2);
            germs.push_back(brieskorn_pham(bp));
            bp.back() = 3;
            germs.push_back(brieskorn_pham(bp));
            IsolatedHypersurfaceModel model(n, m, germs);
            HmYResult r = hm_y_class(model);
            Rat mu_sum(0);
            for (const Spectrum& g : model.germs) {
                Rat mu(milnor_number(g));
                mu_sum += ((g.num_vars - 1) % 2 != 0) ? Rat(-mu) : mu;
            }
            std::ostringstream in;
            in << "model n=" << n << " m=" << m;
            record(rep, r.m_y.eval(Rat(-1)) == mu_sum, in.str() + " M_y at y=-1",
                   rat_to_string(mu_sum), rat_to_string(r.m_y.eval(Rat(-1))));
            Rat chi_expect = ci_euler(n, {m}) - mu_sum;
            record(rep, r.chi_y.eval(Rat(-1)) == chi_expect, in.str() + " euler",
                   rat_to_string(chi_expect), rat_to_string(r.chi_y.eval(Rat(-1))));
        }
    // int_part shift law: int_part(p * y~^k) = (-y)^k int_part(p).
    {
        FracExpPoly p;
        p.add_term(rat(5, 6), Rat(3));
        p.add_term(rat(3, 2), Rat(-2));
        p.add_term(rat(-1, 4), rat(7, 2));
        for (long k = -2; k <= 3; ++k) {
            FracExpPoly shifted = p * FracExpPoly::term(Rat(k), Rat(1));
            YPoly lhs = int_part_map(shifted);
            YPoly sign = YPoly::monomial(k, (k % 2 != 0) ? Rat(-1) : Rat(1));
            YPoly rhs = sign * int_part_map(p);
            record(rep, lhs == rhs, "int_part shift k=" + std::to_string(k), rhs.to_string(),
                   lhs.to_string());
        }
    }
    return rep;
}

VerificationReport suite_ts_sign(const json&) {
    VerificationReport rep{"ts-sign"};
    std::vector<std::vector<int>> lists;
    for_each_bp_list(5, 4, [&](const std::vector<int>& a) { lists.push_back(a); });
    for (const auto& a : lists)
        for (const auto& b : lists) {
            if (a.size() + b.size() > 5) continue;
            Spectrum g1 = brieskorn_pham(a);
            Spectrum g2 = brieskorn_pham(b);
            std::ostringstream in;
            in << "BP(";
            for (int e : a) in << e << ",";
            in << ") x BP(";
            for (int e : b) in << e << ",";
            in << ")";
            record(rep, theorem_join_sign_check(g1, g2), in.str(), "sign law holds", "violated");
        }
    return rep;
}

VerificationReport suite_dubois_detector(const json&) {
    VerificationReport rep{"dubois-detector"};
    for_each_bp_list(6, 4, [&](const std::vector<int>& a) {
        Spectrum s = brieskorn_pham(a);
        IsolatedHypersurfaceModel model(s.num_vars, 2, {s});
        MZeroResult mz = m_zero(model);
        bool detector = mz.per_germ[0] == 0;
        bool criterion = classify(s).du_bois;
        std::ostringstream in;
        in << "BP(";
        for (int e : a) in << e << ",";
        in << ")";
        record(rep, detector == criterion, in.str(), criterion ? "du Bois" : "not du Bois",
               detector ? "M_0 = 0" : "M_0 != 0");
        // lct route agreement.
        std::vector<Rat> jc = jumping_coefficients(s);
        Rat lct_jc = jc.empty() ? Rat(1) : jc.front();
        record(rep, lct_jc == lct_from_spectrum(s), in.str() + " lct",
               rat_to_string(lct_from_spectrum(s)), rat_to_string(lct_jc));
    });
    return rep;
}

VerificationReport suite_assembly(const json&) {
    VerificationReport rep{"assembly"};
    // r=0 assembly reduces to the integer part of the level-0 class, and
    // point-supported classes replicate the isolated-singularity route.
    for (int n = 2; n <= 4; ++n)
        for (int m = 2; m <= 4; ++m) {
            std::vector<int> bp(static_cast<size_t>(n), 2);
            Spectrum g = brieskorn_pham(bp);
            GradedSpectralClass cls(n);
            FracExpPoly local = localized_point_class(g);
            for (const auto& [e, c] : local.terms()) {
                HomologyClass h(n);
                h.coeff(0) = c;
                cls.add(e, h);
            }
            YClass assembled = assemble_hm_class({cls}, m);
            IsolatedHypersurfaceModel model(n, m, {g});
            HmYResult hy = hm_y_class(model);
            YClass expect(n);
            for (const auto& [e, c] : hy.m_y.terms()) {
                HomologyClass h(n);
                h.coeff(0) = c;
                expect.add(e, h);
            }
            std::ostringstream in;
            in << "point assembly n=" << n << " m=" << m;
            record(rep, assembled == expect, in.str(), "matches isolated route", "differs");
        }
    // Multiplier algebra fixtures.
    {
        FracExpPoly m2j1 = section_multiplier(2, 1);
        record(rep, m2j1 == FracExpPoly::term(rat(1, 2), Rat(-1)), "multiplier m=2 j=1",
               "-y~^{1/2}", m2j1.to_string("y~"));
        FracExpPoly m3j2 = section_multiplier(3, 2);
        FracExpPoly expect;
        expect.add_term(rat(2, 3), Rat(1));
        expect.add_term(Rat(1), Rat(2));
        expect.add_term(rat(4, 3), Rat(1));
        record(rep, m3j2 == expect, "multiplier m=3 j=2", expect.to_string("y~"),
               m3j2.to_string("y~"));
        record(rep, section_multiplier(5, 0) == FracExpPoly::one(), "multiplier j=0", "1",
               section_multiplier(5, 0).to_string("y~"));
        record(rep, section_multiplier(1, 3).is_zero(), "multiplier m=1 j=3", "0",
               section_multiplier(1, 3).to_string("y~"));
    }
    return rep;
}

std::vector<std::vector<Rat>> generic_lines(int k) {
    // Vandermonde coefficients: no two proportional, no three concurrent.
    std::vector<std::vector<Rat>> forms;
    for (int i = 1; i <= k; ++i)
        forms.push_back({Rat(1), Rat(i), Rat(i) * Rat(i)});
    return forms;
}

VerificationReport suite_arrangements(const json&) {
    VerificationReport rep{"arrangements"};
    for (int k = 1; k <= 10; ++k) {
        Arrangement a(2, generic_lines(k));
        Rat expect = Rat(2 * k) - binomial(static_cast<unsigned long>(k), 2);
        Rat chi = arrangement_euler(a);
        record(rep, chi == expect, std::to_string(k) + " generic lines", rat_to_string(expect),
               rat_to_string(chi));
        record(rep, arrangement_chern_class(a).coeff(1) == k,
               std::to_string(k) + " generic lines top degree", std::to_string(k),
               rat_to_string(arrangement_chern_class(a).coeff(1)));
    }
    {
        // Three concurrent lines: x, y, x+y.
        Arrangement a(2, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                          {Rat(1), Rat(1), Rat(0)}});
        record(rep, arrangement_euler(a) == 4, "3 concurrent lines", "4",
               rat_to_string(arrangement_euler(a)));
    }
    // Oracle cross-check over subsets of fixed pools in P^2 and P^3.
    auto pool_check = [&](int n, const std::vector<std::vector<Rat>>& pool) {
        int k = static_cast<int>(pool.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<std::vector<Rat>> forms;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) forms.push_back(pool[static_cast<size_t>(i)]);
            Arrangement a(n, forms);
            Rat chi = arrangement_euler(a);
            Rat oracle = stratification_euler_oracle(a);
            std::ostringstream in;
            in << "P^" << n << " subset mask " << mask;
            record(rep, chi == oracle, in.str(), rat_to_string(oracle), rat_to_string(chi));
            for (const Flat& z : build_lattice(a))
                record(rep, z.multiplicity > 0, in.str() + " flat positivity", "> 0",
                       rat_to_string(z.multiplicity));
        }
    };
    pool_check(2, {{Rat(1), Rat(0), Rat(0)},
                   {Rat(0), Rat(1), Rat(0)},
                   {Rat(0), Rat(0), Rat(1)},
                   {Rat(1), Rat(1), Rat(0)},
                   {Rat(1), Rat(0), Rat(1)},
                   {Rat(0), Rat(1), Rat(1)},
                   {Rat(1), Rat(1), Rat(1)}});
    pool_check(3, {{Rat(1), Rat(0), Rat(0), Rat(0)},
                   {Rat(0), Rat(1), Rat(0), Rat(0)},
                   {Rat(0), Rat(0), Rat(1), Rat(0)},
                   {Rat(0), Rat(0), Rat(0), Rat(1)},
                   {Rat(1), Rat(1), Rat(1), Rat(1)},
                   {Rat(1), Rat(2), Rat(3), Rat(4)},
                   {Rat(1), Rat(-1), Rat(1), Rat(-1)}});
    {
        // chi of the complement of a single line in P^2 is chi(C^2) = 1.
        Arrangement a(2, {{Rat(1), Rat(0), Rat(0)}});
        record(rep, complement_class(a).coeff(0) == 1, "line complement", "1",
               rat_to_string(complement_class(a).coeff(0)));
        Arrangement tri(2, generic_lines(3));
        record(rep, complement_class(tri).coeff(0) == 0, "triangle complement", "0",
               rat_to_string(complement_class(tri).coeff(0)));
    }
    return rep;
}

using SuiteFn = VerificationReport (*)(const json&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"qy-specializations", suite_qy_specializations},
        {"chi-y-euler", suite_chi_y_euler},
        {"identity-2-7-1", suite_identity_2_7_1},
        {"milnor-class-routes", suite_milnor_class_routes},
        {"example-2-8", suite_example_2_8},
        {"spectrum-laws", suite_spectrum_laws},
        {"classification", suite_classification},
        {"spectral-fixtures", suite_spectral_fixtures},
        {"ts-sign", suite_ts_sign},
        {"dubois-detector", suite_dubois_detector},
        {"assembly", suite_assembly},
        {"arrangements", suite_arrangements},
    };
    return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suites()) names.push_back(name);
    return names;
}

VerificationReport run_suite(const std::string& name, const json& params) {
    for (const auto& [n, fn] : suites())
        if (n == name) return fn(params);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<VerificationReport> run_all_suites() {
    std::vector<VerificationReport> reports;
    for (const auto& [name, fn] : suites()) reports.push_back(fn(json::object()));
    return reports;
}

json report_to_json(const VerificationReport& r) {
    json out;
    out["suite"] = r.suite;
    out["cases"] = r.cases;
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    out["failures"] = fails;
    out["ok"] = r.ok();
    return out;
}

}  // namespace hmsing
