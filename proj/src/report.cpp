#include "report.hpp"

namespace hmsing {

json to_json(const Rat& r) { return rat_to_string(r); }

json to_json(const XSeries& s) {
    json a = json::array();
    for (int k = 0; k <= s.order(); ++k) a.push_back(rat_to_string(s.coeff(k)));
    return a;
}

json to_json(const YPoly& p) {
    json o = json::object();
    for (const auto& [e, c] : p.terms()) o["y^" + std::to_string(e)] = rat_to_string(c);
    return o;
}

json to_json(const FracExpPoly& p) {
    json o = json::object();
    for (const auto& [e, c] : p.terms()) o[rat_to_string(e)] = rat_to_string(c);
    return o;
}

json to_json(const HomologyClass& c) {
    json a = json::array();
    for (int k = 0; k <= c.ambient_dim(); ++k) a.push_back(rat_to_string(c.coeff(k)));
    return a;
}

json to_json(const YClass& c) {
    json o = json::object();
    for (const auto& [e, h] : c.terms()) o["y^" + std::to_string(e)] = to_json(h);
    return o;
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("expected rational as integer or \"p/q\" string");
}

HomologyClass homology_from_json(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n + 1)
        throw std::invalid_argument("homology class must be an array of length n+1");
    HomologyClass c(n);
    for (int k = 0; k <= n; ++k) c.coeff(k) = rat_from_json(j.at(static_cast<size_t>(k)));
    return c;
}

namespace {

std::vector<int> int_list_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(std::string("expected nonempty array for ") + what);
    std::vector<int> v;
    for (const auto& e : j) v.push_back(e.get<int>());
    return v;
}

json base_report() { return json{{"schema", 1}}; }

}  // namespace

json chi_report(const json& request) {
    int n = request.at("n").get<int>();
    std::vector<int> degrees = int_list_from_json(request.at("degrees"), "degrees");
    bool chi_y_mode = request.value("chi_y", false);

    json out = base_report();
    out["n"] = n;
    out["degrees"] = degrees;
    Rat euler = ci_euler(n, degrees);
    out["euler"] = rat_to_string(euler);
    if (chi_y_mode) {
        YPoly chi = ci_chi_y_virtual(n, degrees);
        out["chi_y"] = to_json(chi);
        out["chi_y_pretty"] = chi.to_string();
    }
    return out;
}

json example_2_8_report(const json& request) {
    int n = request.at("n").get<int>();
    int a1 = request.at("a1").get<int>();
    int a2 = request.at("a2").get<int>();
    int b1 = request.at("b1").get<int>();
    int b2 = request.at("b2").get<int>();
    Example28Result r = example_2_8(n, a1, a2, b1, b2);

    json out = base_report();
    out["n"] = r.n;
    out["m"] = r.m;
    out["em_value"] = rat_to_string(r.em_value);
    out["delta_iterated"] = rat_to_string(r.delta_iterated);
    out["delta_direct"] = rat_to_string(r.delta_direct);
    out["chi_smooth"] = rat_to_string(r.chi_smooth);
    out["chi_X"] = rat_to_string(r.chi_x);

    // Degree-0 cross-check through the class-level formulas.
    EMData em = example_2_8_em_data(n, a1, a2, b1, b2);
    out["em_class"] = to_json(em.em_class);
    out["milnor_class_iterated"] = to_json(milnor_class_iterated(em));
    out["milnor_class_direct"] = to_json(milnor_class_direct(em));
    return out;
}

json milnor_class_report(const json& request) {
    int n = request.at("n").get<int>();
    int m = request.at("m").get<int>();
    int r = request.at("r").get<int>();
    HomologyClass em = homology_from_json(request.at("em_class"), n);
    EMData data(n, m, em, r);

    json out = base_report();
    out["n"] = n;
    out["m"] = m;
    out["r"] = r;
    out["em_class"] = to_json(data.em_class);
    HomologyClass iterated = milnor_class_iterated(data);
    HomologyClass direct = milnor_class_direct(data);
    out["milnor_class_iterated"] = to_json(iterated);
    out["milnor_class_direct"] = to_json(direct);
    out["formulas_agree"] = (iterated == direct);
    return out;
}

namespace {

json germ_report(const Spectrum& s) {
    json g;
    g["spectrum"] = to_json(s.poly);
    g["spectrum_pretty"] = s.poly.to_string();
    g["num_vars"] = s.num_vars;
    g["mu"] = milnor_number(s).get_str();
    g["common_denominator"] = s.poly.common_denominator().get_str();
    g["symmetric"] = check_symmetry(s);
    if (!s.poly.is_zero()) {
        g["min_exponent"] = rat_to_string(min_exponent(s));
        g["max_exponent"] = rat_to_string(max_exponent(s));
        Classification c = classify(s);
        g["du_bois"] = c.du_bois;
        g["insignificant"] = c.insignificant;
        g["lct"] = rat_to_string(lct_from_spectrum(s));
    }
    return g;
}

}  // namespace

json spectrum_report(const json& request) {
    json out = base_report();
    if (request.contains("bp")) {
        std::vector<int> a = int_list_from_json(request.at("bp"), "bp");
        Spectrum s = brieskorn_pham(a);
        out["germ"] = germ_report(s);
        json jc = json::array();
        for (const Rat& e : jumping_coefficients(s)) jc.push_back(rat_to_string(e));
        out["jumping_coefficients"] = jc;
        if (request.contains("cover")) {
            int m = request.at("cover").get<int>();
            out["rational_after_cover"] = rational_after_cover(s, m);
        }
    }
    if (request.contains("resolution")) {
        ResolutionData rd;
        for (const auto& pair : request.at("resolution")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("resolution pairs must be [nu, mult]");
            rd.pairs.emplace_back(pair.at(0).get<long>(), pair.at(1).get<long>());
        }
        out["lct_from_resolution"] = rat_to_string(lct_from_resolution(rd));
    }
    if (!request.contains("bp") && !request.contains("resolution"))
        throw std::invalid_argument("need \"bp\" or \"resolution\"");
    return out;
}

json hypersurface_report(const json& request) {
    int n = request.at("n").get<int>();
    int m = request.at("m").get<int>();
    std::vector<Spectrum> germs;
    for (const auto& g : request.at("germs"))
        germs.push_back(brieskorn_pham(int_list_from_json(g, "germ")));
    IsolatedHypersurfaceModel model(n, m, germs);

    json out = base_report();
    out["n"] = n;
    out["m"] = m;
    HmYResult hy = hm_y_class(model);
    out["M_y"] = to_json(hy.m_y);
    out["M_y_pretty"] = hy.m_y.to_string();
    out["chi_y"] = to_json(hy.chi_y);
    out["chi_y_pretty"] = hy.chi_y.to_string();
    out["euler"] = rat_to_string(hy.chi_y.eval(Rat(-1)));

    MZeroResult mz = m_zero(model);
    json per_germ = json::array();
    for (size_t i = 0; i < model.germs.size(); ++i) {
        json g = germ_report(model.germs[i]);
        g["M_0"] = rat_to_string(mz.per_germ[i]);
        json jc = json::array();
        for (const Rat& e : jumping_coefficients(model.germs[i])) jc.push_back(rat_to_string(e));
        g["jumping_coefficients"] = jc;
        per_germ.push_back(std::move(g));
    }
    out["germs"] = per_germ;
    out["M_0_total"] = rat_to_string(mz.total);
    out["du_bois"] = mz.du_bois;
    return out;
}

json arrangement_report(const json& request) {
    int n = request.at("n").get<int>();
    std::vector<std::vector<Rat>> forms;
    for (const auto& row : request.at("forms")) {
        std::vector<Rat> form;
        for (const auto& c : row) form.push_back(rat_from_json(c));
        forms.push_back(std::move(form));
    }
    Arrangement a(n, std::move(forms));

    json out = base_report();
    out["n"] = n;
    json flats = json::array();
    for (const Flat& z : build_lattice(a)) {
        json f;
        f["codim"] = z.codim;
        json eq = json::array();
        for (const auto& row : z.equations) {
            json jr = json::array();
            for (const Rat& c : row) jr.push_back(rat_to_string(c));
            eq.push_back(std::move(jr));
        }
        f["equations"] = eq;
        f["members"] = z.members;
        f["moebius"] = rat_to_string(z.moebius);
        f["multiplicity"] = rat_to_string(z.multiplicity);
        flats.push_back(std::move(f));
    }
    out["flats"] = flats;
    out["chern_class"] = to_json(arrangement_chern_class(a));
    out["hirzebruch_class"] = to_json(arrangement_hirzebruch_class(a));
    out["euler"] = rat_to_string(arrangement_euler(a));
    out["complement_class"] = to_json(complement_class(a));
    out["complement_euler"] = rat_to_string(complement_class(a).coeff(0));
    return out;
}

}  // namespace hmsing
