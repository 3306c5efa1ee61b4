#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hmsing.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool machine = false;  // --json
    bool quiet = false;
};

// Wraps a C-API call; prints the machine or human rendering and maps the
// status to an exit code.
int run_call(const Options& opt, hmsing_status (*fn)(const char*, char**),
             const json& request, void (*render)(const json&)) {
    char* out = nullptr;
    hmsing_status st = fn(request.dump().c_str(), &out);
    if (st != HMSING_OK) {
        std::cerr << "error: " << hmsing_last_error() << "\n";
        if (out) hmsing_string_free(out);
        return kExitUsage;
    }
    json result = json::parse(out);
    hmsing_string_free(out);
    if (opt.machine) {
        std::cout << result.dump(2) << "\n";
    } else if (!opt.quiet) {
        render(result);
    }
    return kExitOk;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        v.push_back(std::stoi(item));
    }
    if (v.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
    return v;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void render_chi(const json& r) {
    if (r.contains("chi_y_pretty"))
        std::cout << "chi_y = " << r["chi_y_pretty"].get<std::string>() << "\n";
    else
        std::cout << r["euler"].get<std::string>() << "\n";
}

void render_example_2_8(const json& r) {
    std::cout << "m             = " << r["m"].get<int>() << "\n"
              << "EM value      = " << r["em_value"].get<std::string>() << "\n"
              << "delta (iter)  = " << r["delta_iterated"].get<std::string>() << "\n"
              << "delta (direct)= " << r["delta_direct"].get<std::string>() << "\n"
              << "chi(smooth)   = " << r["chi_smooth"].get<std::string>() << "\n"
              << "chi(X)        = " << r["chi_X"].get<std::string>() << "\n";
}

std::string join_class(const json& arr) {
    std::string s = "[";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) s += ", ";
        s += arr[i].get<std::string>();
    }
    return s + "]";
}

void render_milnor_class(const json& r) {
    std::cout << "EM class        = " << join_class(r["em_class"]) << "\n"
              << "M (iterated)    = " << join_class(r["milnor_class_iterated"]) << "\n"
              << "M (direct)      = " << join_class(r["milnor_class_direct"]) << "\n"
              << "formulas agree  = " << (r["formulas_agree"].get<bool>() ? "yes" : "no") << "\n";
}

void render_spectrum(const json& r) {
    if (r.contains("germ")) {
        const json& g = r["germ"];
        std::cout << g["spectrum_pretty"].get<std::string>() << " | mu="
                  << g["mu"].get<std::string>();
        if (g.contains("lct")) std::cout << " | lct=" << g["lct"].get<std::string>();
        if (g.contains("du_bois"))
            std::cout << " | duBois=" << (g["du_bois"].get<bool>() ? "true" : "false");
        std::cout << "\n";
        if (r.contains("rational_after_cover"))
            std::cout << "rational after cover: "
                      << (r["rational_after_cover"].get<bool>() ? "true" : "false") << "\n";
    }
    if (r.contains("lct_from_resolution"))
        std::cout << "lct from resolution = " << r["lct_from_resolution"].get<std::string>()
                  << "\n";
}

void render_hypersurface(const json& r) {
    std::cout << "M_y   = " << r["M_y_pretty"].get<std::string>() << "\n"
              << "chi_y = " << r["chi_y_pretty"].get<std::string>() << "\n"
              << "chi   = " << r["euler"].get<std::string>() << "\n"
              << "M_0   = " << r["M_0_total"].get<std::string>() << "\n"
              << "du Bois: " << (r["du_bois"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& g : r["germs"]) {
        std::cout << "  germ " << g["spectrum_pretty"].get<std::string>() << " | mu="
                  << g["mu"].get<std::string>() << " | M_0=" << g["M_0"].get<std::string>()
                  << " | lct=" << g["lct"].get<std::string>() << "\n";
    }
}

void render_arrangement(const json& r) {
    std::cout << "flats:\n";
    for (const auto& f : r["flats"]) {
        std::cout << "  codim " << f["codim"].get<int>() << "  mu="
                  << f["moebius"].get<std::string>() << "  r="
                  << f["multiplicity"].get<std::string>() << "  hyperplanes {";
        bool first = true;
        for (const auto& m : f["members"]) {
            if (!first) std::cout << ",";
            std::cout << m.get<int>();
            first = false;
        }
        std::cout << "}\n";
    }
    std::cout << "Chern class      = " << join_class(r["chern_class"]) << "\n"
              << "chi(X)           = " << r["euler"].get<std::string>() << "\n"
              << "chi(complement)  = " << r["complement_euler"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic-class and singularity-spectrum calculator"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.machine, "machine-readable JSON output");
    app.add_flag("--quiet", opt.quiet, "suppress human output");

    // chi
    auto* chi = app.add_subcommand("chi", "Euler number / chi_y genus of a complete intersection");
    int chi_n = 0;
    std::string chi_degrees;
    bool chi_y_mode = false;
    chi->add_option("--n", chi_n, "ambient projective dimension")->required();
    chi->add_option("--degrees", chi_degrees, "comma-separated degrees")->required();
    chi->add_flag("--chi-y", chi_y_mode, "print the full chi_y polynomial");

    // example-2-8
    auto* ex = app.add_subcommand("example-2-8",
                                  "two-factor family g1^b1 - c g2^b2: Euler-number deltas");
    int ex_n = 0;
    std::string ex_a, ex_b;
    ex->add_option("--n", ex_n, "ambient projective dimension")->required();
    ex->add_option("--a", ex_a, "degrees a1,a2")->required();
    ex->add_option("--b", ex_b, "multiplicities b1,b2")->required();

    // milnor-class
    auto* mc = app.add_subcommand("milnor-class", "localized Milnor class from EM data");
    std::string mc_file, mc_em;
    int mc_n = 0, mc_m = 0, mc_r = 0;
    mc->add_option("--file", mc_file, "JSON file {n, m, r, em_class}");
    mc->add_option("--n", mc_n, "ambient projective dimension");
    mc->add_option("--m", mc_m, "hypersurface degree");
    mc->add_option("--r", mc_r, "dimension of the singular locus");
    mc->add_option("--em", mc_em, "EM class, comma-separated rationals by dimension");

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "spectrum of a Brieskorn-Pham germ");
    std::string sp_bp, sp_res;
    int sp_cover = 0;
    sp->add_option("--bp", sp_bp, "Brieskorn-Pham exponents, e.g. 2,3,7");
    sp->add_option("--resolution", sp_res, "resolution pairs nu/mult, e.g. \"4/6,2/2\"");
    sp->add_option("--cover", sp_cover, "base-change cover degree for the rationality test");

    // hypersurface
    auto* hs = app.add_subcommand("hypersurface",
                                  "isolated-singularity hypersurface model from a JSON file");
    std::string hs_file;
    hs->add_option("model", hs_file, "JSON model {n, m, germs}")->required();

    // arrangement
    auto* ar = app.add_subcommand("arrangement", "projective hyperplane arrangement");
    std::string ar_file;
    ar->add_option("file", ar_file, "JSON file {n, forms}")->required();

    // verify
    auto* vf = app.add_subcommand("verify", "replay the identity suites");
    std::string vf_suite = "all";
    int vf_m_max = 12, vf_order = 30;
    vf->add_option("--suite", vf_suite, "suite name or 'all'");
    vf->add_option("--m-max", vf_m_max, "largest degree for the series identity suite");
    vf->add_option("--order", vf_order, "truncation order for the series identity suite");
    bool vf_list = false;
    vf->add_flag("--list", vf_list, "list available suites");

    // Let --json/--quiet appear after the subcommand name too.
    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
        s->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (chi->parsed()) {
            json req{{"n", chi_n}, {"degrees", parse_int_list(chi_degrees)}, {"chi_y", chi_y_mode}};
            return run_call(opt, hmsing_chi, req, render_chi);
        }
        if (ex->parsed()) {
            auto a = parse_int_list(ex_a);
            auto b = parse_int_list(ex_b);
            if (a.size() != 2 || b.size() != 2) {
                std::cerr << "error: --a and --b each take two integers\n";
                return kExitUsage;
            }
            json req{{"n", ex_n}, {"a1", a[0]}, {"a2", a[1]}, {"b1", b[0]}, {"b2", b[1]}};
            return run_call(opt, hmsing_example_2_8, req, render_example_2_8);
        }
        if (mc->parsed()) {
            json req;
            if (!mc_file.empty()) {
                req = load_json_file(mc_file);
            } else {
                if (mc_em.empty()) {
                    std::cerr << "error: need --file or --n/--m/--r/--em\n";
                    return kExitUsage;
                }
                json em = json::array();
                std::stringstream ss(mc_em);
                std::string item;
                while (std::getline(ss, item, ',')) em.push_back(item);
                req = json{{"n", mc_n}, {"m", mc_m}, {"r", mc_r}, {"em_class", em}};
            }
            return run_call(opt, hmsing_milnor_class, req, render_milnor_class);
        }
        if (sp->parsed()) {
            json req = json::object();
            if (!sp_bp.empty()) req["bp"] = parse_int_list(sp_bp);
            if (sp_cover > 0) req["cover"] = sp_cover;
            if (!sp_res.empty()) {
                json pairs = json::array();
                std::stringstream ss(sp_res);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto slash = item.find('/');
                    if (slash == std::string::npos) {
                        std::cerr << "error: resolution pairs look like nu/mult\n";
                        return kExitUsage;
                    }
                    pairs.push_back({std::stol(item.substr(0, slash)),
                                     std::stol(item.substr(slash + 1))});
                }
                req["resolution"] = pairs;
            }
            if (req.empty()) {
                std::cerr << "error: need --bp or --resolution\n";
                return kExitUsage;
            }
            return run_call(opt, hmsing_spectrum, req, render_spectrum);
        }
        if (hs->parsed())
            return run_call(opt, hmsing_hypersurface, load_json_file(hs_file),
                            render_hypersurface);
        if (ar->parsed())
            return run_call(opt, hmsing_arrangement, load_json_file(ar_file),
                            render_arrangement);
        if (vf->parsed()) {
            if (vf_list) {
                char* out = nullptr;
                if (hmsing_verify_suites(&out) != HMSING_OK) {
                    std::cerr << "error: " << hmsing_last_error() << "\n";
                    return kExitUsage;
                }
                for (const auto& name : json::parse(out)) std::cout << name.get<std::string>() << "\n";
                hmsing_string_free(out);
                return kExitOk;
            }
            json params{{"m_max", vf_m_max}, {"order", vf_order}};
            char* out = nullptr;
            hmsing_status st = hmsing_verify(vf_suite.c_str(), params.dump().c_str(), &out);
            if (st != HMSING_OK && st != HMSING_ERROR_VERIFY_FAILED) {
                std::cerr << "error: " << hmsing_last_error() << "\n";
                if (out) hmsing_string_free(out);
                return kExitUsage;
            }
            json result = json::parse(out);
            hmsing_string_free(out);
            if (opt.machine) {
                std::cout << result.dump(2) << "\n";
            } else if (!opt.quiet) {
                for (const auto& suite : result["suites"]) {
                    std::cout << (suite["ok"].get<bool>() ? "PASS" : "FAIL") << "  "
                              << suite["suite"].get<std::string>() << "  ("
                              << suite["cases"].get<long>() << " cases)\n";
                    for (const auto& f : suite["failures"])
                        std::cout << "      " << f["input"].get<std::string>() << ": expected "
                                  << f["expected"].get<std::string>() << ", got "
                                  << f["actual"].get<std::string>() << "\n";
                }
                std::cout << result["cases"].get<long>() << " cases, "
                          << result["failures"].get<long>() << " failures\n";
            }
            return st == HMSING_OK ? kExitOk : kExitVerifyFailed;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
