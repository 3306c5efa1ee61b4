#include "hmsing.h"

#include <cstring>
#include <new>
#include <string>

#include "report.hpp"
#include "spectrum.hpp"
#include "verify.hpp"

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hmsing_status fail(hmsing_status code, const std::string& message) {
    last_error = message;
    return code;
}

template <class Fn>
hmsing_status guarded(char** out_json, Fn&& fn) {
    if (!out_json) return fail(HMSING_ERROR_INVALID_ARGUMENT, "null output pointer");
    *out_json = nullptr;
    try {
        hmsing::json result = fn();
        *out_json = dup_string(result.dump());
        if (!*out_json) return fail(HMSING_ERROR_INTERNAL, "allocation failure");
        last_error.clear();
        return HMSING_OK;
    } catch (const hmsing::json::exception& e) {
        return fail(HMSING_ERROR_JSON, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HMSING_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(HMSING_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(HMSING_ERROR_INTERNAL, e.what());
    }
}

hmsing::json parse_request(const char* request_json) {
    if (!request_json) throw std::invalid_argument("null request");
    return hmsing::json::parse(request_json);
}

}  // namespace

extern "C" {

const char* hmsing_version(void) { return "1.0.0"; }

const char* hmsing_last_error(void) { return last_error.c_str(); }

void hmsing_string_free(char* s) { delete[] s; }

hmsing_status hmsing_chi(const char* request_json, char** out_json) {
    return guarded(out_json, [&] { return hmsing::chi_report(parse_request(request_json)); });
}

hmsing_status hmsing_example_2_8(const char* request_json, char** out_json) {
    return guarded(out_json,
                   [&] { return hmsing::example_2_8_report(parse_request(request_json)); });
}

hmsing_status hmsing_milnor_class(const char* request_json, char** out_json) {
    return guarded(out_json,
                   [&] { return hmsing::milnor_class_report(parse_request(request_json)); });
}

hmsing_status hmsing_spectrum(const char* request_json, char** out_json) {
    return guarded(out_json,
                   [&] { return hmsing::spectrum_report(parse_request(request_json)); });
}

hmsing_status hmsing_hypersurface(const char* request_json, char** out_json) {
    return guarded(out_json,
                   [&] { return hmsing::hypersurface_report(parse_request(request_json)); });
}

hmsing_status hmsing_arrangement(const char* request_json, char** out_json) {
    return guarded(out_json,
                   [&] { return hmsing::arrangement_report(parse_request(request_json)); });
}

hmsing_status hmsing_verify(const char* suite, const char* params_json, char** out_json) {
    bool all_ok = true;
    hmsing_status st = guarded(out_json, [&] {
        hmsing::json params =
            params_json ? hmsing::json::parse(params_json) : hmsing::json::object();
        std::vector<hmsing::VerificationReport> reports;
        if (!suite || std::strcmp(suite, "all") == 0) {
            reports = hmsing::run_all_suites();
        } else {
            reports.push_back(hmsing::run_suite(suite, params));
        }
        hmsing::json out{{"schema", 1}};
        hmsing::json arr = hmsing::json::array();
        long cases = 0, failures = 0;
        for (const auto& r : reports) {
            arr.push_back(hmsing::report_to_json(r));
            cases += r.cases;
            failures += static_cast<long>(r.failures.size());
            if (!r.ok()) all_ok = false;
        }
        out["suites"] = arr;
        out["cases"] = cases;
        out["failures"] = failures;
        out["ok"] = all_ok;
        return out;
    });
    if (st != HMSING_OK) return st;
    if (!all_ok) return fail(HMSING_ERROR_VERIFY_FAILED, "verification failures reported");
    return HMSING_OK;
}

hmsing_status hmsing_verify_suites(char** out_json) {
    return guarded(out_json, [] {
        hmsing::json arr = hmsing::json::array();
        for (const auto& name : hmsing::verify_suite_names()) arr.push_back(name);
        return arr;
    });
}

struct hmsing_germ {
    hmsing::Spectrum value;
};

namespace {

hmsing_status make_spectrum(hmsing_germ** out, hmsing::Spectrum s) {
    if (!out) return fail(HMSING_ERROR_INVALID_ARGUMENT, "null output pointer");
    *out = new (std::nothrow) hmsing_germ{std::move(s)};
    if (!*out) return fail(HMSING_ERROR_INTERNAL, "allocation failure");
    last_error.clear();
    return HMSING_OK;
}

}  // namespace

hmsing_status hmsing_germ_power(int m, hmsing_germ** out) {
    try {
        return make_spectrum(out, hmsing::sp_power(m));
    } catch (const std::exception& e) {
        return fail(HMSING_ERROR_INVALID_ARGUMENT, e.what());
    }
}

hmsing_status hmsing_germ_brieskorn_pham(const int* exponents, size_t count,
                                             hmsing_germ** out) {
    try {
        if (!exponents && count > 0)
            return fail(HMSING_ERROR_INVALID_ARGUMENT, "null exponent array");
        std::vector<int> a(exponents, exponents + count);
        return make_spectrum(out, hmsing::brieskorn_pham(a));
    } catch (const std::exception& e) {
        return fail(HMSING_ERROR_INVALID_ARGUMENT, e.what());
    }
}

hmsing_status hmsing_germ_join(const hmsing_germ* a, const hmsing_germ* b,
                                   hmsing_germ** out) {
    if (!a || !b) return fail(HMSING_ERROR_INVALID_ARGUMENT, "null spectrum handle");
    try {
        return make_spectrum(out, hmsing::ts_product(a->value, b->value));
    } catch (const std::exception& e) {
        return fail(HMSING_ERROR_INTERNAL, e.what());
    }
}

hmsing_status hmsing_germ_describe(const hmsing_germ* s, char** out_json) {
    if (!s) return fail(HMSING_ERROR_INVALID_ARGUMENT, "null spectrum handle");
    return guarded(out_json, [&] {
        hmsing::json req{{"schema", 1}};
        // Reuse the report path by serializing the germ directly.
        hmsing::json g;
        g["spectrum"] = hmsing::to_json(s->value.poly);
        g["spectrum_pretty"] = s->value.poly.to_string();
        g["num_vars"] = s->value.num_vars;
        g["mu"] = hmsing::milnor_number(s->value).get_str();
        g["symmetric"] = hmsing::check_symmetry(s->value);
        if (!s->value.poly.is_zero()) {
            g["min_exponent"] = hmsing::rat_to_string(hmsing::min_exponent(s->value));
            g["max_exponent"] = hmsing::rat_to_string(hmsing::max_exponent(s->value));
            hmsing::Classification c = hmsing::classify(s->value);
            g["du_bois"] = c.du_bois;
            g["insignificant"] = c.insignificant;
            g["lct"] = hmsing::rat_to_string(hmsing::lct_from_spectrum(s->value));
        }
        req["germ"] = g;
        return req;
    });
}

void hmsing_germ_free(hmsing_germ* s) { delete s; }

}  // extern "C"
