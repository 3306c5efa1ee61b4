#ifndef HMSING_REPORT_HPP
#define HMSING_REPORT_HPP

#include <json.hpp>

#include "arrangement.hpp"
#include "fracpoly.hpp"
#include "milnor.hpp"
#include "projspace.hpp"
#include "spectral.hpp"
#include "spectrum.hpp"

namespace hmsing {

using json = nlohmann::json;

// JSON encodings: rationals as "p/q" strings, series as arrays of such
// strings, fractional polynomials as exponent-string -> coefficient-string
// objects, YClass as {"y^k": [rational strings by dimension]}.
json to_json(const Rat& r);
json to_json(const XSeries& s);
json to_json(const YPoly& p);
json to_json(const FracExpPoly& p);
json to_json(const HomologyClass& c);
json to_json(const YClass& c);

Rat rat_from_json(const json& j);
HomologyClass homology_from_json(const json& j, int n);

// Request handlers behind the CLI subcommands; each takes the parsed
// request object and returns the full machine report (schema field
// included).
json chi_report(const json& request);
json example_2_8_report(const json& request);
json milnor_class_report(const json& request);
json spectrum_report(const json& request);
json hypersurface_report(const json& request);
json arrangement_report(const json& request);

}  // namespace hmsing

#endif
