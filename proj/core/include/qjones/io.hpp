#pragma once

// Canonical JSON serialization of every value type, knot fixture loading and
// fixture-directory resolution.
//
// A Laurent polynomial is a list of pairs [e, c]: e the quarter-unit
// exponent, c the integer coefficient as a decimal string, sorted by
// ascending e with no zero coefficients.  All other formats build on it.

#include <functional>
#include <string>

#include "qjones/cyclojones.hpp"
#include "qjones/habiro.hpp"
#include "qjones/ore.hpp"
#include "qjones/skein.hpp"
#include "qjones/surgery.hpp"
#include "qjones/third_party/json.hpp"

namespace qjones::io {

using json = nlohmann::json;

json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json to_json(const RationalPoly& p);
RationalPoly rational_from_json(const json& j);

json to_json(const CycNumber& c);
CycNumber cyc_from_json(const json& j);

json to_json(const HabiroElement& h);
HabiroElement habiro_from_json(const json& j);

json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

struct KnotFixture {
    Diagram diagram;
    CyclotomicCoeffs cyclotomic;
    std::string mirror_convention;
    std::string provenance;
};

json to_json(const KnotFixture& k);
KnotFixture knot_from_json(const json& j);

json to_json(const SurgeryPresentation& p);
// Accepts either the explicit table form or the {knot, framing} shorthand;
// the resolver maps fixture names to loaded knots.
SurgeryPresentation presentation_from_json(
    const json& j, const std::function<KnotFixture(const std::string&)>& resolve);

json to_json(const OrePoly& p);
OrePoly ore_from_json(const json& j);

json to_json(const APoly& a);
APoly apoly_from_json(const json& j);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// QJONES_FIXTURES, else ./fixtures, ../fixtures, ../../fixtures; empty
// string when nothing exists.
std::string resolve_fixture_dir();

// name -> <fixtures>/<name>.json, or a path that is used verbatim.
KnotFixture load_knot(const std::string& name_or_path, const std::string& fixture_dir);

}  // namespace qjones::io
