#include "qjones/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace qjones::io {

namespace {

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("expected integer or decimal string");
}

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.str()}));
    return out;
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw InputError("polynomial must be a JSON array of [e, c] pairs");
    std::vector<LaurentPoly::Term> ts;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw InputError("polynomial term must be [e, c]");
        ts.emplace_back(t[0].get<std::int64_t>(), int_from_json(t[1]));
    }
    return LaurentPoly(std::move(ts));
}

json to_json(const RationalPoly& p) {
    return json{{"num", to_json(p.num())}, {"den", to_json(p.den())}};
}

RationalPoly rational_from_json(const json& j) {
    if (j.is_array()) return RationalPoly(poly_from_json(j));  // plain polynomial
    return RationalPoly(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const CycNumber& c) {
    json coords = json::array();
    for (const auto& x : c.coords()) coords.push_back(rat_to_string(x));
    return json{{"m", c.order()}, {"coords", coords}};
}

CycNumber cyc_from_json(const json& j) {
    std::vector<Rat> coords;
    for (const auto& s : j.at("coords")) coords.push_back(rat_from_string(s.get<std::string>()));
    return CycNumber(j.at("m").get<std::int64_t>(), std::move(coords));
}

json to_json(const HabiroElement& h) {
    json terms = json::array();
    for (const auto& t : h.terms()) terms.push_back(to_json(t));
    return json{{"prefactor_e", h.prefactor()}, {"trunc", h.trunc()}, {"terms", terms}};
}

HabiroElement habiro_from_json(const json& j) {
    std::vector<LaurentPoly> terms;
    for (const auto& t : j.at("terms")) terms.push_back(poly_from_json(t));
    const auto trunc = j.at("trunc").get<std::int64_t>();
    if (static_cast<std::int64_t>(terms.size()) != trunc + 1)
        throw InputError("habiro element: trunc does not match the term list");
    return HabiroElement(j.at("prefactor_e").get<std::int64_t>(), std::move(terms));
}

json to_json(const Diagram& d) {
    json pd = json::array();
    for (const auto& x : d.pd) pd.push_back(json::array({x[0], x[1], x[2], x[3]}));
    return json{{"name", d.name}, {"pd", pd}, {"signs", d.signs}, {"components", d.components}};
}

Diagram diagram_from_json(const json& j) {
    Diagram d;
    d.name = j.value("name", "");
    for (const auto& x : j.at("pd")) {
        if (!x.is_array() || x.size() != 4) throw InputError("pd entry must have 4 edges");
        d.pd.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
    }
    d.signs = j.at("signs").get<std::vector<int>>();
    d.components = j.value("components", 1);
    validate(d);
    return d;
}

json to_json(const KnotFixture& k) {
    json j = to_json(k.diagram);
    json cyclo = json::array();
    for (const auto& c : k.cyclotomic.coeffs) cyclo.push_back(to_json(c));
    j["cyclotomic"] = cyclo;
    j["mirror_convention"] = k.mirror_convention;
    if (!k.provenance.empty()) j["provenance"] = k.provenance;
    return j;
}

KnotFixture knot_from_json(const json& j) {
    KnotFixture k;
    k.diagram = diagram_from_json(j);
    k.cyclotomic.knot_name = k.diagram.name;
    for (const auto& c : j.at("cyclotomic")) k.cyclotomic.coeffs.push_back(poly_from_json(c));
    k.mirror_convention = j.value("mirror_convention", "");
    k.provenance = j.value("provenance", "");
    return k;
}

json to_json(const SurgeryPresentation& p) {
    json entries = json::array();
    for (const auto& [key, v] : p.pairing.entries) {
        json e = json::array();
        for (int k : key) e.push_back(k);
        e.push_back(to_json(v));
        entries.push_back(std::move(e));
    }
    return json{{"name", p.name},
                {"r", p.r},
                {"s", p.s},
                {"framings", p.framings},
                {"pairing", json{{"dims", json::array({p.r, p.s})}, {"entries", entries}}}};
}

SurgeryPresentation presentation_from_json(
    const json& j, const std::function<KnotFixture(const std::string&)>& resolve) {
    if (j.contains("knot")) {
        const KnotFixture k = resolve(j.at("knot").get<std::string>());
        const int f = j.at("framing").get<int>();
        if (j.value("relative", false)) return split_relative_presentation(k.cyclotomic, f);
        return closed_presentation(k.cyclotomic, f);
    }
    SurgeryPresentation p;
    p.name = j.value("name", "");
    p.r = j.at("r").get<int>();
    p.s = j.at("s").get<int>();
    p.framings = j.at("framings").get<std::vector<int>>();
    for (const auto& e : j.at("pairing").at("entries")) {
        if (!e.is_array() || static_cast<int>(e.size()) != p.r + p.s + 1)
            throw InputError("pairing entry must be [k..., l..., value]");
        std::vector<int> key;
        for (int i = 0; i < p.r + p.s; ++i) key.push_back(e[static_cast<std::size_t>(i)].get<int>());
        p.pairing.entries.emplace(std::move(key),
                                  rational_from_json(e[static_cast<std::size_t>(p.r + p.s)]));
    }
    p.pairing.r = p.r;
    p.pairing.s = p.s;
    validate(p);
    return p;
}

json to_json(const OrePoly& p) {
    json terms = json::array();
    auto mpoly_to_json = [](const MPoly& m) {
        json out = json::array();
        for (const auto& [j_, c] : m.coeffs()) {
            for (const auto& [e, x] : c.terms()) {
                if (((e % 2) + 2) % 2 != 0)
                    throw InputError("operator coefficients must lie over q^{1/2}");
                out.push_back(json::array({e / 2, j_, int_to_json(x)}));
            }
        }
        return out;
    };
    for (const auto& [k, c] : p.coeffs()) {
        terms.push_back(json{{"l", k},
                             {"coeff", json{{"num", mpoly_to_json(c.num())},
                                            {"den", mpoly_to_json(c.den())}}}});
    }
    return json{{"terms", terms}};
}

OrePoly ore_from_json(const json& j) {
    auto mpoly_from = [](const json& arr) {
        MPoly m;
        for (const auto& t : arr) {
            if (!t.is_array() || t.size() != 3)
                throw InputError("operator coefficient term must be [q_half_e, m_deg, c]");
            const auto e = t[0].get<std::int64_t>();
            const auto deg = t[1].get<std::int64_t>();
            m += MPoly::monomial(deg, LaurentPoly::monomial(2 * e, int_from_json(t[2])));
        }
        return m;
    };
    OrePoly p;
    for (const auto& t : j.at("terms")) {
        MPoly num = mpoly_from(t.at("coeff").at("num"));
        MPoly den = t.at("coeff").contains("den") && !t.at("coeff").at("den").empty()
                        ? mpoly_from(t.at("coeff").at("den"))
                        : MPoly::one();
        p = p + OrePoly::from_term(t.at("l").get<int>(), MRational(std::move(num), std::move(den)));
    }
    return p;
}

json to_json(const APoly& a) {
    json terms = json::array();
    for (const auto& [lm, c] : a.terms)
        terms.push_back(json::array({lm.first, lm.second, int_to_json(c)}));
    return json{{"terms", terms}};
}

APoly apoly_from_json(const json& j) {
    APoly a;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw InputError("apoly term must be [l, m, c]");
        a.add(t[0].get<int>(), t[1].get<int>(), int_from_json(t[2]));
    }
    return a;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(1) << "\n";
}

std::string resolve_fixture_dir() {
    if (const char* env = std::getenv("QJONES_FIXTURES")) {
        if (std::filesystem::is_directory(env)) return env;
    }
    for (const char* cand : {"fixtures", "../fixtures", "../../fixtures"}) {
        if (std::filesystem::is_directory(cand)) return cand;
    }
    return {};
}

KnotFixture load_knot(const std::string& name_or_path, const std::string& fixture_dir) {
    std::string path = name_or_path;
    if (!std::filesystem::exists(path)) {
        if (fixture_dir.empty())
            throw InputError("no fixture directory found for knot " + name_or_path);
        path = fixture_dir + "/" + name_or_path + ".json";
    }
    if (!std::filesystem::exists(path)) throw InputError("no such knot fixture: " + name_or_path);
    return knot_from_json(load_json_file(path));
}

}  // namespace qjones::io
