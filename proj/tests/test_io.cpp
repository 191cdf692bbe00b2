#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qjones/io.hpp"

using namespace qjones;

namespace {

LaurentPoly random_poly(std::mt19937& rng, bool integral = false) {
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<std::int64_t> exp(-9, 9);
    std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
    std::vector<LaurentPoly::Term> ts;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        ts.emplace_back(integral ? 4 * exp(rng) : exp(rng), Int(coeff(rng)));
    return LaurentPoly(std::move(ts));
}

}  // namespace

TEST_CASE("laurent round trip") {
    std::mt19937 rng(1);
    for (int t = 0; t < 40; ++t) {
        const LaurentPoly p = random_poly(rng);
        CHECK(io::poly_from_json(io::to_json(p)) == p);
        // canonical bytes: serialize(parse(serialize)) == serialize
        CHECK(io::to_json(io::poly_from_json(io::to_json(p))) == io::to_json(p));
    }
    // big coefficients survive via decimal strings
    const LaurentPoly big({{0, Int("123456789012345678901234567890")}});
    CHECK(io::poly_from_json(io::to_json(big)) == big);
}

TEST_CASE("rational round trip") {
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        LaurentPoly den = random_poly(rng);
        if (den.is_zero()) den = brace(2);
        const RationalPoly r(random_poly(rng), den);
        const RationalPoly back = io::rational_from_json(io::to_json(r));
        CHECK(back == r);
    }
}

TEST_CASE("cyc round trip") {
    std::mt19937 rng(3);
    for (std::int64_t m : {4, 8, 12, 20}) {
        for (int t = 0; t < 8; ++t) {
            const CycNumber c = ev_root(random_poly(rng), RootSpec(m));
            CHECK(io::cyc_from_json(io::to_json(c)) == c);
        }
    }
    // rationals in coordinates
    const CycNumber half(4, {Rat(1, 2), Rat(-3, 7)});
    CHECK(io::cyc_from_json(io::to_json(half)) == half);
}

TEST_CASE("habiro round trip") {
    std::mt19937 rng(4);
    std::vector<LaurentPoly> terms;
    for (int i = 0; i < 5; ++i) terms.push_back(random_poly(rng, true));
    const HabiroElement h(5, std::move(terms));
    CHECK(io::habiro_from_json(io::to_json(h)) == h);
}

TEST_CASE("knot fixtures parse and validate") {
    const std::string dir = io::resolve_fixture_dir();
    REQUIRE(!dir.empty());
    for (const char* name : {"unknot", "trefoil", "figure8"}) {
        const io::KnotFixture k = io::load_knot(name, dir);
        CHECK(k.diagram.name == name);
        CHECK(k.cyclotomic.at(0).is_one());
        CHECK_FALSE(k.mirror_convention.empty());
        const auto j = io::to_json(k);
        const io::KnotFixture back = io::knot_from_json(j);
        CHECK(back.cyclotomic.coeffs == k.cyclotomic.coeffs);
        CHECK(back.diagram.pd == k.diagram.pd);
    }
    CHECK_THROWS_AS(io::load_knot("no_such_knot", dir), InputError);
}

TEST_CASE("presentation round trip and shorthand") {
    const std::string dir = io::resolve_fixture_dir();
    REQUIRE(!dir.empty());
    auto resolve = [&](const std::string& name) { return io::load_knot(name, dir); };

    const io::json shorthand = {{"knot", "trefoil"}, {"framing", -1}};
    const SurgeryPresentation p = io::presentation_from_json(shorthand, resolve);
    CHECK(p.r == 0);
    CHECK(p.s == 1);
    CHECK(p.framings == std::vector<int>{-1});
    CHECK(p.pairing.at({0}) == RationalPoly(LaurentPoly::one()));

    const io::json rel = {{"knot", "trefoil"}, {"framing", 1}, {"relative", true}};
    const SurgeryPresentation q = io::presentation_from_json(rel, resolve);
    CHECK(q.r == 1);
    CHECK(q.s == 1);

    const SurgeryPresentation back =
        io::presentation_from_json(io::to_json(p), resolve);
    CHECK(back.pairing.entries.size() == p.pairing.entries.size());
    CHECK(back.pairing.at({3}) == p.pairing.at({3}));
}

TEST_CASE("operator file round trip") {
    // normalized annihilator of [n]
    MPoly a = MPoly::m_power(2) - MPoly::one();
    MPoly b = MPoly::monomial(2, LaurentPoly::monomial(2)) -
              MPoly::monomial(0, LaurentPoly::monomial(-2));
    const OrePoly alpha = recurrence_polynomial(
        {OrePoly::from_term(1, MRational(a)) - OrePoly::constant(MRational(b))});
    const OrePoly back = io::ore_from_json(io::to_json(alpha));
    CHECK(back == alpha);
    // rational coefficients round trip too
    const OrePoly rat = OrePoly::from_term(1, MRational(MPoly::one(), MPoly::m_power(1) - MPoly::one()));
    CHECK(io::ore_from_json(io::to_json(rat)) == rat);
}

TEST_CASE("apoly file round trip") {
    APoly a;
    a.add(2, 4, 1);
    a.add(1, 8, -1);
    a.add(1, 0, 7);
    a.add(0, 4, 1);
    const APoly back = io::apoly_from_json(io::to_json(a));
    CHECK(back.terms == a.terms);
    const std::string dir = io::resolve_fixture_dir();
    REQUIRE(!dir.empty());
    const APoly fig8 = io::apoly_from_json(io::load_json_file(dir + "/apoly_figure8.json"));
    CHECK(fig8.l_degree() == 3);
}
