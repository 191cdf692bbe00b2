#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qjones/io.hpp"
#include "qjones/skein.hpp"

using namespace qjones;

namespace {

// Test-only oracle: exhaustive enumeration of all 2^c smoothings with a
// plain chain-merge loop counter.  Independent of the memoized path.
LaurentPoly brute_bracket(const Diagram& d) {
    const LaurentPoly delta({{2, -1}, {-2, -1}});
    if (d.pd.empty()) return delta.pow(static_cast<unsigned>(d.components));
    const std::size_t c = d.pd.size();
    LaurentPoly total;
    for (std::size_t state = 0; state < (std::size_t(1) << c); ++state) {
        std::map<int, int> ends;
        int loops = 0;
        std::int64_t aexp = 0;
        auto other = [&](int x) {
            auto it = ends.find(x);
            return it == ends.end() ? x : it->second;
        };
        auto connect = [&](int u, int v) {
            const int a = other(u), b = other(v);
            if (a == v) {
                ++loops;
                ends.erase(u);
                ends.erase(v);
                return;
            }
            ends.erase(u);
            ends.erase(v);
            ends[a] = b;
            ends[b] = a;
        };
        for (std::size_t i = 0; i < c; ++i) {
            const auto& x = d.pd[i];
            if ((state >> i) & 1u) {
                aexp -= 1;
                connect(x[0], x[3]);
                connect(x[1], x[2]);
            } else {
                aexp += 1;
                connect(x[0], x[1]);
                connect(x[2], x[3]);
            }
        }
        LaurentPoly term = LaurentPoly::monomial(aexp);
        for (int l = 0; l < loops; ++l) term = term * delta;
        total += term;
    }
    return total;
}

Diagram load(const std::string& name) {
    const std::string dir = io::resolve_fixture_dir();
    REQUIRE(!dir.empty());
    return io::diagram_from_json(io::load_json_file(dir + "/" + name + ".json"));
}

const LaurentPoly kDelta({{2, -1}, {-2, -1}});

}  // namespace

TEST_CASE("validation") {
    Diagram bad;
    bad.pd = {{1, 2, 3, 4}};
    bad.signs = {1};
    CHECK_THROWS_AS(validate(bad), DiagramError);  // labels appear once
    Diagram mismatched;
    mismatched.pd = {{1, 1, 2, 2}};
    CHECK_THROWS_AS(validate(mismatched), DiagramError);  // missing sign
}

TEST_CASE("unknots and unlinks") {
    Diagram unknot;
    unknot.components = 1;
    CHECK(kauffman_bracket(unknot) == kDelta);
    CHECK(jones_from_pd(unknot) == bracket(2));  // q^{1/2} + q^{-1/2}
    Diagram unlink2 = load("unlink2");
    CHECK(kauffman_bracket(unlink2) == kDelta * kDelta);
}

TEST_CASE("positive kink multiplies the bracket by -A^3") {
    const Diagram kink = load("kink_plus");
    CHECK(kauffman_bracket(kink) == kDelta.shifted(3).negated());
    // writhe correction makes the Jones value agree with the 0-crossing unknot
    CHECK(jones_from_pd(kink) == bracket(2));
}

TEST_CASE("Reidemeister II") {
    const Diagram poked = load("unlink2_poked");
    CHECK(kauffman_bracket(poked) == kDelta * kDelta);
    const Diagram tre = load("trefoil");
    const Diagram tre_poked = load("trefoil_split_poked");
    CHECK(kauffman_bracket(tre_poked) == kauffman_bracket(tre) * kDelta);
}

TEST_CASE("Reidemeister III") {
    CHECK(kauffman_bracket(load("r3_a")) == kauffman_bracket(load("r3_b")));
}

TEST_CASE("memoized state sum equals exhaustive enumeration") {
    for (const char* name : {"trefoil", "figure8", "kink_plus", "unlink2_poked", "r3_a",
                             "r3_b", "trefoil_split_poked"}) {
        const Diagram d = load(name);
        CHECK(kauffman_bracket(d) == brute_bracket(d));
    }
}

TEST_CASE("trefoil and figure-8 Jones values") {
    // frozen from the exhaustive state sum and the independent colored oracle
    const LaurentPoly tre_expected({{-18, -1}, {-10, 1}, {-6, 1}, {-2, 1}});
    CHECK(jones_from_pd(load("trefoil")) == tre_expected);
    const LaurentPoly fig8_expected({{-10, 1}, {10, 1}});
    CHECK(jones_from_pd(load("figure8")) == fig8_expected);
}

TEST_CASE("knot Jones values lie in the color-2 parity class") {
    for (const char* name : {"trefoil", "figure8"}) {
        const LaurentPoly j = jones_from_pd(load(name));
        // n = 2: exponents congruent to 2 mod 4 in quarter units
        CHECK(j.exponents_congruent(2));
    }
}
