#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qjones/cyclo.hpp"

using namespace qjones;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<std::int64_t> exp(-10, 10);
    std::uniform_int_distribution<std::int64_t> coeff(-6, 6);
    std::vector<LaurentPoly::Term> ts;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) ts.emplace_back(exp(rng), Int(coeff(rng)));
    return LaurentPoly(std::move(ts));
}

CycNumber random_cyc(std::mt19937& rng, std::int64_t m) {
    return ev_root(random_poly(rng), RootSpec(m));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
    // first index with a coefficient other than 0, +-1 is m = 105
    bool saw_big = false;
    for (const auto& c : cyclotomic_poly(105))
        if (c < -1 || c > 1) saw_big = true;
    CHECK(saw_big);
}

TEST_CASE("q_order") {
    CHECK(q_order(RootSpec(4)) == 1);
    CHECK(q_order(RootSpec(8)) == 2);
    CHECK(q_order(RootSpec(12)) == 3);
    CHECK(q_order(RootSpec(6)) == 3);
    CHECK(q_order(RootSpec(1)) == 1);
}

TEST_CASE("ev_root basics") {
    // {2} = q - q^{-1} at m=8 (q = xi^4 = -1) vanishes
    CHECK(ev_root(brace(2), RootSpec(8)).is_zero());
    CHECK(ev_root(LaurentPoly::one(), RootSpec(7)) == CycNumber::from_int(7, 1));
    // q^{1/4} at m=4 is the class of x in Q[x]/(x^2+1)
    CHECK(ev_root(LaurentPoly::monomial(1), RootSpec(4)) == CycNumber::root_power(4, 1));
    // integral input stays integral
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) CHECK(random_cyc(rng, 12).is_integral());
}

TEST_CASE("ev_root is a ring morphism") {
    std::mt19937 rng(123);
    for (std::int64_t m : {4, 8, 12, 16, 20}) {
        const RootSpec r(m);
        for (int t = 0; t < 12; ++t) {
            const LaurentPoly p = random_poly(rng), s = random_poly(rng);
            CHECK(ev_root(p * s, r) == ev_root(p, r) * ev_root(s, r));
            CHECK(ev_root(p + s, r) == ev_root(p, r) + ev_root(s, r));
        }
    }
}

TEST_CASE("torsion: q^{m'} = 1 when the order of q divides m'") {
    for (std::int64_t m : {4, 8, 12, 6, 20}) {
        const std::int64_t d = q_order(RootSpec(m));
        for (std::int64_t mult = 1; mult <= 3; ++mult) {
            const LaurentPoly p = LaurentPoly::q_power(d * mult) - LaurentPoly::one();
            CHECK(ev_root(p, RootSpec(m)).is_zero());
        }
    }
}

TEST_CASE("cyc_div") {
    const std::int64_t m = 4;
    const CycNumber one = CycNumber::from_int(m, 1);
    const CycNumber x = CycNumber::root_power(m, 1);
    // (2 - 2x)/(1 - x) = 2
    const CycNumber a = CycNumber(m, {Rat(2), Rat(-2)});
    const CycNumber b = CycNumber(m, {Rat(1), Rat(-1)});
    CHECK(cyc_div(a, b) == CycNumber::from_int(m, 2));
    CHECK(cyc_div(b, b) == one);
    CHECK(cyc_div(CycNumber::zero(m), b).is_zero());
    CHECK_THROWS_AS(cyc_div(one, CycNumber::zero(m)), DivisionByZeroError);
    CHECK(cyc_div(one, x) == CycNumber::root_power(m, -1));
}

TEST_CASE("cyc_div round trip on random values") {
    std::mt19937 rng(321);
    for (std::int64_t m : {4, 8, 12, 20}) {
        for (int t = 0; t < 10; ++t) {
            const CycNumber a = random_cyc(rng, m);
            CycNumber b = random_cyc(rng, m);
            if (b.is_zero()) b = CycNumber::from_int(m, 3);
            CHECK(cyc_div(a * b, b) == a);
        }
    }
}

TEST_CASE("conjugation") {
    const CycNumber a = ev_root(bracket(3), RootSpec(20));
    CHECK(a.conjugated() == ev_root(bracket(3).mirrored(), RootSpec(20)));
}
