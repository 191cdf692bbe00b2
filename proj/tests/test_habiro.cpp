#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qjones/habiro.hpp"

using namespace qjones;

namespace {

HabiroElement random_habiro(std::mt19937& rng, std::int64_t trunc) {
    std::uniform_int_distribution<std::int64_t> exp(-3, 3);
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    std::uniform_int_distribution<int> nterms(0, 3);
    std::vector<LaurentPoly> terms;
    for (std::int64_t n = 0; n <= trunc; ++n) {
        std::vector<LaurentPoly::Term> ts;
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i) ts.emplace_back(4 * exp(rng), Int(coeff(rng)));
        terms.emplace_back(std::move(ts));
    }
    return HabiroElement(0, std::move(terms));
}

}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(HabiroElement(0, {brace(1)}), PrefactorError);  // half-integral exponents
    CHECK(HabiroElement::one(3).term(0).is_one());
    CHECK(HabiroElement::zero(2).terms_all_zero());
}

TEST_CASE("kz series") {
    CHECK(kz_series(0) == HabiroElement::one(0));
    CHECK(h_eval(kz_series(4), RootSpec(4)) == CycNumber::from_int(4, 1));
    CHECK(h_eval(kz_series(10), RootSpec(4)) == CycNumber::from_int(4, 1));
    // q = -1 (order 2): 1 + (1-(-1)) = 3
    CHECK(h_eval(kz_series(10), RootSpec(8)) == CycNumber::from_int(8, 3));
    CHECK(h_taylor(kz_series(5), 1) == std::vector<Int>{1, -1});
    CHECK(h_taylor(kz_series(5), 2) == std::vector<Int>{1, -1, 2});
}

TEST_CASE("taylor basics") {
    CHECK(h_taylor(HabiroElement::one(3), 3) == std::vector<Int>{1, 0, 0, 0});
    // prefactor q (e = 4) contributes at q = 1 only through its expansion
    HabiroElement f(4, {LaurentPoly::one()});
    CHECK(h_taylor(f, 0) == std::vector<Int>{1});
    CHECK_THROWS_AS(h_taylor(HabiroElement(2, {LaurentPoly::one()}), 0), PrefactorError);
    CHECK_THROWS_AS(h_taylor(kz_series(3), 5), TruncationError);
}

TEST_CASE("eval requires enough truncation") {
    CHECK_THROWS_AS(h_eval(kz_series(1), RootSpec(8)), TruncationError);
    CHECK(h_eval(HabiroElement::one(5), RootSpec(5)) == CycNumber::from_int(5, 1));
}

TEST_CASE("mul unit and prefactor addition") {
    std::mt19937 rng(5);
    const HabiroElement f = random_habiro(rng, 6);
    CHECK(h_mul(f, HabiroElement::one(6)) == f);
    const HabiroElement a(1, {LaurentPoly::one()});
    const HabiroElement b(3, {LaurentPoly::one()});
    const HabiroElement p = h_mul(a, b);
    CHECK(p.prefactor() == 4);
    CHECK(p.term(0).is_one());
}

TEST_CASE("add and cancellation") {
    std::mt19937 rng(9);
    const HabiroElement f = random_habiro(rng, 5);
    CHECK(h_add(f, h_neg(f)).terms_all_zero());
    const HabiroElement a(1, {LaurentPoly::one()});
    const HabiroElement b(3, {LaurentPoly::one()});
    CHECK_THROWS_AS(h_add(a, b), PrefactorError);
    // compatible prefactors: e=1 and e=5 differ by q
    const HabiroElement c(5, {LaurentPoly::one()});
    const HabiroElement s = h_add(a, c);
    CHECK(s.prefactor() == 1);
    CHECK(s.term(0) == LaurentPoly::one() + LaurentPoly::q_power(1));
}

TEST_CASE("eval commutes with mul") {
    std::mt19937 rng(77);
    for (std::int64_t m : {4, 8, 12, 16}) {
        const RootSpec r(m);
        for (int t = 0; t < 8; ++t) {
            const HabiroElement a = random_habiro(rng, 6), b = random_habiro(rng, 6);
            CHECK(h_eval(h_mul(a, b), r) == h_eval(a, r) * h_eval(b, r));
        }
    }
}

TEST_CASE("taylor is multiplicative (Cauchy product)") {
    std::mt19937 rng(78);
    const std::int64_t k = 5;
    for (int t = 0; t < 10; ++t) {
        const HabiroElement a = random_habiro(rng, k), b = random_habiro(rng, k);
        const auto ta = h_taylor(a, k), tb = h_taylor(b, k);
        std::vector<Int> cauchy(static_cast<std::size_t>(k) + 1);
        for (std::size_t i = 0; i < ta.size(); ++i)
            for (std::size_t j = 0; i + j < cauchy.size() && j < tb.size(); ++j)
                cauchy[i + j] += ta[i] * tb[j];
        CHECK(h_taylor(h_mul(a, b), k) == cauchy);
    }
}

TEST_CASE("truncation stability") {
    for (std::int64_t trunc : {5, 10, 20}) {
        const HabiroElement f = kz_series(trunc);
        CHECK(h_taylor(f, 4) == h_taylor(kz_series(25), 4));
        CHECK(h_eval(f, RootSpec(8)) == h_eval(kz_series(25), RootSpec(8)));
        CHECK(h_eval(f, RootSpec(16)) == h_eval(kz_series(25), RootSpec(16)));
    }
}

TEST_CASE("h_equal") {
    const HabiroElement f = kz_series(8);
    CHECK(h_equal(f, f, 8));
    // witness that the test is bounded: a difference above the bound passes
    const std::int64_t bound = 3;
    auto g = HabiroElement::zero(bound + 1);
    std::vector<LaurentPoly> terms(static_cast<std::size_t>(bound) + 2);
    terms.back() = LaurentPoly::one();
    const HabiroElement high(0, std::move(terms));
    CHECK(h_equal(HabiroElement::zero(bound + 1), high, bound));
    CHECK_FALSE(h_equal(high, HabiroElement::zero(bound + 1), bound + 1));
    // kz vs 1 differ at q = -1
    CHECK_FALSE(h_equal(kz_series(8), HabiroElement::one(8), 2));
    CHECK_THROWS_AS(h_equal(kz_series(2), kz_series(8), 4), TruncationError);
}

TEST_CASE("to_laurent round trip through evaluation") {
    std::mt19937 rng(31);
    const HabiroElement f = random_habiro(rng, 4);
    const RootSpec r(12);
    CHECK(ev_root(f.to_laurent(), r) == h_eval(f.truncated(6), r));
}
