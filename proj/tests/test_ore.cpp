#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qjones/io.hpp"
#include "qjones/ore.hpp"
#include "qjones/surgery.hpp"

using namespace qjones;

namespace {

io::KnotFixture load(const std::string& name) {
    const std::string dir = io::resolve_fixture_dir();
    REQUIRE(!dir.empty());
    return io::load_knot(name, dir);
}

OrePoly op_L() { return OrePoly::shift(); }
OrePoly op_M() { return OrePoly::scale(); }

MRational mono_coeff(std::int64_t m_exp, std::int64_t q_quarter, std::int64_t c = 1) {
    return MRational(MPoly::monomial(m_exp, LaurentPoly::monomial(q_quarter, c)));
}

// the minimal annihilator of [n]: (M^2-1)L - (q^{1/2}M^2 - q^{-1/2})
OrePoly bracket_op() {
    MPoly a = MPoly::m_power(2) - MPoly::one();
    MPoly b = MPoly::monomial(2, LaurentPoly::monomial(2)) -
              MPoly::monomial(0, LaurentPoly::monomial(-2));
    return OrePoly::from_term(1, MRational(a)) - OrePoly::constant(MRational(b));
}

// L^2 - [2]L + 1
OrePoly bracket_op2() {
    return OrePoly::from_term(2, MRational::one()) -
           OrePoly::from_term(1, MRational(MPoly::constant(bracket(2)))) +
           OrePoly::constant(MRational::one());
}

OrePoly random_op(std::mt19937& rng, int max_l = 2, int max_m = 1) {
    std::uniform_int_distribution<int> lpow(0, max_l);
    std::uniform_int_distribution<std::int64_t> mexp(-max_m, max_m);
    std::uniform_int_distribution<std::int64_t> qexp(-2, 2);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    OrePoly p;
    for (int t = 0; t < 3; ++t)
        p = p + OrePoly::from_term(lpow(rng), mono_coeff(mexp(rng), 2 * qexp(rng), coeff(rng)));
    return p;
}

}  // namespace

TEST_CASE("twist relation") {
    // L M = q^{1/2} M L
    const OrePoly lm = ore_mul(op_L(), op_M());
    CHECK(lm == OrePoly::from_term(1, mono_coeff(1, 2)));
    // (ML)(ML) = q^{1/2} M^2 L^2
    const OrePoly ml = ore_mul(op_M(), op_L());
    CHECK(ore_mul(ml, ml) == OrePoly::from_term(2, mono_coeff(2, 2)));
    std::mt19937 rng(3);
    const OrePoly p = random_op(rng);
    CHECK(ore_mul(OrePoly::constant(MRational::one()), p) == p);
}

TEST_CASE("ore_mul associativity") {
    std::mt19937 rng(17);
    for (int t = 0; t < 15; ++t) {
        const OrePoly a = random_op(rng), b = random_op(rng), c = random_op(rng);
        CHECK(ore_mul(ore_mul(a, b), c) == ore_mul(a, ore_mul(b, c)));
    }
}

TEST_CASE("ore_apply basics") {
    std::vector<LaurentPoly> consts(12, LaurentPoly::one());
    const Sequence ones = Sequence::from_values("ones", std::move(consts));
    const OrePoly lminus1 = op_L() - OrePoly::constant(MRational::one());
    const Sequence out = ore_apply(lminus1, ones, 1, 10);
    for (std::int64_t n = 1; n <= 10; ++n) CHECK(out.l_at(n).is_zero());

    const Sequence br = Sequence::builtin("bracket", 8);
    const Sequence m3 = ore_apply(op_M(), br, 3, 3);
    CHECK(m3.l_at(1) == bracket(3).shifted(6));  // q^{3/2}[3]

    CHECK(annihilates(bracket_op2(), Sequence::builtin("bracket", 25), 1, 20));
    CHECK(annihilates(bracket_op(), Sequence::builtin("bracket", 25), 1, 20));
    CHECK_THROWS_AS(ore_apply(bracket_op(), br, 1, 10), CoverageError);
}

TEST_CASE("action compatibility") {
    std::mt19937 rng(23);
    const Sequence f = Sequence::builtin("bracket", 20);
    for (int t = 0; t < 6; ++t) {
        const OrePoly p = random_op(rng, 2, 1), q = random_op(rng, 2, 1);
        // (PQ) f == P (Q f) on 1..12
        const Sequence qf = ore_apply(q, f, 1, 16);
        const Sequence pqf = ore_apply(p, qf, 1, 12);
        const Sequence direct = ore_apply(ore_mul(p, q), f, 1, 12);
        for (std::int64_t n = 1; n <= 12; ++n) CHECK(pqf.l_at(n) == direct.l_at(n));
    }
}

TEST_CASE("left_divmod") {
    const OrePoly p = bracket_op2();
    auto [q1, r1] = left_divmod(p, p);
    CHECK(q1 == OrePoly::constant(MRational::one()));
    CHECK(r1.is_zero());

    const OrePoly small = bracket_op();
    auto [q2, r2] = left_divmod(small, p);
    CHECK(q2.is_zero());
    CHECK(r2 == small);

    // the L-degree-1 annihilator left-divides the L-degree-2 one
    auto [q3, r3] = left_divmod(p, small);
    CHECK(r3.is_zero());
    CHECK(ore_mul(q3, small) == p);

    CHECK_THROWS_AS(left_divmod(p, OrePoly()), DivisionByZeroError);

    std::mt19937 rng(29);
    for (int t = 0; t < 10; ++t) {
        const OrePoly a = random_op(rng, 3, 1);
        OrePoly b = random_op(rng, 2, 1);
        if (b.is_zero()) b = bracket_op();
        auto [qq, rr] = left_divmod(a, b);
        CHECK(a == ore_mul(qq, b) + rr);
        if (!rr.is_zero()) CHECK(rr.l_degree() < b.l_degree());
    }
}

TEST_CASE("recurrence_polynomial normalization") {
    const OrePoly alpha = recurrence_polynomial({bracket_op()});
    // idempotent
    CHECK(recurrence_polynomial({alpha}) == alpha);
    // invariant under units +-q^{a/2} M^b
    for (std::int64_t a : {-3, 2}) {
        for (std::int64_t b : {-2, 1}) {
            const OrePoly scaled = ore_mul(OrePoly::constant(mono_coeff(b, 2 * a, -1)),
                                           bracket_op());
            CHECK(recurrence_polynomial({scaled}) == alpha);
        }
    }
    // common right factor: gcd({P, RP}) = P (up to normalization)
    std::mt19937 rng(31);
    const OrePoly r = random_op(rng, 1, 1) + op_L();
    CHECK(recurrence_polynomial({bracket_op(), ore_mul(r, bracket_op())}) == alpha);
    // left gcd of the two [n]-annihilators is the degree-1 one
    CHECK(recurrence_polynomial({bracket_op2(), bracket_op()}) == alpha);
    CHECK_THROWS_AS(recurrence_polynomial({OrePoly()}), InputError);
}

TEST_CASE("guess on [n]") {
    const Sequence f = Sequence::builtin("bracket", 30);
    const auto g = guess_recurrence(f, 1, 2, 15);
    REQUIRE(g.op.has_value());
    CHECK(g.engine == "bareiss");
    CHECK(g.in_half_lattice);
    CHECK(*g.op == recurrence_polynomial({bracket_op()}));
    CHECK(annihilates(*g.op, f, 16, 26));

    const auto g2 = guess_recurrence(f, 2, 0, 14);
    REQUIRE(g2.op.has_value());
    CHECK(*g2.op == recurrence_polynomial({bracket_op2()}));

    CHECK_THROWS_AS(guess_recurrence(f, 1, 2, 10), CoverageError);
}

TEST_CASE("guess on builtins, verified on held-out terms") {
    struct Case {
        const char* name;
        int dL, dM;
    };
    for (const Case c : {Case{"brace", 1, 1}, Case{"brace_factorial", 1, 1},
                         Case{"bracket_factorial", 1, 1}, Case{"qbinom_diag", 1, 4}}) {
        const Sequence f = Sequence::builtin(c.name, 40);
        const std::int64_t n_train = (c.dL + 1) * (2 * c.dM + 1) + 5;
        const auto g = guess_recurrence(f, c.dL, c.dM, n_train);
        REQUIRE_MESSAGE(g.op.has_value(), std::string(c.name));
        CHECK_MESSAGE(annihilates(*g.op, f, n_train + 1, n_train + 10), std::string(c.name));
        CHECK(g.in_half_lattice);
    }
}

TEST_CASE("guess on a spike") {
    const Sequence f = Sequence::builtin("delta:3", 20);
    // an order-0 annihilator with one M power exists: M - q^{3/2}
    const auto g = guess_recurrence(f, 0, 1, 8);
    REQUIRE(g.op.has_value());
    CHECK(annihilates(*g.op, f, 1, 15));
    CHECK(g.op->l_degree() == 0);
}

TEST_CASE("guess search order") {
    const Sequence f = Sequence::builtin("bracket", 30);
    const auto s = guess_search(f, 2, 3);
    REQUIRE(s.has_value());
    // first success in increasing (dL, dM) order is (1,1)
    CHECK(s->dL == 1);
    CHECK(s->dM == 1);
    CHECK(annihilates(s->op, f, 1, 20));
}

TEST_CASE("closure under sum and product, empirically") {
    const Sequence f = Sequence::builtin("bracket", 46);
    const Sequence g = Sequence::builtin("brace_factorial", 46);
    const Sequence sum = seq_add(f, g);
    const Sequence prod = seq_mul(f, g);
    const auto gs = guess_search(sum, 3, 3);
    REQUIRE(gs.has_value());
    const std::int64_t train_s = (gs->dL + 1) * (2 * gs->dM + 1) + 5;
    CHECK(annihilates(gs->op, sum, train_s + 1, train_s + 10));
    const auto gp = guess_search(prod, 2, 3);
    REQUIRE(gp.has_value());
    const std::int64_t train_p = (gp->dL + 1) * (2 * gp->dM + 1) + 5;
    CHECK(annihilates(gp->op, prod, train_p + 1, train_p + 10));
}

TEST_CASE("specialize_q1") {
    APoly a = specialize_q1(bracket_op2());
    APoly expect2;
    expect2.add(2, 0, 1);
    expect2.add(1, 0, -2);
    expect2.add(0, 0, 1);
    CHECK(a.terms == expect2.terms);

    const APoly u = specialize_q1(bracket_op());
    // (M^2-1)(L-1): after unit normalization still M-essentially (L-1)(M^2-1)
    APoly expect1;
    expect1.add(1, 2, 1);
    expect1.add(1, 0, -1);
    expect1.add(0, 2, -1);
    expect1.add(0, 0, 1);
    CHECK(u.terms == expect1.terms);

    const OrePoly mono = OrePoly::constant(mono_coeff(1, 6));  // q^{3/2} M
    APoly m = specialize_q1(mono);
    CHECK(m.terms == std::map<std::pair<int, int>, Int>{{{0, 1}, 1}});
}

TEST_CASE("aj_compare") {
    APoly a;  // (M^2-1)(L-1)
    a.add(1, 2, 1);
    a.add(1, 0, -1);
    a.add(0, 2, -1);
    a.add(0, 0, 1);
    APoly A;  // L - 1
    A.add(1, 0, 1);
    A.add(0, 0, -1);
    auto res = aj_compare(a, A);
    CHECK(res.essentially_equal);
    CHECK(res.witness.find("M^2") != std::string::npos);

    CHECK(aj_compare(A, A).essentially_equal);

    APoly B;  // L - M
    B.add(1, 0, 1);
    B.add(0, 1, -1);
    CHECK_FALSE(aj_compare(A, B).essentially_equal);
}

TEST_CASE("unknot AJ check") {
    const Sequence f = Sequence::builtin("bracket", 30);
    const auto g = guess_recurrence(f, 1, 2, 15);
    REQUIRE(g.op.has_value());
    const APoly a = specialize_q1(*g.op);
    APoly A;  // L - 1
    A.add(1, 0, 1);
    A.add(0, 0, -1);
    CHECK(aj_compare(a, A).essentially_equal);
}

TEST_CASE("habiro-kind verification") {
    const auto unknot = load("unknot").cyclotomic;
    const auto vals = relative_knot_values(unknot, 1, 6, 12);
    const Sequence f = Sequence::from_habiro("unknot in surgered sphere", vals);
    CHECK(annihilates_habiro(recurrence_polynomial({bracket_op()}), f, 1, 8, 4));
    const OrePoly lminus1 = op_L() - OrePoly::constant(MRational::one());
    CHECK_FALSE(annihilates_habiro(lminus1, f, 1, 8, 4));
    CHECK_THROWS_AS(guess_recurrence(f, 1, 1, 12), InputError);
}

TEST_CASE("figure-8 minimal recurrence via the modular engine") {
    const auto fig8 = load("figure8").cyclotomic;
    const Sequence f = Sequence::from_cyclotomic(fig8, 78);
    const std::int64_t n_train = 65;
    const auto g = guess_recurrence(f, 3, 7, n_train);
    REQUIRE(g.op.has_value());
    CHECK(g.engine == "modular");
    CHECK(g.in_half_lattice);
    CHECK(annihilates(*g.op, f, n_train + 1, n_train + 10));
    // AJ: the q=1 specialization matches the supplied A-polynomial
    const std::string dir = io::resolve_fixture_dir();
    const APoly A = io::apoly_from_json(io::load_json_file(dir + "/apoly_figure8.json"));
    const auto res = aj_compare(specialize_q1(*g.op), A);
    CHECK(res.essentially_equal);
}
