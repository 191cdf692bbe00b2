#include "qjones/cyclojones.hpp"

#include <algorithm>

namespace qjones {

const LaurentPoly& CyclotomicCoeffs::at(std::int64_t k) const {
    if (k < 0 || k > k_max())
        throw CoverageError("cyclotomic table does not cover k = " + std::to_string(k) +
                            " for " + knot_name);
    return coeffs[static_cast<std::size_t>(k)];
}

const RationalPoly& LinkPairingTable::at(const std::vector<int>& key) const {
    auto it = entries.find(key);
    if (it == entries.end()) throw CoverageError("pairing table does not cover requested entry");
    return it->second;
}

LaurentPoly colored_jones(const CyclotomicCoeffs& c, std::int64_t n) {
    if (n < 1) throw InputError("color must be >= 1");
    if (c.k_max() < n - 1)
        throw CoverageError("cyclotomic table of " + c.knot_name + " too short for color " +
                            std::to_string(n));
    const LaurentPoly one = brace(1);
    LaurentPoly acc;
    LaurentPoly prod = brace(n);  // C(n,0)
    for (std::int64_t k = 0; k < n; ++k) {
        if (!c.at(k).is_zero()) acc += c.at(k) * prod;
        prod = prod * brace(n - k - 1) * brace(n + k + 1);
    }
    return acc.div_exact(one);
}

CyclotomicSolveResult cyclotomic_solve(const std::vector<LaurentPoly>& values) {
    CyclotomicSolveResult out;
    out.coeffs.knot_name = "solved";
    const LaurentPoly one = brace(1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::int64_t n = static_cast<std::int64_t>(i) + 1;
        LaurentPoly acc = values[i] * one;
        for (std::int64_t k = 0; k < n - 1; ++k)
            acc -= out.coeffs.coeffs[static_cast<std::size_t>(k)] * cnk(n, k);
        auto c = acc.divided_exactly(cnk(n, n - 1));
        if (!c)
            throw InexactDivisionError("cyclotomic_solve: values are not of cyclotomic form");
        out.integral.push_back(c->exponents_congruent(0));
        out.coeffs.coeffs.push_back(*std::move(c));
    }
    return out;
}

RationalPoly pairing(PairingKind kind, std::int64_t a, std::int64_t b) {
    switch (kind) {
        case PairingKind::VV:
            if (a < 1 || b < 1) throw InputError("pairing VV needs positive colors");
            return RationalPoly(bracket(a * b));
        case PairingKind::VS:
            if (a < 1 || b < 0) throw InputError("pairing VS needs n >= 1, k >= 0");
            return RationalPoly(cnk(a, b), brace(1));
        case PairingKind::PppS:
            return a == b ? RationalPoly::one() : RationalPoly::zero();
        case PairingKind::PpS:
            return a == b ? RationalPoly(surgery_factor(a)) : RationalPoly::zero();
    }
    throw InputError("unknown pairing kind");
}

RationalPoly r_coeff(std::int64_t n, std::int64_t k) {
    if (n < 1) throw InputError("r_coeff needs n >= 1");
    if (k < 1 || k > n + 1) return RationalPoly::zero();
    LaurentPoly num = brace(1) * brace(2 * k);
    LaurentPoly den =
        factorial(FactorialKind::brace, n + 1 - k) * factorial(FactorialKind::brace, n + 1 + k);
    if ((n + 1 - k) % 2 != 0) num = num.negated();
    return RationalPoly(std::move(num), std::move(den));
}

std::vector<LaurentPoly> ctilde(const CyclotomicCoeffs& c) {
    std::vector<LaurentPoly> out;
    out.reserve(c.coeffs.size());
    for (std::int64_t k = 0; k <= c.k_max(); ++k) out.push_back(c.at(k) * surgery_factor(k));
    return out;
}

LinkPairingTable ctilde(const LinkPairingTable& t) {
    LinkPairingTable out;
    out.r = t.r;
    out.s = t.s;
    for (const auto& [key, v] : t.entries) {
        RationalPoly w = v;
        for (int k : key) w = w * RationalPoly(surgery_factor(k));
        out.entries.emplace(key, std::move(w));
    }
    return out;
}

bool IntegralityReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const IntegralityEntry& e) { return e.pass; });
}

namespace {

// divisibility by {2m+1}!/({m}!{1}) inside Z[q^{+-1/2}]
bool divisible_by_factor(const RationalPoly& v, std::int64_t m) {
    const RationalPoly quot = v / RationalPoly(surgery_factor(m));
    if (!quot.is_laurent()) return false;
    const LaurentPoly l = quot.as_laurent();
    if (l.is_zero()) return true;
    for (const auto& [e, c] : l.terms())
        if (((e % 2) + 2) % 2 != 0) return false;  // must lie in the q^{1/2} lattice
    return true;
}

}  // namespace

IntegralityReport integrality_check(const std::vector<LaurentPoly>& ct) {
    IntegralityReport rep;
    for (std::size_t k = 0; k < ct.size(); ++k) {
        IntegralityEntry e;
        e.key = {static_cast<int>(k)};
        e.pass = divisible_by_factor(RationalPoly(ct[k]), static_cast<std::int64_t>(k));
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

IntegralityReport integrality_check(const LinkPairingTable& ct) {
    IntegralityReport rep;
    for (const auto& [key, v] : ct.entries) {
        IntegralityEntry e;
        e.key = key;
        const int m = key.empty() ? 0 : *std::max_element(key.begin(), key.end());
        e.pass = divisible_by_factor(v, m);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace qjones
