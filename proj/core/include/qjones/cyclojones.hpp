#pragma once

// Cyclotomic expansion machinery: colored Jones values from coefficient
// tables, the triangular inversion, dual-basis pairings, the change-of-basis
// coefficients R(n,k) and the divisibility test on converted tables.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qjones/qpoly.hpp"

namespace qjones {

// Coefficient table k -> C(k) in Z[q^{+-1}] of a knot.
struct CyclotomicCoeffs {
    std::string knot_name;
    std::vector<LaurentPoly> coeffs;  // C(0), C(1), ..., C(k_max)

    std::int64_t k_max() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    const LaurentPoly& at(std::int64_t k) const;
};

// Values J_L(P''_{k_1..k_r}, P'_{l_1..l_s}) of an algebraically split
// 0-framed link, indexed by the concatenated tuple.
struct LinkPairingTable {
    int r = 0;
    int s = 0;
    std::map<std::vector<int>, RationalPoly> entries;

    const RationalPoly& at(const std::vector<int>& key) const;
    bool has(const std::vector<int>& key) const { return entries.count(key) != 0; }
};

// J(n) = sum_{k<n} C(k) C(n,k)/{1}; CoverageError when the table is too
// short for the color.
LaurentPoly colored_jones(const CyclotomicCoeffs& c, std::int64_t n);

struct CyclotomicSolveResult {
    CyclotomicCoeffs coeffs;
    std::vector<bool> integral;  // whether C(k) landed in Z[q^{+-1}]
};

// Invert the triangular system J(n) = sum C(k)C(n,k)/{1} from values
// J(1)..J(N); InexactDivisionError when the values are not of cyclotomic
// form.
CyclotomicSolveResult cyclotomic_solve(const std::vector<LaurentPoly>& values);

enum class PairingKind { VV, VS, PppS, PpS };

// Closed-form Hopf pairings:
//   VV(n,m)   = [nm]
//   VS(n,k)   = C(n,k)/{1}
//   PppS(k,n) = delta_{n,k}
//   PpS(k,n)  = delta_{n,k} {2k+1}!/({k}!{1})
RationalPoly pairing(PairingKind kind, std::int64_t a, std::int64_t b);

// R(n,k) = (-1)^{n+1-k} {1}{2k} / ({n+1-k}! {n+1+k}!) for 1 <= k <= n+1,
// else 0.
RationalPoly r_coeff(std::int64_t n, std::int64_t k);

// Entrywise conversion C -> C~ = C * {2k+1}!/({k}!{1}).
std::vector<LaurentPoly> ctilde(const CyclotomicCoeffs& c);
LinkPairingTable ctilde(const LinkPairingTable& t);

struct IntegralityEntry {
    std::vector<int> key;
    bool pass = false;
};

struct IntegralityReport {
    std::vector<IntegralityEntry> entries;
    bool all_pass() const;
};

// Tests each converted entry for exact divisibility by {2m+1}!/({m}!{1}),
// m = max of the index tuple, inside Z[q^{+-1/2}].
IntegralityReport integrality_check(const std::vector<LaurentPoly>& ct);
IntegralityReport integrality_check(const LinkPairingTable& ct);

}  // namespace qjones
