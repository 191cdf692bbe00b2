#pragma once

// Truncated elements of the Habiro ring and its quarter-power extension:
//
//   q^{e/4} * sum_{n=0}^{N} f_n(q) (1-q)(1-q^2)...(1-q^n),   f_n in Z[q^{+-1}].
//
// A single monomial prefactor q^{e/4} covers every invariant produced here
// (they are monomial multiples of integral series).  The representation of a
// truncated series in this basis is not unique; products are regrouped by
// the larger factorial index, where the complementary factor divides
// exactly, which fixes a canonical form.

#include <cstdint>
#include <vector>

#include "qjones/cyclo.hpp"
#include "qjones/qpoly.hpp"

namespace qjones {

class HabiroElement {
public:
    // terms[n] = f_n; every exponent of f_n must be integral (0 mod 4 in
    // quarter units).  trunc = terms.size() - 1.
    HabiroElement(std::int64_t prefactor_e, std::vector<LaurentPoly> terms);

    static HabiroElement zero(std::int64_t trunc);
    static HabiroElement one(std::int64_t trunc);
    // Embed a Laurent polynomial whose exponents share one residue class
    // mod 4; PrefactorError otherwise.
    static HabiroElement from_laurent(const LaurentPoly& p, std::int64_t trunc);

    std::int64_t prefactor() const { return prefactor_e_; }
    std::int64_t trunc() const { return static_cast<std::int64_t>(terms_.size()) - 1; }
    const std::vector<LaurentPoly>& terms() const { return terms_; }
    const LaurentPoly& term(std::int64_t n) const;

    bool terms_all_zero() const;

    // The exact finite sum q^{e/4} sum f_n E_n as a Laurent polynomial.
    LaurentPoly to_laurent() const;

    // Re-truncate (extension pads with zero terms).
    HabiroElement truncated(std::int64_t new_trunc) const;

    friend bool operator==(const HabiroElement& a, const HabiroElement& b) {
        return a.prefactor_e_ == b.prefactor_e_ && a.terms_ == b.terms_;
    }

private:
    std::int64_t prefactor_e_ = 0;
    std::vector<LaurentPoly> terms_;
};

// Sum; PrefactorError when the prefactor exponents differ mod 4.
HabiroElement h_add(const HabiroElement& a, const HabiroElement& b);
HabiroElement h_neg(const HabiroElement& a);
// Product; truncation min(Na, Nb), prefactors add.
HabiroElement h_mul(const HabiroElement& a, const HabiroElement& b);

// Evaluation at q^{1/4} = xi_m.  Requires trunc >= order of q at the root
// (all omitted terms vanish there); TruncationError otherwise.
CycNumber h_eval(const HabiroElement& f, const RootSpec& r);

// Taylor coefficients c_0..c_order of the expansion at q = 1.  Requires
// order <= trunc and an integral prefactor (e = 0 mod 4).
std::vector<Int> h_taylor(const HabiroElement& f, std::int64_t order);

// The series sum_n (1-q)(1-q^2)...(1-q^n), truncated at N.
HabiroElement kz_series(std::int64_t N);

// Bounded equality test: evaluations at orders m = 4d for d = 1..bound agree
// and the Taylor expansions to `bound` agree.  Sound but bounded: a
// difference supported above the bound passes.  Requires both truncations
// >= bound.
bool h_equal(const HabiroElement& a, const HabiroElement& b, std::int64_t bound);

// Taylor expansion of a Laurent polynomial with integral exponents around
// q = 1 (helper shared with the tests).
std::vector<Int> taylor_at_one(const LaurentPoly& p, std::int64_t order);

}  // namespace qjones
